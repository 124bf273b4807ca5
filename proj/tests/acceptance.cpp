// End-to-end acceptance suite: ten independent checks, one result line each.
// Exit status is the number of failed checks.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "finitetc/complexity.hpp"
#include "finitetc/simplicial.hpp"
#include "finitetc/subdivision.hpp"
#include "finitetc/verify.hpp"
#include "finitetc/zoo.hpp"

using namespace finitetc;

namespace {

constexpr std::uint64_t kSeed = 20240901;

int failures = 0;
int index_ = 0;

template <typename Fn>
void criterion(const char* desc, Fn&& fn) {
    ++index_;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok) ++failures;
    std::printf("[%2d] %s  %s (%.1fs)%s%s\n", index_, ok ? "PASS" : "FAIL", desc, secs,
                detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
}

bool report_check(const VerifyCheck& c, std::string& detail) {
    detail = std::to_string(c.checked) + " cases, " + std::to_string(c.violations) + " violations";
    if (!c.passed() && !c.messages.empty()) detail += "; first: " + c.messages.front();
    return c.passed();
}

bool all_pass(const std::vector<VerifyCheck>& checks, std::string& detail) {
    bool ok = true;
    int cases = 0;
    for (const auto& c : checks) {
        cases += c.checked;
        if (!c.passed()) {
            ok = false;
            detail = c.name + ": " + std::to_string(c.violations) + " violations";
            if (!c.messages.empty()) detail += "; first: " + c.messages.front();
        }
    }
    if (ok) detail = std::to_string(cases) + " cases, 0 violations";
    return ok;
}

}  // namespace

int main() {
    const PosetPtr circle = builtin_space("sphere:1");
    const auto corpus = verification_corpus(100, 5, kSeed);

    criterion("minimal circle: two-point motion planning needs 4 opens, category 2",
              [&](std::string& d) {
                  auto r = cc_n(circle, 2);
                  auto c = cat(circle);
                  d = "cc_2 = " + std::to_string(r.value) + (r.exact ? " exact" : " inexact") +
                      ", cat = " + std::to_string(c.value) + (c.exact ? " exact" : " inexact");
                  return r.is_finite() && r.value == 4 && r.exact && c.value == 2 && c.exact;
              });

    criterion("minimal circle: three-point motion planning needs 8 opens", [&](std::string& d) {
        auto r = cc_n(circle, 3);
        d = "cc_3 = " + std::to_string(r.value) + (r.exact ? " exact" : " inexact");
        return r.is_finite() && r.value == 8 && r.exact;
    });

    criterion("subdivision-stable invariant of the circle reaches 2 by depth 2",
              [&](std::string& d) {
                  ComputeConfig cfg;
                  auto r = cc_inf_n(circle, 2, 2, cfg);
                  d = "value = " + std::to_string(r.value) +
                      ", cover size = " + std::to_string(r.cover_masks.size()) +
                      (r.exact ? ", exact" : ", upper bound");
                  return r.is_finite() && r.value == 2 && r.cover_masks.size() == 2;
              });

    criterion("value 1 iff contractible, over all connected posets with <= 5 elements",
              [&](std::string& d) { return report_check(check_contractibility_law(5), d); });

    criterion("bounded variants: monotone in the bound and consistent with the limit",
              [&](std::string& d) {
                  std::vector<VerifyCheck> checks{check_bound_lemmas(corpus, 3),
                                                  check_subdivision_monotonicity(corpus)};
                  return all_pass(checks, d);
              });

    criterion("inequality chain cat <= cc_2 <= cat(P^2) <= cat(P)^2 on the corpus",
              [&](std::string& d) { return report_check(check_inequality_chain(corpus), d); });

    criterion("invariance under homotopy equivalence (core comparison, 50 random posets)",
              [&](std::string& d) {
                  return report_check(check_homotopy_invariance(50, 5, kSeed), d);
              });

    criterion("homotopic maps induce contiguous simplicial maps, and back", [&](std::string& d) {
        std::vector<VerifyCheck> checks{check_transfer_forward(4), check_transfer_backward()};
        return all_pass(checks, d);
    });

    criterion("section witnesses survive all transport constructions", [&](std::string& d) {
        auto small = builtin_corpus();
        for (int i = 0; i < 20; ++i)
            small.emplace_back("random:" + std::to_string(i),
                               random_connected_poset(5, kSeed + std::uint64_t(i)));
        return report_check(check_transports(small, 4), d);
    });

    criterion("simplicial invariant of the 4-cycle equals 2", [&](std::string& d) {
        auto four_cycle =
            SimplicialComplex::build({"a", "b", "c", "d"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
        auto r = sc_n_of_complex(four_cycle, 2, 2);
        d = "value = " + std::to_string(r.value) + (r.exact ? ", exact" : ", upper bound");
        return r.is_finite() && r.value == 2;
    });

    std::printf("%d/%d criteria passed\n", index_ - failures, index_);
    return failures;
}
