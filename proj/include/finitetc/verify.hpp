#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finitetc/complexity.hpp"
#include "finitetc/subdivision.hpp"

namespace finitetc {

struct VerifyCheck {
    std::string name;
    int checked = 0;
    int violations = 0;
    std::vector<std::string> messages;  // first few violation details

    bool passed() const { return violations == 0; }
    void violation(const std::string& msg) {
        ++violations;
        if (messages.size() < 10) messages.push_back(msg);
    }
};

// Builtin corpus plus `random_count` random connected posets (<= max_size
// elements, seeds derived from `seed`).
std::vector<std::pair<std::string, PosetPtr>> verification_corpus(int random_count, int max_size,
                                                                  std::uint64_t seed);

// cc_n(P, 2) = 1 iff P contractible, over all connected posets with <=
// max_size elements up to isomorphism.
VerifyCheck check_contractibility_law(int max_size = 5, const ComputeConfig& config = {});

// Bounded-section lemmas at n = 2: cc_nm non-increasing in m (m <= m_max,
// both variants), cc_nm >= cc_n, and stabilized bounded values agree with
// cc_n.
VerifyCheck check_bound_lemmas(const std::vector<std::pair<std::string, PosetPtr>>& corpus,
                               int m_max = 3, const ComputeConfig& config = {});

// cc^1 <= cc^0 at n = 2.
VerifyCheck check_subdivision_monotonicity(
    const std::vector<std::pair<std::string, PosetPtr>>& corpus,
    const ComputeConfig& config = {});

// cat(P) <= cc_2(P) <= cat(P^2) <= cat(P)^2.
VerifyCheck check_inequality_chain(const std::vector<std::pair<std::string, PosetPtr>>& corpus,
                                   const ComputeConfig& config = {});

// cc_2(P) = cc_2(core(P)) on random connected posets.
VerifyCheck check_homotopy_invariance(int count, int max_size, std::uint64_t seed,
                                      const ComputeConfig& config = {});

// f homotopic to g implies the induced simplicial maps of order complexes
// share a contiguity class; all map pairs between posets with <= max_size
// elements.
VerifyCheck check_transfer_forward(int max_size = 4, const ComputeConfig& config = {});

// Simplicial maps in one contiguity class induce homotopic maps of face
// posets, over a small complex corpus (<= 5 vertices).
VerifyCheck check_transfer_backward(const ComputeConfig& config = {});

// Every section witness found on the corpus survives transport_R /
// transport_f / transport_g (where parity preconditions hold).
VerifyCheck check_transports(const std::vector<std::pair<std::string, PosetPtr>>& corpus,
                             int m_max = 4, const ComputeConfig& config = {});

// suite in {lemmas, corollaries, transfer, all}.
std::vector<VerifyCheck> verify_suite(const std::string& suite, int random_count, int max_size,
                                      std::uint64_t seed, const ComputeConfig& config = {});

}  // namespace finitetc
