#include "finitetc/subdivision.hpp"

#include <chrono>
#include <map>

namespace finitetc {

const PosetPtr& SubdivisionTower::level(int k) const {
    if (k < 0 || k > depth()) throw IndexOutOfRange("tower level out of range");
    return k == 0 ? base.total : levels[k - 1].poset;
}

std::vector<int> SubdivisionTower::tau_composite(int k) const {
    if (k < 0 || k > depth()) throw IndexOutOfRange("tower level out of range");
    if (k == 0) {
        std::vector<int> id(base.total->size());
        for (std::size_t i = 0; i < id.size(); ++i) id[i] = int(i);
        return id;
    }
    std::vector<int> acc = levels[0].tau;  // level 1 -> level 0
    for (int l = 2; l <= k; ++l) {
        const auto& t = levels[l - 1].tau;  // level l -> level l-1
        std::vector<int> next(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) next[i] = acc[t[i]];
        acc = std::move(next);
    }
    return acc;
}

SubdivisionTower build_tower(const PosetPtr& p, int n, int k_max, std::size_t sd_size_cap,
                             std::size_t size_cap) {
    SubdivisionTower t;
    t.base = make_power(p, n, size_cap);
    PosetPtr cur = t.base.total;
    for (int k = 1; k <= k_max; ++k) {
        std::vector<Bitset> chains;
        PosetPtr next;
        try {
            next = barycentric_subdivision(*cur, &chains, sd_size_cap);
        } catch (const SizeLimitExceeded&) {
            t.truncated = true;
            break;
        }
        t.levels.push_back({next, tau_assignment(*cur, chains), std::move(chains)});
        cur = next;
    }
    return t;
}

std::vector<int> rho_map(const SubdivisionTower& tower, int k, int j) {
    if (j < 1 || j > tower.base.n) throw IndexOutOfRange("projection index out of range");
    auto down = tower.tau_composite(k);
    std::vector<int> out(down.size());
    for (std::size_t i = 0; i < down.size(); ++i) out[i] = tower.base.coords[down[i]][j - 1];
    return out;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

ComplexityReport level_report(int n, int k, const CoverOutcome& cover,
                              const FinitePoset& ambient, double elapsed) {
    ComplexityReport r;
    r.invariant = "cc_k";
    r.n = n;
    r.k = k;
    r.value_kind = cover.kind;
    r.value = cover.value;
    r.exact = cover.exact;
    r.notes = cover.notes;
    for (const auto& member : cover.cover) {
        std::vector<std::string> labels;
        member.for_each_set([&](std::size_t x) { labels.push_back(ambient.label(int(x))); });
        r.cover_labels.push_back(std::move(labels));
    }
    r.cover_masks = cover.cover;
    r.elapsed_ms = elapsed;
    return r;
}

ComplexityReport copy_at_level(const ComplexityReport& src, int k, const std::string& note) {
    ComplexityReport r = src;
    r.k = k;
    r.notes = note;
    r.elapsed_ms = 0;
    return r;
}

}  // namespace

std::vector<ComplexityReport> cc_k_sequence(const PosetPtr& p, int n, int k_max,
                                            const ComputeConfig& config, long stop_at_value) {
    if (k_max < 0) throw Error("subdivision depth must be nonnegative");
    std::vector<ComplexityReport> out;

    auto start0 = std::chrono::steady_clock::now();
    PowerSpace space = make_power(p, n, config.size_cap);
    std::vector<std::vector<int>> maps0;
    for (int j = 0; j < n; ++j) maps0.push_back(space.projection(j));
    ProjectionsHomotopicCriterion crit0(space.total, space.base, std::move(maps0),
                                        config.budgets);
    CoverOutcome cover0 = minimum_cover(crit0, {}, config);
    out.push_back(level_report(n, 0, cover0, *space.total, ms_since(start0)));

    if (k_max == 0) return out;

    // disconnected base: the obstruction on minimal opens survives every
    // subdivision, so all levels are infinite
    if (cover0.kind == ComplexityReport::ValueKind::Infinite) {
        for (int k = 1; k <= k_max; ++k)
            out.push_back(copy_at_level(out[0], k, "infinite at level 0 persists"));
        return out;
    }
    // a cover by the whole space pulls back to the whole space at every level
    if (cover0.kind == ComplexityReport::ValueKind::Finite && cover0.value == 1 &&
        cover0.exact) {
        for (int k = 1; k <= k_max; ++k)
            out.push_back(copy_at_level(out[0], k, "whole space passes at level 0"));
        return out;
    }

    if (cover0.kind == ComplexityReport::ValueKind::Finite && cover0.value <= stop_at_value)
        return out;

    SubdivisionTower tower = build_tower(p, n, k_max, config.sd_size_cap, config.size_cap);

    // Phase loci for crown factors: classify elements of P^n by the cyclic
    // offsets of their coordinates around the crown. At level k the down-set
    // of chains avoiding the subdivided copy of a single locus is a strong
    // cover candidate (removing it breaks every winding mismatch), and any
    // two such candidates with distinct loci cover sd^k for k >= 2 because
    // the members of a chain are nested while the loci are disjoint.
    std::vector<Bitset> loci;  // masks over the previous level
    {
        CoreData fc = compute_core(*p);
        if (auto pos = crown_positions(*fc.core)) {
            const int period = fc.core->size();
            std::map<std::vector<int>, std::size_t> locus_index;
            for (int e = 0; e < tower.base.total->size(); ++e) {
                std::vector<int> offsets(std::size_t(n) - 1);
                int p1 = (*pos)[fc.retraction[tower.base.coords[e][0]]];
                for (int j = 1; j < n; ++j) {
                    int pj = (*pos)[fc.retraction[tower.base.coords[e][j]]];
                    offsets[j - 1] = ((pj - p1) % period + period) % period;
                }
                auto [it, fresh] = locus_index.try_emplace(offsets, loci.size());
                if (fresh) loci.emplace_back(std::size_t(tower.base.total->size()));
                loci[it->second].set(e);
            }
        }
    }

    std::vector<Bitset> prev_cover = cover0.cover;  // masks over the previous level
    for (int k = 1; k <= k_max; ++k) {
        if (config.time_budget_seconds > 0 &&
            ms_since(start0) > config.time_budget_seconds * 1000.0) {
            ComplexityReport r;
            r.invariant = "cc_k";
            r.n = n;
            r.k = k;
            r.value_kind = ComplexityReport::ValueKind::Unknown;
            r.notes = "time budget exhausted";
            out.push_back(std::move(r));
            continue;
        }
        if (k > tower.depth()) {
            ComplexityReport r;
            r.invariant = "cc_k";
            r.n = n;
            r.k = k;
            r.value_kind = ComplexityReport::ValueKind::Unknown;
            r.notes = "subdivision exceeds the size cap";
            out.push_back(std::move(r));
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        const PosetPtr& level = tower.level(k);
        // per-evaluation cost grows with the level, so scale the enumeration
        // budget down with its size; the pulled-back cover and the phase
        // candidates carry the subdivided levels, not brute enumeration
        ComputeConfig level_config = config;
        level_config.budgets.enumeration_evals =
            std::min(config.budgets.enumeration_evals,
                     std::max<std::size_t>(512, 200'000 / std::size_t(level->size())));
        std::vector<std::vector<int>> maps;
        for (int j = 1; j <= n; ++j) maps.push_back(rho_map(tower, k, j));
        ProjectionsHomotopicCriterion crit(level, p, std::move(maps), config.budgets);
        // pull the previous cover back through tau: preimages of passing
        // down-sets pass, since rho at this level factors through tau
        std::vector<Bitset> known;
        const auto& tau = tower.levels[k - 1].tau;
        for (const auto& member : prev_cover) {
            Bitset pre(std::size_t(level->size()));
            for (std::size_t x = 0; x < tau.size(); ++x)
                if (member.test(tau[x])) pre.set(x);
            known.push_back(std::move(pre));
        }
        // phase-avoidance candidates (crown factors only); advance the loci to
        // this level as we go so the next iteration can reuse them
        if (!loci.empty()) {
            const auto& chains = tower.levels[k - 1].chains;
            std::vector<Bitset> next_loci(loci.size(), Bitset(std::size_t(level->size())));
            for (std::size_t r = 0; r < loci.size(); ++r) {
                Bitset a{std::size_t(level->size())};
                for (int i = 0; i < level->size(); ++i) {
                    if (!chains[i].intersects(loci[r])) a.set(i);
                    if (chains[i].is_subset_of(loci[r])) next_loci[r].set(i);
                }
                if (crit.passes(a) == Tri::True) known.push_back(std::move(a));
            }
            loci = std::move(next_loci);
        }
        CoverOutcome cover = minimum_cover(crit, known, level_config);
        out.push_back(level_report(n, k, cover, *level, ms_since(start)));
        if (cover.kind == ComplexityReport::ValueKind::Finite) prev_cover = cover.cover;
        if (cover.kind == ComplexityReport::ValueKind::Finite && cover.value == 1 &&
            cover.exact) {
            for (int k2 = k + 1; k2 <= k_max; ++k2)
                out.push_back(copy_at_level(out.back(), k2,
                                            "whole space passes at level " + std::to_string(k)));
            break;
        }
        if (cover.kind == ComplexityReport::ValueKind::Finite && cover.value <= stop_at_value)
            break;
    }
    return out;
}

ComplexityReport cc_k_n(const PosetPtr& p, int n, int k, const ComputeConfig& config) {
    return cc_k_sequence(p, n, k, config).back();
}

ComplexityReport cc_inf_n(const PosetPtr& p, int n, int k_max, const ComputeConfig& config) {
    auto start = std::chrono::steady_clock::now();
    // stop descending once a level reaches 2: the only smaller value is 1,
    // and the result is reported as an upper bound in any case
    auto seq = cc_k_sequence(p, n, k_max, config, 2);
    if (seq[0].value_kind == ComplexityReport::ValueKind::Infinite) {
        ComplexityReport r = seq[0];
        r.invariant = "cc_inf";
        r.k = 0;
        r.elapsed_ms = ms_since(start);
        return r;
    }
    const ComplexityReport* best = nullptr;
    for (const auto& r : seq) {
        if (r.value_kind != ComplexityReport::ValueKind::Finite) continue;
        if (!best || r.value < best->value) best = &r;
    }
    ComplexityReport r;
    if (!best) {
        r.invariant = "cc_inf";
        r.n = n;
        r.k = k_max;
        r.value_kind = ComplexityReport::ValueKind::Unknown;
        r.notes = "no level produced a cover";
        r.elapsed_ms = ms_since(start);
        return r;
    }
    r = *best;
    r.invariant = "cc_inf";
    // exact only when nothing smaller can appear at deeper levels
    r.exact = r.value == 1 && best->exact;
    if (!r.exact)
        r.notes = "upper bound at depth " + std::to_string(k_max) + "; best level " +
                  std::to_string(*best->k) + " (" + best->notes + ")";
    r.elapsed_ms = ms_since(start);
    return r;
}

ComplexityReport sc_n_of_complex(const ComplexPtr& k, int n, int k_max,
                                 const ComputeConfig& config) {
    auto fp = face_poset(*k, nullptr, config.size_cap);
    ComplexityReport r = cc_inf_n(fp, n, k_max, config);
    r.invariant = "sc_n";
    return r;
}

ComplexityReport sc_n_of_order_complex(const PosetPtr& p, int n, int k_max,
                                       const ComputeConfig& config) {
    return sc_n_of_complex(order_complex(*p), n, k_max, config);
}

}  // namespace finitetc
