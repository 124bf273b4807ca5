#pragma once

#include <vector>

#include "finitetc/complexity.hpp"
#include "finitetc/simplicial.hpp"

namespace finitetc {

// Iterated barycentric subdivisions of P^n together with the comparison maps
// tau : sd^{k}(P^n) -> sd^{k-1}(P^n) (chain |-> maximum). Levels stop early
// when a subdivision would exceed the size cap.
struct SubdivisionTower {
    PowerSpace base;  // level 0 is base.total = P^n

    struct Level {
        PosetPtr poset;              // sd^k(P^n)
        std::vector<int> tau;        // assignment into the previous level
        std::vector<Bitset> chains;  // element i as a chain mask of the previous level
    };
    std::vector<Level> levels;  // levels[k-1] holds sd^k
    bool truncated = false;     // true when the cap stopped the tower early

    int depth() const { return int(levels.size()); }
    const PosetPtr& level(int k) const;

    // tau composed down to level 0: sd^k(P^n) -> P^n.
    std::vector<int> tau_composite(int k) const;
};

SubdivisionTower build_tower(const PosetPtr& p, int n, int k_max,
                             std::size_t sd_size_cap = 20000,
                             std::size_t size_cap = global_size_cap());

// rho_j at level k: the j-th coordinate projection pulled back through the
// tower, sd^k(P^n) -> P (1-based j).
std::vector<int> rho_map(const SubdivisionTower& tower, int k, int j);

// Minimum cover of sd^k(P^n) by down-sets on which the rho_j are pairwise
// homotopic; equals cc_n at k = 0.
ComplexityReport cc_k_n(const PosetPtr& p, int n, int k, const ComputeConfig& config = {});

// All levels 0..k_max in one pass; covers found at level k-1 are pulled back
// through tau as trusted candidates at level k, so values never increase.
// When a level reaches `stop_at_value` the sequence is truncated there; 1 is
// always a stopping point since no cover can be smaller.
std::vector<ComplexityReport> cc_k_sequence(const PosetPtr& p, int n, int k_max,
                                            const ComputeConfig& config = {},
                                            long stop_at_value = 1);

// min over k <= k_max of cc^k_n; certified exact only when the value is 1 (or
// infinite), otherwise an upper bound at the given depth.
ComplexityReport cc_inf_n(const PosetPtr& p, int n, int k_max, const ComputeConfig& config = {});

// Simplicial analogue via the face poset: SC_n(K) = CC^inf_n(X(K)).
ComplexityReport sc_n_of_complex(const ComplexPtr& k, int n, int k_max,
                                 const ComputeConfig& config = {});

// SC_n of the order complex of a poset.
ComplexityReport sc_n_of_order_complex(const PosetPtr& p, int n, int k_max,
                                       const ComputeConfig& config = {});

}  // namespace finitetc
