#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "finitetc/monotone_map.hpp"
#include "finitetc/poset.hpp"

namespace finitetc {

// Budgeted queries are tri-state; Unknown is never coerced to false.
enum class Tri { False, True, Unknown };

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False || b == Tri::False) return Tri::False;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::True;
}

struct Budgets {
    std::size_t homotopy_nodes = 2'000'000;   // visited maps in mapping-poset BFS
    std::size_t csp_nodes = 5'000'000;        // backtracking nodes in section search
    std::size_t enumeration_evals = 60'000;   // criterion evaluations in cover enumeration
    std::size_t cover_nodes = 2'000'000;      // branch-and-bound nodes in set cover
    std::size_t contiguity_maps = 200'000;    // simplicial maps enumerated for contiguity BFS
};

// Beat-point core. `retraction` maps original indices onto core indices;
// `inclusion` maps core indices back. The core is a strong deformation
// retract, so homotopy questions transfer through it.
struct CoreData {
    PosetPtr core;
    std::vector<int> retraction;  // p.size() entries, values in core indices
    std::vector<int> inclusion;   // core.size() entries, values in p indices
};

CoreData compute_core(const FinitePoset& p);

PosetPtr core(const PosetPtr& p);
bool is_contractible(const FinitePoset& p);

// Connectivity of f and g in the mapping poset Hom(domain, codomain) under
// the pointwise order; this is exactly homotopy of maps of finite spaces.
Tri homotopic(const MonotoneMap& f, const MonotoneMap& g, const Budgets& budgets = {});

// Same question on raw assignments over explicit posets.
Tri homotopic_assignments(const FinitePoset& dom, const FinitePoset& cod,
                          const std::vector<int>& f, const std::vector<int>& g,
                          const Budgets& budgets);

// Cyclic positions when the poset is a crown: a single Hasse cycle of
// alternating minimal and maximal elements (the minimal circle model and its
// subdivisions). Empty for any other shape.
std::optional<std::vector<int>> crown_positions(const FinitePoset& c);

// Winding obstruction for maps into a crown with the given positions: a Hasse
// edge of `dom` witnessing that f and g wind differently around some cycle of
// the domain. Single-point moves preserve winding, so any violation certifies
// that f and g are not homotopic; no violation is inconclusive.
std::optional<std::pair<int, int>> winding_violation(const FinitePoset& dom,
                                                     const std::vector<int>& pos, int period,
                                                     const std::vector<int>& f,
                                                     const std::vector<int>& g);

// True iff a homotopy with exactly the J_m alternation pattern exists
// (h0 = f, h0 <= h1 >= h2 <= ..., hm = g; stationary steps allowed).
Tri homotopic_bounded(const MonotoneMap& f, const MonotoneMap& g, int m,
                      const Budgets& budgets = {});

enum class Direction { Down, Up };

// All monotone maps pointwise below (or above) f, in deterministic order.
std::vector<MonotoneMap> neighbors_in_mapping_poset(const MonotoneMap& f, Direction dir);

// True iff the inclusion of the down-set into its ambient poset is homotopic
// to a constant map.
Tri contractible_in(const DownSet& q, const Budgets& budgets = {});

// A homotopy H : P x J_m -> Q recorded by its fence slices.
struct HomotopyWitness {
    PosetPtr domain, codomain;
    std::vector<std::vector<int>> frames;  // frames[i] = slice at fence node i

    void validate() const;  // zigzag + per-frame monotonicity; throws InvalidWitness
};

// Explicit zigzag of monotone maps from f to g found by uncored BFS, for
// witness emission on small instances. Empty when not homotopic or budget hit.
std::optional<HomotopyWitness> homotopy_zigzag(const MonotoneMap& f, const MonotoneMap& g,
                                               const Budgets& budgets = {});

enum class EnumResult { Completed, Stopped, Budget };

// Enumerates monotone maps dom -> cod whose value at x lies in candidates[x];
// calls fn for each (fn returning true stops the enumeration).
EnumResult enumerate_monotone_maps(const FinitePoset& dom, const FinitePoset& cod,
                                   const std::vector<std::vector<int>>& candidates,
                                   const std::function<bool(const std::vector<int>&)>& fn,
                                   std::size_t node_budget);

}  // namespace finitetc
