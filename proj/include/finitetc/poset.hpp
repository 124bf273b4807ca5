#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finitetc/bitset.hpp"
#include "finitetc/errors.hpp"

namespace finitetc {

class FinitePoset;
using PosetPtr = std::shared_ptr<const FinitePoset>;

// Global hard cap on constructed poset sizes. Reads FINITETC_SIZE_CAP once;
// defaults to 100000 elements.
std::size_t global_size_cap();

// A finite T0 space presented as a poset. Opens are down-sets: the minimal
// open of x is {y : y <= x}. Immutable after construction.
class FinitePoset {
public:
    // Builds from labels and covering-candidate edges (lower, upper). Input
    // edges may contain transitive shortcuts; the Hasse diagram stored here
    // is the transitive reduction.
    static PosetPtr build(std::vector<std::string> labels,
                          const std::vector<std::pair<int, int>>& edges,
                          std::size_t size_cap = global_size_cap());

    int size() const { return int(labels_.size()); }
    const std::string& label(int x) const { return labels_.at(x); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool leq(int x, int y) const { return down_[y].test(x); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

    const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }

    // {y : y <= x}, the minimal open U_x (includes x).
    const Bitset& down_set(int x) const { return down_.at(x); }
    // {y : y >= x} (includes x).
    const Bitset& up_set(int x) const { return up_.at(x); }

    const std::vector<int>& lower_covers(int x) const { return lower_covers_[x]; }
    const std::vector<int>& upper_covers(int x) const { return upper_covers_[x]; }

    std::vector<int> maximal_elements() const;
    std::vector<int> minimal_elements() const;
    // Maximal elements of the induced subposet on `members`.
    std::vector<int> maximal_in(const Bitset& members) const;

    Bitset down_closure(const Bitset& members) const;
    bool is_down_closed(const Bitset& members) const;

    Bitset full_mask() const;

    // Indices in a linear extension order (x <= y implies position(x) <= position(y)).
    const std::vector<int>& linear_extension() const { return topo_; }

    std::vector<int> component_ids() const;
    int component_count() const;
    bool is_connected() const;

    // Induced subposet on `members` (ascending original index order). If
    // to_sub is given, it receives the map original index -> sub index (-1
    // outside members).
    PosetPtr induced(const Bitset& members, std::vector<int>* to_sub = nullptr) const;

    // Internal: construct from an already-closed relation. `down[y]` must be
    // the full down-set of y including y.
    static PosetPtr from_closed_relation(std::vector<std::string> labels,
                                         std::vector<Bitset> down);

private:
    FinitePoset() = default;
    void finish();  // derive up_, hasse_, covers, topo_ from down_

    std::vector<std::string> labels_;
    std::vector<Bitset> down_;  // down_[y] = {x : x <= y}
    std::vector<Bitset> up_;    // up_[x]   = {y : y >= x}
    std::vector<std::pair<int, int>> hasse_;
    std::vector<std::vector<int>> lower_covers_, upper_covers_;
    std::vector<int> topo_;
};

// An open subset of a finite space: a down-closed element mask.
struct DownSet {
    PosetPtr ambient;
    Bitset members;

    DownSet(PosetPtr amb, Bitset m) : ambient(std::move(amb)), members(std::move(m)) {
        if (!ambient->is_down_closed(members))
            throw Error("DownSet: member mask is not down-closed");
    }
};

// --- Constructions -----------------------------------------------------

DownSet minimal_open(const PosetPtr& p, int x);

PosetPtr product(const PosetPtr& p, const PosetPtr& q,
                 std::size_t size_cap = global_size_cap());

// P^n with tuples ordered lexicographically by component index. Also returns
// the coordinate decomposition when `coords` is non-null: coords[e][j] is the
// j-th coordinate of element e.
PosetPtr power(const PosetPtr& p, int n, std::vector<std::vector<int>>* coords = nullptr,
               std::size_t size_cap = global_size_cap());

// Coordinates of every element of power(p, n), in element order.
std::vector<std::vector<int>> power_coords(int base_size, int n);

PosetPtr fence(int m);
PosetPtr wedge_fence(int n, int m);

// All nonempty chains of p, as element masks, ordered by (length, lex members).
std::vector<Bitset> enumerate_chains(const FinitePoset& p,
                                     std::size_t size_cap = global_size_cap());

// Barycentric subdivision: elements are nonempty chains of p ordered by
// inclusion. When chains_out is non-null it receives the chain masks in
// element order.
PosetPtr barycentric_subdivision(const FinitePoset& p, std::vector<Bitset>* chains_out = nullptr,
                                 std::size_t size_cap = global_size_cap());

// tau : sd(P) -> P, chain |-> its maximum. Returned as the assignment vector.
std::vector<int> tau_assignment(const FinitePoset& p, const std::vector<Bitset>& chains);

std::string chain_label(const FinitePoset& p, const Bitset& chain);

}  // namespace finitetc
