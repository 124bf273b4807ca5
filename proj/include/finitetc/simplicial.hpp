#pragma once

#include <memory>
#include <string>
#include <vector>

#include "finitetc/homotopy.hpp"
#include "finitetc/poset.hpp"

namespace finitetc {

class SimplicialComplex;
using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

// A finite abstract simplicial complex stored by its facets (maximal
// simplices). Facets are canonicalized: sorted vertex lists, pairwise
// non-contained, deduplicated.
class SimplicialComplex {
public:
    static ComplexPtr build(std::vector<std::string> vertex_labels,
                            std::vector<std::vector<int>> facets);

    int vertex_count() const { return int(vertex_labels_.size()); }
    const std::string& vertex_label(int v) const { return vertex_labels_.at(v); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    bool has_simplex(const std::vector<int>& sorted_vertices) const;

    // All nonempty simplices as vertex masks, ordered by (size, lex members).
    std::vector<Bitset> all_simplices(std::size_t size_cap = global_size_cap()) const;

private:
    SimplicialComplex() = default;
    std::vector<std::string> vertex_labels_;
    std::vector<std::vector<int>> facets_;
};

struct SimplicialMap {
    ComplexPtr domain, codomain;
    std::vector<int> vertex_assignment;

    SimplicialMap(ComplexPtr dom, ComplexPtr cod, std::vector<int> assignment,
                  bool validate = true);

    std::vector<int> image(const std::vector<int>& simplex) const;  // sorted, deduped
    bool operator==(const SimplicialMap& o) const {
        return vertex_assignment == o.vertex_assignment;
    }
};

// One-step contiguity: phi(sigma) u psi(sigma) is a simplex for every simplex
// sigma; checking facets suffices.
bool contiguous_one_step(const SimplicialMap& phi, const SimplicialMap& psi);

// Same contiguity class: connectivity in the graph of all simplicial maps
// under one-step contiguity; Unknown when the map count exceeds the budget.
Tri same_contiguity_class(const SimplicialMap& phi, const SimplicialMap& psi,
                          const Budgets& budgets = {});

// Order complex K(P): vertices are elements, facets are maximal chains.
ComplexPtr order_complex(const FinitePoset& p);

// Face poset X(K): nonempty simplices ordered by inclusion. When
// simplices_out is non-null it receives the simplex masks in element order.
PosetPtr face_poset(const SimplicialComplex& k, std::vector<Bitset>* simplices_out = nullptr,
                    std::size_t size_cap = global_size_cap());

// sd(K) = K(X(K)).
ComplexPtr sd_complex(const SimplicialComplex& k, std::size_t size_cap = global_size_cap());

// K(-) on maps: a monotone map induces a simplicial map of order complexes
// with the same vertex assignment.
SimplicialMap K_functor(const MonotoneMap& f);

// X(-) on maps: a simplicial map induces a monotone map of face posets,
// sigma |-> phi(sigma).
MonotoneMap X_functor(const SimplicialMap& phi);

// All simplicial maps domain -> codomain in deterministic order; empty
// optional when |cod vertices|^|dom vertices| exceeds the budget.
std::optional<std::vector<SimplicialMap>> enumerate_simplicial_maps(
    const ComplexPtr& dom, const ComplexPtr& cod, std::size_t budget);

bool complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace finitetc
