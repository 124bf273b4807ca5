#pragma once

#include <vector>

#include "finitetc/poset.hpp"

namespace finitetc {

enum class Variant { Wedge, Linear };

// Node indexing for the two fence shapes used by sections.
//
// Wedge J_{n,m}: node 0 is the shared basepoint; node of branch j (1-based)
// at depth t (1..m) has index 1 + (j-1)*m + (t-1). Per-branch zigzag
// 0 <= 1_j >= 2_j <= ...
//
// Linear J_{(n-1)m}: nodes 0..(n-1)m with zigzag 0 <= 1 >= 2 <= ...
struct FenceNodes {
    static int wedge_count(int n, int m) { return n * m + 1; }
    static int wedge_node(int n, int m, int j, int t) {
        (void)n;
        return t == 0 ? 0 : 1 + (j - 1) * m + (t - 1);
    }
    static int linear_count(int n, int m) { return (n - 1) * m + 1; }
};

// Adjacent node pair of a fence shape with its direction: (a, b, ascent)
// means value(a) <= value(b) when ascent, value(a) >= value(b) otherwise.
// Pairs always satisfy a < b in node index.
struct FencePair {
    int a, b;
    bool ascent;
};

std::vector<FencePair> fence_pairs(Variant variant, int n, int m);

// Fence node holding the j-th endpoint equation (1-based j).
int endpoint_node(Variant variant, int n, int m, int j);

// A continuous section of q_{n,m} (wedge) or q'_{n,m} (linear) over a
// down-set of P^n, stored pointwise: for each domain element, the values of
// its path at every fence node.
struct SectionWitness {
    Variant variant;
    int n = 0, m = 0;
    PosetPtr ambient;                       // P^n
    PosetPtr factor;                        // P
    std::vector<std::vector<int>> coords;   // coords of every ambient element
    Bitset domain;                          // down-set of ambient
    std::vector<std::vector<int>> paths;    // one per domain element, ascending index

    int node_count() const {
        return variant == Variant::Wedge ? FenceNodes::wedge_count(n, m)
                                         : FenceNodes::linear_count(n, m);
    }

    // Throws InvalidWitness on any violation: domain not down-closed, a path
    // that is not fence-monotone, comparable elements with incomparable
    // paths, or endpoint equations failing.
    void validate() const;
};

// Precomposition with the retraction J_{n,m+1} -> J_{n,m} (or its linear
// analogue); yields a witness at parameter m+1.
SectionWitness transport_R(const SectionWitness& w);

// Wedge witness at even m -> linear witness at 2m, walking branch 1 backward
// to the basepoint, then out and back each further branch.
SectionWitness transport_f(const SectionWitness& w);

// Linear witness at m = 0 (mod 4) -> wedge witness at k = (n-1)m/2, each
// branch walking from the midpoint toward (j-1)m and then idling.
SectionWitness transport_g(const SectionWitness& w);

}  // namespace finitetc
