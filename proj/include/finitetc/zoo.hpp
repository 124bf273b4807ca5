#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finitetc/poset.hpp"

namespace finitetc {

// Minimal finite model of the m-sphere: two points at every level 0..m,
// every point strictly below both points of every higher level.
PosetPtr minimal_sphere(int m);

PosetPtr chain_poset(int k);
PosetPtr antichain_poset(int k);

// Resolves `sphere:m`, `fence:m`, `wedge_fence:n:m`, `chain:k`, `antichain:k`.
// Throws ParseError for unknown names or bad parameters.
PosetPtr builtin_space(const std::string& name);

bool is_builtin_space(const std::string& name);

// Small named spaces the verification suites run over.
std::vector<std::pair<std::string, PosetPtr>> builtin_corpus();

// Random connected poset with 2..max_size elements, deterministic per seed.
PosetPtr random_connected_poset(int max_size, std::uint64_t seed);

// All posets with exactly `size` elements, up to isomorphism, in
// deterministic order; optionally restricted to connected ones.
std::vector<PosetPtr> posets_up_to_iso(int size, bool connected_only);

inline std::vector<PosetPtr> connected_posets_up_to_iso(int size) {
    return posets_up_to_iso(size, true);
}

}  // namespace finitetc
