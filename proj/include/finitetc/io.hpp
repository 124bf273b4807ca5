#pragma once

#include <string>

#include "finitetc/complexity.hpp"
#include "finitetc/simplicial.hpp"
#include "finitetc/witness.hpp"

namespace finitetc {

// Text format: first line `elements: a b c d`, then one relation `a < c` per
// line; `#` starts a comment. A leading `{` switches to the JSON form
// {"elements": [...], "hasse": [["a","c"], ...]}.
PosetPtr parse_poset(const std::string& text);

// Zoo name (`sphere:1`, ...) or a path to a poset file.
PosetPtr load_space(const std::string& source);

// Text format: one facet per line, vertex names whitespace-separated; `#`
// comments. JSON form {"facets": [["a","c"], ...]}. Vertices are ordered by
// first appearance.
ComplexPtr parse_complex(const std::string& text);

ComplexPtr load_complex(const std::string& source);

// Report serialization. JSON keys are emitted in a fixed order; elapsed_ms
// appears only when include_timing is set, so default output is
// byte-deterministic.
std::string report_to_json(const ComplexityReport& r, bool include_timing = false);
std::string report_to_text(const ComplexityReport& r);

std::string witness_to_json(const SectionWitness& w);

}  // namespace finitetc
