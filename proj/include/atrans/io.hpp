#pragma once

#include <string>
#include <string_view>

#include "atrans/hypergraph.hpp"

namespace atrans {

// Text format:
//   line 1: "n r"
//   every other non-comment line: r strictly increasing vertex indices,
//   single spaces between them
// '#'-prefixed lines and blank lines are ignored on input and never emitted.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

} // namespace atrans
