#pragma once

#include <string>

#include "modlat/classify.hpp"

namespace modlat {

// Graphviz DOT rendering of the submodule lattice: one node per submodule,
// Hasse cover edges, nodes colored by their classification flags (classical
// 2-absorbing fill, classical-prime border, prime/2-absorbing markers in the
// label).  The improper node carries no classification flags.
std::string lattice_dot(const Classification& c);

// Plain-text table of the same data, one line per submodule.
std::string classification_text(const Classification& c);

}  // namespace modlat
