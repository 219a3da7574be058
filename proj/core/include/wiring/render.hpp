#pragma once

#include <string>

#include "wiring/sequence.hpp"

namespace wiring {

enum class RenderStyle { svg, ascii };

// Deterministic diagram of a wiring (or fragment prefix): wires as polylines,
// one fixed-width column per junction, row 1 at the bottom.  Integer
// coordinates only, so output is byte-stable.
std::string render_wiring(const AllowableSequence& seq, RenderStyle style);

}  // namespace wiring
