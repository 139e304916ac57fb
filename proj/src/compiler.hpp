#pragma once

#include <string_view>

#include "program.hpp"

namespace rec {

// Compiles one unit: zero or more definitions `(block)'x` (an optional stray
// `L` after the name is consumed and ignored), then exactly one main block.
// Subroutine references may be forward or recursive. Throws RecFault.
Program compile(std::string_view source);

// Human-readable disassembly; includes the canonical source on a line
// starting with "source: " so it can be fed back to compile().
std::string dump(const Program& p);

}  // namespace rec
