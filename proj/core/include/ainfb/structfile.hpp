#pragma once
#include "hopf.hpp"
#include <iosfwd>

namespace ainfb {

// Text description of a Hopf algebra with an optional omega table. The
// product is always the trivial one and the coproduct the primitive one.
//
//   # comment
//   ring z2 | rationals | exterior <z2|rationals> <xdeg>
//   generator <name> <degree>
//   omega <m> <n>
//   <word> -> <element>     (entry rows, only after an omega line)
//
// omega's degree shift is read off its first entry and every other entry must
// match it; whether that shift equals m+n-3 is left to verification.
HopfAlgebra parse_structure(std::istream &in, const std::string &name);
HopfAlgebra load_structure_file(const std::string &path);

} // namespace ainfb
