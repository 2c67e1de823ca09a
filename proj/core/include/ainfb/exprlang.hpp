#pragma once
#include "relations.hpp"

namespace ainfb {

// Evaluates nested operation calls over an element literal, e.g.
// "delta3(omega(y|y))" or "sigma2_2(Delta(y))". Operation names:
//   mu, Delta, omega, f<k>, g<k>, delta<k>, partial<k>, sigma<q>_<p>
// Anything else in call position is read as part of an element literal, whose
// arity is pinned by the innermost enclosing operation.
Element evaluate_expression(const HopfAlgebra &h, const Conventions &c, std::string_view text);

} // namespace ainfb
