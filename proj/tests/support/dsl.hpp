#pragma once

#include <string_view>

#include "disep/poly.hpp"

namespace disep::testing {

inline MultiPoly var(const Ring& r, std::string_view name) { return MultiPoly::variable(r, name); }
inline MultiPoly num(const Ring& r, const Rational& c) { return MultiPoly::constant(r, c); }
inline MultiPoly num(const Ring& r, long p, long q = 1) { return MultiPoly::constant(r, Rational(p, q)); }
inline FieldElement sqrt_of(long d) { return *FieldElement::sqrt_of_rational(Rational(d), ExtensionDescriptor{d}); }

}  // namespace disep::testing
