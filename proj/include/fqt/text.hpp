#pragma once

#include <string>
#include <string_view>

#include "fqt/poly.hpp"
#include "fqt/ratfunc.hpp"

namespace fqt {

// Text format: terms "c*t^e" joined by '+', c the integer code (0..q-1) of a
// coefficient, e.g. "t^3+2*t+1". Rational functions are "num/den" with
// parentheses around a side of more than one term. The parser also takes
// '-', products, powers and nested parentheses. Whitespace is ignored.

std::string format(const Poly& f);
std::string format(const RatFunc& x);

/// Throws ParseError (with the offending position) on malformed input.
Poly parse_poly(const FieldCtx& field, std::string_view text);
/// Throws ParseError on malformed input and DomainError on a zero denominator.
RatFunc parse_ratfunc(const FieldCtx& field, std::string_view text);

}  // namespace fqt
