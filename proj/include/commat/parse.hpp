#pragma once

#include <string>

#include "commat/bcom.hpp"
#include "commat/hz.hpp"
#include "commat/kr.hpp"

namespace commat {

/// Shared expression grammar:
///   element := term ('+' term)*
///   term    := [integer '*'] factor ('*' factor)*  |  integer
///   factor  := generator ['^' positive-integer]
/// Whitespace is ignored; integers may carry a sign. Generators per ring:
///   kr:   a, w, U, vb          hz: a, u
///   ku:   v, y<k>              bcom: a, w, U, vb, yb<k>
/// Factors are multiplied out in the ring, so products like "yb2*yb3" expand
/// through the y-product relations. Throws ParseError with a position.
KRElement parse_kr(const std::string& expr);
HZElement parse_hz(const std::string& expr);
KuElement parse_ku(const std::string& expr);
BcomElement parse_bcom(const std::string& expr);

}  // namespace commat
