#ifndef HILBNODE_UPOLY_HPP
#define HILBNODE_UPOLY_HPP

#include <string>
#include <vector>

#include "hilbnode/scalar.hpp"

namespace hilbnode {

// Dense univariate polynomials over Scalar, coeff[i] on x^i, no trailing
// zeros (empty vector = 0).  Free functions; the coefficient field is taken
// from the operands, with a FieldCtx parameter where an empty input would
// leave it undetermined.
using UPoly = std::vector<Scalar>;

void poly_trim(UPoly& p);
bool poly_is_zero(const UPoly& p);
int poly_deg(const UPoly& p);  // -1 for the zero polynomial

UPoly poly_const(const Scalar& c);
UPoly poly_x(const FieldCtx& ctx);  // the monomial x

UPoly poly_add(const UPoly& a, const UPoly& b);
UPoly poly_sub(const UPoly& a, const UPoly& b);
UPoly poly_neg(const UPoly& a);
UPoly poly_mul(const UPoly& a, const UPoly& b);
UPoly poly_scale(const UPoly& a, const Scalar& c);

// Euclidean division; requires b != 0.
std::pair<UPoly, UPoly> poly_divmod(const UPoly& a, const UPoly& b);
UPoly poly_gcd(const UPoly& a, const UPoly& b);  // monic gcd, or 0 if both 0
UPoly poly_monic(const UPoly& a);

Scalar poly_eval(const UPoly& a, const Scalar& x);
// Order of vanishing at 0 (index of lowest nonzero coefficient); -1 for 0.
int poly_ord(const UPoly& a);
// Coefficient reversal x -> 1/x scaled by x^deg.
UPoly poly_reverse(const UPoly& a);

std::string poly_str(const UPoly& a, const std::string& var = "a");

}  // namespace hilbnode

#endif
