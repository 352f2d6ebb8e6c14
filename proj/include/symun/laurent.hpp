/* laurent.hpp
 * -----------
 * Laurent polynomials in one variable t with arbitrary-precision integer
 * coefficients.  Used throughout for Alexander polynomials and Fox
 * derivative entries, where exact arithmetic is required.
 *
 * A LaurentPoly is stored sparsely as exponent -> nonzero coefficient.
 * Knot polynomials admit a canonical representative: symmetric under
 * t -> 1/t and taking the value 1 at t = 1.  lp_canonicalize_knot picks it.
 */
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symun {

using Integer = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial: map exponent -> coefficient, no zero entries.
using LaurentPoly = std::map<int, Integer>;

// Thrown when a polynomial cannot be normalized to knot form (symmetric
// with value 1 at t = 1, integer exponent shift).
struct NotKnotShaped : std::runtime_error {
    explicit NotKnotShaped(const std::string& why) : std::runtime_error(why) {}
};

LaurentPoly lp_zero();
LaurentPoly lp_const(Integer c);
// c * t^e
LaurentPoly lp_term(Integer c, int e);
LaurentPoly lp_from_pairs(const std::vector<std::pair<int, long long>>& pairs);

bool lp_is_zero(const LaurentPoly& p);
void lp_set(LaurentPoly& p, int e, Integer c);  // assign coefficient, dropping zeros
Integer lp_coeff(const LaurentPoly& p, int e);

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_neg(const LaurentPoly& a);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_pow(const LaurentPoly& a, unsigned k);
// multiply by t^k (k may be negative)
LaurentPoly lp_shift(const LaurentPoly& a, int k);
// substitute t -> 1/t
LaurentPoly lp_reverse(const LaurentPoly& a);
Integer lp_eval_int(const LaurentPoly& a, const Integer& x);  // requires min exponent >= 0 or x = +-1

int lp_min_exp(const LaurentPoly& a);  // requires nonzero
int lp_max_exp(const LaurentPoly& a);  // requires nonzero

// a == +- t^k b for some integer k?
bool lp_equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);

// Highest-exponent coefficient is +-1?  (Convention: the zero polynomial and
// constants +-1 count as monic; used for fiberedness-style checks.)
bool lp_is_monic(const LaurentPoly& a);

// Canonical knot-polynomial form: unique unit multiple +-t^k * p that is
// symmetric under t -> 1/t and evaluates to 1 at t = 1.
// Throws NotKnotShaped when no such multiple exists.
LaurentPoly lp_canonicalize_knot(const LaurentPoly& p);

// Rendering: "t^-1 - 1 + t" style, ascending exponents; "0" for zero.
std::string lp_to_string(const LaurentPoly& p);

}  // namespace symun
