/* alexander.hpp
 * -------------
 * Alexander polynomials via Fox calculus on Wirtinger presentations.
 *
 * The Alexander matrix has one row per relator and one column per
 * generator, entry (r, g) the abelianized Fox derivative d r / d x_g with
 * every generator sent to t.  For a knot presentation the polynomial is the
 * determinant of the minor obtained by deleting one relator and one
 * generator; the result is independent of the choices up to units +-t^k,
 * and is returned in the canonical form that is symmetric in t -> 1/t with
 * value 1 at t = 1.
 *
 * All determinants and ranks are computed exactly with fraction-free
 * (Bareiss) elimination over Z[t].
 */
#pragma once

#include "symun/freeword.hpp"
#include "symun/laurent.hpp"
#include "symun/tangle.hpp"
#include "symun/wirtinger.hpp"

namespace symun {

// Abelianized Fox derivative of w with respect to generator g.
LaurentPoly fox_derivative(const Word& w, int g);

std::vector<std::vector<LaurentPoly>> alexander_matrix(const Presentation& p);

// Exact determinant / rank of a polynomial matrix (empty matrix -> det 1).
LaurentPoly poly_matrix_det(const std::vector<std::vector<LaurentPoly>>& m);
int poly_matrix_rank(const std::vector<std::vector<LaurentPoly>>& m);

// Determinant after deleting relator row drop_row and generator column
// drop_col from the Alexander matrix.
LaurentPoly alexander_minor(const Presentation& p, int drop_row, int drop_col);

// Canonical Alexander polynomial of a knot (one-component diagram).  Two
// different column deletions are compared as an internal consistency check.
LaurentPoly alexander_polynomial(const Presentation& p);
LaurentPoly alexander_polynomial(const ClosedDiagram& d);

// True iff every (n-1)-minor of the Alexander matrix vanishes, n the number
// of generators — equivalently rank < n-1 over Q(t).  Detects links whose
// one-variable Alexander polynomial is identically zero; degenerate
// crossingless unlinks count as vanishing.
bool first_elementary_ideal_vanishes(const ClosedDiagram& d);

}  // namespace symun
