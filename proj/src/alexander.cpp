/* alexander.cpp
 * -------------
 * Fox derivatives and exact polynomial linear algebra.
 */
#include "symun/alexander.hpp"

#include <algorithm>
#include <stdexcept>

namespace symun {

LaurentPoly fox_derivative(const Word& w, int g) {
    LaurentPoly r;
    int pre = 0;  // exponent sum of the strict prefix
    for (const Letter& l : w) {
        if (l.gen == g) {
            if (l.exp > 0) {
                Integer c = lp_coeff(r, pre) + 1;
                lp_set(r, pre, c);
            } else {
                Integer c = lp_coeff(r, pre - 1) - 1;
                lp_set(r, pre - 1, c);
            }
        }
        pre += l.exp;
    }
    return r;
}

std::vector<std::vector<LaurentPoly>> alexander_matrix(const Presentation& p) {
    std::vector<std::vector<LaurentPoly>> m;
    for (const Word& rel : p.relators) {
        std::vector<LaurentPoly> row;
        row.reserve(static_cast<std::size_t>(p.n_generators));
        for (int g = 0; g < p.n_generators; ++g) row.push_back(fox_derivative(rel, g));
        m.push_back(std::move(row));
    }
    return m;
}

namespace {

// Dense integer polynomial: coefficient of t^i at index i, no trailing zeros.
using Dense = std::vector<Integer>;

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Dense dense_sub(const Dense& a, const Dense& b) {
    Dense r = a;
    if (r.size() < b.size()) r.resize(b.size(), Integer(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Exact division (throws if the quotient is not a polynomial); used by
// Bareiss elimination where exactness is guaranteed.
Dense dense_div(const Dense& a, const Dense& b) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::invalid_argument("inexact polynomial division");
    Dense rem = a;
    Dense q(a.size() - b.size() + 1, Integer(0));
    for (std::size_t k = a.size() - b.size() + 1; k-- > 0;) {
        std::size_t top = k + b.size() - 1;
        if (top >= rem.size() || rem[top] == 0) continue;
        if (rem[top] % b.back() != 0) throw std::invalid_argument("inexact polynomial division");
        Integer c = rem[top] / b.back();
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= c * b[j];
    }
    trim(rem);
    if (!rem.empty()) throw std::invalid_argument("inexact polynomial division");
    trim(q);
    return q;
}

// Convert a Laurent matrix to dense form; *shift collects the uniform power
// of t pulled out of every entry (det scales by a unit only).
std::vector<std::vector<Dense>> to_dense(const std::vector<std::vector<LaurentPoly>>& m,
                                         int* shift) {
    int lo = 0;
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.empty()) lo = std::min(lo, lp_min_exp(e));
    *shift = lo;
    std::vector<std::vector<Dense>> r;
    for (const auto& row : m) {
        std::vector<Dense> dr;
        for (const auto& e : row) {
            Dense d;
            if (!e.empty()) {
                d.assign(static_cast<std::size_t>(lp_max_exp(e) - lo + 1), Integer(0));
                for (const auto& [exp, c] : e) d[static_cast<std::size_t>(exp - lo)] = c;
            }
            dr.push_back(std::move(d));
        }
        r.push_back(std::move(dr));
    }
    return r;
}

LaurentPoly from_dense(const Dense& d, int shift) {
    LaurentPoly p;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) p[static_cast<int>(i) + shift] = d[i];
    return p;
}

}  // namespace

LaurentPoly poly_matrix_det(const std::vector<std::vector<LaurentPoly>>& lm) {
    std::size_t r = lm.size();
    if (r == 0) return lp_const(1);
    for (const auto& row : lm)
        if (row.size() != r) throw std::invalid_argument("determinant of non-square matrix");
    int shift = 0;
    auto m = to_dense(lm, &shift);
    int sign = 1;
    Dense prev = {Integer(1)};
    for (std::size_t k = 0; k + 1 < r; ++k) {
        if (m[k][k].empty()) {
            std::size_t piv = k + 1;
            while (piv < r && m[piv][k].empty()) ++piv;
            if (piv == r) return lp_zero();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < r; ++i) {
            for (std::size_t j = k + 1; j < r; ++j)
                m[i][j] = dense_div(dense_sub(dense_mul(m[i][j], m[k][k]), dense_mul(m[i][k], m[k][j])),
                                    prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    Dense det = m[r - 1][r - 1];
    if (sign < 0) det = dense_sub({}, det);
    return from_dense(det, shift * static_cast<int>(r));
}

int poly_matrix_rank(const std::vector<std::vector<LaurentPoly>>& lm) {
    if (lm.empty() || lm[0].empty()) return 0;
    int shift = 0;
    auto m = to_dense(lm, &shift);
    std::size_t rows = m.size(), cols = m[0].size();
    Dense prev = {Integer(1)};
    std::size_t rank = 0;
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = k; i < rows && pi == rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (!m[i][j].empty()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        std::swap(m[k], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                m[i][j] = dense_div(dense_sub(dense_mul(m[i][j], m[k][k]), dense_mul(m[i][k], m[k][j])),
                                    prev);
            m[i][k] = {};
        }
        prev = m[k][k];
        ++rank;
    }
    return static_cast<int>(rank);
}

LaurentPoly alexander_minor(const Presentation& p, int drop_row, int drop_col) {
    auto full = alexander_matrix(p);
    std::vector<std::vector<LaurentPoly>> m;
    for (std::size_t i = 0; i < full.size(); ++i) {
        if (static_cast<int>(i) == drop_row) continue;
        std::vector<LaurentPoly> row;
        for (std::size_t j = 0; j < full[i].size(); ++j)
            if (static_cast<int>(j) != drop_col) row.push_back(full[i][j]);
        m.push_back(std::move(row));
    }
    return poly_matrix_det(m);
}

LaurentPoly alexander_polynomial(const Presentation& p) {
    int n = p.n_generators;
    int rels = static_cast<int>(p.relators.size());
    if (n < 1) throw std::invalid_argument("presentation has no generators");
    if (rels != n && !(rels == 0 && n == 1))
        throw std::invalid_argument("knot presentation needs one relator per generator");
    if (n == 1) return lp_const(1);
    LaurentPoly d0 = alexander_minor(p, rels - 1, 0);
    LaurentPoly d1 = alexander_minor(p, rels - 1, 1);
    if (!lp_equal_up_to_unit(d0, d1))
        throw std::runtime_error("column deletions disagree; presentation is not a knot group");
    return lp_canonicalize_knot(d0);
}

LaurentPoly alexander_polynomial(const ClosedDiagram& d) {
    return alexander_polynomial(wirtinger_presentation(d));
}

bool first_elementary_ideal_vanishes(const ClosedDiagram& d) {
    Presentation p = wirtinger_relations(d);
    int n = p.n_generators;
    if (n <= 1) return false;  // empty minors: the ideal is the whole ring
    auto m = alexander_matrix(p);

    // Scale each row by a power of t so all entries are honest polynomials;
    // row scaling by units preserves rank.
    for (auto& row : m) {
        int lo = 0;
        for (const auto& e : row)
            if (!e.empty()) lo = std::min(lo, lp_min_exp(e));
        if (lo < 0)
            for (auto& e : row) e = lp_shift(e, -lo);
    }
    // Evaluation pre-filter: integer rank at sample points only drops, so
    // any point of rank >= n-1 certifies non-vanishing.
    for (Integer x : {Integer(2), Integer(3), Integer(-1)}) {
        std::vector<std::vector<LaurentPoly>> em;
        for (const auto& row : m) {
            std::vector<LaurentPoly> er;
            for (const auto& e : row) er.push_back(lp_const(lp_eval_int(e, x)));
            em.push_back(std::move(er));
        }
        if (poly_matrix_rank(em) >= n - 1) return false;
    }
    return poly_matrix_rank(m) < n - 1;
}

}  // namespace symun
