/* oracle_helpers.hpp
 * ------------------
 * A deliberately independent second implementation used to cross-check the
 * library: a tiny dense integer Laurent-polynomial type, cofactor-expansion
 * determinants, and the Seifert-matrix route to the Alexander polynomial of
 * a 2-bridge knot.  Nothing here shares code with src/; agreement between
 * the two paths is what the tests assert.
 *
 * For an all-even continued fraction [d1, ..., dm] (the expansion of the
 * 2-bridge fraction) a Seifert matrix of the knot is upper bidiagonal:
 *   V[i][i]   = (-1)^i * d_i / 2     (0-based i)
 *   V[i][i+1] = 1,
 * and Delta = det(tV - V^T) up to units.  Calibrated below on [2,2]
 * (figure-eight), [2,-2] (trefoil) and [-2,4] (the (2,3)-double twist knot,
 * Delta = 2t^-1 - 3 + 2t).
 */
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symun/laurent.hpp"

namespace oracle {

// exponent -> coefficient; small coefficients suffice for the test sizes.
using Poly = std::map<int, long long>;

inline Poly p_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b) {
        r[e] += c;
        if (r[e] == 0) r.erase(e);
    }
    return r;
}

inline Poly p_neg(const Poly& a) {
    Poly r;
    for (const auto& [e, c] : a) r[e] = -c;
    return r;
}

inline Poly p_sub(const Poly& a, const Poly& b) { return p_add(a, p_neg(b)); }

inline Poly p_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            r[ea + eb] += ca * cb;
            if (r[ea + eb] == 0) r.erase(ea + eb);
        }
    return r;
}

// Cofactor expansion along the first row; exponential, fine for n <= 7.
inline Poly p_det(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly{{0, 1}};
    if (n == 1) return m[0][0];
    Poly det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].empty()) continue;
        std::vector<std::vector<Poly>> sub;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(std::move(row));
        }
        Poly term = p_mul(m[0][j], p_det(sub));
        det = (j % 2 == 0) ? p_add(det, term) : p_sub(det, term);
    }
    return det;
}

// det(tV - V^T) for the bidiagonal Seifert matrix of [d1, ..., dm].
inline Poly seifert_alexander(const std::vector<long long>& even_seq) {
    const std::size_t n = even_seq.size();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i) {
        long long vii = (i % 2 == 0 ? 1 : -1) * even_seq[i] / 2;
        // tV - V^T, diagonal: vii * (t - 1)
        if (vii != 0) m[i][i] = Poly{{1, vii}, {0, -vii}};
        if (i + 1 < n) {
            m[i][i + 1] = Poly{{1, 1}};   // t * V[i][i+1]
            m[i + 1][i] = Poly{{0, -1}};  // -V^T[i+1][i]
        }
    }
    return p_det(m);
}

inline symun::LaurentPoly to_laurent(const Poly& p) {
    symun::LaurentPoly r;
    for (const auto& [e, c] : p)
        if (c != 0) r[e] = c;
    return r;
}

}  // namespace oracle
