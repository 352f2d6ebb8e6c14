/* laurent.cpp
 * -----------
 * Exact Laurent polynomial arithmetic and the canonical knot-polynomial
 * normal form.
 */
#include "symun/laurent.hpp"

#include <sstream>

namespace symun {

LaurentPoly lp_zero() { return {}; }

LaurentPoly lp_const(Integer c) { return lp_term(std::move(c), 0); }

LaurentPoly lp_term(Integer c, int e) {
    LaurentPoly p;
    if (c != 0) p[e] = std::move(c);
    return p;
}

LaurentPoly lp_from_pairs(const std::vector<std::pair<int, long long>>& pairs) {
    LaurentPoly p;
    for (const auto& [e, c] : pairs) {
        if (c != 0) p[e] += c;
        if (p.count(e) && p[e] == 0) p.erase(e);
    }
    return p;
}

bool lp_is_zero(const LaurentPoly& p) { return p.empty(); }

void lp_set(LaurentPoly& p, int e, Integer c) {
    if (c == 0)
        p.erase(e);
    else
        p[e] = std::move(c);
}

Integer lp_coeff(const LaurentPoly& p, int e) {
    auto it = p.find(e);
    return it == p.end() ? Integer(0) : it->second;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b) {
        Integer s = lp_coeff(r, e) + c;
        lp_set(r, e, s);
    }
    return r;
}

LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
    return lp_add(a, lp_neg(b));
}

LaurentPoly lp_neg(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a) r[e] = -c;
    return r;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Integer s = lp_coeff(r, ea + eb) + ca * cb;
            lp_set(r, ea + eb, s);
        }
    return r;
}

LaurentPoly lp_pow(const LaurentPoly& a, unsigned k) {
    LaurentPoly r = lp_const(1);
    for (unsigned i = 0; i < k; ++i) r = lp_mul(r, a);
    return r;
}

LaurentPoly lp_shift(const LaurentPoly& a, int k) {
    LaurentPoly r;
    for (const auto& [e, c] : a) r[e + k] = c;
    return r;
}

LaurentPoly lp_reverse(const LaurentPoly& a) {
    LaurentPoly r;
    for (const auto& [e, c] : a) r[-e] = c;
    return r;
}

Integer lp_eval_int(const LaurentPoly& a, const Integer& x) {
    Integer acc = 0;
    for (const auto& [e, c] : a) {
        Integer p = 1;
        if (e >= 0) {
            for (int i = 0; i < e; ++i) p *= x;
        } else {
            if (x != 1 && x != -1)
                throw std::invalid_argument("lp_eval_int: negative exponent at non-unit");
            p = (x == -1 && (e % 2 != 0)) ? -1 : 1;
        }
        acc += c * p;
    }
    return acc;
}

int lp_min_exp(const LaurentPoly& a) {
    if (a.empty()) throw std::invalid_argument("lp_min_exp of zero");
    return a.begin()->first;
}

int lp_max_exp(const LaurentPoly& a) {
    if (a.empty()) throw std::invalid_argument("lp_max_exp of zero");
    return a.rbegin()->first;
}

bool lp_equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.empty() || b.empty()) return a.empty() == b.empty();
    int shift = lp_min_exp(b) - lp_min_exp(a);
    LaurentPoly as = lp_shift(a, shift);
    if (as == b) return true;
    return lp_neg(as) == b;
}

bool lp_is_monic(const LaurentPoly& a) {
    if (a.empty()) return true;
    const Integer& lead = a.rbegin()->second;
    return lead == 1 || lead == -1;
}

LaurentPoly lp_canonicalize_knot(const LaurentPoly& p) {
    if (p.empty()) throw NotKnotShaped("zero polynomial");
    int lo = lp_min_exp(p), hi = lp_max_exp(p);
    if ((lo + hi) % 2 != 0)
        throw NotKnotShaped("exponent span has odd width; no symmetric shift");
    LaurentPoly q = lp_shift(p, -(lo + hi) / 2);
    if (lp_reverse(q) != q) throw NotKnotShaped("not symmetric under t -> 1/t");
    Integer at1 = lp_eval_int(q, 1);
    if (at1 == -1) q = lp_neg(q);
    else if (at1 != 1) throw NotKnotShaped("value at t = 1 is not a unit");
    return q;
}

std::string lp_to_string(const LaurentPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p) {
        Integer a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit_coeff = (a == 1);
        if (e == 0) {
            os << a.str();
        } else {
            if (!unit_coeff) os << a.str() << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace symun
