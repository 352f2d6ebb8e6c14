/* epi.cpp
 * -------
 * Verification of the meridian-preserving epimorphism and the Alexander
 * polynomial factorization of symmetric unions.
 */
#include "symun/epi.hpp"

#include <chrono>
#include <set>

#include "symun/alexander.hpp"

namespace symun {

Epimorphism build_epimorphism(const SymmetricUnion& su) {
    Epimorphism e;
    e.source = su.k.pres;
    e.target = su.khat.pres;
    e.gen_image = su.arc_image;
    return e;
}

Word apply_epimorphism(const Epimorphism& e, const Word& w) {
    Word r;
    r.reserve(w.size());
    for (const Letter& l : w)
        r.push_back({e.gen_image[static_cast<std::size_t>(l.gen)], l.exp});
    return r;
}

HomomorphismCheck verify_homomorphism(const Epimorphism& e) {
    HomomorphismCheck hc;
    for (std::size_t i = 0; i < e.source.relators.size(); ++i) {
        ++hc.relators_checked;
        Word img = apply_epimorphism(e, e.source.relators[i]);
        if (is_relator_consequence_syntactic(img, e.target.relators))
            ++hc.relators_ok;
        else
            hc.failed.push_back(static_cast<int>(i));
    }
    return hc;
}

bool verify_surjectivity(const Epimorphism& e) {
    std::set<int> hit(e.gen_image.begin(), e.gen_image.end());
    for (int g = 0; g < e.target.n_generators; ++g)
        if (!hit.count(g)) return false;
    return true;
}

bool verify_meridian(const Epimorphism& e) {
    return e.gen_image[static_cast<std::size_t>(e.source.meridian)] == e.target.meridian;
}

TrivialityResult verify_longitude(const Epimorphism& e, const Word& longitude, int depth,
                                  int beam) {
    return bounded_triviality(apply_epimorphism(e, longitude), e.target.relators, depth, beam);
}

bool VerificationReport::passed() const {
    return factorization_ok && relators_checked == relators_ok && meridian_ok && surjective_ok &&
           longitude_status != TrivialityStatus::Inconclusive;
}

VerificationReport verify_symmetric_union(const SymmetricUnion& su, int depth, int beam,
                                          const std::string& instance) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.instance = instance;
    r.delta_K = alexander_polynomial(su.k.pres);
    r.delta_NT = alexander_polynomial(su.middle_closure);
    r.delta_Khat = alexander_polynomial(su.khat.pres);
    r.factorization_ok = (r.delta_K == lp_mul(r.delta_NT, lp_pow(r.delta_Khat, 2)));

    Epimorphism e = build_epimorphism(su);
    HomomorphismCheck hc = verify_homomorphism(e);
    r.relators_checked = hc.relators_checked;
    r.relators_ok = hc.relators_ok;
    r.meridian_ok = verify_meridian(e);
    r.surjective_ok = verify_surjectivity(e);
    TrivialityResult lt = verify_longitude(e, su.longitude, depth, beam);
    r.longitude_status = lt.status;
    r.longitude_depth = lt.depth_used;

    auto t1 = std::chrono::steady_clock::now();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

const char* triviality_status_name(TrivialityStatus s) {
    switch (s) {
        case TrivialityStatus::VerifiedFree: return "verified_free";
        case TrivialityStatus::VerifiedBounded: return "verified_bounded";
        default: return "inconclusive";
    }
}

}  // namespace symun
