/* epi.hpp
 * -------
 * The meridian-preserving map from the group of a symmetric union onto the
 * group of its partial knot, and the machine checks that it is a
 * well-defined surjective homomorphism killing the preferred longitude.
 *
 * The map sends every arc generator of K to the arc of K-hat prescribed by
 * provenance: arcs from D and from its mirror go to the arc of K-hat
 * containing the same D-edges, arcs from the middle tangle go to the
 * boundary contact arc, and the two connector arcs go to the meridian.
 * Being generator-to-generator it preserves meridians on the nose; each
 * relator image must freely reduce to a conjugate of a relator (or
 * inverse), which is checked syntactically.
 */
#pragma once

#include <string>

#include "symun/construct.hpp"
#include "symun/freeword.hpp"
#include "symun/laurent.hpp"
#include "symun/wirtinger.hpp"

namespace symun {

struct Epimorphism {
    Presentation source;         // group of K
    Presentation target;         // group of K-hat
    std::vector<int> gen_image;  // generator index -> generator index
};

Epimorphism build_epimorphism(const SymmetricUnion& su);

Word apply_epimorphism(const Epimorphism& e, const Word& w);

struct HomomorphismCheck {
    int relators_checked = 0;
    int relators_ok = 0;
    std::vector<int> failed;  // indices of relators whose image did not match
    bool ok() const { return relators_checked == relators_ok; }
};

// Every source relator must map to a word that freely reduces to the empty
// word or to a cyclic rotation of a target relator or its inverse.
HomomorphismCheck verify_homomorphism(const Epimorphism& e);

// All target generators are hit (the map is onto a generating set).
bool verify_surjectivity(const Epimorphism& e);

// Source meridian maps to the target meridian as a single letter.
bool verify_meridian(const Epimorphism& e);

// Image of the preferred longitude is trivial in the target group; the
// expected outcome for symmetric unions is VerifiedFree.
TrivialityResult verify_longitude(const Epimorphism& e, const Word& longitude, int depth = 10,
                                  int beam = 100000);

struct VerificationReport {
    std::string instance;
    LaurentPoly delta_K, delta_NT, delta_Khat;
    bool factorization_ok = false;
    int relators_checked = 0;
    int relators_ok = 0;
    TrivialityStatus longitude_status = TrivialityStatus::Inconclusive;
    int longitude_depth = 0;
    bool meridian_ok = false;
    bool surjective_ok = false;
    double elapsed_ms = 0.0;
    bool passed() const;
};

// Full check of one symmetric union: the factorization
//   Delta_K = Delta_{N(T)} * (Delta_{K-hat})^2
// in canonical form, plus homomorphism, surjectivity, meridian and
// longitude verification.
VerificationReport verify_symmetric_union(const SymmetricUnion& su, int depth = 10,
                                          int beam = 100000, const std::string& instance = "");

const char* triviality_status_name(TrivialityStatus s);

}  // namespace symun
