/* construct.hpp
 * -------------
 * Symmetric unions with an arbitrary middle tangle.
 *
 * Given a partial tangle D whose denominator closure is a knot K-hat, and a
 * middle tangle T joining NW-SW and NE-SE, the assembled knot is
 *
 *     K  =  numerator( rotate_pi(T) + D + reflect_switch(D) )
 *
 * i.e. D and its mirror image sit side by side, joined to each other at two
 * connector edges (a0 on top, a1 on bottom) and to the twist region T on
 * the outside.  Edge provenance tags record, for every edge of K, which
 * constituent it came from; arcs inherit consistent labels, and these
 * prescribe the meridian-to-meridian map onto the group of K-hat that the
 * verification module checks.
 *
 * The preferred longitude of K is produced by the paired-letter recipe of
 * wirtinger.hpp, switching pair order at the connector a1; its image under
 * the prescribed map then cancels freely, which the verifier confirms.
 */
#pragma once

#include <cstdint>

#include "symun/freeword.hpp"
#include "symun/tangle.hpp"
#include "symun/wirtinger.hpp"

namespace symun {

struct ConstructionError : TangleError {
    using TangleError::TangleError;
};
// The middle tangle must join NW-SW and NE-SE; the partial tangle must not.
struct BadTanglePattern : ConstructionError {
    using ConstructionError::ConstructionError;
};
// An arc received inconsistent image prescriptions (cannot happen for
// diagrams assembled here; guards against corrupted input).
struct ProvenanceConflict : ConstructionError {
    using ConstructionError::ConstructionError;
};

enum class ArcKind { FromD, FromDstar, FromT, ConnectorA0, ConnectorA1 };

struct ArcLabel {
    ArcKind kind;
    int image;  // prescribed arc of K-hat
};

struct SymmetricUnion {
    Tangle d_tangle;  // partial tangle D
    Tangle t_tangle;  // middle tangle T

    ClosedDiagram diagram;         // K
    ClosedDiagram partial;         // K-hat = denominator closure of D
    ClosedDiagram middle_closure;  // numerator closure of T

    AnalyzedKnot k;     // K, arcs numbered from the connector a0
    AnalyzedKnot khat;  // K-hat, arcs numbered from the NE-SE closure edge

    std::vector<ArcLabel> labels;  // per arc of K
    std::vector<int> arc_image;    // per arc of K: arc of K-hat
    std::vector<int> partner;      // FromD arc <-> FromDstar arc; -1 elsewhere

    int contact_a = -1;  // arc of K-hat at the NE-SE closure (its meridian)
    int contact_b = -1;  // arc of K-hat at the NW-SW closure
    int a0_edge = -1;    // connector edges inside K
    int a1_edge = -1;

    Word longitude;  // preferred longitude of K, based on the a0 arc
};

SymmetricUnion extended_symmetric_union(const Tangle& d, const Tangle& t);

// Classical symmetric union: middle tangle is a single vertical twist
// region with n crossings (n even and nonzero, so the result is a knot).
SymmetricUnion symmetric_union_single_twist(const Tangle& d, int n);

// Middle tangle with fraction e + beta/alpha, the form tabulated for small
// symmetric unions: T = rational_tangle(e*alpha + beta, alpha).
SymmetricUnion montesinos_extsym(const Tangle& d, long long beta, long long alpha, long long e);

// A 10-crossing diagram of a knot with trivial Alexander polynomial built
// from a 4-crossing unknot diagram (Kinoshita-Terasaka style).
SymmetricUnion kinoshita_terasaka();

// The knot 10_99 as a symmetric union of the trefoil whose middle tangle is
// a quarter-turned sum of trefoil partial tangles; Delta = (t - 1 + 1/t)^4.
SymmetricUnion knot_10_99();

struct FamilyMember {
    std::vector<long long> even_seq;  // zero-free all-even expansion of alpha/beta
    long long alpha = 0, beta = 0;    // middle closure is the 2-bridge knot b(alpha, beta)
    SymmetricUnion su;
};

// Random symmetric unions over a fixed partial tangle whose middle closures
// are non-fibered 2-bridge knots, hence have non-monic Alexander
// polynomials (as do the resulting unions).  Deterministic in `seed`;
// members have pairwise distinct middle fractions.
std::vector<FamilyMember> nonfibered_family(const Tangle& d, int count, std::uint64_t seed);

}  // namespace symun
