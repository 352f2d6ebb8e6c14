/* test_construct.cpp
 * ------------------
 * Assembly of symmetric unions: the closed diagram, provenance labels,
 * mirror pairing, connector arcs and longitude; plus the named example
 * diagrams and the random non-fibered family.
 */
#include "doctest.h"
#include "symun/alexander.hpp"
#include "symun/construct.hpp"

using namespace symun;

namespace {
LaurentPoly trefoil_delta() { return lp_from_pairs({{-1, 1}, {0, -1}, {1, 1}}); }
}

TEST_SUITE("construct") {

TEST_CASE("symmetric union of the trefoil with a two-twist middle") {
    Tangle d = rational_tangle(2, 3);
    SymmetricUnion su = extended_symmetric_union(d, twist_tangle(2));

    CHECK(su.diagram.n_crossings == 2 * d.n_crossings + 2);
    CHECK(component_count(su.diagram) == 1);
    CHECK(component_count(su.partial) == 1);
    CHECK(su.middle_closure.n_crossings == 2);

    // the partial knot is the trefoil
    CHECK(alexander_polynomial(su.partial) == trefoil_delta());

    // the whole diagram's polynomial is the square of the trefoil's (the
    // middle closure is an unknot here)
    LaurentPoly sq = lp_canonicalize_knot(lp_mul(trefoil_delta(), trefoil_delta()));
    CHECK(alexander_polynomial(su.diagram) == sq);
}

TEST_CASE("provenance labels partition the arcs") {
    SymmetricUnion su = extended_symmetric_union(rational_tangle(2, 3), twist_tangle(2));
    REQUIRE(static_cast<int>(su.labels.size()) == su.k.arcs.n_arcs);
    int from_d = 0, from_dstar = 0, from_t = 0, conn = 0;
    for (const ArcLabel& l : su.labels) {
        switch (l.kind) {
            case ArcKind::FromD: ++from_d; break;
            case ArcKind::FromDstar: ++from_dstar; break;
            case ArcKind::FromT: ++from_t; break;
            default: ++conn; break;
        }
    }
    CHECK(conn == 2);            // exactly the two connector arcs
    CHECK(from_d == from_dstar);  // mirror halves contribute equally
    CHECK(from_t > 0);

    // arc 0 is the connector the diagram is anchored at, and it maps to the
    // meridian of the partial knot
    CHECK(su.labels[0].kind == ArcKind::ConnectorA0);
    CHECK(su.arc_image[0] == su.khat.pres.meridian);
    CHECK(su.contact_a == su.khat.pres.meridian);

    // images all reference genuine arcs of the partial knot
    for (int img : su.arc_image) {
        CHECK(img >= 0);
        CHECK(img < su.khat.arcs.n_arcs);
    }
}

TEST_CASE("mirror pairing is a fixed-point-free involution on the halves") {
    SymmetricUnion su = extended_symmetric_union(rational_tangle(2, 3), twist_tangle(2));
    REQUIRE(su.partner.size() == su.labels.size());
    for (std::size_t a = 0; a < su.partner.size(); ++a) {
        if (su.labels[a].kind == ArcKind::FromD) {
            int b = su.partner[a];
            REQUIRE(b >= 0);
            CHECK(su.labels[static_cast<std::size_t>(b)].kind == ArcKind::FromDstar);
            CHECK(su.partner[static_cast<std::size_t>(b)] == static_cast<int>(a));
            // mirrored arcs are prescribed the same image
            CHECK(su.arc_image[a] == su.arc_image[static_cast<std::size_t>(b)]);
        } else if (su.labels[a].kind != ArcKind::FromDstar) {
            CHECK(su.partner[a] == -1);
        }
    }
}

TEST_CASE("longitude is balanced and anchored at the connector") {
    SymmetricUnion su = extended_symmetric_union(rational_tangle(2, 3), twist_tangle(2));
    CHECK(exponent_sum(su.longitude) == 0);
    CHECK(!su.longitude.empty());
    CHECK(su.a0_edge >= 0);
    CHECK(su.a1_edge >= 0);
    CHECK(su.a0_edge != su.a1_edge);
    CHECK(su.k.od.cycles[0][0] == su.a0_edge);
}

TEST_CASE("pattern preconditions are enforced") {
    // middle tangle must join left-through and right-through
    CHECK_THROWS_AS(extended_symmetric_union(rational_tangle(2, 3), rational_tangle(2, 3)),
                    BadTanglePattern);
    CHECK_THROWS_AS(extended_symmetric_union(rational_tangle(2, 3), horizontal_twists(2)),
                    BadTanglePattern);
    // partial tangle must not
    CHECK_THROWS_AS(extended_symmetric_union(twist_tangle(2), twist_tangle(2)),
                    BadTanglePattern);
    // diagonal partial tangles are allowed
    SymmetricUnion diag = extended_symmetric_union(rational_tangle(1, 1), twist_tangle(2));
    CHECK(component_count(diag.diagram) == 1);
}

TEST_CASE("single-twist unions require even nonzero twist counts") {
    Tangle d = rational_tangle(2, 3);
    CHECK_THROWS_AS(symmetric_union_single_twist(d, 3), ConstructionError);
    CHECK_THROWS_AS(symmetric_union_single_twist(d, 0), ConstructionError);
    SymmetricUnion su = symmetric_union_single_twist(d, -2);
    CHECK(component_count(su.diagram) == 1);
    CHECK(su.middle_closure.n_crossings == 2);
}

TEST_CASE("middle tangle fractions") {
    // montesinos_extsym(d, beta, alpha, e) uses T with fraction e + beta/alpha
    Tangle d31 = rational_tangle(2, 3);
    SymmetricUnion su = montesinos_extsym(d31, 1, 2, -2);  // fraction -3/2
    CHECK(su.diagram.n_crossings == 11);
    // its middle closure is the trefoil
    CHECK(alexander_polynomial(su.middle_closure) == trefoil_delta());
    // Delta_K = Delta_{3_1} * Delta_{3_1}^2 for this symmetric union of 8_10
    LaurentPoly cube = lp_canonicalize_knot(lp_pow(trefoil_delta(), 3));
    CHECK(alexander_polynomial(su.diagram) == cube);

    CHECK_THROWS_AS(montesinos_extsym(d31, 1, 1, 0), ConstructionError);  // alpha < 2
}

TEST_CASE("ten-crossing diagram with trivial polynomial") {
    SymmetricUnion kt = kinoshita_terasaka();
    CHECK(kt.diagram.n_crossings == 10);
    CHECK(component_count(kt.diagram) == 1);
    CHECK(alexander_polynomial(kt.diagram) == lp_const(1));
    CHECK(alexander_polynomial(kt.partial) == lp_const(1));  // unknot partial
}

TEST_CASE("10_99 as a symmetric union over the trefoil") {
    SymmetricUnion su = knot_10_99();
    CHECK(su.diagram.n_crossings == 16);
    CHECK(component_count(su.diagram) == 1);
    LaurentPoly fourth = lp_canonicalize_knot(lp_pow(trefoil_delta(), 4));
    CHECK(alexander_polynomial(su.diagram) == fourth);
    CHECK(alexander_polynomial(su.partial) == trefoil_delta());
}

TEST_CASE("non-fibered family is deterministic and non-monic") {
    std::vector<FamilyMember> fam = nonfibered_family(rational_tangle(2, 5), 5, 12345);
    REQUIRE(fam.size() == 5);
    std::vector<std::pair<long long, long long>> expect = {
        {11, 2}, {263, -46}, {25, 4}, {25, 6}, {37, -6}};
    for (std::size_t i = 0; i < fam.size(); ++i) {
        CHECK(fam[i].alpha == expect[i].first);
        CHECK(fam[i].beta == expect[i].second);
        for (long long c : fam[i].even_seq) {
            CHECK(c % 2 == 0);
            CHECK(c != 0);
        }
        CHECK(cf_value(fam[i].even_seq) == make_fraction(fam[i].alpha, fam[i].beta));
        CHECK(!lp_is_monic(alexander_polynomial(fam[i].su.middle_closure)));
        CHECK(component_count(fam[i].su.diagram) == 1);
    }
    // same seed, same family
    std::vector<FamilyMember> again = nonfibered_family(rational_tangle(2, 5), 5, 12345);
    for (std::size_t i = 0; i < fam.size(); ++i) CHECK(again[i].alpha == fam[i].alpha);
    // different seed, (almost surely) different fractions
    std::vector<FamilyMember> other = nonfibered_family(rational_tangle(2, 5), 5, 999);
    bool any_diff = false;
    for (std::size_t i = 0; i < fam.size(); ++i)
        any_diff |= other[i].alpha != fam[i].alpha || other[i].beta != fam[i].beta;
    CHECK(any_diff);
}

}  // TEST_SUITE
