/* construct.cpp
 * -------------
 * Assembly of symmetric unions with provenance-labeled arcs.
 */
#include "symun/construct.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "symun/alexander.hpp"

namespace symun {

namespace {

int find_edge_with_tag(const std::vector<Edge>& edges, Tag tag) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (const Tag& t : edges[i].tags)
            if (t == tag) return static_cast<int>(i);
    throw ConstructionError("tagged edge not found");
}

}  // namespace

SymmetricUnion extended_symmetric_union(const Tangle& d, const Tangle& t) {
    validate_tangle(d);
    validate_tangle(t);
    if (pattern(t) != Pattern::LeftRight)
        throw BadTanglePattern("middle tangle must join NW-SW and NE-SE");
    if (pattern(d) == Pattern::LeftRight)
        throw BadTanglePattern("partial tangle must not join NW-SW");

    SymmetricUnion su;
    su.d_tangle = d;
    su.t_tangle = t;

    Tangle D = d;
    clear_tags(D);
    stamp_tags(D, TagOrigin::D);
    Tangle Dstar = reflect_switch(D);  // edge i of Dstar mirrors edge i of D
    for (Edge& e : Dstar.edges)
        for (Tag& tag : e.tags) tag.origin = TagOrigin::Dstar;
    Tangle Tm = rotate_pi(t);
    clear_tags(Tm);
    stamp_tags(Tm, TagOrigin::T);

    PortIndex dIdx(D.edges, D.n_crossings);
    int d_ne = dIdx.at(Port{kBoundary, kNE}).first;
    int d_se = dIdx.at(Port{kBoundary, kSE}).first;
    int d_nw = dIdx.at(Port{kBoundary, kNW}).first;

    su.diagram = numerator_closure(tangle_sum(Tm, tangle_sum(D, Dstar)));
    if (component_count(su.diagram) != 1)
        throw ConstructionError("assembled diagram is not a knot");

    su.partial = denominator_closure(D);
    if (component_count(su.partial) != 1)
        throw ConstructionError("partial tangle does not close to a knot");
    su.middle_closure = numerator_closure(t);

    // Connector edges: a0 merges D's NE edge with the mirror's NW edge,
    // a1 merges D's SE edge with the mirror's SW edge.
    su.a0_edge = find_edge_with_tag(su.diagram.edges, Tag{TagOrigin::D, d_ne});
    su.a1_edge = find_edge_with_tag(su.diagram.edges, Tag{TagOrigin::D, d_se});

    su.k = analyze_knot(su.diagram, su.a0_edge);
    int khat_base = find_edge_with_tag(su.partial.edges, Tag{TagOrigin::D, d_ne});
    su.khat = analyze_knot(su.partial, khat_base);

    // J: edge index of D -> containing arc of K-hat.
    std::vector<int> J(D.edges.size(), -1);
    for (std::size_t i = 0; i < su.partial.edges.size(); ++i)
        for (const Tag& tag : su.partial.edges[i].tags)
            if (tag.origin == TagOrigin::D)
                J[static_cast<std::size_t>(tag.index)] =
                    su.khat.arcs.edge_arc[static_cast<std::size_t>(i)];
    for (int v : J)
        if (v < 0) throw ConstructionError("partial tangle lost an edge");

    su.contact_a = J[static_cast<std::size_t>(d_ne)];
    su.contact_b = J[static_cast<std::size_t>(d_nw)];
    if (su.contact_a != su.khat.pres.meridian)
        throw ConstructionError("closure arc is not the meridian of the partial knot");

    // Each arc of K receives an image prescription from every tag it
    // carries; they must all agree.
    int n_arcs = su.k.arcs.n_arcs;
    su.arc_image.assign(static_cast<std::size_t>(n_arcs), -1);
    std::vector<char> has_d(static_cast<std::size_t>(n_arcs), 0),
        has_dstar(static_cast<std::size_t>(n_arcs), 0), has_t(static_cast<std::size_t>(n_arcs), 0);
    for (std::size_t i = 0; i < su.diagram.edges.size(); ++i) {
        int arc = su.k.arcs.edge_arc[i];
        for (const Tag& tag : su.diagram.edges[i].tags) {
            int pr;
            if (tag.origin == TagOrigin::T) {
                pr = su.contact_b;
                has_t[static_cast<std::size_t>(arc)] = 1;
            } else {
                pr = J[static_cast<std::size_t>(tag.index)];
                (tag.origin == TagOrigin::D ? has_d : has_dstar)[static_cast<std::size_t>(arc)] = 1;
            }
            int& slot = su.arc_image[static_cast<std::size_t>(arc)];
            if (slot == -1)
                slot = pr;
            else if (slot != pr)
                throw ProvenanceConflict("arc received conflicting image prescriptions");
        }
    }
    for (int v : su.arc_image)
        if (v < 0) throw ConstructionError("arc with no provenance");

    int a0_arc = su.k.arcs.edge_arc[static_cast<std::size_t>(su.a0_edge)];
    int a1_arc = su.k.arcs.edge_arc[static_cast<std::size_t>(su.a1_edge)];
    su.labels.assign(static_cast<std::size_t>(n_arcs), ArcLabel{ArcKind::FromT, -1});
    for (int a = 0; a < n_arcs; ++a) {
        ArcKind kind;
        if (a == a0_arc)
            kind = ArcKind::ConnectorA0;
        else if (a == a1_arc)
            kind = ArcKind::ConnectorA1;
        else if (has_t[static_cast<std::size_t>(a)])
            kind = ArcKind::FromT;
        else if (has_d[static_cast<std::size_t>(a)] && !has_dstar[static_cast<std::size_t>(a)])
            kind = ArcKind::FromD;
        else if (has_dstar[static_cast<std::size_t>(a)] && !has_d[static_cast<std::size_t>(a)])
            kind = ArcKind::FromDstar;
        else
            throw ProvenanceConflict("arc mixes both halves away from the connectors");
        su.labels[static_cast<std::size_t>(a)] = ArcLabel{kind, su.arc_image[static_cast<std::size_t>(a)]};
    }

    // Partner bijection between the two mirror halves, via shared edge
    // indexes (edge i of D mirrors edge i of D*).
    su.partner.assign(static_cast<std::size_t>(n_arcs), -1);
    std::vector<int> arc_of_d(D.edges.size(), -1), arc_of_dstar(D.edges.size(), -1);
    for (std::size_t i = 0; i < su.diagram.edges.size(); ++i)
        for (const Tag& tag : su.diagram.edges[i].tags) {
            if (tag.origin == TagOrigin::D) arc_of_d[static_cast<std::size_t>(tag.index)] = su.k.arcs.edge_arc[i];
            if (tag.origin == TagOrigin::Dstar)
                arc_of_dstar[static_cast<std::size_t>(tag.index)] = su.k.arcs.edge_arc[i];
        }
    for (std::size_t i = 0; i < D.edges.size(); ++i) {
        int ad = arc_of_d[i], as = arc_of_dstar[i];
        if (ad < 0 || as < 0) continue;
        if (su.labels[static_cast<std::size_t>(ad)].kind != ArcKind::FromD ||
            su.labels[static_cast<std::size_t>(as)].kind != ArcKind::FromDstar)
            continue;
        int& pd = su.partner[static_cast<std::size_t>(ad)];
        int& ps = su.partner[static_cast<std::size_t>(as)];
        if ((pd != -1 && pd != as) || (ps != -1 && ps != ad))
            throw ProvenanceConflict("mirror partner is not well defined");
        pd = as;
        ps = ad;
    }

    su.longitude = longitude_word(su.k, su.a0_edge, su.a1_edge);
    if (exponent_sum(su.longitude) != 0)
        throw ConstructionError("longitude word is not balanced");
    return su;
}

SymmetricUnion symmetric_union_single_twist(const Tangle& d, int n) {
    if (n == 0 || n % 2 != 0)
        throw ConstructionError("twist count must be even and nonzero");
    return extended_symmetric_union(d, twist_tangle(n));
}

SymmetricUnion montesinos_extsym(const Tangle& d, long long beta, long long alpha, long long e) {
    if (alpha < 2) throw ConstructionError("alpha must be at least 2");
    return extended_symmetric_union(d, rational_tangle(e * alpha + beta, alpha));
}

SymmetricUnion kinoshita_terasaka() {
    Tangle d = tangle_sum(horizontal_twists(2), horizontal_twists(-2));
    return extended_symmetric_union(d, twist_tangle(2));
}

SymmetricUnion knot_10_99() {
    Tangle d31 = rational_tangle(2, 3);
    Tangle middle = rotate_quarter(tangle_sum(d31, reflect_switch(d31)));
    return extended_symmetric_union(d31, middle);
}

std::vector<FamilyMember> nonfibered_family(const Tangle& d, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FamilyMember> out;
    std::set<std::pair<long long, long long>> used;
    const long long magnitudes[3] = {2, 4, 6};
    while (static_cast<int>(out.size()) < count) {
        int m = (rng() % 2 == 0) ? 2 : 4;
        std::vector<long long> seq;
        bool big = false;
        for (int i = 0; i < m; ++i) {
            long long v = magnitudes[rng() % 3];
            if (rng() % 2 == 0) v = -v;
            if (v < -2 || v > 2) big = true;
            seq.push_back(v);
        }
        if (!big) continue;  // all-2 sequences give fibered middle closures
        Fraction f = cf_value(seq);
        long long alpha = f.num < 0 ? -f.num : f.num;
        long long beta = f.num < 0 ? -f.den : f.den;
        if (!used.insert({alpha, beta}).second) continue;

        FamilyMember fm;
        fm.even_seq = seq;
        fm.alpha = alpha;
        fm.beta = beta;
        fm.su = extended_symmetric_union(d, rational_tangle(alpha, beta));
        // The middle closure is the 2-bridge knot b(alpha, beta) with a
        // zero-free all-even expansion containing an entry of size >= 4,
        // hence non-fibered with non-monic Alexander polynomial.
        LaurentPoly nt = alexander_polynomial(fm.su.middle_closure);
        if (lp_is_monic(nt))
            throw ConstructionError("family member has a monic middle polynomial");
        out.push_back(std::move(fm));
    }
    return out;
}

}  // namespace symun
