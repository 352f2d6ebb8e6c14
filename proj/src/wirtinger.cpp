/* wirtinger.cpp
 * -------------
 * Strand traversal, arc extraction and Wirtinger relators.
 */
#include "symun/wirtinger.hpp"

#include <algorithm>
#include <stdexcept>

namespace symun {

namespace {

Port head_port(const Edge& e, int dir) { return dir > 0 ? e.b : e.a; }

}  // namespace

OrientedDiagram orient(const ClosedDiagram& d, int start_edge) {
    validate_closed(d);
    OrientedDiagram od;
    od.diagram = d;
    od.edge_dir.assign(d.edges.size(), 0);
    od.edge_comp.assign(d.edges.size(), -1);
    PortIndex idx(d.edges, d.n_crossings);

    std::vector<int> starts;
    if (!d.edges.empty()) {
        if (start_edge < 0 || start_edge >= static_cast<int>(d.edges.size()))
            throw TangleError("start edge out of range");
        starts.push_back(start_edge);
        for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
            if (e != start_edge) starts.push_back(e);
    }
    for (int e0 : starts) {
        if (od.edge_comp[static_cast<std::size_t>(e0)] != -1) continue;
        int cid = static_cast<int>(od.cycles.size());
        std::vector<int> cycle;
        int cur_e = e0, from_end = 0;
        do {
            od.edge_dir[static_cast<std::size_t>(cur_e)] = from_end == 0 ? 1 : -1;
            od.edge_comp[static_cast<std::size_t>(cur_e)] = cid;
            cycle.push_back(cur_e);
            const Edge& ed = d.edges[static_cast<std::size_t>(cur_e)];
            Port head = head_port(ed, od.edge_dir[static_cast<std::size_t>(cur_e)]);
            auto [ne, nend] = idx.at(Port{head.node, (head.slot + 2) % 4});
            cur_e = ne;
            from_end = nend;
        } while (cur_e != e0);
        if (from_end != 0) throw TangleError("strand traversal returned inconsistently");
        od.cycles.push_back(std::move(cycle));
    }
    od.n_components = static_cast<int>(od.cycles.size()) + d.free_loops;
    return od;
}

ArcData compute_arcs(const OrientedDiagram& od) {
    const ClosedDiagram& d = od.diagram;
    ArcData a;
    a.edge_arc.assign(d.edges.size(), -1);
    int counter = 0;

    for (const std::vector<int>& cycle : od.cycles) {
        std::size_t L = cycle.size();
        // positions t where the head of cycle[t] dives under (slots 1, 3)
        std::vector<std::size_t> breaks;
        for (std::size_t t = 0; t < L; ++t) {
            const Edge& ed = d.edges[static_cast<std::size_t>(cycle[t])];
            Port head = head_port(ed, od.edge_dir[static_cast<std::size_t>(cycle[t])]);
            if (head.slot % 2 == 1) breaks.push_back(t);
        }
        if (breaks.empty()) {
            for (int e : cycle) a.edge_arc[static_cast<std::size_t>(e)] = counter;
            ++counter;
            continue;
        }
        // cycle[t] for t <= breaks[0] or t > breaks.back() lies on arc 0 of
        // this component (the arc containing cycle[0], wrapping around).
        int base = counter;
        for (std::size_t t = 0; t < L; ++t) {
            std::size_t k = 0;
            while (k < breaks.size() && breaks[k] < t) ++k;
            int local = (k == breaks.size()) ? 0 : static_cast<int>(k);
            a.edge_arc[static_cast<std::size_t>(cycle[t])] = base + local;
        }
        counter += static_cast<int>(breaks.size());
    }
    for (int l = 0; l < d.free_loops; ++l) ++counter;  // crossingless circles
    a.n_arcs = counter;

    PortIndex idx(d.edges, d.n_crossings);
    a.crossings.assign(static_cast<std::size_t>(d.n_crossings), CrossingArcs{});
    for (int c = 0; c < d.n_crossings; ++c) {
        CrossingArcs& ca = a.crossings[static_cast<std::size_t>(c)];
        int over_exit = -1, under_exit = -1;
        for (int s = 0; s < 4; ++s) {
            auto [e, end] = idx.at(Port{c, s});
            int dir = od.edge_dir[static_cast<std::size_t>(e)];
            // the edge leaves the crossing through this slot iff its tail is here
            bool outgoing = (end == 0 && dir > 0) || (end == 1 && dir < 0);
            int arc = a.edge_arc[static_cast<std::size_t>(e)];
            if (s % 2 == 0) {
                ca.over = arc;
                if (outgoing) over_exit = s;
            } else {
                if (outgoing) {
                    ca.under_out = arc;
                    under_exit = s;
                } else {
                    ca.under_in = arc;
                }
            }
        }
        if (over_exit < 0 || under_exit < 0 || ca.under_in < 0)
            throw TangleError("crossing is not transversely oriented");
        ca.sign = (under_exit == (over_exit + 1) % 4) ? 1 : -1;
    }
    return a;
}

namespace {

Presentation presentation_from_arcs(const ArcData& a) {
    Presentation p;
    p.n_generators = a.n_arcs;
    p.meridian = 0;
    for (const CrossingArcs& c : a.crossings) {
        Word r;
        if (c.sign > 0)
            r = {{c.under_in, 1}, {c.over, 1}, {c.under_out, -1}, {c.over, -1}};
        else
            r = {{c.over, 1}, {c.under_in, 1}, {c.over, -1}, {c.under_out, -1}};
        p.relators.push_back(std::move(r));
    }
    return p;
}

}  // namespace

AnalyzedKnot analyze_knot(const ClosedDiagram& d, int start_edge) {
    AnalyzedKnot k;
    k.od = orient(d, start_edge);
    if (k.od.n_components != 1) throw TangleError("diagram is not a knot");
    k.arcs = compute_arcs(k.od);
    k.pres = presentation_from_arcs(k.arcs);
    return k;
}

Presentation wirtinger_presentation(const ClosedDiagram& d, int start_edge) {
    return analyze_knot(d, start_edge).pres;
}

Presentation wirtinger_relations(const ClosedDiagram& d) {
    OrientedDiagram od = orient(d, 0);
    return presentation_from_arcs(compute_arcs(od));
}

Word longitude_word(const AnalyzedKnot& k, int base_edge, int switch_edge) {
    const ClosedDiagram& d = k.od.diagram;
    if (d.edges.empty()) return {};
    if (k.od.edge_comp[static_cast<std::size_t>(base_edge)] != 0 || k.od.cycles[0][0] != base_edge)
        throw TangleError("longitude base edge must anchor the traversal");
    Word w;
    bool second_half = false;
    for (int e : k.od.cycles[0]) {
        if (e == switch_edge) second_half = true;
        const Edge& ed = d.edges[static_cast<std::size_t>(e)];
        Port head = head_port(ed, k.od.edge_dir[static_cast<std::size_t>(e)]);
        if (head.slot % 2 != 1) continue;
        const CrossingArcs& c = k.arcs.crossings[static_cast<std::size_t>(head.node)];
        int s = c.sign;
        if (!second_half) {
            w.push_back({c.over, s});
            w.push_back({c.under_out, -s});
        } else {
            w.push_back({c.under_in, -s});
            w.push_back({c.over, s});
        }
    }
    return free_reduce(w);
}

Word longitude_word(const ClosedDiagram& d, int base_edge, int switch_edge) {
    if (d.edges.empty()) return {};
    return longitude_word(analyze_knot(d, base_edge), base_edge, switch_edge);
}

}  // namespace symun
