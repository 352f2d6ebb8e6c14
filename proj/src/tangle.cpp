/* tangle.cpp
 * ----------
 * Tangle assembly, closures, rational tangles and even continued fractions.
 */
#include "symun/tangle.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <tuple>

namespace symun {

namespace {

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

long long gcd_ll(long long a, long long b) {
    return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

std::vector<Tag> union_tags(const std::vector<Tag>& a, const std::vector<Tag>& b) {
    std::vector<Tag> r = a;
    for (const Tag& t : b)
        if (std::find(r.begin(), r.end(), t) == r.end()) r.push_back(t);
    return r;
}

// Locate the unique edge end sitting at boundary slot `slot`.
std::pair<int, int> find_boundary(const std::vector<Edge>& edges, int slot) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].a == Port{kBoundary, slot}) return {static_cast<int>(i), 0};
        if (edges[i].b == Port{kBoundary, slot}) return {static_cast<int>(i), 1};
    }
    throw TangleError("boundary slot not found");
}

// Join the two strand ends at boundary slots sa and sb.  If they belong to
// the same edge the edge closes into a free loop; otherwise the two edges
// merge into one, provenance tags united.
void glue_boundary_slots(Tangle& t, int sa, int sb) {
    auto [ea, enda] = find_boundary(t.edges, sa);
    auto [eb, endb] = find_boundary(t.edges, sb);
    if (ea == eb) {
        t.edges.erase(t.edges.begin() + ea);
        ++t.free_loops;
        return;
    }
    Edge merged;
    merged.a = (enda == 0) ? t.edges[ea].b : t.edges[ea].a;
    merged.b = (endb == 0) ? t.edges[eb].b : t.edges[eb].a;
    merged.tags = union_tags(t.edges[ea].tags, t.edges[eb].tags);
    t.edges[ea] = merged;
    t.edges.erase(t.edges.begin() + eb);
}

// Remap boundary slots by perm[old_slot] = new_slot for slot values 0..3;
// values >= 4 are temporary and must not appear here.
void permute_boundary(Tangle& t, const int perm[4]) {
    for (Edge& e : t.edges)
        for (Port* p : {&e.a, &e.b})
            if (p->node == kBoundary) p->slot = perm[p->slot];
}

// Single crossing; sign +1 has the over-strand running NW-SE, sign -1 NE-SW.
Tangle single_crossing(int sign) {
    Tangle t;
    t.n_crossings = 1;
    auto mk = [&](int corner, int slot) {
        t.edges.push_back(Edge{Port{kBoundary, corner}, Port{0, slot}, {}});
    };
    if (sign > 0) {
        mk(kNW, 0); mk(kSW, 1); mk(kSE, 2); mk(kNE, 3);
    } else {
        mk(kNE, 0); mk(kNW, 1); mk(kSW, 2); mk(kSE, 3);
    }
    return t;
}

Tangle vertical_twists(int n) {
    if (n == 0) {
        Tangle t;
        t.edges.push_back(Edge{Port{kBoundary, kNW}, Port{kBoundary, kSW}, {}});
        t.edges.push_back(Edge{Port{kBoundary, kNE}, Port{kBoundary, kSE}, {}});
        return t;
    }
    int sign = n > 0 ? 1 : -1;
    Tangle t = single_crossing(sign);
    for (int i = 1; i < (n > 0 ? n : -n); ++i) t = tangle_stack(t, single_crossing(sign));
    return t;
}

}  // namespace

Fraction make_fraction(long long num, long long den) {
    if (num == 0 && den == 0) throw TangleError("0/0 is not a fraction");
    long long g = gcd_ll(num, den);
    if (g != 0) { num /= g; den /= g; }
    if (den < 0) { num = -num; den = -den; }
    if (den == 0) num = num > 0 ? 1 : -1;
    return Fraction{num, den};
}

PortIndex::PortIndex(const std::vector<Edge>& edges, int n_crossings)
    : n_crossings_(n_crossings),
      crossing_slots_(static_cast<std::size_t>(n_crossings) * 4, {-1, -1}) {
    for (int k = 0; k < 4; ++k) boundary_[k] = {-1, -1};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (int end = 0; end < 2; ++end) {
            Port p = end == 0 ? edges[i].a : edges[i].b;
            std::pair<int, int> v{static_cast<int>(i), end};
            if (p.node == kBoundary) {
                if (p.slot < 0 || p.slot > 3 || boundary_[p.slot].first != -1)
                    throw TangleError("bad or duplicate boundary slot");
                boundary_[p.slot] = v;
            } else {
                if (p.node < 0 || p.node >= n_crossings || p.slot < 0 || p.slot > 3)
                    throw TangleError("port out of range");
                auto& cell = crossing_slots_[static_cast<std::size_t>(p.node) * 4 + p.slot];
                if (cell.first != -1) throw TangleError("duplicate crossing slot");
                cell = v;
            }
        }
    }
}

std::pair<int, int> PortIndex::at(Port p) const {
    std::pair<int, int> v =
        p.node == kBoundary ? boundary_[p.slot]
                            : crossing_slots_[static_cast<std::size_t>(p.node) * 4 + p.slot];
    if (v.first == -1) throw TangleError("port not attached");
    return v;
}

bool PortIndex::has(Port p) const {
    if (p.node == kBoundary) return p.slot >= 0 && p.slot <= 3 && boundary_[p.slot].first != -1;
    return crossing_slots_[static_cast<std::size_t>(p.node) * 4 + p.slot].first != -1;
}

void validate_tangle(const Tangle& t) {
    PortIndex idx(t.edges, t.n_crossings);
    for (int c = 0; c < t.n_crossings; ++c)
        for (int s = 0; s < 4; ++s)
            if (!idx.has(Port{c, s})) throw TangleError("unfilled crossing slot");
    for (int k = 0; k < 4; ++k)
        if (!idx.has(Port{kBoundary, k})) throw TangleError("missing boundary corner");
    if (t.edges.size() != static_cast<std::size_t>(2 * t.n_crossings + 2))
        throw TangleError("edge count mismatch");
}

void validate_closed(const ClosedDiagram& d) {
    PortIndex idx(d.edges, d.n_crossings);
    for (int c = 0; c < d.n_crossings; ++c)
        for (int s = 0; s < 4; ++s)
            if (!idx.has(Port{c, s})) throw TangleError("unfilled crossing slot");
    for (const Edge& e : d.edges)
        if (e.a.node == kBoundary || e.b.node == kBoundary)
            throw TangleError("closed diagram has boundary port");
    if (d.edges.size() != static_cast<std::size_t>(2 * d.n_crossings))
        throw TangleError("edge count mismatch");
}

Tangle twist_tangle(int n) {
    if (n == 0) return horizontal_twists(0);
    return vertical_twists(n);
}

Tangle horizontal_twists(int n) {
    if (n == 0) {
        Tangle t;
        t.edges.push_back(Edge{Port{kBoundary, kNW}, Port{kBoundary, kNE}, {}});
        t.edges.push_back(Edge{Port{kBoundary, kSW}, Port{kBoundary, kSE}, {}});
        return t;
    }
    int sign = n > 0 ? 1 : -1;
    Tangle t = single_crossing(sign);
    for (int i = 1; i < (n > 0 ? n : -n); ++i) t = tangle_sum(t, single_crossing(sign));
    return t;
}

Tangle tangle_sum(const Tangle& a, const Tangle& b) {
    Tangle r;
    r.n_crossings = a.n_crossings + b.n_crossings;
    r.free_loops = a.free_loops + b.free_loops;
    // a keeps NW, SW; its NE, SE move to temp slots 4, 5.
    static const int perm_a[4] = {kNW, 4, kSW, 5};
    // b keeps NE, SE; its NW, SW move to temp slots 6, 7.
    static const int perm_b[4] = {6, kNE, 7, kSE};
    Tangle ta = a, tb = b;
    permute_boundary(ta, perm_a);
    permute_boundary(tb, perm_b);
    r.edges = ta.edges;
    for (Edge e : tb.edges) {
        for (Port* p : {&e.a, &e.b})
            if (p->node != kBoundary) p->node += a.n_crossings;
        r.edges.push_back(std::move(e));
    }
    glue_boundary_slots(r, 4, 6);
    glue_boundary_slots(r, 5, 7);
    return r;
}

Tangle tangle_stack(const Tangle& a, const Tangle& b) {
    Tangle r;
    r.n_crossings = a.n_crossings + b.n_crossings;
    r.free_loops = a.free_loops + b.free_loops;
    // a keeps NW, NE; its SW, SE move to temp slots 4, 5.
    static const int perm_a[4] = {kNW, kNE, 4, 5};
    // b keeps SW, SE; its NW, NE move to temp slots 6, 7.
    static const int perm_b[4] = {6, 7, kSW, kSE};
    Tangle ta = a, tb = b;
    permute_boundary(ta, perm_a);
    permute_boundary(tb, perm_b);
    r.edges = ta.edges;
    for (Edge e : tb.edges) {
        for (Port* p : {&e.a, &e.b})
            if (p->node != kBoundary) p->node += a.n_crossings;
        r.edges.push_back(std::move(e));
    }
    glue_boundary_slots(r, 4, 6);
    glue_boundary_slots(r, 5, 7);
    return r;
}

Tangle rotate_pi(const Tangle& t) {
    static const int perm[4] = {kSE, kSW, kNE, kNW};
    Tangle r = t;
    permute_boundary(r, perm);
    return r;
}

Tangle rotate_quarter(const Tangle& t) {
    static const int perm[4] = {kNE, kSE, kNW, kSW};
    Tangle r = t;
    permute_boundary(r, perm);
    return r;
}

Tangle reflect_switch(const Tangle& t) {
    static const int perm[4] = {kNE, kNW, kSE, kSW};
    Tangle r = t;
    permute_boundary(r, perm);
    for (Edge& e : r.edges)
        for (Port* p : {&e.a, &e.b})
            if (p->node != kBoundary && (p->slot == 1 || p->slot == 3)) p->slot = 4 - p->slot;
    return r;
}

namespace {

ClosedDiagram close_tangle(const Tangle& t, int s1a, int s1b, int s2a, int s2b) {
    Tangle work = t;
    glue_boundary_slots(work, s1a, s1b);
    glue_boundary_slots(work, s2a, s2b);
    ClosedDiagram d;
    d.n_crossings = work.n_crossings;
    d.edges = std::move(work.edges);
    d.free_loops = work.free_loops;
    validate_closed(d);
    return d;
}

}  // namespace

ClosedDiagram numerator_closure(const Tangle& t) {
    return close_tangle(t, kNW, kNE, kSW, kSE);
}

ClosedDiagram denominator_closure(const Tangle& t) {
    return close_tangle(t, kNW, kSW, kNE, kSE);
}

namespace {

// Follow the strand entering at a boundary corner to the corner it exits.
int trace_corner(const Tangle& t, const PortIndex& idx, int corner) {
    auto [e, end] = idx.at(Port{kBoundary, corner});
    int cur_e = e, from_end = end;
    for (;;) {
        const Edge& ed = t.edges[static_cast<std::size_t>(cur_e)];
        Port head = (from_end == 0) ? ed.b : ed.a;
        if (head.node == kBoundary) return head.slot;
        auto [ne, nend] = idx.at(Port{head.node, (head.slot + 2) % 4});
        cur_e = ne;
        from_end = nend;
    }
}

}  // namespace

Pattern pattern(const Tangle& t) {
    PortIndex idx(t.edges, t.n_crossings);
    switch (trace_corner(t, idx, kNW)) {
        case kNE: return Pattern::TopBottom;
        case kSW: return Pattern::LeftRight;
        case kSE: return Pattern::Diagonal;
        default: throw TangleError("strand returned to its own corner");
    }
}

const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::LeftRight: return "LeftRight";
        case Pattern::TopBottom: return "TopBottom";
        default: return "Diagonal";
    }
}

int component_count(const ClosedDiagram& d) {
    PortIndex idx(d.edges, d.n_crossings);
    std::vector<char> seen(d.edges.size(), 0);
    int comps = d.free_loops;
    for (std::size_t e0 = 0; e0 < d.edges.size(); ++e0) {
        if (seen[e0]) continue;
        ++comps;
        int cur_e = static_cast<int>(e0), from_end = 0;
        do {
            seen[static_cast<std::size_t>(cur_e)] = 1;
            const Edge& ed = d.edges[static_cast<std::size_t>(cur_e)];
            Port head = (from_end == 0) ? ed.b : ed.a;
            auto [ne, nend] = idx.at(Port{head.node, (head.slot + 2) % 4});
            cur_e = ne;
            from_end = nend;
        } while (cur_e != static_cast<int>(e0));
    }
    return comps;
}

Tangle rational_tangle(long long p, long long q) {
    if (q == 0) throw TangleError("rational tangle needs q != 0");
    if (gcd_ll(p, q) != 1) throw TangleError("rational tangle needs gcd(|p|,|q|) = 1");

    // Nearest-integer continued fraction of p/q; entries after the first
    // have absolute value >= 2.
    std::vector<long long> seq;
    long long P = p, Q = q;
    for (;;) {
        if (P % Q == 0) {
            seq.push_back(P / Q);
            break;
        }
        long long Pn = Q > 0 ? P : -P, Qn = Q > 0 ? Q : -Q;
        long long c = floordiv(2 * Pn + Qn, 2 * Qn);
        seq.push_back(c);
        long long r = P - c * Q;
        P = Q;
        Q = r;
    }
    // The assembly below needs odd length: [..., ck] = [..., ck - s, s].
    if (seq.size() % 2 == 0) {
        long long ck = seq.back(), s = ck > 0 ? 1 : -1;
        seq.back() = ck - s;
        seq.push_back(s);
    }

    int k = static_cast<int>(seq.size());
    Tangle t = horizontal_twists(static_cast<int>(seq[static_cast<std::size_t>(k - 1)]));
    for (int i = k - 2; i >= 0; --i) {
        int c = static_cast<int>(seq[static_cast<std::size_t>(i)]);
        if ((k - 1 - i) % 2 == 1)
            t = tangle_stack(t, vertical_twists(c));
        else
            t = tangle_sum(t, horizontal_twists(c));
    }
    return t;
}

Fraction cf_value(const std::vector<long long>& seq) {
    if (seq.empty()) throw TangleError("empty continued fraction");
    long long n = seq.back(), d = 1;
    for (std::size_t i = seq.size() - 1; i-- > 0;) {
        long long n2 = seq[i] * n + d;
        d = n;
        n = n2;
    }
    return make_fraction(n, d);
}

std::vector<long long> even_continued_fraction(long long p, long long q) {
    if (p == 0) throw NoEvenExpansion("numerator must be odd");
    if (gcd_ll(p, q) != 1) throw TangleError("fraction must be reduced");
    bool p_odd = (p % 2 != 0), q_even = (q % 2 == 0);
    if (!p_odd || !q_even)
        throw NoEvenExpansion("exists only when the denominator is even");

    // Greedy nearest-even expansion of q/p; |denominator| strictly drops, and
    // the parity classes force odd length with an even final entry.
    std::vector<long long> seq;
    long long P = q, Q = p;
    for (;;) {
        if (P % Q == 0) {
            seq.push_back(P / Q);
            break;
        }
        long long Pn = Q > 0 ? P : -P, Qn = Q > 0 ? Q : -Q;
        long long e0 = 2 * floordiv(Pn, 2 * Qn);
        long long r = Pn - e0 * Qn;  // (x - e0) * Qn, in [0, 2*Qn)
        if (r == Qn) throw TangleError("even expansion hit an odd integer");
        long long c = (r < Qn) ? e0 : e0 + 2;
        seq.push_back(c);
        long long rem = P - c * Q;
        P = Q;
        Q = rem;
    }
    if (seq.size() % 2 != 1) throw TangleError("even expansion has even length");
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] % 2 != 0 || (i > 0 && seq[i] == 0))
            throw TangleError("even expansion produced a bad entry");
    return seq;
}

void stamp_tags(Tangle& t, TagOrigin origin) {
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        t.edges[i].tags = {Tag{origin, static_cast<int>(i)}};
}

void clear_tags(Tangle& t) {
    for (Edge& e : t.edges) e.tags.clear();
}

namespace {

std::pair<Port, Port> norm_edge(const Edge& e) {
    auto key = [](Port p) { return std::pair<int, int>(p.node, p.slot); };
    return key(e.a) <= key(e.b) ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
}

}  // namespace

bool structurally_equal(const Tangle& a, const Tangle& b) {
    if (a.n_crossings != b.n_crossings || a.free_loops != b.free_loops) return false;
    if (a.edges.size() != b.edges.size()) return false;
    std::vector<std::pair<Port, Port>> ea, eb;
    for (const Edge& e : a.edges) ea.push_back(norm_edge(e));
    for (const Edge& e : b.edges) eb.push_back(norm_edge(e));
    auto lt = [](const std::pair<Port, Port>& x, const std::pair<Port, Port>& y) {
        return std::tie(x.first.node, x.first.slot, x.second.node, x.second.slot) <
               std::tie(y.first.node, y.first.slot, y.second.node, y.second.slot);
    };
    std::sort(ea.begin(), ea.end(), lt);
    std::sort(eb.begin(), eb.end(), lt);
    return ea == eb;
}

std::string serialize_tangle(const Tangle& t) {
    validate_tangle(t);
    if (t.free_loops != 0) throw TangleError("cannot serialize free loops");
    std::vector<std::array<int, 4>> slot_edge(static_cast<std::size_t>(t.n_crossings),
                                              {-1, -1, -1, -1});
    int corner_edge[4] = {-1, -1, -1, -1};
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        for (const Port* p : {&t.edges[i].a, &t.edges[i].b}) {
            if (p->node == kBoundary)
                corner_edge[p->slot] = static_cast<int>(i);
            else
                slot_edge[static_cast<std::size_t>(p->node)][static_cast<std::size_t>(p->slot)] =
                    static_cast<int>(i);
        }
    std::ostringstream os;
    os << "tangle " << t.n_crossings << " " << t.edges.size() << "\n";
    for (int c = 0; c < t.n_crossings; ++c) {
        os << "c " << c;
        for (int s = 0; s < 4; ++s) os << " " << slot_edge[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)];
        os << " 0\n";
    }
    os << "b " << corner_edge[kNW] << " " << corner_edge[kNE] << " " << corner_edge[kSW] << " "
       << corner_edge[kSE] << "\n";
    return os.str();
}

Tangle parse_tangle(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) {
            if (!tok.empty() && tok[0] == '#') break;
            toks.push_back(tok);
        }
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    if (rows.empty() || rows[0].size() != 3 || rows[0][0] != "tangle")
        throw TangleError("expected 'tangle <crossings> <edges>' header");
    int n = std::stoi(rows[0][1]);
    int m = std::stoi(rows[0][2]);
    if (n < 0 || m != 2 * n + 2) throw TangleError("bad crossing/edge counts");
    if (rows.size() != static_cast<std::size_t>(n) + 2)
        throw TangleError("wrong number of lines in tangle block");

    // occurrence[id] collects the ports carrying edge id, in scan order.
    std::vector<std::vector<Port>> occurrence(static_cast<std::size_t>(m));
    auto add = [&](int id, Port p) {
        if (id < 0 || id >= m) throw TangleError("edge id out of range");
        occurrence[static_cast<std::size_t>(id)].push_back(p);
    };
    std::vector<char> crossing_seen(static_cast<std::size_t>(n), 0);
    for (int r = 1; r <= n; ++r) {
        const auto& toks = rows[static_cast<std::size_t>(r)];
        if (toks.size() != 7 || toks[0] != "c") throw TangleError("expected crossing line");
        int cid = std::stoi(toks[1]);
        if (cid < 0 || cid >= n || crossing_seen[static_cast<std::size_t>(cid)])
            throw TangleError("bad crossing id");
        crossing_seen[static_cast<std::size_t>(cid)] = 1;
        int e[4];
        for (int s = 0; s < 4; ++s) e[s] = std::stoi(toks[static_cast<std::size_t>(s) + 2]);
        int flag = std::stoi(toks[6]);
        if (flag != 0 && flag != 1) throw TangleError("over flag must be 0 or 1");
        if (flag == 1) {
            // rotate so the over-strand lands on slots {0,2}
            int tmp = e[0];
            e[0] = e[1]; e[1] = e[2]; e[2] = e[3]; e[3] = tmp;
        }
        for (int s = 0; s < 4; ++s) add(e[s], Port{cid, s});
    }
    const auto& btoks = rows[static_cast<std::size_t>(n) + 1];
    if (btoks.size() != 5 || btoks[0] != "b") throw TangleError("expected boundary line");
    for (int k = 0; k < 4; ++k) add(std::stoi(btoks[static_cast<std::size_t>(k) + 1]), Port{kBoundary, k});

    Tangle t;
    t.n_crossings = n;
    for (int id = 0; id < m; ++id) {
        const auto& occ = occurrence[static_cast<std::size_t>(id)];
        if (occ.size() != 2) throw TangleError("edge id must occur exactly twice");
        t.edges.push_back(Edge{occ[0], occ[1], {}});
    }
    validate_tangle(t);
    return t;
}

}  // namespace symun
