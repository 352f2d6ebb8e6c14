/* tangle.hpp
 * ----------
 * Combinatorial 2-string tangles and their closures.
 *
 * A diagram is a 4-valent graph: each crossing has four slots numbered
 * 0..3 counterclockwise, and the over-strand always occupies slots 0 and 2
 * (parsers normalize input to this form).  A strand entering slot s leaves
 * through slot (s+2) mod 4.  Tangles additionally have four boundary
 * endpoints at the corners NW, NE, SW, SE, modeled as ports on the
 * pseudo-node kBoundary.
 *
 * Rational tangles follow the continued-fraction convention
 *   [c1, c2, ..., ck]  =  c1 + 1/(c2 + 1/(... + 1/ck)),
 * assembled from an innermost horizontal twist block by alternately
 * stacking vertical blocks below and appending horizontal blocks to the
 * right.  rational_tangle(p, q) realizes the tangle with fraction p/q.
 *
 * Edges carry optional provenance tags so that a diagram built from several
 * constituents remembers which constituent each edge came from; all
 * operations preserve tags, and gluing unions them.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symun {

enum Corner : int { kNW = 0, kNE = 1, kSW = 2, kSE = 3 };
inline constexpr int kBoundary = -1;

// Which pair of boundary corners each open strand of a tangle connects.
enum class Pattern { LeftRight, TopBottom, Diagonal };

// Provenance of an edge inside an assembled diagram.
enum class TagOrigin : std::uint8_t { D, Dstar, T };
struct Tag {
    TagOrigin origin;
    int index;  // edge index in the originating tangle
    bool operator==(const Tag&) const = default;
};

struct Port {
    int node;  // crossing index, or kBoundary
    int slot;  // crossing slot 0..3, or Corner for boundary
    bool operator==(const Port&) const = default;
};

struct Edge {
    Port a, b;
    std::vector<Tag> tags;
};

struct Tangle {
    int n_crossings = 0;
    std::vector<Edge> edges;
    int free_loops = 0;  // crossingless circles produced by internal gluing
};

struct ClosedDiagram {
    int n_crossings = 0;
    std::vector<Edge> edges;
    int free_loops = 0;
};

struct TangleError : std::runtime_error {
    explicit TangleError(const std::string& why) : std::runtime_error(why) {}
};
struct NoEvenExpansion : TangleError {
    explicit NoEvenExpansion(const std::string& why) : TangleError(why) {}
};

// Reduced fraction; den == 0 encodes the infinite fraction.
struct Fraction {
    long long num = 0;
    long long den = 1;
    bool operator==(const Fraction&) const = default;
};
Fraction make_fraction(long long num, long long den);

// Port -> (edge index, end index 0/1) lookup for a fixed edge list.
class PortIndex {
public:
    PortIndex(const std::vector<Edge>& edges, int n_crossings);
    std::pair<int, int> at(Port p) const;  // throws TangleError if absent
    bool has(Port p) const;

private:
    int n_crossings_;
    std::vector<std::pair<int, int>> crossing_slots_;  // 4 per crossing
    std::pair<int, int> boundary_[4];
};

// Structure checks: every crossing slot filled exactly once; boundary
// corners each used exactly once (tangle) or never (closed diagram).
void validate_tangle(const Tangle& t);
void validate_closed(const ClosedDiagram& d);

// |n| crossings stacked vertically (a vertical twist region with fraction
// 1/n); twist_tangle(0) is the crossingless tangle with two horizontal
// strands (fraction 0).
Tangle twist_tangle(int n);

// Horizontal twist region: |n| crossings side by side, fraction n.
Tangle horizontal_twists(int n);

// Place b to the right of a (tangle addition): fractions add.
Tangle tangle_sum(const Tangle& a, const Tangle& b);
// Place b below a (tangle multiplication): reciprocals of fractions add.
Tangle tangle_stack(const Tangle& a, const Tangle& b);

// Rotate the disk by pi: corners NW<->SE, NE<->SW.
Tangle rotate_pi(const Tangle& t);
// Rotate the disk clockwise by pi/2: NW->NE->SE->SW->NW.
Tangle rotate_quarter(const Tangle& t);
// Mirror across a vertical axis: NW<->NE, SW<->SE, every crossing switched.
Tangle reflect_switch(const Tangle& t);

// Closures: numerator joins NW-NE and SW-SE; denominator joins NW-SW, NE-SE.
ClosedDiagram numerator_closure(const Tangle& t);
ClosedDiagram denominator_closure(const Tangle& t);

Pattern pattern(const Tangle& t);
const char* pattern_name(Pattern p);

// Number of link components (closed strands plus free loops).
int component_count(const ClosedDiagram& d);

// Tangle with fraction p/q (q != 0, gcd(|p|, |q|) = 1).
Tangle rational_tangle(long long p, long long q);

// Value of [c1, ..., ck] as a reduced fraction (projective arithmetic,
// so intermediate infinities are fine).
Fraction cf_value(const std::vector<long long>& seq);

// The all-even continued fraction of odd length whose value is q/p, the
// reciprocal of the tangle fraction p/q.  Exists exactly when q is even
// (and then p is odd since gcd = 1); entries after the first are nonzero,
// and the expansion is unique.  Throws NoEvenExpansion otherwise.
std::vector<long long> even_continued_fraction(long long p, long long q);

// Provenance helpers: stamp every edge i with {origin, i} / drop all tags.
void stamp_tags(Tangle& t, TagOrigin origin);
void clear_tags(Tangle& t);

// Equal shapes, ignoring tags and edge-end order.
bool structurally_equal(const Tangle& a, const Tangle& b);

// Text form:
//   tangle <n_crossings> <n_edges>
//   c <id> <e0> <e1> <e2> <e3> <overflag>   (one line per crossing)
//   b <eNW> <eNE> <eSW> <eSE>
// overflag 0 means the over-strand occupies slots {0,2}; 1 means {1,3}
// (rotated to the normal form on input).
std::string serialize_tangle(const Tangle& t);
Tangle parse_tangle(const std::string& text);

}  // namespace symun
