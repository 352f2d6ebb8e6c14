/* wirtinger.hpp
 * -------------
 * Orientation, arcs and the Wirtinger presentation of a closed diagram.
 *
 * Arcs are the maximal strand segments between consecutive under-passes;
 * the presentation has one generator per arc and one relator per crossing:
 *   positive crossing:  x_i x_j x_k^-1 x_j^-1
 *   negative crossing:  x_j x_i x_j^-1 x_k^-1
 * where j is the over arc, i the incoming under arc, k the outgoing under
 * arc.  A crossing is positive when the under strand leaves through the
 * slot counterclockwise-adjacent to the over strand's exit slot.
 *
 * Arc numbering starts at the arc containing start_edge, which therefore
 * serves as the meridian generator.  Free loops (crossingless circles)
 * contribute generators with no relators.
 */
#pragma once

#include "symun/freeword.hpp"
#include "symun/tangle.hpp"

namespace symun {

struct OrientedDiagram {
    ClosedDiagram diagram;
    std::vector<int> edge_dir;   // +1: edge flows a -> b, -1: b -> a
    std::vector<int> edge_comp;  // strand component per edge
    std::vector<std::vector<int>> cycles;  // per component, edges in traversal order
    int n_components = 0;        // cycles plus free loops
};

// Orient every strand by traversal; start_edge is visited first and fixes
// component 0 and the direction conventions.
OrientedDiagram orient(const ClosedDiagram& d, int start_edge = 0);

struct CrossingArcs {
    int over = -1;       // arc passing over
    int under_in = -1;   // arc arriving at the under-pass
    int under_out = -1;  // arc leaving the under-pass
    int sign = 0;        // +1 or -1
};

struct ArcData {
    std::vector<int> edge_arc;  // arc id per edge
    int n_arcs = 0;             // includes one arc per free loop
    std::vector<CrossingArcs> crossings;
};

ArcData compute_arcs(const OrientedDiagram& od);

struct Presentation {
    int n_generators = 0;
    std::vector<Word> relators;
    int meridian = 0;  // generator index of the chosen meridian
};

// Oriented diagram, arcs and presentation bundled, all sharing one arc
// numbering anchored at start_edge.
struct AnalyzedKnot {
    OrientedDiagram od;
    ArcData arcs;
    Presentation pres;
};

// Knot version: requires exactly one link component.
AnalyzedKnot analyze_knot(const ClosedDiagram& d, int start_edge = 0);
Presentation wirtinger_presentation(const ClosedDiagram& d, int start_edge = 0);

// Link version (any number of components); meridian is arc 0.
Presentation wirtinger_relations(const ClosedDiagram& d);

// Longitude of a knot as a word in the arc generators.  Traverse once from
// base_edge; at every under-pass of sign s append the pair
//     (over)^s (outgoing arc)^-s          before switch_edge is passed,
//     (incoming arc)^-s (over)^s          after it.
// With switch_edge = -1 the first form is used throughout.  Pairs cancel in
// homology, so the word always has total exponent zero.
Word longitude_word(const AnalyzedKnot& k, int base_edge = 0, int switch_edge = -1);
Word longitude_word(const ClosedDiagram& d, int base_edge = 0, int switch_edge = -1);

}  // namespace symun
