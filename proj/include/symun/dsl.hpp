/* dsl.hpp
 * -------
 * A small expression language for tangles and their closures, used by the
 * command-line tool.
 *
 *   closure := ("N" | "D") "(" tangle ")"
 *            | "extsym" "(" tangle "," tangle ")"      (partial, middle)
 *   tangle  := "T" "(" int "/" int ")"                 rational tangle
 *            | "twist" "(" int ")"                     vertical twists
 *            | "named" "(" name ")" | name             catalog lookup
 *            | "sum" "(" tangle "," tangle ")"
 *            | "rot" "(" tangle ")"                    rotate by pi
 *            | "reflect" "(" tangle ")"                mirror and switch
 *
 * Whitespace is insignificant; names may contain letters, digits and
 * underscores ("3_1D").  Parse errors carry line and column numbers.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symun/catalog.hpp"
#include "symun/construct.hpp"
#include "symun/tangle.hpp"

namespace symun {

struct SyntaxError : std::runtime_error {
    int line, col;
    SyntaxError(int line_, int col_, const std::string& msg)
        : std::runtime_error("syntax error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

struct TangleExpr {
    enum class Kind { Rational, Twist, Named, Sum, RotatePi, Reflect };
    Kind kind = Kind::Named;
    long long p = 0, q = 1;        // Rational
    int n = 0;                     // Twist
    std::string name;              // Named
    std::vector<TangleExpr> args;  // Sum: 2, RotatePi/Reflect: 1
    bool operator==(const TangleExpr&) const;
};

struct ClosureExpr {
    enum class Kind { Numerator, Denominator, ExtSym };
    Kind kind = Kind::Numerator;
    TangleExpr first;                  // tangle (N/D) or partial tangle (extsym)
    std::optional<TangleExpr> second;  // middle tangle (extsym)
    bool operator==(const ClosureExpr&) const;
};

TangleExpr parse_tangle_expr(const std::string& text);
ClosureExpr parse_closure_expr(const std::string& text);

std::string print_expr(const TangleExpr& e);
std::string print_expr(const ClosureExpr& e);

Tangle eval_tangle(const TangleExpr& e, const Catalog& cat);
// Numerator/Denominator closures only.
ClosedDiagram eval_closure(const ClosureExpr& e, const Catalog& cat);
// ExtSym only.
SymmetricUnion eval_symmetric_union(const ClosureExpr& e, const Catalog& cat);

}  // namespace symun
