/* catalog.hpp
 * -----------
 * Named tangles with reference invariants, and a plain-text interchange
 * format.  The built-in catalog covers the small 2-bridge knots, the
 * partial tangles used to assemble symmetric unions, and one symmetric
 * middle tangle; verify_catalog recomputes every stored invariant.
 *
 * File format (line oriented, '#' starts a comment):
 *
 *   entry <name>
 *   kind knot|partial|symmetric
 *   closure N|D                  (knot entries only)
 *   fraction <p>/<q>             (optional)
 *   fibered true|false           (optional)
 *   delta <exp>:<coeff> ...      (canonical Alexander polynomial)
 *   tangle <crossings> <edges>   (block as in tangle.hpp)
 *   c ...
 *   b ...
 *   end
 *
 * The stored polynomial refers to the numerator or denominator closure for
 * knot entries, and to the denominator closure for partial and symmetric
 * entries; symmetric entries additionally promise that the first
 * elementary ideal of their numerator closure vanishes.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symun/laurent.hpp"
#include "symun/tangle.hpp"

namespace symun {

struct CatalogError : std::runtime_error {
    explicit CatalogError(const std::string& why) : std::runtime_error(why) {}
};

enum class EntryKind { Knot, Partial, Symmetric };

struct CatalogEntry {
    std::string name;
    EntryKind kind = EntryKind::Knot;
    Tangle tangle;
    char closure = 'N';  // knot entries: which closure realizes the knot
    std::optional<Fraction> fraction;
    std::optional<bool> fibered;
    LaurentPoly delta;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    const CatalogEntry* find(const std::string& name) const;
    const CatalogEntry& at(const std::string& name) const;  // throws CatalogError
};

Catalog default_catalog();

// Recompute all stored invariants; returns human-readable failure messages
// (empty vector means the catalog is consistent).
std::vector<std::string> verify_catalog(const Catalog& c);

std::string serialize_catalog(const Catalog& c);
Catalog parse_catalog(const std::string& text);
Catalog load_catalog(const std::string& path);

}  // namespace symun
