/* commands.hpp
 * ------------
 * Command layer shared by the CLI binary and the tests.  Each command
 * returns an exit code plus a JSON payload so that behaviour can be
 * tested without spawning processes.
 *
 * Exit codes: 0 = success / verification passed, 1 = verification or
 * computation failed, 2 = usage or parse error.
 */
#pragma once

#include <string>

#include "json.hpp"
#include "symun/catalog.hpp"
#include "symun/epi.hpp"

namespace symun {

struct CommandResult {
    int exit_code = 0;
    nlohmann::json payload;
};

/* JSON encoding of a Laurent polynomial: ascending [[exponent, coeff], ...].
 * Coefficients that fit in 64 bits are numbers, larger ones decimal strings. */
nlohmann::json poly_to_json(const LaurentPoly& p);

/* JSON encoding of a verification report (schema shared by verify-thm1,
 * table1 and family). */
nlohmann::json report_to_json(const VerificationReport& r);

/* alex: parse a closure expression, compute its Alexander polynomial. */
CommandResult cmd_alex(const std::string& expr, const Catalog& cat);

/* verify-thm1: run the full factorization + epimorphism verification for
 * the symmetric union built from a partial tangle (by catalog name or
 * expression) and a middle tangle expression. */
CommandResult cmd_verify_thm1(const std::string& d_expr, const std::string& t_expr,
                              const Catalog& cat, int depth, std::size_t beam);

/* table1: verify the ten catalogued symmetric-union presentations of small
 * knots, checking both the factorization and the expected factors. */
CommandResult cmd_table1(const Catalog& cat, int depth, std::size_t beam);

/* family: build `count` members of the non-fibered family over a catalog
 * partial tangle, requiring non-monic Alexander polynomials throughout. */
CommandResult cmd_family(const std::string& khat, int count, std::uint64_t seed,
                         const Catalog& cat, int depth, std::size_t beam);

/* catalog-check: re-derive every catalog entry's stored invariants. */
CommandResult cmd_catalog_check(const Catalog& cat);

/* Full argv entry point used by the binary. */
int run_cli(int argc, char** argv);

}  // namespace symun
