/* commands.cpp
 * ------------
 * Implementation of the CLI commands.  All heavy lifting lives in the
 * library; this file marshals inputs, runs the checks and renders results
 * as JSON or plain text.
 */
#include "symun/commands.hpp"

#include <cstdint>
#include <iostream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "symun/alexander.hpp"
#include "symun/construct.hpp"
#include "symun/dsl.hpp"

namespace symun {

namespace {

nlohmann::json coeff_to_json(const Integer& c) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    if (c >= lo && c <= hi) return c.convert_to<std::int64_t>();
    return c.str();
}

}  // namespace

nlohmann::json poly_to_json(const LaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p) terms.push_back({e, coeff_to_json(c)});
    return terms;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    return {
        {"instance", r.instance},
        {"delta_K", poly_to_json(r.delta_K)},
        {"delta_NT", poly_to_json(r.delta_NT)},
        {"delta_Khat", poly_to_json(r.delta_Khat)},
        {"delta_K_str", lp_to_string(r.delta_K)},
        {"delta_NT_str", lp_to_string(r.delta_NT)},
        {"delta_Khat_str", lp_to_string(r.delta_Khat)},
        {"factorization_ok", r.factorization_ok},
        {"relators_checked", r.relators_checked},
        {"relators_ok", r.relators_ok},
        {"longitude_status", triviality_status_name(r.longitude_status)},
        {"longitude_depth", r.longitude_depth},
        {"meridian_ok", r.meridian_ok},
        {"surjective_ok", r.surjective_ok},
        {"elapsed_ms", r.elapsed_ms},
        {"passed", r.passed()},
    };
}

CommandResult cmd_alex(const std::string& expr, const Catalog& cat) {
    ClosureExpr e = parse_closure_expr(expr);
    CommandResult res;
    res.payload["command"] = "alex";
    res.payload["expression"] = print_expr(e);
    if (e.kind == ClosureExpr::Kind::ExtSym) {
        SymmetricUnion su = eval_symmetric_union(e, cat);
        res.payload["crossings"] = su.diagram.n_crossings;
        LaurentPoly delta = alexander_polynomial(su.diagram);
        res.payload["alexander"] = poly_to_json(delta);
        res.payload["alexander_str"] = lp_to_string(delta);
    } else {
        ClosedDiagram d = eval_closure(e, cat);
        res.payload["crossings"] = d.n_crossings;
        LaurentPoly delta = alexander_polynomial(d);
        res.payload["alexander"] = poly_to_json(delta);
        res.payload["alexander_str"] = lp_to_string(delta);
    }
    return res;
}

CommandResult cmd_verify_thm1(const std::string& d_expr, const std::string& t_expr,
                              const Catalog& cat, int depth, std::size_t beam) {
    Tangle d = eval_tangle(parse_tangle_expr(d_expr), cat);
    Tangle t = eval_tangle(parse_tangle_expr(t_expr), cat);
    SymmetricUnion su = extended_symmetric_union(d, t);
    std::string label = "extsym(" + d_expr + ", " + t_expr + ")";
    VerificationReport r = verify_symmetric_union(su, depth, static_cast<int>(beam), label);
    CommandResult res;
    res.exit_code = r.passed() ? 0 : 1;
    res.payload["command"] = "verify-thm1";
    res.payload["report"] = report_to_json(r);
    return res;
}

namespace {

struct TableRow {
    const char* knot;   // symmetric union being presented
    const char* khat;   // catalog name of the partial knot
    long long beta, alpha, e;  // middle tangle fraction e + beta/alpha
    const char* middle;  // catalog name of the knot N(T)
};

// Symmetric-union presentations of small knots: partial tangle, middle
// tangle fraction, and the knot the middle closure should be.
constexpr TableRow kTable[] = {
    {"8_10", "3_1", 1, 2, -2, "3_1"},     {"8_20", "3_1", 1, 2, 0, "unknot"},
    {"9_24", "3_1", -1, 2, -2, "4_1"},    {"10_62", "3_1", -1, 4, -1, "5_1"},
    {"10_65", "3_1", 1, 4, -2, "5_2"},    {"10_77", "3_1", -1, 2, -3, "5_2"},
    {"10_140", "3_1", 1, 4, 0, "unknot"}, {"10_143", "3_1", -3, 4, 0, "3_1"},
    {"10_59", "4_1", 1, 2, -2, "3_1"},    {"10_137", "4_1", 1, 2, 0, "unknot"},
};

}  // namespace

CommandResult cmd_table1(const Catalog& cat, int depth, std::size_t beam) {
    CommandResult res;
    res.payload["command"] = "table1";
    nlohmann::json rows = nlohmann::json::array();
    bool all_ok = true;
    for (const TableRow& row : kTable) {
        const CatalogEntry& d_entry = cat.at(std::string(row.khat) + "D");
        SymmetricUnion su = montesinos_extsym(d_entry.tangle, row.beta, row.alpha, row.e);
        VerificationReport r =
            verify_symmetric_union(su, depth, static_cast<int>(beam), row.knot);
        bool khat_expected = r.delta_Khat == cat.at(row.khat).delta;
        bool middle_expected = r.delta_NT == cat.at(row.middle).delta;
        bool ok = r.passed() && khat_expected && middle_expected;
        all_ok = all_ok && ok;
        nlohmann::json j = report_to_json(r);
        j["partial_knot"] = row.khat;
        j["middle_knot"] = row.middle;
        j["middle_fraction"] =
            std::to_string(row.e) + " + " + std::to_string(row.beta) + "/" + std::to_string(row.alpha);
        j["factors_expected"] = khat_expected && middle_expected;
        j["ok"] = ok;
        rows.push_back(std::move(j));
    }
    res.payload["rows"] = std::move(rows);
    res.payload["all_ok"] = all_ok;
    res.exit_code = all_ok ? 0 : 1;
    return res;
}

CommandResult cmd_family(const std::string& khat, int count, std::uint64_t seed,
                         const Catalog& cat, int depth, std::size_t beam) {
    const CatalogEntry* d_entry = cat.find(khat);
    if (d_entry == nullptr || d_entry->kind != EntryKind::Partial)
        d_entry = cat.find(khat + "D");
    if (d_entry == nullptr)
        throw CatalogError("no partial tangle named '" + khat + "' or '" + khat + "D'");

    std::vector<FamilyMember> fam = nonfibered_family(d_entry->tangle, count, seed);
    CommandResult res;
    res.payload["command"] = "family";
    res.payload["partial"] = d_entry->name;
    res.payload["seed"] = seed;
    nlohmann::json rows = nlohmann::json::array();
    bool all_ok = true;
    for (const FamilyMember& m : fam) {
        std::string label =
            "b(" + std::to_string(m.alpha) + "," + std::to_string(m.beta) + ") over " + d_entry->name;
        VerificationReport r =
            verify_symmetric_union(m.su, depth, static_cast<int>(beam), label);
        bool nonmonic = !lp_is_monic(r.delta_K) && !lp_is_monic(r.delta_NT);
        bool ok = r.passed() && nonmonic;
        all_ok = all_ok && ok;
        nlohmann::json j = report_to_json(r);
        j["alpha"] = m.alpha;
        j["beta"] = m.beta;
        j["even_seq"] = m.even_seq;
        j["non_monic"] = nonmonic;
        j["ok"] = ok;
        rows.push_back(std::move(j));
    }
    res.payload["rows"] = std::move(rows);
    res.payload["all_ok"] = all_ok;
    res.exit_code = all_ok ? 0 : 1;
    return res;
}

CommandResult cmd_catalog_check(const Catalog& cat) {
    std::vector<std::string> failures = verify_catalog(cat);
    CommandResult res;
    res.payload["command"] = "catalog-check";
    res.payload["entries"] = cat.entries.size();
    res.payload["failures"] = failures;
    res.exit_code = failures.empty() ? 0 : 1;
    return res;
}

namespace {

std::string report_line(const nlohmann::json& j) {
    std::ostringstream os;
    os << j["instance"].get<std::string>() << ": Delta_K = " << j["delta_K_str"].get<std::string>()
       << " | Delta_NT = " << j["delta_NT_str"].get<std::string>()
       << " | Delta_Khat = " << j["delta_Khat_str"].get<std::string>()
       << " | factorization " << (j["factorization_ok"].get<bool>() ? "ok" : "FAILED")
       << " | relators " << j["relators_ok"].get<int>() << "/" << j["relators_checked"].get<int>()
       << " | longitude " << j["longitude_status"].get<std::string>()
       << " | meridian " << (j["meridian_ok"].get<bool>() ? "ok" : "FAILED")
       << " | onto " << (j["surjective_ok"].get<bool>() ? "ok" : "FAILED");
    return os.str();
}

void render_text(const nlohmann::json& p, std::ostream& out) {
    const std::string cmd = p.value("command", "");
    if (cmd == "alex") {
        out << p["expression"].get<std::string>() << "  (" << p["crossings"].get<int>()
            << " crossings)\n  Delta = " << p["alexander_str"].get<std::string>() << "\n";
    } else if (cmd == "verify-thm1") {
        const auto& r = p["report"];
        out << report_line(r) << "\n"
            << (r["passed"].get<bool>() ? "VERIFIED" : "FAILED") << " ("
            << r["elapsed_ms"].get<double>() << " ms)\n";
    } else if (cmd == "table1") {
        for (const auto& r : p["rows"])
            out << (r["ok"].get<bool>() ? "  ok   " : "  FAIL ") << report_line(r) << "\n";
        out << (p["all_ok"].get<bool>() ? "all rows verified\n" : "some rows FAILED\n");
    } else if (cmd == "family") {
        out << "family over " << p["partial"].get<std::string>() << " (seed "
            << p["seed"].get<std::uint64_t>() << ")\n";
        for (const auto& r : p["rows"])
            out << (r["ok"].get<bool>() ? "  ok   " : "  FAIL ") << report_line(r)
                << " | non-monic " << (r["non_monic"].get<bool>() ? "ok" : "FAILED") << "\n";
        out << (p["all_ok"].get<bool>() ? "all members verified\n" : "some members FAILED\n");
    } else if (cmd == "catalog-check") {
        if (p["failures"].empty()) {
            out << "catalog consistent (" << p["entries"].get<std::size_t>() << " entries)\n";
        } else {
            for (const auto& f : p["failures"]) out << "FAIL " << f.get<std::string>() << "\n";
        }
    } else {
        out << p.dump(2) << "\n";
    }
}

void emit(const CommandResult& r, bool json_mode) {
    if (json_mode)
        std::cout << r.payload.dump(2) << std::endl;
    else
        render_text(r.payload, std::cout);
}

int emit_error(const std::string& type, const std::string& msg, bool json_mode, int code,
               int line = 0, int col = 0) {
    if (json_mode) {
        nlohmann::json j = {{"error", {{"type", type}, {"message", msg}}}};
        if (line > 0) {
            j["error"]["line"] = line;
            j["error"]["col"] = col;
        }
        std::cout << j.dump(2) << std::endl;
    } else {
        std::cerr << "error (" << type << "): " << msg << "\n";
    }
    return code;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"symun: symmetric-union knot constructions and their Alexander invariants"};
    app.fallthrough(true);
    app.require_subcommand(1);

    bool json_mode = false;
    std::string catalog_path;
    int depth = 10;
    std::size_t beam = 100000;
    app.add_flag("--json", json_mode, "emit machine-readable JSON on stdout");
    app.add_option("--catalog", catalog_path, "load tangle catalog from file instead of built-in");
    app.add_option("--depth", depth, "longitude triviality search depth")->capture_default_str();
    app.add_option("--beam", beam, "longitude triviality search beam width")->capture_default_str();

    std::string alex_expr;
    CLI::App* alex = app.add_subcommand("alex", "Alexander polynomial of a closure expression");
    alex->add_option("expression", alex_expr,
                     "closure expression, e.g. \"N(T(3/2))\" or \"extsym(3_1D, twist(2))\"")
        ->required();

    std::string d_expr, t_expr;
    CLI::App* thm1 = app.add_subcommand(
        "verify-thm1", "verify factorization and epimorphism for one symmetric union");
    thm1->add_option("partial", d_expr, "partial tangle expression (e.g. \"3_1D\" or \"T(2/3)\")")
        ->required();
    thm1->add_option("middle", t_expr, "middle tangle expression (e.g. \"twist(2)\")")->required();

    CLI::App* table = app.add_subcommand(
        "table1", "verify the built-in table of symmetric-union presentations");

    std::string fam_khat = "4_1";
    int fam_count = 5;
    std::uint64_t fam_seed = 12345;
    CLI::App* family = app.add_subcommand(
        "family", "verify a random family of non-fibered symmetric unions");
    family->add_option("partial", fam_khat, "partial knot or tangle catalog name")
        ->capture_default_str();
    family->add_option("--count", fam_count, "number of members")->capture_default_str();
    family->add_option("--seed", fam_seed, "RNG seed")->capture_default_str();

    CLI::App* check = app.add_subcommand("catalog-check", "recompute all catalog invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Catalog cat = catalog_path.empty() ? default_catalog() : load_catalog(catalog_path);
        CommandResult res;
        if (alex->parsed())
            res = cmd_alex(alex_expr, cat);
        else if (thm1->parsed())
            res = cmd_verify_thm1(d_expr, t_expr, cat, depth, beam);
        else if (table->parsed())
            res = cmd_table1(cat, depth, beam);
        else if (family->parsed())
            res = cmd_family(fam_khat, fam_count, fam_seed, cat, depth, beam);
        else if (check->parsed())
            res = cmd_catalog_check(cat);
        emit(res, json_mode);
        return res.exit_code;
    } catch (const SyntaxError& e) {
        return emit_error("syntax", e.what(), json_mode, 2, e.line, e.col);
    } catch (const CatalogError& e) {
        return emit_error("catalog", e.what(), json_mode, 2);
    } catch (const ConstructionError& e) {
        return emit_error("construction", e.what(), json_mode, 2);
    } catch (const TangleError& e) {
        return emit_error("tangle", e.what(), json_mode, 2);
    } catch (const NotKnotShaped& e) {
        return emit_error("not-knot-shaped", e.what(), json_mode, 1);
    } catch (const std::exception& e) {
        return emit_error("internal", e.what(), json_mode, 1);
    }
}

}  // namespace symun
