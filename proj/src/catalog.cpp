/* catalog.cpp
 * -----------
 * Built-in tangle catalog, self-verification and the text format.
 */
#include "symun/catalog.hpp"

#include <fstream>
#include <sstream>

#include "symun/alexander.hpp"

namespace symun {

const CatalogEntry* Catalog::find(const std::string& name) const {
    for (const CatalogEntry& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

const CatalogEntry& Catalog::at(const std::string& name) const {
    const CatalogEntry* e = find(name);
    if (!e) throw CatalogError("no catalog entry named '" + name + "'");
    return *e;
}

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long long>> pairs) {
    return lp_from_pairs(std::vector<std::pair<int, long long>>(pairs));
}

CatalogEntry knot_entry(std::string name, Tangle t, char closure, Fraction f, bool fibered,
                        LaurentPoly delta) {
    CatalogEntry e;
    e.name = std::move(name);
    e.kind = EntryKind::Knot;
    e.tangle = std::move(t);
    e.closure = closure;
    e.fraction = f;
    e.fibered = fibered;
    e.delta = std::move(delta);
    return e;
}

CatalogEntry partial_entry(std::string name, Tangle t, std::optional<Fraction> f,
                           LaurentPoly delta) {
    CatalogEntry e;
    e.name = std::move(name);
    e.kind = EntryKind::Partial;
    e.tangle = std::move(t);
    e.fraction = f;
    e.delta = std::move(delta);
    return e;
}

}  // namespace

Catalog default_catalog() {
    Catalog c;
    const LaurentPoly d31 = poly({{-1, 1}, {0, -1}, {1, 1}});
    const LaurentPoly d41 = poly({{-1, -1}, {0, 3}, {1, -1}});
    const LaurentPoly d51 = poly({{-2, 1}, {-1, -1}, {0, 1}, {1, -1}, {2, 1}});
    const LaurentPoly d52 = poly({{-1, 2}, {0, -3}, {1, 2}});
    const LaurentPoly one = poly({{0, 1}});

    c.entries.push_back(knot_entry("unknot", horizontal_twists(0), 'D',
                                   make_fraction(0, 1), true, one));
    c.entries.push_back(knot_entry("3_1", rational_tangle(3, 2), 'N',
                                   make_fraction(3, 2), true, d31));
    c.entries.push_back(knot_entry("4_1", rational_tangle(5, 2), 'N',
                                   make_fraction(5, 2), true, d41));
    c.entries.push_back(knot_entry("5_1", rational_tangle(5, 4), 'N',
                                   make_fraction(5, 4), true, d51));
    c.entries.push_back(knot_entry("5_2", rational_tangle(7, 4), 'N',
                                   make_fraction(7, 4), false, d52));

    c.entries.push_back(partial_entry("unknotD", horizontal_twists(0), make_fraction(0, 1), one));
    c.entries.push_back(partial_entry("3_1D", rational_tangle(2, 3), make_fraction(2, 3), d31));
    c.entries.push_back(partial_entry("4_1D", rational_tangle(2, 5), make_fraction(2, 5), d41));
    c.entries.push_back(partial_entry("5_2D", rational_tangle(4, 7), make_fraction(4, 7), d52));
    // 4-crossing unknot diagram: two opposite clasps
    c.entries.push_back(partial_entry(
        "ktD", tangle_sum(horizontal_twists(2), horizontal_twists(-2)), std::nullopt, one));

    {
        CatalogEntry e;
        e.name = "sym3_1T";
        e.kind = EntryKind::Symmetric;
        Tangle t31 = rational_tangle(2, 3);
        e.tangle = tangle_sum(t31, reflect_switch(t31));
        e.delta = lp_mul(d31, d31);
        c.entries.push_back(std::move(e));
    }
    return c;
}

std::vector<std::string> verify_catalog(const Catalog& c) {
    std::vector<std::string> fails;
    auto complain = [&](const std::string& name, const std::string& what) {
        fails.push_back(name + ": " + what);
    };
    for (const CatalogEntry& e : c.entries) {
        try {
            validate_tangle(e.tangle);
            switch (e.kind) {
                case EntryKind::Knot: {
                    ClosedDiagram d = e.closure == 'N' ? numerator_closure(e.tangle)
                                                       : denominator_closure(e.tangle);
                    if (component_count(d) != 1) {
                        complain(e.name, "closure is not a knot");
                        break;
                    }
                    if (alexander_polynomial(d) != e.delta)
                        complain(e.name, "Alexander polynomial mismatch");
                    if (e.fibered && lp_is_monic(e.delta) != *e.fibered)
                        complain(e.name, "fibered flag contradicts monicity");
                    break;
                }
                case EntryKind::Partial: {
                    ClosedDiagram d = denominator_closure(e.tangle);
                    if (component_count(d) != 1) {
                        complain(e.name, "denominator closure is not a knot");
                        break;
                    }
                    if (alexander_polynomial(d) != e.delta)
                        complain(e.name, "Alexander polynomial mismatch");
                    break;
                }
                case EntryKind::Symmetric: {
                    if (!first_elementary_ideal_vanishes(numerator_closure(e.tangle)))
                        complain(e.name, "numerator closure ideal does not vanish");
                    if (alexander_polynomial(denominator_closure(e.tangle)) != e.delta)
                        complain(e.name, "Alexander polynomial mismatch");
                    break;
                }
            }
            // An even-denominator fraction has a unique all-even expansion;
            // after the leading zero, entries all of size 2 mean fibered.
            if (e.fraction && e.fibered && e.fraction->den % 2 == 0) {
                auto seq = even_continued_fraction(e.fraction->num, e.fraction->den);
                bool all_two = true;
                for (std::size_t i = 0; i < seq.size(); ++i) {
                    if (i == 0 && seq[i] == 0) continue;
                    if (seq[i] != 2 && seq[i] != -2) all_two = false;
                }
                if (all_two != *e.fibered)
                    complain(e.name, "fibered flag contradicts the even expansion");
            }
        } catch (const std::exception& ex) {
            complain(e.name, std::string("exception: ") + ex.what());
        }
    }
    return fails;
}

namespace {

std::string kind_name(EntryKind k) {
    switch (k) {
        case EntryKind::Knot: return "knot";
        case EntryKind::Partial: return "partial";
        default: return "symmetric";
    }
}

std::string delta_line(const LaurentPoly& p) {
    std::ostringstream os;
    os << "delta";
    if (p.empty()) os << " 0:0";
    for (const auto& [e, c] : p) os << " " << e << ":" << c.str();
    return os.str();
}

}  // namespace

std::string serialize_catalog(const Catalog& c) {
    std::ostringstream os;
    os << "# tangle catalog: named tangles with reference invariants\n";
    for (const CatalogEntry& e : c.entries) {
        os << "\nentry " << e.name << "\n";
        os << "kind " << kind_name(e.kind) << "\n";
        if (e.kind == EntryKind::Knot) os << "closure " << e.closure << "\n";
        if (e.fraction) os << "fraction " << e.fraction->num << "/" << e.fraction->den << "\n";
        if (e.fibered) os << "fibered " << (*e.fibered ? "true" : "false") << "\n";
        os << delta_line(e.delta) << "\n";
        os << serialize_tangle(e.tangle);
        os << "end\n";
    }
    return os.str();
}

Catalog parse_catalog(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    Catalog cat;
    CatalogEntry cur;
    bool in_entry = false, have_delta = false, have_tangle = false;
    std::string tangle_block;
    int tangle_lines_left = -1;

    auto fail = [&](const std::string& msg) {
        throw CatalogError("line " + std::to_string(lineno) + ": " + msg);
    };

    while (std::getline(is, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;

        if (tangle_lines_left > 0) {
            tangle_block += line + "\n";
            --tangle_lines_left;
            if (tangle_lines_left == 0) {
                try {
                    cur.tangle = parse_tangle(tangle_block);
                } catch (const TangleError& e) {
                    fail(e.what());
                }
                have_tangle = true;
            }
            continue;
        }

        if (key == "entry") {
            if (in_entry) fail("entry without end");
            cur = CatalogEntry{};
            if (!(ls >> cur.name)) fail("entry needs a name");
            in_entry = true;
            have_delta = have_tangle = false;
        } else if (!in_entry) {
            fail("expected 'entry'");
        } else if (key == "kind") {
            std::string k;
            ls >> k;
            if (k == "knot") cur.kind = EntryKind::Knot;
            else if (k == "partial") cur.kind = EntryKind::Partial;
            else if (k == "symmetric") cur.kind = EntryKind::Symmetric;
            else fail("unknown kind '" + k + "'");
        } else if (key == "closure") {
            std::string v;
            ls >> v;
            if (v != "N" && v != "D") fail("closure must be N or D");
            cur.closure = v[0];
        } else if (key == "fraction") {
            std::string v;
            ls >> v;
            auto slash = v.find('/');
            if (slash == std::string::npos) fail("fraction must be p/q");
            try {
                cur.fraction = make_fraction(std::stoll(v.substr(0, slash)),
                                             std::stoll(v.substr(slash + 1)));
            } catch (const std::exception&) {
                fail("bad fraction");
            }
        } else if (key == "fibered") {
            std::string v;
            ls >> v;
            if (v == "true") cur.fibered = true;
            else if (v == "false") cur.fibered = false;
            else fail("fibered must be true or false");
        } else if (key == "delta") {
            LaurentPoly p;
            std::string pair;
            while (ls >> pair) {
                auto colon = pair.find(':');
                if (colon == std::string::npos) fail("delta needs exp:coeff pairs");
                try {
                    int exp = std::stoi(pair.substr(0, colon));
                    Integer coeff(pair.substr(colon + 1));
                    lp_set(p, exp, coeff);
                } catch (const std::exception&) {
                    fail("bad delta pair '" + pair + "'");
                }
            }
            cur.delta = std::move(p);
            have_delta = true;
        } else if (key == "tangle") {
            int n = 0, m = 0;
            if (!(ls >> n >> m)) fail("tangle needs crossing and edge counts");
            tangle_block = line + "\n";
            tangle_lines_left = n + 1;  // crossing lines plus boundary line
            if (n == 0) {
                // nothing but the boundary line follows; handled by counter
            }
        } else if (key == "end") {
            if (!have_delta || !have_tangle) fail("entry missing delta or tangle");
            if (cat.find(cur.name)) fail("duplicate entry '" + cur.name + "'");
            cat.entries.push_back(cur);
            in_entry = false;
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (in_entry) throw CatalogError("unterminated entry '" + cur.name + "'");
    return cat;
}

Catalog load_catalog(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CatalogError("cannot open catalog file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_catalog(ss.str());
}

}  // namespace symun
