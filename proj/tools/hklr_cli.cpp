/*
 * hklr command line driver.
 *
 * Subcommands:
 *   verify-relations   presentation relation sweep for one (type, e, seed)
 *   orbit              residue-orbit listing
 *   cyclotomic         cyclotomic quotient isomorphism checks
 *
 * Reports are deterministic JSON documents with a schema version field.
 * Exit codes: 0 pass, 1 mathematical failure, 2 usage error,
 * 3 inconclusive (budget exhausted).
 */
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hklr/cyclotomic.hpp>
#include <hklr/klr.hpp>

using nlohmann::ordered_json;
using namespace hklr;

namespace {

constexpr const char* kSchema = "hklr-report/1";

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- shared option plumbing ------------------------------------------------

struct CommonOpts {
    std::string type;
    std::string diagram_file;
    long e = 0;
    std::string flavor = "degenerate";
    std::string q_mode = "transcendental";
    std::string seed;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_flavor) {
    cmd->add_option("--type", o.type, "Cartan type (A1, A1xA1, A2, B2, G2, An)");
    cmd->add_option("--diagram-file", o.diagram_file,
                    "JSON file with {\"name\":..., \"matrix\":[[...]]}");
    cmd->add_option("--e", o.e, "quantum characteristic (0 or >= 2)")->required();
    if (with_flavor) {
        cmd->add_option("--flavor", o.flavor, "degenerate | nondegenerate");
        cmd->add_option("--q-mode", o.q_mode,
                        "transcendental | cyclotomic | prime:p[:q]");
    }
    cmd->add_option("--seed", o.seed, "comma-separated residue tuple")->required();
    cmd->add_option("--out", o.out, "write the JSON report to this file");
}

Cartan parse_cartan(const CommonOpts& o) {
    if (o.type.empty() == o.diagram_file.empty())
        throw UsageError("exactly one of --type and --diagram-file is required");
    if (!o.type.empty()) {
        try {
            return Cartan::by_name(o.type);
        } catch (const std::exception& ex) {
            throw UsageError(ex.what());
        }
    }
    std::ifstream in(o.diagram_file);
    if (!in) throw UsageError("cannot open diagram file " + o.diagram_file);
    try {
        auto doc = nlohmann::json::parse(in);
        Cartan c;
        c.name = doc.value("name", "custom");
        for (const auto& row : doc.at("matrix"))
            c.a.push_back(row.get<std::vector<int>>());
        c.validate();
        return c;
    } catch (const std::exception& ex) {
        throw UsageError(std::string("bad diagram file: ") + ex.what());
    }
}

long check_e(long e) {
    if (e < 0 || e == 1) throw UsageError("e must be 0 or >= 2");
    return e;
}

std::vector<long> parse_seed(const std::string& s, int rank) {
    std::vector<long> v;
    std::string cur;
    for (std::istringstream is(s); std::getline(is, cur, ',');) {
        try {
            v.push_back(std::stol(cur));
        } catch (const std::exception&) {
            throw UsageError("bad seed entry '" + cur + "'");
        }
    }
    if (static_cast<int>(v.size()) != rank)
        throw UsageError("seed length " + std::to_string(v.size()) +
                         " does not match the rank " + std::to_string(rank));
    return v;
}

Flavor parse_flavor(const std::string& s) {
    if (s == "degenerate") return Flavor::Degenerate;
    if (s == "nondegenerate") return Flavor::NonDegenerate;
    throw UsageError("flavor must be degenerate or nondegenerate");
}

// Scalar field selection from (flavor, q-mode, e).
FieldRef parse_field(Flavor fl, const std::string& q_mode, long e) {
    if (q_mode == "transcendental") {
        // Degenerate checks are q-free; non-degenerate ones carry q as an
        // extra action-invariant transcendental over Q.  Both run over the
        // rational scalar field.
        return FieldContext::rational();
    }
    if (q_mode == "cyclotomic") {
        if (fl == Flavor::Degenerate)
            throw UsageError("q-mode cyclotomic applies to the nondegenerate flavor");
        if (e < 2) throw UsageError("q-mode cyclotomic needs e >= 2");
        return FieldContext::cyclotomic_q(static_cast<unsigned>(e));
    }
    if (q_mode.rfind("prime:", 0) == 0) {
        std::vector<std::uint64_t> parts;
        std::string cur;
        for (std::istringstream is(q_mode.substr(6)); std::getline(is, cur, ':');) {
            try {
                parts.push_back(std::stoull(cur));
            } catch (const std::exception&) {
                throw UsageError("bad prime q-mode entry '" + cur + "'");
            }
        }
        if (parts.empty() || parts.size() > 2)
            throw UsageError("q-mode prime takes prime:p or prime:p:q");
        std::uint64_t p = parts[0], q0 = parts.size() == 2 ? parts[1] : 1;
        try {
            return FieldContext::prime_field(p, q0);
        } catch (const std::exception& ex) {
            throw UsageError(ex.what());
        }
    }
    throw UsageError("q-mode must be transcendental, cyclotomic, or prime:p[:q]");
}

// "1-10", "7", "1,3,8-9" -> sorted unique list within 1..10.
std::vector<int> parse_relations(const std::string& s) {
    std::set<int> out;
    std::string tok;
    for (std::istringstream is(s); std::getline(is, tok, ',');) {
        size_t dash = tok.find('-');
        try {
            int lo, hi;
            if (dash == std::string::npos) {
                lo = hi = std::stoi(tok);
            } else {
                lo = std::stoi(tok.substr(0, dash));
                hi = std::stoi(tok.substr(dash + 1));
            }
            if (lo < 1 || hi > 10 || lo > hi) throw std::out_of_range("range");
            for (int r = lo; r <= hi; ++r) out.insert(r);
        } catch (const std::exception&) {
            throw UsageError("bad relation selection '" + tok + "' (use e.g. 1-10)");
        }
    }
    if (out.empty()) throw UsageError("empty relation selection");
    return {out.begin(), out.end()};
}

CyclotomicWeight parse_lambda(const std::string& s) {
    CyclotomicWeight lam;
    std::string tok;
    for (std::istringstream is(s); std::getline(is, tok, ',');) {
        size_t colon = tok.find(':');
        try {
            if (colon == std::string::npos) throw std::invalid_argument("colon");
            long i = std::stol(tok.substr(0, colon));
            int mult = std::stoi(tok.substr(colon + 1));
            if (mult <= 0) throw std::out_of_range("mult");
            lam[i] += mult;
        } catch (const std::exception&) {
            throw UsageError("bad lambda entry '" + tok + "' (use i:mult,...)");
        }
    }
    if (lam.empty()) throw UsageError("lambda must list at least one i:mult pair");
    return lam;
}

int emit(const ordered_json& doc, const std::string& out, int code) {
    std::string text = doc.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out, std::ios::binary);
        if (!os) throw UsageError("cannot write " + out);
        os << text;
    }
    return code;
}

ordered_json seed_json(const std::vector<long>& seed) {
    return ordered_json(seed);
}

// ---- subcommands -----------------------------------------------------------

int cmd_verify_relations(const CommonOpts& o, const std::string& relsel) {
    Cartan cart = parse_cartan(o);
    check_e(o.e);
    Flavor fl = parse_flavor(o.flavor);
    FieldRef F = parse_field(fl, o.q_mode, o.e);
    std::vector<long> seed = parse_seed(o.seed, cart.rank());
    std::vector<int> rels = parse_relations(relsel);

    WeylGroup g(cart);
    ResVec sv(seed.begin(), seed.end());
    LusztigAlgebra a(g, fl, LEngine::Theta, F, o.e, sv);
    TheoremReport rep = verify_theorem(a, rels);

    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"relation", row.relation},
                        {"r", row.r},
                        {"s", row.s},
                        {"residue", ordered_json(row.residue)},
                        {"ok", row.ok},
                        {"detail", row.detail}});
    ordered_json doc = {{"schema", kSchema},
                        {"command", "verify-relations"},
                        {"type", cart.name},
                        {"e", o.e},
                        {"flavor", o.flavor},
                        {"q_mode", o.q_mode},
                        {"seed", seed_json(seed)},
                        {"relations", rels},
                        {"orbit_size", a.orbit_size()},
                        {"note", rep.note},
                        {"rows", rows},
                        {"ok", rep.ok}};
    return emit(doc, o.out, rep.ok ? kExitPass : kExitFail);
}

int cmd_orbit(const CommonOpts& o) {
    Cartan cart = parse_cartan(o);
    check_e(o.e);
    std::vector<long> seed = parse_seed(o.seed, cart.rank());

    WeylGroup g(cart);
    ResidueSystem rs(g, o.e);
    ResVec sv(seed.begin(), seed.end());
    std::vector<ResVec> orbit = rs.orbit(sv);

    ordered_json tuples = ordered_json::array();
    for (const auto& t : orbit) tuples.push_back(ordered_json(t));
    ordered_json doc = {{"schema", kSchema},
                        {"command", "orbit"},
                        {"type", cart.name},
                        {"e", o.e},
                        {"seed", seed_json(seed)},
                        {"size", orbit.size()},
                        {"orbit", tuples}};
    return emit(doc, o.out, kExitPass);
}

int cmd_cyclotomic(const CommonOpts& o, const std::string& lamstr, int budget_degree,
                   long budget_span) {
    Cartan cart = parse_cartan(o);
    check_e(o.e);
    Flavor fl = parse_flavor(o.flavor);
    std::vector<long> seed = parse_seed(o.seed, cart.rank());
    CyclotomicWeight lam = parse_lambda(lamstr);
    if (budget_degree < 1) throw UsageError("--budget-degree must be positive");
    if (budget_span < 1) throw UsageError("--budget-span must be positive");

    // Scalar field: degenerate quotients at e > 0 live over F_e; the
    // non-degenerate ones need a field where q is a primitive e-th root
    // (cyclotomic or prime q-mode).
    FieldRef F;
    if (o.q_mode == "transcendental") {
        if (fl == Flavor::Degenerate) {
            F = o.e == 0 ? FieldContext::rational()
                         : FieldContext::prime_field(static_cast<std::uint64_t>(o.e));
        } else {
            if (o.e < 2)
                throw UsageError(
                    "nondegenerate cyclotomic checks need e >= 2 "
                    "(q-mode cyclotomic or prime:p:q)");
            F = FieldContext::cyclotomic_q(static_cast<unsigned>(o.e));
        }
    } else {
        F = parse_field(fl, o.q_mode, o.e);
    }

    CycBudget budget;
    budget.max_degree = budget_degree;
    budget.max_span = static_cast<std::size_t>(budget_span);

    ResVec sv(seed.begin(), seed.end());
    CycReport rep = verify_iso(cart, fl, F, o.e, sv, lam, budget);

    ordered_json rows = ordered_json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"name", row.name}, {"ok", row.ok}, {"detail", row.detail}});
    ordered_json dims = ordered_json::object();
    for (const auto& [k, v] : rep.dims) dims[k] = v;
    ordered_json nil = ordered_json::object();
    for (const auto& [k, v] : rep.nilpotency) nil[k] = v;
    ordered_json lamj = ordered_json::array();
    for (const auto& [i, mult] : lam) lamj.push_back({{"i", i}, {"mult", mult}});

    std::string status = rep.status == VerifyStatus::Pass
                             ? "pass"
                             : (rep.status == VerifyStatus::Fail ? "fail"
                                                                 : "inconclusive");
    ordered_json doc = {{"schema", kSchema},
                        {"command", "cyclotomic"},
                        {"type", cart.name},
                        {"e", o.e},
                        {"flavor", o.flavor},
                        {"q_mode", o.q_mode},
                        {"seed", seed_json(seed)},
                        {"lambda", lamj},
                        {"budget", {{"degree", budget_degree}, {"span", budget_span}}},
                        {"dims", dims},
                        {"nilpotency", nil},
                        {"rows", rows},
                        {"status", status}};
    int code = rep.status == VerifyStatus::Pass
                   ? kExitPass
                   : (rep.status == VerifyStatus::Fail ? kExitFail : kExitInconclusive);
    return emit(doc, o.out, code);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for affine Hecke / KLR-type presentations"};
    app.require_subcommand(1);

    CommonOpts vo, oo, co;
    std::string relsel = "1-10";
    std::string lamstr;
    int budget_degree = 8;
    long budget_span = 20000;

    CLI::App* vr = app.add_subcommand("verify-relations",
                                      "verify the presentation relation tables");
    add_common(vr, vo, /*with_flavor=*/true);
    vr->add_option("--relations", relsel, "selection, e.g. 1-10 or 7,8");

    CLI::App* orb = app.add_subcommand("orbit", "list a residue orbit");
    add_common(orb, oo, /*with_flavor=*/false);

    CLI::App* cy = app.add_subcommand("cyclotomic",
                                      "verify cyclotomic quotient isomorphisms");
    add_common(cy, co, /*with_flavor=*/true);
    cy->add_option("--lambda", lamstr, "weight as i:mult,i:mult,...")->required();
    cy->add_option("--budget-degree", budget_degree, "truncation degree budget");
    cy->add_option("--budget-span", budget_span, "spanning-set size budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kExitUsage;
    }

    try {
        if (vr->parsed()) return cmd_verify_relations(vo, relsel);
        if (orb->parsed()) return cmd_orbit(oo);
        return cmd_cyclotomic(co, lamstr, budget_degree, budget_span);
    } catch (const UsageError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitFail;
    }
}
