#include "novikov/acceptance.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace novikov;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Failed = 1, Usage = 2 };

struct Config {
    std::string format = "text";
    std::uint64_t seed = 1;
    int digits = 120;
    std::vector<std::string> loads;
    std::vector<std::string> params;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Catalog& catalog(const Config& cfg) {
    static Catalog cat = [&] {
        Catalog c = Catalog::builtin();
        for (const auto& path : cfg.loads) c.load_file(path);
        return c;
    }();
    return cat;
}

GaussRational constant_of(const std::string& text) {
    auto f = simplify(parse_expr(text)).as_rational_function();
    if (!f || !f->is_constant()) throw UsageError("parameter value must be a constant: " + text);
    return f->constant_value();
}

Assignment parse_params(const std::vector<std::string>& kvs) {
    Assignment at;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("expected key=value, got '" + kv + "'");
        at[Symbol(kv.substr(0, eq))] = constant_of(kv.substr(eq + 1));
    }
    return at;
}

// NAME from the catalog, or a JSON file holding one algebra.
Algebra resolve(const Config& cfg, const std::string& what) {
    Assignment at = parse_params(cfg.params);
    if (std::filesystem::is_regular_file(what)) {
        std::ifstream in(what);
        json doc = json::parse(in);
        if (doc.contains("algebras")) doc = doc.at("algebras").at(0);
        Algebra a = algebra_from_json(doc);
        return at.empty() ? a : a.instantiate(at);
    }
    const CatalogEntry& e = catalog(cfg).entry(what);
    if (at.empty()) return e.algebra;
    bool complete = std::all_of(e.family_params().begin(), e.family_params().end(),
                                [&](Symbol p) { return at.count(p) > 0; });
    if (complete) return catalog(cfg).get(e.name, at);
    std::map<Symbol, ScalarExpr> partial;
    for (const auto& [s, v] : at) partial.emplace(s, ScalarExpr(v));
    return catalog(cfg).get_symbolic(e.name, partial);
}

void emit(const Config& cfg, const json& j, const std::string& text) {
    if (cfg.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string yes(bool b) { return b ? "true" : "false"; }

json profile_json(const Algebra& a) {
    json j = algebra_to_json(a);
    j["profile"] = invariant_profile(a).to_json();
    return j;
}

std::string vec_string(const RFVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

int cmd_catalog_list(const Config& cfg, std::optional<int> dim, const std::string& group, bool all) {
    ListFilter f;
    f.dim = dim;
    f.include_aux = all;
    if (!group.empty()) f.group = group;
    json j = json::array();
    std::ostringstream os;
    for (const CatalogEntry* e : catalog(cfg).list(f)) {
        std::string params;
        for (Symbol p : e->family_params()) params += (params.empty() ? "" : ",") + p.name();
        j.push_back({{"name", e->name}, {"dim", e->algebra.dim()}, {"group", e->group}, {"params", params},
                     {"source", e->source_ref}});
        os << e->name << (params.empty() ? "" : "(" + params + ")") << "  dim " << e->algebra.dim() << "  "
           << e->group << "  " << e->algebra.products_string() << "\n";
    }
    emit(cfg, j, os.str());
    return Ok;
}

int cmd_catalog_show(const Config& cfg, const std::string& name) {
    const CatalogEntry& e = catalog(cfg).entry(name);
    Algebra a = resolve(cfg, e.name);
    json j = algebra_to_json(a);
    j["label"] = e.label;
    j["group"] = e.group;
    j["source"] = e.source_ref;
    j["purity_expected"] = e.purity_expected;
    std::ostringstream os;
    os << e.name << " (" << e.source_ref << ")\n  dim " << a.dim() << "\n  products " << a.products_string() << "\n";
    if (!a.params().empty()) {
        os << "  parameters";
        for (Symbol p : a.params()) os << " " << p.name();
        os << "\n";
    }
    for (const auto& c : a.constraints()) os << "  nonzero " << c.to_string() << "\n";
    emit(cfg, j, os.str());
    return Ok;
}

int cmd_check(const Config& cfg, const std::string& what) {
    Algebra a = resolve(cfg, what);
    InvariantProfile p = invariant_profile(a);
    RFMatrix ann = annihilator_basis(a);
    json j = algebra_to_json(a);
    j["profile"] = p.to_json();
    j["annihilator"] = json::array();
    for (const auto& v : ann) {
        json row = json::array();
        for (const auto& x : v) row.push_back(x.to_string());
        j["annihilator"].push_back(row);
    }
    std::ostringstream os;
    os << a.name() << "\n  right-commutative " << yes(p.flags.right_commutative) << "\n  left-symmetric "
       << yes(p.flags.left_symmetric) << "\n  Novikov " << yes(p.flags.novikov) << "\n  two-step "
       << yes(p.flags.two_step) << "\n  nilpotency index "
       << (p.nilpotency_index ? std::to_string(*p.nilpotency_index) : std::string("none")) << "\n  annihilator";
    for (const auto& v : ann) os << " " << vec_string(v);
    os << "\n  profile " << p.to_string() << "\n";
    emit(cfg, j, os.str());
    return p.flags.novikov && p.nilpotency_index ? Ok : Failed;
}

int cmd_cohomology(const Config& cfg, const std::string& name, bool golden) {
    Algebra a = resolve(cfg, name);
    CocycleSpace cs = cocycle_space(a);
    int n = a.dim();
    auto list = [&](const RFMatrix& m) {
        json arr = json::array();
        for (const auto& v : m) arr.push_back(Cocycle::from_vector(n, v).to_string());
        return arr;
    };
    json j = {{"algebra", a.name()},
              {"z2", cs.z2.size()},
              {"b2", cs.b2.size()},
              {"h2", cs.h2.size()},
              {"z2_basis", list(cs.z2)},
              {"b2_basis", list(cs.b2)},
              {"h2_representatives", list(cs.h2)}};
    std::ostringstream os;
    os << a.name() << ": Z2=" << cs.z2.size() << " B2=" << cs.b2.size() << " H2=" << cs.h2.size() << "\n";
    os << "  Z2 " << list(cs.z2).dump() << "\n  B2 " << list(cs.b2).dump() << "\n  H2 " << list(cs.h2).dump() << "\n";
    int code = Ok;
    if (golden) {
        const auto& gs = catalog(cfg).golden_cohomology();
        const std::string canon = catalog(cfg).entry(name).name;
        auto it = std::find_if(gs.begin(), gs.end(), [&](const GoldenCohomology& g) { return g.algebra == canon; });
        if (it == gs.end()) throw UsageError("no golden cohomology row for " + canon);
        GoldenCheck g = check_golden(catalog(cfg), *it);
        j["golden"] = {{"pass", g.pass}, {"detail", g.detail}};
        os << "  golden " << (g.pass ? "PASS" : "FAIL") << " " << g.detail << "\n";
        if (!g.pass) code = Failed;
    }
    emit(cfg, j, os.str());
    return code;
}

std::vector<Cocycle> read_cocycles(int n, const std::string& arg) {
    std::vector<Cocycle> out;
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
            json doc = json::parse(text);
            if (doc.is_object() && doc.contains("cocycles")) {
                for (const auto& c : doc.at("cocycles")) {
                    out.push_back(c.is_string() ? parse_cocycle(n, c.get<std::string>()) : cocycle_from_json(n, c));
                }
            } else if (doc.is_object() && doc.contains("cocycle")) {
                const auto& c = doc.at("cocycle");
                out.push_back(c.is_string() ? parse_cocycle(n, c.get<std::string>()) : cocycle_from_json(n, c));
            } else {
                out.push_back(cocycle_from_json(n, doc));
            }
            return out;
        }
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(parse_cocycle(n, line));
        }
        return out;
    }
    std::stringstream ss(arg);
    std::string part;
    while (std::getline(ss, part, ';')) out.push_back(parse_cocycle(n, part));
    return out;
}

int cmd_extend(const Config& cfg, const std::string& name, const std::string& cocycle, int s) {
    Algebra a = resolve(cfg, name);
    std::vector<Cocycle> thetas = read_cocycles(a.dim(), cocycle);
    if (static_cast<int>(thetas.size()) != s) {
        throw UsageError("expected " + std::to_string(s) + " cocycles, got " + std::to_string(thetas.size()));
    }
    for (const auto& th : thetas) {
        if (!is_cocycle(a, th)) {
            emit(cfg, {{"algebra", a.name()}, {"cocycle", th.to_string()}, {"is_cocycle", false}},
                 th.to_string() + " is not a cocycle of " + a.name() + "\n");
            return Failed;
        }
    }
    bool trivial = has_trivial_intersection(a, thetas);
    Extension ext = central_extension(a, thetas);
    json j = profile_json(ext.result);
    j["trivial_intersection"] = trivial;
    std::ostringstream os;
    os << ext.result.name() << ": " << ext.result.products_string() << "\n  Ann(A) meets Ann(theta) trivially: "
       << yes(trivial) << "\n  profile " << invariant_profile(ext.result).to_string() << "\n";
    emit(cfg, j, os.str());
    return Ok;
}

int cmd_split(const Config& cfg, const std::string& name, const std::string& subspace) {
    Algebra a = resolve(cfg, name);
    int n = a.dim();
    RFMatrix w;
    std::stringstream ss(subspace);
    std::string part;
    while (std::getline(ss, part, ',')) {
        ScalarExpr e = parse_expr(part);
        RFVector v(n);
        std::map<Symbol, ScalarExpr> zero;
        for (int i = 0; i < n; ++i) zero.emplace(Symbol("e" + std::to_string(i + 1)), ScalarExpr(0L));
        for (Symbol s : e.symbols()) {
            if (!zero.count(s)) throw UsageError("unknown basis symbol '" + s.name() + "' in subspace");
        }
        for (int i = 0; i < n; ++i) {
            auto vals = zero;
            vals[Symbol("e" + std::to_string(i + 1))] = ScalarExpr(1L);
            auto f = simplify(substitute(e, vals)).as_rational_function();
            auto f0 = simplify(substitute(e, zero)).as_rational_function();
            if (!f || !f0 || !f0->is_zero()) throw UsageError("subspace vectors must be linear in e1..e" + std::to_string(n));
            v[i] = *f;
        }
        w.push_back(std::move(v));
    }
    Split sp;
    try {
        sp = split_central_extension(a, w);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Extension back = central_extension(sp.quotient, sp.cocycles);
    bool roundtrip = back.result.same_constants(sp.relabeled) &&
                     change_basis(back.result, inverse(sp.basis)).same_constants(a);
    json j;
    j["quotient"] = algebra_to_json(sp.quotient);
    j["cocycles"] = json::array();
    for (const auto& c : sp.cocycles) j["cocycles"].push_back(c.to_string());
    j["roundtrip"] = roundtrip;
    std::ostringstream os;
    os << "quotient: " << (sp.quotient.constants().empty() ? std::string("zero product") : sp.quotient.products_string())
       << "\n";
    for (std::size_t k = 0; k < sp.cocycles.size(); ++k) os << "theta" << k + 1 << " = " << sp.cocycles[k].to_string() << "\n";
    os << "roundtrip " << (roundtrip ? "PASS" : "FAIL") << "\n";
    emit(cfg, j, os.str());
    return roundtrip ? Ok : Failed;
}

int cmd_derivations(const Config& cfg, const std::string& name) {
    Algebra a = resolve(cfg, name);
    int d = derivation_dim(a);
    emit(cfg, {{"algebra", a.name()}, {"dim_der", d}}, std::to_string(d) + "\n");
    return Ok;
}

NumericOptions numeric_options(const Config& cfg, const std::string& schedule) {
    NumericOptions o;
    o.digits = cfg.digits;
    o.seed = cfg.seed;
    if (!schedule.empty()) {
        std::stringstream ss(schedule);
        std::string part;
        while (std::getline(ss, part, ',')) {
            GaussRational v = constant_of(part);
            if (!v.is_real() || sgn(v.re()) <= 0) throw UsageError("schedule values must be positive rationals");
            o.schedule.push_back(v.re());
        }
    }
    return o;
}

int cmd_degenerate(const Config& cfg, const std::string& row, bool all, const std::string& file,
                   const std::string& schedule, const std::string& tier) {
    std::vector<DegenerationWitness> rows;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open " + file);
        json doc = json::parse(in);
        if (doc.is_object() && doc.contains("table_b")) doc = doc.at("table_b");
        if (doc.is_array()) {
            for (const auto& j : doc) rows.push_back(degeneration_witness_from_json(j));
        } else {
            rows.push_back(degeneration_witness_from_json(doc));
        }
    } else if (all) {
        rows = table_b();
    } else {
        for (const auto& w : table_b()) {
            if (w.id == row) rows.push_back(w);
        }
        if (rows.empty()) throw UsageError("unknown row '" + row + "'");
    }
    if (!tier.empty() && tier != "auto") {
        for (auto& w : rows) w.tier = tier == "exact" ? Tier::Exact : Tier::Numeric;
    }
    auto outcomes = verify_rows(catalog(cfg), rows, numeric_options(cfg, schedule));
    json j = json::array();
    std::ostringstream os;
    bool ok = true;
    for (const auto& r : outcomes) {
        j.push_back(r.to_json());
        os << r.literal.summary() << "\n";
        if (r.fallback) os << "  " << r.fallback->summary() << "\n";
        if (r.erratum) os << "  " << r.erratum->summary() << "\n";
        std::string st = r.status();
        ok = ok && (st == "pass" || st == "fallback pass");
    }
    emit(cfg, {{"seed", cfg.seed}, {"digits", cfg.digits}, {"rows", j}}, os.str());
    return ok ? Ok : Failed;
}

int cmd_graph(const Config& cfg, const std::string& dot_path) {
    auto outcomes = verify_rows(catalog(cfg), table_b(), numeric_options(cfg, ""));
    ReachabilityReport g = build_reachability(verified_edges(outcomes), reachability_families(catalog(cfg)));
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        out << g.to_dot();
    }
    json j = g.to_json();
    j["dot"] = g.to_dot();
    std::ostringstream os;
    for (const auto& f : g.families) {
        auto it = g.paths.find(f);
        os << f << ": ";
        if (it == g.paths.end()) {
            os << "unreachable\n";
            continue;
        }
        if (it->second.empty()) {
            os << "source\n";
            continue;
        }
        os << it->second.front().from;
        for (const auto& e : it->second) os << " -> " << e.to << (e.via == "literal" ? "" : " [" + e.via + "]");
        os << "\n";
    }
    os << "proper edges into the sources: " << g.edges_into_sources.size() << "\n";
    if (dot_path.empty()) os << "\n" << g.to_dot();
    emit(cfg, j, os.str());
    return g.all_reachable() && g.edges_into_sources.empty() ? Ok : Failed;
}

int cmd_report(const Config& cfg, bool verbose) {
    AcceptanceOptions o;
    o.seed = cfg.seed;
    o.numeric = numeric_options(cfg, "");
    Acceptance acc(o, catalog(cfg));
    auto results = acc.run_all();
    json j = json::array();
    std::ostringstream os;
    bool ok = true;
    for (const auto& r : results) {
        j.push_back(r.to_json());
        os << r.line() << "\n";
        if (verbose || !r.pass) {
            for (const auto& d : r.details) os << "    " << d << "\n";
        }
        ok = ok && r.pass;
    }
    emit(cfg, {{"seed", cfg.seed}, {"criteria", j}}, os.str());
    return ok ? Ok : Failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nilpotent Novikov algebras: catalog, cohomology, extensions and degenerations"};
    app.require_subcommand(1);
    Config cfg;
    if (const char* d = std::getenv("NOVIKOV_DIGITS")) cfg.digits = std::atoi(d);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "Sampling seed");
    app.add_option("--load", cfg.loads, "Additional algebra or witness JSON files");

    std::function<int()> action;

    auto* cat = app.add_subcommand("catalog", "List or show catalog algebras");
    cat->require_subcommand(1);
    auto* list = cat->add_subcommand("list", "List algebras");
    std::optional<int> dim;
    std::string group;
    bool all = false;
    list->add_option("--dim", dim);
    list->add_option("--group", group, "pure4, lowdim, trivial4, aux, user");
    list->add_flag("--all", all, "Include auxiliary algebras");
    list->callback([&] { action = [&] { return cmd_catalog_list(cfg, dim, group, all); }; });
    auto* show = cat->add_subcommand("show", "Show one algebra");
    std::string name;
    show->add_option("name", name)->required();
    show->add_option("--param", cfg.params, "k=v");
    show->callback([&] { action = [&] { return cmd_catalog_show(cfg, name); }; });

    auto* check = app.add_subcommand("check", "Identities, nilpotency, annihilator, invariant profile");
    check->add_option("algebra", name, "Catalog name or JSON file")->required();
    check->add_option("--param", cfg.params, "k=v");
    check->callback([&] { action = [&] { return cmd_check(cfg, name); }; });

    auto* coh = app.add_subcommand("cohomology", "Z2, B2, H2");
    bool golden = false;
    coh->add_option("algebra", name)->required();
    coh->add_option("--param", cfg.params, "k=v");
    coh->add_flag("--golden", golden, "Compare against the shipped table");
    coh->callback([&] { action = [&] { return cmd_cohomology(cfg, name, golden); }; });

    auto* ext = app.add_subcommand("extend", "Central extension by cocycles");
    std::string cocycle;
    int s = 1;
    ext->add_option("algebra", name)->required();
    ext->add_option("--cocycle", cocycle, "File or expression; separate several with ';'")->required();
    ext->add_option("--s", s, "Number of cocycles");
    ext->add_option("--param", cfg.params, "k=v");
    ext->callback([&] { action = [&] { return cmd_extend(cfg, name, cocycle, s); }; });

    auto* split = app.add_subcommand("split", "Split off an annihilator subspace and re-extend");
    std::string subspace;
    split->add_option("algebra", name)->required();
    split->add_option("--subspace", subspace, "Comma separated vectors, e.g. e4 or e3+e4")->required();
    split->add_option("--param", cfg.params, "k=v");
    split->callback([&] { action = [&] { return cmd_split(cfg, name, subspace); }; });

    auto* der = app.add_subcommand("derivations", "dim Der");
    der->add_option("algebra", name)->required();
    der->add_option("--param", cfg.params, "k=v");
    der->callback([&] { action = [&] { return cmd_derivations(cfg, name); }; });

    auto* deg = app.add_subcommand("degenerate", "Degeneration witnesses");
    deg->require_subcommand(1);
    auto* verify = deg->add_subcommand("verify", "Verify degeneration rows or a witness file");
    std::string row, file, schedule, tier;
    bool every = false;
    auto* row_opt = verify->add_option("--row", row, "Row id, e.g. N4_22->N4_02");
    auto* all_opt = verify->add_flag("--all", every, "All rows");
    auto* file_opt = verify->add_option("--file", file, "Witness JSON");
    row_opt->excludes(all_opt)->excludes(file_opt);
    all_opt->excludes(file_opt);
    verify->add_option("--digits", cfg.digits);
    verify->add_option("--schedule", schedule, "Comma separated t values");
    verify->add_option("--tier", tier)->check(CLI::IsMember({"auto", "exact", "numeric"}));
    verify->callback([&] {
        if (row.empty() && !every && file.empty()) throw CLI::RequiredError("--row, --all or --file");
        action = [&] { return cmd_degenerate(cfg, row, every, file, schedule, tier); };
    });

    auto* graph = app.add_subcommand("graph", "Reachability");
    graph->require_subcommand(1);
    auto* comps = graph->add_subcommand("components", "Reachability from N4_20 and N4_22");
    std::string dot;
    comps->add_option("--dot", dot, "Write the DOT graph to a file");
    comps->callback([&] { action = [&] { return cmd_graph(cfg, dot); }; });

    auto* report = app.add_subcommand("report", "Acceptance suites");
    report->require_subcommand(1);
    auto* full = report->add_subcommand("full", "All acceptance criteria");
    bool verbose = false;
    full->add_flag("-v,--verbose", verbose);
    full->callback([&] { action = [&] { return cmd_report(cfg, verbose); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }
    if (cfg.digits < 16) {
        std::cerr << "error: digits must be at least 16\n";
        return Usage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    }
}
