#include "novikov/catalog.hpp"

#include "novikov/embedded_data.hpp"
#include "novikov/sampling.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace novikov {

namespace {

ScalarExpr expr_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return ScalarExpr(j.get<long>());
    return parse_expr(j.get<std::string>());
}

std::vector<Cocycle> cocycles_from_json(int n, const nlohmann::json& j) {
    auto one = [n](const nlohmann::json& c) {
        return c.is_string() ? parse_cocycle(n, c.get<std::string>()) : cocycle_from_json(n, c);
    };
    std::vector<Cocycle> out;
    if (j.contains("cocycles")) {
        for (const auto& c : j.at("cocycles")) out.push_back(one(c));
    } else {
        out.push_back(one(j.at("cocycle")));
    }
    return out;
}

std::vector<Cocycle> span_from_json(int n, const nlohmann::json& j) {
    std::vector<Cocycle> out;
    for (const auto& c : j) out.push_back(parse_cocycle(n, c.get<std::string>()));
    return out;
}

RFMatrix vectors(const std::vector<Cocycle>& cs) {
    RFMatrix m;
    for (const auto& c : cs) m.push_back(c.to_vector());
    return m;
}

std::string join(const std::vector<ScalarExpr>& es) {
    std::string s;
    for (const auto& e : es) s += (s.empty() ? "" : ", ") + e.to_string();
    return s;
}

}  // namespace

std::map<Symbol, ScalarExpr> parse_param_map(const nlohmann::json& j) {
    std::map<Symbol, ScalarExpr> out;
    if (j.is_null()) return out;
    for (const auto& [k, v] : j.items()) out.emplace(Symbol(k), expr_from_json(v));
    return out;
}

const Catalog& Catalog::builtin() {
    static const Catalog cat = [] {
        std::vector<nlohmann::json> docs;
        for (const auto& [name, text] : embedded_data()) {
            if (name == "table_b.json") continue;
            docs.push_back(nlohmann::json::parse(text));
        }
        return from_documents(docs);
    }();
    return cat;
}

Catalog Catalog::from_documents(const std::vector<nlohmann::json>& docs) {
    Catalog c;
    // Algebras first: witnesses refer to them.
    for (const auto& d : docs) {
        if (d.is_object() && d.contains("algebras")) c.add_algebras(d, "user");
    }
    for (const auto& d : docs) {
        if (!(d.is_object() && d.contains("algebras"))) c.add_document(d);
    }
    return c;
}

void Catalog::add_algebras(const nlohmann::json& doc, const std::string& default_group) {
    const nlohmann::json* list = &doc;
    nlohmann::json single;
    if (doc.is_object() && doc.contains("algebras")) {
        list = &doc.at("algebras");
    } else if (doc.is_object()) {
        single = nlohmann::json::array({doc});
        list = &single;
    }
    for (const auto& j : *list) {
        CatalogEntry e;
        e.algebra = algebra_from_json(j);
        e.name = e.algebra.name();
        e.label = j.value("label", e.name);
        e.group = j.value("group", default_group);
        e.source_ref = j.value("source", std::string("user file"));
        for (const auto& a : j.value("aliases", nlohmann::json::array())) e.aliases.push_back(a.get<std::string>());
        e.purity_expected = j.value("purity_expected", e.group == "pure4");
        if (index_.count(e.name)) throw std::invalid_argument("duplicate algebra name: " + e.name);
        std::size_t pos = entries_.size();
        index_.emplace(e.name, pos);
        if (!index_.count(e.label)) index_.emplace(e.label, pos);
        for (const auto& a : e.aliases) {
            if (!index_.count(a)) index_.emplace(a, pos);
        }
        entries_.push_back(std::move(e));
    }
}

void Catalog::add_document(const nlohmann::json& doc) {
    if (doc.is_object() && doc.contains("algebras")) add_algebras(doc);
    if (doc.is_object() && doc.contains("extension_witnesses")) {
        for (const auto& j : doc.at("extension_witnesses")) witnesses_.push_back(extension_witness_from_json(*this, j));
    }
    if (doc.is_object() && doc.contains("golden_cohomology")) {
        for (const auto& j : doc.at("golden_cohomology")) {
            GoldenCohomology g;
            g.algebra = entry(j.at("algebra").get<std::string>()).name;
            int n = entry(g.algebra).algebra.dim();
            g.z2 = span_from_json(n, j.at("z2"));
            g.b2 = span_from_json(n, j.at("b2"));
            g.h2 = span_from_json(n, j.at("h2"));
            golden_.push_back(std::move(g));
        }
    }
    if (doc.is_object() && doc.contains("action_formulas")) {
        for (const auto& j : doc.at("action_formulas")) {
            ActionFormulaCase c;
            c.id = j.at("id").get<std::string>();
            c.reading = j.value("reading", std::string("formula list"));
            c.algebra = entry(j.at("base").get<std::string>()).algebra;
            int n = c.algebra.dim();
            c.phi = parse_matrix(j.at("phi"));
            for (const auto& v : j.at("vars")) c.vars.emplace_back(v.get<std::string>());
            for (const auto& nb : j.at("nabla")) c.nabla.push_back(parse_cocycle(n, nb.get<std::string>()));
            for (std::size_t m = 0; m < c.nabla.size(); ++m) c.coords.emplace_back("alpha" + std::to_string(m + 1));
            for (const auto& f : j.value("formulas", nlohmann::json::array())) c.formulas.push_back(expr_from_json(f));
            for (const auto& e : j.value("entries", nlohmann::json::array())) {
                c.entries.push_back({e.at("i").get<int>() - 1, e.at("j").get<int>() - 1, expr_from_json(e.at("c"))});
            }
            c.expected_pass = j.value("expected_pass", true);
            actions_.push_back(std::move(c));
        }
    }
}

void Catalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    if (doc.is_object() && !doc.contains("algebras") && doc.contains("name")) {
        add_algebras(doc);
    } else {
        add_document(doc);
    }
}

bool Catalog::contains(std::string_view name) const { return index_.find(name) != index_.end(); }

const CatalogEntry& Catalog::entry(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown algebra: " + std::string(name));
    return entries_[it->second];
}

Algebra Catalog::get(std::string_view name, const Assignment& params) const {
    const CatalogEntry& e = entry(name);
    for (const auto& [s, v] : params) {
        const auto& fp = e.family_params();
        if (std::find(fp.begin(), fp.end(), s) == fp.end()) {
            throw std::invalid_argument(e.name + " has no parameter '" + s.name() + "'");
        }
    }
    for (Symbol p : e.family_params()) {
        if (!params.count(p)) throw std::invalid_argument(e.name + ": missing parameter '" + p.name() + "'");
    }
    Algebra a = e.algebra.instantiate(params);
    a.set_name(e.name);
    return a;
}

Algebra Catalog::get_symbolic(std::string_view name, const std::map<Symbol, ScalarExpr>& params) const {
    const CatalogEntry& e = entry(name);
    for (const auto& [s, v] : params) {
        const auto& fp = e.family_params();
        if (std::find(fp.begin(), fp.end(), s) == fp.end()) {
            throw std::invalid_argument(e.name + " has no parameter '" + s.name() + "'");
        }
    }
    if (params.empty()) return e.algebra;
    Algebra a = e.algebra.substitute(params);
    // Substituted values may introduce new symbols; keep them as parameters.
    std::set<Symbol> known(a.params().begin(), a.params().end());
    std::vector<Symbol> extra;
    for (const auto& [s, v] : params) {
        for (Symbol x : v.symbols()) {
            if (!known.count(x) && x != t_symbol()) {
                known.insert(x);
                extra.push_back(x);
            }
        }
    }
    if (extra.empty()) return a;
    std::vector<Symbol> ps = a.params();
    ps.insert(ps.end(), extra.begin(), extra.end());
    Algebra b(a.name(), a.dim(), ps);
    for (const auto& c : a.constraints()) b.add_constraint(c);
    for (const auto& [k, v] : a.constants()) b.set_constant(k[0], k[1], k[2], v);
    return b;
}

std::vector<const CatalogEntry*> Catalog::list(const ListFilter& f) const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_) {
        if (f.group) {
            if (e.group != *f.group) continue;
        } else if (!f.include_aux && e.group == "aux") {
            continue;
        }
        if (f.dim && e.algebra.dim() != *f.dim) continue;
        if (f.pure && e.purity_expected != *f.pure) continue;
        out.push_back(&e);
    }
    return out;
}

ExtensionWitness extension_witness_from_json(const Catalog& catalog, const nlohmann::json& j) {
    ExtensionWitness w;
    w.id = j.at("id").get<std::string>();
    w.base = catalog.entry(j.at("base").get<std::string>()).name;
    w.base_params = parse_param_map(j.value("base_params", nlohmann::json()));
    w.cocycles = cocycles_from_json(catalog.entry(w.base).algebra.dim(), j);
    w.expect_split = j.value("expect_split", false);
    if (!w.expect_split) w.target = catalog.entry(j.at("target").get<std::string>()).name;
    w.target_params = parse_param_map(j.value("target_params", nlohmann::json()));
    w.case_ref = j.value("case_ref", std::string());
    for (const auto& c : j.value("printed_constraints", nlohmann::json::array())) w.printed_constraints.push_back(expr_from_json(c));
    w.note = j.value("note", std::string());
    return w;
}

WitnessCheck check_extension_witness(const Catalog& catalog, const ExtensionWitness& w) {
    WitnessCheck r;
    r.id = w.id;
    try {
        Algebra base = catalog.get_symbolic(w.base, w.base_params);
        r.cocycle = true;
        for (const auto& th : w.cocycles) r.cocycle = r.cocycle && is_cocycle(base, th);
        if (!r.cocycle) {
            r.detail = "not a cocycle";
            return r;
        }
        r.trivial_intersection = has_trivial_intersection(base, w.cocycles);
        if (w.expect_split) {
            r.pass = !r.trivial_intersection;
            r.detail = r.pass ? "split: Ann(A) meets Ann(theta)" : "expected split, but Ann(A) and Ann(theta) meet trivially";
            return r;
        }
        if (!r.trivial_intersection) {
            r.detail = "Ann(A) meets Ann(theta): extension splits";
            return r;
        }
        Extension ext = central_extension(base, w.cocycles);
        Algebra target = catalog.get_symbolic(w.target, w.target_params);
        r.matches_target = ext.result.same_constants(target);
        r.pass = r.matches_target;
        r.detail = r.pass ? "reproduces " + w.target
                          : "extension gives " + ext.result.products_string() + ", target " + w.target + " has " +
                                target.products_string();
        if (!w.printed_constraints.empty()) {
            std::set<std::string> printed, table;
            for (const auto& c : w.printed_constraints) printed.insert(simplify(c).to_string());
            for (const auto& c : target.constraints()) table.insert(simplify(c).to_string());
            if (printed != table) {
                r.constraint_flag = w.id + ": representative printed with nonzero " + join(w.printed_constraints) +
                                    ", " + w.target + " lists " +
                                    (target.constraints().empty() ? std::string("no constraint") : join(target.constraints()));
            }
        }
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

GoldenCheck check_golden(const Catalog& catalog, const GoldenCohomology& g) {
    GoldenCheck r;
    r.algebra = g.algebra;
    Algebra a = catalog.entry(g.algebra).algebra;
    std::size_t nn = static_cast<std::size_t>(a.dim()) * a.dim();
    CocycleSpace cs = cocycle_space(a);
    r.z2 = static_cast<int>(cs.z2.size());
    r.b2 = static_cast<int>(cs.b2.size());
    r.h2 = static_cast<int>(cs.h2.size());
    RFMatrix gz = vectors(g.z2), gb = vectors(g.b2), gh = vectors(g.h2);
    RFMatrix hb = cs.h2;
    hb.insert(hb.end(), cs.b2.begin(), cs.b2.end());
    RFMatrix ghb = gh;
    ghb.insert(ghb.end(), gb.begin(), gb.end());
    std::vector<std::string> bad;
    if (rank(gz, nn) != gz.size() || !same_span(cs.z2, gz, nn)) bad.push_back("Z2 differs");
    if (rank(gb, nn) != gb.size() || !same_span(cs.b2, gb, nn)) bad.push_back("B2 differs");
    if (gh.size() != cs.h2.size() || rank(ghb, nn) != ghb.size() || !same_span(hb, ghb, nn)) bad.push_back("H2 differs");
    r.pass = bad.empty();
    std::ostringstream os;
    os << "Z2=" << r.z2 << " B2=" << r.b2 << " H2=" << r.h2;
    for (const auto& b : bad) os << "; " << b;
    r.detail = os.str();
    return r;
}

Assignment sample_params(const Algebra& a, std::mt19937_64& rng) {
    if (a.params().empty()) return {};
    return sample_assignment(a.params(), a.constraints(), rng);
}

EntryCheck check_entry(const CatalogEntry& e, int samples, std::mt19937_64& rng) {
    EntryCheck r;
    r.name = e.name;
    auto run = [&](const std::optional<Assignment>& at, const std::string& where) {
        IdentityFlags f = check_identities(e.algebra, at);
        if (!f.novikov) r.failures.push_back(e.name + " is not Novikov" + where);
        if (!derived_powers(e.algebra, at).nilpotency_index) r.failures.push_back(e.name + " is not nilpotent" + where);
        if (e.purity_expected == f.two_step) {
            r.failures.push_back(e.name + (e.purity_expected ? " is two-step" : " is not two-step") + where);
        }
    };
    run(std::nullopt, " (generic)");
    if (!e.family_params().empty()) {
        for (int k = 0; k < samples; ++k) {
            Assignment at = sample_params(e.algebra, rng);
            std::string where = " at";
            for (const auto& [s, v] : at) where += " " + s.name() + "=" + v.to_string();
            run(at, where);
        }
    }
    r.pass = r.failures.empty();
    return r;
}

nlohmann::json CatalogReport::to_json() const {
    nlohmann::json j;
    j["failures"] = failures;
    j["lines"] = lines;
    j["flags"] = flags;
    j["indistinguishable"] = nlohmann::json::array();
    for (const auto& [a, b] : indistinguishable) j["indistinguishable"].push_back({a, b});
    return j;
}

CatalogReport verify_catalog(const Catalog& catalog, std::uint64_t seed) {
    CatalogReport rep;
    std::mt19937_64 rng(seed);
    ListFilter everything;
    everything.include_aux = true;
    std::vector<const CatalogEntry*> all = catalog.list(everything);
    for (const CatalogEntry* e : all) {
        EntryCheck c = check_entry(*e, 5, rng);
        for (const auto& f : c.failures) rep.lines.push_back("FAIL " + f);
        rep.failures += static_cast<int>(c.failures.size());
    }
    for (const auto& w : catalog.extension_witnesses()) {
        WitnessCheck c = check_extension_witness(catalog, w);
        if (!c.pass) {
            ++rep.failures;
            rep.lines.push_back("FAIL witness " + w.id + ": " + c.detail);
        }
        if (c.constraint_flag) rep.flags.push_back(*c.constraint_flag);
    }
    // Pairwise distinctness by invariant profiles at three samples.
    std::map<int, std::vector<std::pair<std::string, std::set<std::string>>>> by_dim;
    for (const CatalogEntry* e : all) {
        std::set<std::string> profiles;
        int k = e->family_params().empty() ? 1 : 3;
        for (int s = 0; s < k; ++s) {
            Assignment at = sample_params(e->algebra, rng);
            profiles.insert(invariant_profile(e->algebra, at).to_string());
        }
        by_dim[e->algebra.dim()].emplace_back(e->name, std::move(profiles));
    }
    for (const auto& [dim, es] : by_dim) {
        for (std::size_t a = 0; a < es.size(); ++a) {
            for (std::size_t b = a + 1; b < es.size(); ++b) {
                if (es[a].second == es[b].second) rep.indistinguishable.emplace_back(es[a].first, es[b].first);
            }
        }
    }
    return rep;
}

}  // namespace novikov
