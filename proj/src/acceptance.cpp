#include "novikov/acceptance.hpp"

#include "novikov/sampling.hpp"

#include <chrono>
#include <map>
#include <set>
#include <sstream>

namespace novikov {

namespace {

std::string describe(const Assignment& at) {
    std::string s;
    for (const auto& [sym, v] : at) s += (s.empty() ? "" : ", ") + sym.name() + "=" + v.to_string();
    return s;
}

CriterionResult make(int number, std::string title) {
    CriterionResult r;
    r.number = number;
    r.title = std::move(title);
    return r;
}

}  // namespace

std::string CriterionResult::line() const {
    return "criterion " + std::to_string(number) + " " + (pass ? "PASS" : "FAIL") + " " + title + ": " + summary;
}

nlohmann::json CriterionResult::to_json() const {
    return {{"criterion", number}, {"title", title}, {"pass", pass}, {"summary", summary}, {"details", details}};
}

std::vector<std::string> split_roundtrip(const Algebra& a) {
    std::vector<std::string> bad;
    RFMatrix ann = annihilator_basis(a);
    for (const auto& v : ann) {
        Split s = split_central_extension(a, {v});
        Extension ext = central_extension(s.quotient, s.cocycles);
        std::string line;
        for (const auto& x : v) line += (line.empty() ? "" : ", ") + x.to_string();
        if (!ext.result.same_constants(s.relabeled)) {
            bad.push_back(a.name() + ": re-extension along (" + line + ") differs from the relabeled algebra");
            continue;
        }
        Algebra back = change_basis(ext.result, inverse(s.basis));
        if (!back.same_constants(a)) bad.push_back(a.name() + ": roundtrip along (" + line + ") changes the constants");
    }
    return bad;
}

std::vector<std::string> reachability_families(const Catalog& catalog) {
    std::vector<std::string> out;
    ListFilter f;
    f.group = "pure4";
    for (const CatalogEntry* e : catalog.list(f)) out.push_back(e->name);
    out.push_back("Ntriv_2");
    out.push_back("Ntriv_3");
    return out;
}

Acceptance::Acceptance(AcceptanceOptions opt, const Catalog& catalog) : opt_(std::move(opt)), catalog_(catalog) {}

const std::vector<RowOutcome>& Acceptance::table_b_outcomes() {
    if (!rows_) rows_ = verify_rows(catalog_, table_b(), opt_.numeric);
    return *rows_;
}

CriterionResult Acceptance::run(int number) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    switch (number) {
        case 1: r = identities(); break;
        case 2: r = cohomology(); break;
        case 3: r = extensions(); break;
        case 4: r = split_reextend(); break;
        case 5: r = derivations(); break;
        case 6: r = table(); break;
        case 7: r = necessary(); break;
        case 8: r = reachability(); break;
        default: throw std::out_of_range("no criterion " + std::to_string(number));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<CriterionResult> Acceptance::run_all() {
    std::vector<CriterionResult> out;
    for (int k = 1; k <= count; ++k) out.push_back(run(k));
    return out;
}

CriterionResult Acceptance::identities() {
    CriterionResult r = make(1, "identities, nilpotency, purity");
    std::mt19937_64 rng(row_seed(opt_.seed, "identities"));
    ListFilter f;
    f.include_aux = true;
    int checked = 0, pure = 0;
    for (const CatalogEntry* e : catalog_.list(f)) {
        if (e->group == "user") continue;
        EntryCheck c = check_entry(*e, 5, rng);
        ++checked;
        if (e->group == "pure4" && c.pass) ++pure;
        r.details.insert(r.details.end(), c.failures.begin(), c.failures.end());
    }
    r.pass = r.details.empty();
    r.summary = std::to_string(checked) + " algebras Novikov and nilpotent (generic and 5 samples per family); " +
                std::to_string(pure) + "/24 four-dimensional families pure";
    if (!r.pass) r.summary += "; " + std::to_string(r.details.size()) + " failures";
    return r;
}

CriterionResult Acceptance::cohomology() {
    CriterionResult r = make(2, "cohomology golden table");
    int ok = 0;
    for (const auto& g : catalog_.golden_cohomology()) {
        GoldenCheck c = check_golden(catalog_, g);
        if (c.pass) ++ok;
        r.details.push_back(g.algebra + ": " + c.detail + (c.pass ? "" : " FAIL"));
    }
    std::size_t total = catalog_.golden_cohomology().size();
    r.pass = total == 7 && ok == 7;
    r.summary = std::to_string(ok) + "/" + std::to_string(total) + " rows match (dimensions and subspaces)";
    return r;
}

CriterionResult Acceptance::extensions() {
    CriterionResult r = make(3, "extension witnesses");
    int reps = 0, reps_ok = 0, splits = 0, splits_ok = 0;
    std::vector<std::string> failures;
    for (const auto& w : catalog_.extension_witnesses()) {
        WitnessCheck c = check_extension_witness(catalog_, w);
        (w.expect_split ? splits : reps) += 1;
        if (c.pass) (w.expect_split ? splits_ok : reps_ok) += 1;
        if (!c.pass) failures.push_back("witness " + w.id + ": " + c.detail);
        if (c.constraint_flag) r.details.push_back("flag " + *c.constraint_flag);
    }
    // Orbit formulas: each base must have a reading that holds.
    std::map<std::string, std::vector<std::pair<std::string, bool>>> readings;
    for (const auto& c : catalog_.action_cases()) {
        ActionReport a = verify_action_formulas(c, row_seed(opt_.seed, c.id + "/" + c.reading));
        readings[c.id].emplace_back(c.reading, a.pass);
        r.details.push_back("action " + c.id + " [" + c.reading + "] " + (a.pass ? "holds: " : "fails: ") + a.detail);
    }
    int bases_ok = 0;
    for (const auto& [id, rs] : readings) {
        bool any = false;
        for (const auto& [reading, pass] : rs) any = any || pass;
        if (any) ++bases_ok;
        if (!any) failures.push_back("action formulas for " + id + ": no reading holds");
        if (rs.size() > 1) {
            std::string verdict;
            for (const auto& [reading, pass] : rs) {
                verdict += (verdict.empty() ? "" : ", ") + reading + (pass ? " holds" : " fails");
            }
            r.details.push_back("resolved " + id + ": " + verdict);
        }
    }
    r.details.insert(r.details.begin(), failures.begin(), failures.end());
    r.pass = failures.empty() && reps > 0;
    r.summary = std::to_string(reps_ok) + "/" + std::to_string(reps) + " representatives reproduce their targets, " +
                std::to_string(splits_ok) + "/" + std::to_string(splits) + " split cases confirmed, orbit formulas hold for " +
                std::to_string(bases_ok) + "/" + std::to_string(readings.size()) + " bases";
    return r;
}

CriterionResult Acceptance::split_reextend() {
    CriterionResult r = make(4, "split and re-extend");
    std::mt19937_64 rng(row_seed(opt_.seed, "split"));
    ListFilter f;
    f.group = "pure4";
    int runs = 0;
    for (const CatalogEntry* e : catalog_.list(f)) {
        int k = e->family_params().empty() ? 1 : 3;
        for (int s = 0; s < k; ++s) {
            Assignment at = sample_params(e->algebra, rng);
            Algebra a = catalog_.get(e->name, at);
            auto bad = split_roundtrip(a);
            ++runs;
            for (auto& b : bad) r.details.push_back(b + (at.empty() ? "" : " at " + describe(at)));
        }
    }
    r.pass = r.details.empty();
    r.summary = std::to_string(runs) + " instances, every annihilator line roundtrips exactly";
    if (!r.pass) r.summary = std::to_string(r.details.size()) + " roundtrip failures over " + std::to_string(runs) + " instances";
    return r;
}

CriterionResult Acceptance::derivations() {
    CriterionResult r = make(5, "derivation dimensions");
    std::mt19937_64 rng(row_seed(opt_.seed, "derivations"));
    auto expect = [&](const std::string& what, int got, int want) {
        if (got != want) r.details.push_back(what + ": dim Der " + std::to_string(got) + ", expected " + std::to_string(want));
    };
    for (const char* name : {"N4_20", "N4_22"}) {
        const Algebra& a = catalog_.entry(name).algebra;
        expect(std::string(name) + " generic", derivation_dim(a), 3);
        std::vector<ScalarExpr> nonzero = a.constraints();
        if (std::string(name) == "N4_22") {
            // The value 3 is for lambda != 0, 1.
            ScalarExpr l = ScalarExpr::symbol("lambda");
            nonzero.push_back(l);
            nonzero.push_back(l - ScalarExpr(1L));
        }
        for (int s = 0; s < 5; ++s) {
            Assignment at = sample_assignment(a.params(), nonzero, rng);
            expect(std::string(name) + " at " + describe(at), derivation_dim(a, at), 3);
        }
    }
    expect("zero_4", derivation_dim(catalog_.entry("zero_4").algebra), 16);
    r.pass = r.details.empty();
    r.summary = r.pass ? "N4_20 and N4_22 give 3 generically and at 5 samples each; zero_4 gives 16"
                       : std::to_string(r.details.size()) + " mismatches";
    return r;
}

CriterionResult Acceptance::table() {
    CriterionResult r = make(6, "degeneration witnesses");
    const auto& rows = table_b_outcomes();
    int literal = 0, fallback = 0, erratum = 0, fail = 0;
    for (const auto& row : rows) {
        std::string st = row.status();
        if (st == "pass") ++literal;
        if (st == "fallback pass") ++fallback;
        if (st == "erratum pass") ++erratum;
        if (st == "fail") ++fail;
        r.details.push_back(row.literal.summary());
        if (row.fallback) r.details.push_back("  " + row.fallback->summary());
        if (row.erratum) r.details.push_back("  " + row.erratum->summary());
    }
    // The fallback protocol is part of the row's definition; corrected witnesses are not.
    r.pass = literal + fallback == static_cast<int>(rows.size());
    std::ostringstream os;
    os << literal << "/" << rows.size() << " rows verify as printed";
    if (fallback) os << ", " << fallback << " via the recorded fallback source";
    if (erratum) os << ", " << erratum << " fail as printed and verify only with a corrected witness";
    if (fail) os << ", " << fail << " fail";
    r.summary = os.str();
    return r;
}

CriterionResult Acceptance::necessary() {
    CriterionResult r = make(7, "necessary condition");
    int proper = 0, strict = 0, family_only = 0;
    std::vector<std::string> failures;
    for (const auto& w : table_b()) {
        NecessaryReport n = check_necessary(catalog_, w, opt_.seed);
        if (n.skipped) continue;
        ++proper;
        if (n.pass) {
            ++strict;
            continue;
        }
        std::string why = n.lines.empty() ? std::string() : n.lines.front();
        for (const auto& l : n.lines) {
            if (l.find(">=") != std::string::npos) why = l;
        }
        if (n.parametrized_index && n.family_condition) {
            ++family_only;
            failures.push_back(w.id + ": " + why + "; parametrized index, dim Der(A(alpha)) <= dim Der(B) holds");
        } else {
            failures.push_back(w.id + ": " + why);
        }
    }
    r.details = failures;
    r.pass = proper > 0 && strict == proper;
    std::ostringstream os;
    os << strict << "/" << proper << " proper rows show a strict dim Der increase";
    if (family_only) os << "; " << family_only << " rows with a t-dependent index have equal dimensions";
    r.summary = os.str();
    return r;
}

CriterionResult Acceptance::reachability() {
    CriterionResult r = make(8, "reachability from N4_20, N4_22");
    auto edges = verified_edges(table_b_outcomes());
    ReachabilityReport g = build_reachability(edges, reachability_families(catalog_));
    std::set<std::string> flagged;
    for (const auto& [family, path] : g.paths) {
        for (const auto& e : path) {
            if (e.via != "literal") {
                flagged.insert(family);
                r.details.push_back(family + " reached through " + e.row + " (" + e.via + ")");
                break;
            }
        }
    }
    for (const auto& f : g.unreachable) r.details.push_back("unreachable: " + f);
    for (const auto& e : g.edges_into_sources) r.details.push_back("proper edge into a source: " + e.row);
    r.pass = g.all_reachable() && g.edges_into_sources.empty();
    std::ostringstream os;
    os << (g.families.size() - g.unreachable.size()) << "/" << g.families.size() << " families reachable";
    if (!flagged.empty()) os << " (" << flagged.size() << " only through fallback or corrected witnesses)";
    os << "; " << g.edges_into_sources.size() << " proper edges into the sources";
    r.summary = os.str();
    return r;
}

}  // namespace novikov
