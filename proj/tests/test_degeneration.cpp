#include "novikov/acceptance.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace novikov;
using nlohmann::json;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

const DegenerationWitness& row(const std::string& id) {
    for (const auto& w : table_b()) {
        if (w.id == id) return w;
    }
    throw std::out_of_range(id);
}

ExprMatrix product(const ExprMatrix& a, const ExprMatrix& b) {
    std::size_t n = a.size();
    ExprMatrix out(n, std::vector<ScalarExpr>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            ScalarExpr s;
            for (std::size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
            out[i][j] = simplify(s);
        }
    }
    return out;
}

RFMatrix rf_matrix(const ExprMatrix& m) {
    RFMatrix out;
    for (const auto& r : m) {
        RFVector v;
        for (const auto& x : r) v.push_back(*x.as_rational_function());
        out.push_back(v);
    }
    return out;
}

NumericOptions fast() {
    NumericOptions o;
    o.digits = 60;
    o.samples = 2;
    return o;
}

}  // namespace

TEST_SUITE("degeneration") {

TEST_CASE("table rows parse") {
    CHECK(table_b().size() == 24);
    const auto& n11 = row("N4_20->N4_11");
    CHECK(n11.erratum.has_value());
    CHECK_FALSE(n11.fallback.has_value());
    CHECK(row("N4_07->Ntriv_3").fallback->source == "N4_04");
    CHECK(row("N4_20->N4_05").has_roots());
    CHECK_FALSE(row("N4_22->N4_02").has_roots());
    auto fs = row("N4_22->N4_02").free_symbols();
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].name() == "lambda");
    CHECK_THROWS(degeneration_witness_from_json(json{{"id", "x"}, {"source", "N4_01"}}));
}

TEST_CASE("conjugation matches the oracle at a fixed t") {
    std::mt19937_64 rng(31);
    for (const auto& w : table_b()) {
        if (w.has_roots() || w.source_params.size() > 0 || !w.free_symbols().empty()) continue;
        Algebra a = cat().get(w.source);
        RFMatrix basis = rf_matrix(w.basis);
        std::vector<RationalFunction> c = conjugate_constants(Tensor(a), basis);
        oracle::Q t0 = oracle::small_rational(rng);
        if (t0 == 0) t0 = 1;
        std::map<Symbol, RationalFunction> at{{t_symbol(), RationalFunction(GaussRational(Rational(t0)))}};
        oracle::Mat b;
        for (const auto& r : basis) {
            std::vector<oracle::Q> v;
            for (const auto& x : r) v.push_back(x.substitute(at).constant_value().re());
            b.push_back(v);
        }
        oracle::Dense expected = oracle::conjugate(oracle::from(a), b);
        INFO(w.id);
        for (std::size_t k = 0; k < c.size(); ++k) {
            CHECK(c[k].substitute(at).constant_value() == GaussRational(Rational(expected.c[k])));
        }
    }
}

TEST_CASE("conjugation is equivariant under rescaling") {
    Algebra a = cat().get("N4_24");
    int n = 4;
    RFMatrix basis = rf_matrix(row("N4_22->N4_23").basis);
    std::vector<RationalFunction> s = {RationalFunction(2), RationalFunction(-3),
                                       *parse_expr("t + 1").as_rational_function(), RationalFunction(5)};
    RFMatrix scaled = basis;
    for (int i = 0; i < n; ++i) {
        for (auto& x : scaled[i]) x *= s[i];
    }
    auto c = conjugate_constants(Tensor(a), basis);
    auto d = conjugate_constants(Tensor(a), scaled);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                int idx = (i * n + j) * n + k;
                CHECK(d[idx] == c[idx] * s[i] * s[j] / s[k]);
            }
        }
    }
    CHECK_THROWS_AS(conjugate_constants(Tensor(a), RFMatrix(4, RFVector(4))), std::domain_error);

    RFMatrix tdiag(4, RFVector(4));
    for (int i = 0; i < n; ++i) tdiag[i][i] = RationalFunction::symbol(t_symbol());
    auto e = conjugate_constants(Tensor(a), tdiag);
    Tensor ta(a);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) CHECK(e[(i * n + j) * n + k] == ta(i, j, k) * RationalFunction::symbol(t_symbol()));
        }
    }
}

TEST_CASE("exact rows") {
    for (const char* id : {"N4_22->N4_02", "N4_14->N4_01", "N4_15->N4_14", "N4_20->N4_15", "N4_22->N4_23"}) {
        VerificationReport r = verify_exact(cat(), row(id));
        INFO(r.summary());
        CHECK(r.pass);
        CHECK(r.tier == Tier::Exact);
        CHECK(r.failing().empty());
    }
}

TEST_CASE("composition of witnesses") {
    // N4_20 -> N4_15 -> N4_14 with the same t, then on to N4_01.
    const auto& r1 = row("N4_20->N4_15");
    const auto& r2 = row("N4_15->N4_14");
    DegenerationWitness w = r1;
    w.id = "N4_20->N4_14";
    w.target = "N4_14";
    w.basis = product(r2.basis, r1.basis);
    CHECK(verify_exact(cat(), w).pass);
    DegenerationWitness v = w;
    v.id = "N4_20->N4_01";
    v.target = "N4_01";
    v.basis = product(row("N4_14->N4_01").basis, w.basis);
    VerificationReport r = verify(cat(), v, fast());
    INFO(r.summary());
    CHECK(r.pass);
}

TEST_CASE("literal failures are reported, corrected witnesses pass") {
    VerificationReport lit = verify_exact(cat(), row("N4_20->N4_11"));
    CHECK_FALSE(lit.pass);
    REQUIRE_FALSE(lit.failing().empty());
    CHECK(lit.failing().front().detail.find("limit 0, target 1") != std::string::npos);
    CHECK(verify_exact(cat(), row("N4_20->N4_11").with(*row("N4_20->N4_11").erratum)).pass);

    VerificationReport pole = verify_exact(cat(), row("N4_22->N4_24"));
    CHECK_FALSE(pole.pass);
    CHECK(pole.failing().front().detail.find("pole") != std::string::npos);

    RowOutcome o = verify_row(cat(), row("N4_07->Ntriv_3"), fast());
    CHECK_FALSE(o.literal.pass);
    REQUIRE(o.fallback.has_value());
    CHECK(o.fallback->pass);
    CHECK(o.status() == "fallback pass");
}

TEST_CASE("a wrong target fails") {
    DegenerationWitness w = row("N4_22->N4_02");
    w.target = "N4_09";
    w.target_params.clear();
    CHECK_FALSE(verify_exact(cat(), w).pass);
    DegenerationWitness z = row("N4_15->N4_14");
    z.basis[3][3] = ScalarExpr(0L);
    VerificationReport singular = verify_exact(cat(), z);
    CHECK_FALSE(singular.pass);
    REQUIRE_FALSE(singular.notes.empty());
    CHECK(singular.notes.front().find("singular") != std::string::npos);
}

TEST_CASE("exact and numeric tiers agree") {
    for (const auto& w : table_b()) {
        if (w.has_roots()) continue;
        VerificationReport e = verify_exact(cat(), w);
        VerificationReport n = verify_numeric(cat(), w, fast());
        INFO(w.id << " exact: " << e.summary() << " numeric: " << n.summary());
        CHECK(e.pass == n.pass);
        CHECK(n.tier == Tier::Numeric);
    }
}

TEST_CASE("numeric tier") {
    const auto& w = row("N4_20->N4_05");
    CHECK_THROWS_AS(verify_exact(cat(), w), std::invalid_argument);
    VerificationReport r = verify(cat(), w, NumericOptions{});
    CHECK(r.tier == Tier::Numeric);
    CHECK(r.pass);
    REQUIRE(r.max_residual.has_value());
    CHECK(*r.max_residual <= 1e-8);
    REQUIRE(r.decay_exponent.has_value());
    CHECK(*r.decay_exponent > 0.3);
    CHECK(r.to_json().at("pass") == true);

    NumericOptions coarse;
    coarse.schedule = {Rational(1, 10), Rational(1, 100)};
    CHECK_FALSE(verify_numeric(cat(), w, coarse).pass);

    CHECK(default_schedule().size() == 5);
    CHECK(default_schedule().back() == Rational(1) / Rational(mpz_class("1000000000000000000000000000000")));
}

TEST_CASE("seeds are stable") {
    CHECK(row_seed(1, "N4_20->N4_05") == row_seed(1, "N4_20->N4_05"));
    CHECK(row_seed(1, "N4_20->N4_05") != row_seed(2, "N4_20->N4_05"));
    CHECK(row_seed(1, "N4_20->N4_05") != row_seed(1, "N4_22->N4_02"));
    VerificationReport a = verify_numeric(cat(), row("N4_22->N4_02"), fast());
    VerificationReport b = verify_numeric(cat(), row("N4_22->N4_02"), fast());
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("rows run concurrently in input order") {
    std::vector<DegenerationWitness> rows(table_b().begin(), table_b().begin() + 6);
    auto out = verify_rows(cat(), rows, fast());
    REQUIRE(out.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(out[i].id == rows[i].id);
}

TEST_CASE("necessary condition") {
    NecessaryReport ok = check_necessary(cat().get("N4_14"), cat().get("N4_01"));
    CHECK(ok.pass);
    NecessaryReport zero = check_necessary(cat().get("zero_4"), cat().get("N4_01"));
    CHECK_FALSE(zero.pass);
    NecessaryReport same = check_necessary(cat().get("N4_05"), cat().get("N4_05"));
    CHECK(same.skipped);

    NecessaryReport lit = check_necessary(cat(), row("N4_14->N4_01"), 1);
    CHECK(lit.pass);
    CHECK_FALSE(lit.parametrized_index);
    NecessaryReport fam = check_necessary(cat(), row("N4_20->N4_15"), 1);
    CHECK(fam.parametrized_index);
    CHECK(fam.family_condition);
    CHECK_FALSE(fam.pass);
}

TEST_CASE("reachability") {
    std::vector<std::string> families = {"N4_20", "N4_22", "N4_01", "N4_02"};
    ReachabilityReport empty = build_reachability({}, families);
    CHECK(empty.unreachable == std::vector<std::string>{"N4_01", "N4_02"});
    CHECK_FALSE(empty.all_reachable());
    CHECK(empty.paths.at("N4_20").empty());

    std::vector<Edge> edges = {{"N4_20", "N4_14", "a", "literal"},
                               {"N4_14", "N4_01", "b", "literal"},
                               {"N4_22", "N4_02", "c", "erratum"},
                               {"N4_01", "N4_20", "d", "literal"}};
    ReachabilityReport g = build_reachability(edges, families);
    CHECK(g.all_reachable());
    CHECK(g.paths.at("N4_01").size() == 2);
    CHECK(g.paths.at("N4_02").front().via == "erratum");
    CHECK(g.edges_into_sources.size() == 1);
    CHECK(g.to_dot().find("digraph") != std::string::npos);
    CHECK(g.to_json().at("unreachable").empty());
}

TEST_CASE("full table reachability") {
    auto outcomes = verify_rows(cat(), table_b(), NumericOptions{});
    auto edges = verified_edges(outcomes);
    CHECK(edges.size() == 24);
    ReachabilityReport g = build_reachability(edges, reachability_families(cat()));
    CHECK(g.families.size() == 26);
    CHECK(g.all_reachable());
    CHECK(g.edges_into_sources.empty());
    ReachabilityReport literal_only =
        build_reachability([&] {
            std::vector<Edge> lit;
            for (const auto& e : edges) {
                if (e.via == "literal") lit.push_back(e);
            }
            return lit;
        }(), reachability_families(cat()));
    CHECK(literal_only.unreachable == std::vector<std::string>{"N4_10", "N4_11", "N4_24", "Ntriv_3"});
}

}
