#include "novikov/acceptance.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace novikov;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

std::vector<oracle::Q> coords(const RFVector& v) {
    std::vector<oracle::Q> out;
    for (const auto& x : v) out.push_back(x.constant_value().re());
    return out;
}

oracle::Mat rows_of(const RFMatrix& m) {
    oracle::Mat out;
    for (const auto& v : m) out.push_back(coords(v));
    return out;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("cocycle spaces agree with the dense oracle") {
    std::mt19937_64 rng(17);
    ListFilter all;
    all.include_aux = true;
    for (const CatalogEntry* e : cat().list(all)) {
        Algebra a = e->algebra.instantiate(sample_params(e->algebra, rng));
        oracle::Dense d = oracle::from(a);
        CocycleSpace cs = cocycle_space(a);
        INFO(e->name);
        CHECK(static_cast<int>(cs.z2.size()) == oracle::z2_dim(d));
        CHECK(static_cast<int>(cs.b2.size()) == oracle::b2_dim(d));
        CHECK(cs.h2.size() == cs.z2.size() - cs.b2.size());
        oracle::Mat cond = oracle::cocycle_conditions(d);
        for (const auto& z : cs.z2) CHECK(oracle::satisfies(cond, coords(z)));
        // B2 inside Z2, and Z2 = B2 + H2.
        oracle::Mat z = rows_of(cs.z2), bh = rows_of(cs.b2);
        for (const auto& h : cs.h2) bh.push_back(coords(h));
        CHECK(oracle::rank(bh) == oracle::rank(z));
        oracle::Mat zb = z;
        for (const auto& b : cs.b2) zb.push_back(coords(b));
        CHECK(oracle::rank(zb) == oracle::rank(z));
    }
}

TEST_CASE("an extension by a cocycle is Novikov, by a non-cocycle is not") {
    std::mt19937_64 rng(23);
    for (const char* name : {"N3s_01", "N3s_04_0", "N3_01", "N2s_01"}) {
        Algebra a = cat().get(name);
        CocycleSpace cs = cocycle_space(a);
        for (const auto& z : cs.z2) {
            Cocycle th = Cocycle::from_vector(a.dim(), z);
            CHECK(is_cocycle(a, th));
            Extension ext = central_extension(a, {th});
            CHECK(oracle::is_novikov(oracle::from(ext.result)));
        }
        // random form: the oracle decides, the library must agree
        for (int k = 0; k < 10; ++k) {
            Cocycle th(a.dim());
            for (int i = 0; i < a.dim(); ++i) {
                for (int j = 0; j < a.dim(); ++j) {
                    if (rng() % 3 == 0) th.set(i, j, ScalarExpr(GaussRational(Rational(oracle::small_rational(rng)))));
                }
            }
            Algebra probe("probe", a.dim() + 1);
            for (const auto& [key, v] : a.constants()) probe.set_constant(key[0], key[1], key[2], v);
            for (int i = 0; i < a.dim(); ++i) {
                for (int j = 0; j < a.dim(); ++j) probe.set_constant(i, j, a.dim(), th(i, j));
            }
            bool expected = oracle::is_novikov(oracle::from(probe));
            CHECK(is_cocycle(a, th) == expected);
            if (!expected) CHECK_THROWS_AS(central_extension(a, {th}), std::invalid_argument);
        }
    }
}

TEST_CASE("golden cohomology table") {
    REQUIRE(cat().golden_cohomology().size() == 7);
    for (const auto& g : cat().golden_cohomology()) {
        GoldenCheck c = check_golden(cat(), g);
        INFO(g.algebra << ": " << c.detail);
        CHECK(c.pass);
    }
    GoldenCheck n3s01 = check_golden(cat(), cat().golden_cohomology().front());
    CHECK(n3s01.algebra == "N3s_01");
    CHECK(n3s01.z2 == 6);
    CHECK(n3s01.b2 == 1);
    CHECK(n3s01.h2 == 5);
}

TEST_CASE("cocycle parsing and printing") {
    Cocycle c = parse_cocycle(3, "D12 + alpha*D33 - 2*D_2_1");
    CHECK(c(0, 1) == ScalarExpr(1L));
    CHECK(c(2, 2) == parse_expr("alpha"));
    CHECK(c(1, 0) == ScalarExpr(-2L));
    CHECK(parse_cocycle(3, c.to_string()).to_string() == c.to_string());
    CHECK(Cocycle(3).to_string() == "0");
    CHECK_THROWS_AS(parse_cocycle(3, "D14"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cocycle(3, "D12*D21"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cocycle(3, "x"), std::invalid_argument);
}

TEST_CASE("action on cocycles") {
    Algebra a = cat().get("N3s_01");
    ExprMatrix phi = {{1L, 0L, 0L}, {0L, 1L, 0L}, {0L, 0L, 2L}};
    REQUIRE(is_automorphism(a, phi));
    Cocycle d33 = parse_cocycle(3, "D33");
    CHECK(act_on_cocycle(a, phi, d33).to_string() == parse_cocycle(3, "4*D33").to_string());

    // the shipped template with y = 2 and the other entries trivial
    const auto& cases = cat().action_cases();
    auto it = std::find_if(cases.begin(), cases.end(), [](const ActionFormulaCase& c) { return c.id == "N3s_01"; });
    REQUIRE(it != cases.end());
    Assignment at;
    for (Symbol v : it->vars) at[v] = GaussRational(v.name() == "x" ? 1 : v.name() == "y" ? 2 : 0);
    CHECK(act_on_cocycle(a, it->phi, d33, at).to_string() == "4*D33");

    ExprMatrix bad = {{1L, 0L, 0L}, {0L, 2L, 0L}, {0L, 0L, 1L}};
    CHECK_FALSE(is_automorphism(a, bad));
    CHECK_THROWS_AS(act_on_cocycle(a, bad, d33), std::invalid_argument);
    CHECK_THROWS_AS(is_automorphism(a, ExprMatrix{{1L, 0L, 0L}, {1L, 0L, 0L}, {0L, 0L, 1L}}), std::domain_error);
}

TEST_CASE("orbit formulas") {
    for (const auto& c : cat().action_cases()) {
        ActionReport r = verify_action_formulas(c, 1);
        INFO(c.id << " / " << c.reading << ": " << r.detail);
        CHECK(r.pass == c.expected_pass);
    }
}

TEST_CASE("a corrupted orbit formula is caught") {
    for (auto c : cat().action_cases()) {
        if (!c.expected_pass || c.formulas.empty()) continue;
        c.formulas[0] = simplify(c.formulas[0] + ScalarExpr::symbol("x"));
        ActionReport r = verify_action_formulas(c, 1);
        INFO(c.id);
        CHECK_FALSE(r.pass);
    }
    auto c = cat().action_cases().front();
    REQUIRE_FALSE(c.entries.empty());
    c.formulas.clear();
    c.entries[0].value = simplify(c.entries[0].value * ScalarExpr(2L));
    CHECK_FALSE(verify_action_formulas(c, 1).pass);
}

TEST_CASE("extension witnesses") {
    int split = 0;
    for (const auto& w : cat().extension_witnesses()) {
        WitnessCheck r = check_extension_witness(cat(), w);
        INFO(w.id << ": " << r.detail);
        CHECK(r.pass);
        CHECK(r.cocycle);
        CHECK(r.trivial_intersection != w.expect_split);
        split += w.expect_split;
    }
    CHECK(split == 3);
}

TEST_CASE("a witness pointed at the wrong target fails") {
    auto w = cat().extension_witnesses().front();
    w.target = w.target == "N4_01" ? "N4_05" : "N4_01";
    w.target_params.clear();
    CHECK_FALSE(check_extension_witness(cat(), w).pass);
}

TEST_CASE("split and re-extend") {
    ListFilter pure;
    pure.group = "pure4";
    for (const CatalogEntry* e : cat().list(pure)) {
        INFO(e->name);
        CHECK(split_roundtrip(e->algebra).empty());
    }
    Algebra a = cat().get("N4_14");
    CHECK_THROWS_AS(split_central_extension(a, {{1L, 0L, 0L, 0L}}), std::invalid_argument);
    CHECK_THROWS_AS(split_central_extension(a, {{0L, 0L, 0L, 1L}, {0L, 0L, 0L, 2L}}), std::invalid_argument);
    Split s = split_central_extension(a, {{0L, 0L, 0L, 1L}});
    CHECK(s.quotient.dim() == 3);
    REQUIRE(s.cocycles.size() == 1);
    CHECK(is_cocycle(s.quotient, s.cocycles[0]));
    CHECK(has_trivial_intersection(s.quotient, s.cocycles));
}

TEST_CASE("annihilator intersection") {
    Algebra a = cat().get("N3s_01");
    CHECK(has_trivial_intersection(a, {parse_cocycle(3, "D13"), parse_cocycle(3, "D21")}) == true);
    CHECK_FALSE(has_trivial_intersection(a, {parse_cocycle(3, "D12")}));
    CHECK(cocycle_annihilator(a, {parse_cocycle(3, "D12")}).size() == 1);
}

}
