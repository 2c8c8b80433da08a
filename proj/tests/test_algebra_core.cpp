#include "novikov/catalog.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace novikov;

namespace {

ScalarExpr q_expr(const oracle::Q& q) { return ScalarExpr(GaussRational(Rational(q))); }

// Random strictly "upper" 3- or 4-dim algebra: products land above both factors, so
// it is nilpotent; the identities may or may not hold.
Algebra random_upper(std::mt19937_64& rng, int n) {
    Algebra a("random", n);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = std::max(i, j) + 1; k < n; ++k) {
                if (coin(rng) == 0) a.set_constant(i, j, k, q_expr(oracle::small_rational(rng)));
            }
        }
    }
    return a;
}

Algebra instance(const CatalogEntry& e, std::mt19937_64& rng) {
    return e.algebra.instantiate(sample_params(e.algebra, rng));
}

oracle::Mat random_invertible(std::mt19937_64& rng, int n) {
    for (;;) {
        oracle::Mat m(n, std::vector<oracle::Q>(n));
        for (auto& row : m) {
            for (auto& x : row) x = oracle::small_rational(rng);
        }
        if (oracle::rank(m) == n) return m;
    }
}

RFMatrix to_rf(const oracle::Mat& m) {
    RFMatrix out;
    for (const auto& row : m) {
        RFVector r;
        for (const auto& x : row) r.emplace_back(GaussRational(Rational(x)));
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_SUITE("algebra-core") {

TEST_CASE("catalog instances agree with the dense oracle") {
    std::mt19937_64 rng(42);
    ListFilter all;
    all.include_aux = true;
    for (const CatalogEntry* e : Catalog::builtin().list(all)) {
        for (int s = 0; s < 2; ++s) {
            Algebra a = instance(*e, rng);
            oracle::Dense d = oracle::from(a);
            INFO(e->name);
            IdentityFlags f = check_identities(a);
            CHECK(f.novikov == oracle::is_novikov(d));
            CHECK(f.novikov);
            CHECK(derivation_dim(a) == oracle::der_dim(d));
            CHECK(static_cast<int>(annihilator_basis(a).size()) == oracle::ann_dim(d));
            auto series = derived_powers(a);
            REQUIRE(series.nilpotency_index.has_value());
            CHECK(*series.nilpotency_index == oracle::nilpotency_index(d));
        }
    }
}

TEST_CASE("random algebras: identities and derivations") {
    std::mt19937_64 rng(5);
    int novikov = 0;
    for (int trial = 0; trial < 120; ++trial) {
        Algebra a = random_upper(rng, 3 + trial % 2);
        oracle::Dense d = oracle::from(a);
        bool expected = oracle::is_novikov(d);
        novikov += expected;
        CHECK(check_identities(a).novikov == expected);
        CHECK(derivation_dim(a) == oracle::der_dim(d));
        CHECK(static_cast<int>(annihilator_basis(a).size()) == oracle::ann_dim(d));
        CHECK(derived_powers(a).nilpotency_index.value_or(-1) == oracle::nilpotency_index(d));
    }
    CHECK(novikov > 0);
    CHECK(novikov < 120);
}

TEST_CASE("nilpotency beyond dim + 1") {
    // e1e1 = e2, e2e2 = e3, e3e3 = e4: A^2 holds e2, A^4 holds e3, A^8 holds e4.
    Algebra a("squares", 4);
    for (int i = 0; i < 3; ++i) a.set_constant(i, i, i + 1, 1L);
    auto s = derived_powers(a);
    CHECK(s.nilpotency_index == 9);
    CHECK(oracle::nilpotency_index(oracle::from(a)) == 9);
    // e1e1 = e1: A^2 = A, never nilpotent.
    Algebra b("idempotent", 2);
    b.set_constant(0, 0, 0, 1L);
    CHECK_FALSE(derived_powers(b).nilpotency_index.has_value());
    CHECK(oracle::nilpotency_index(oracle::from(b)) == -1);
}

TEST_CASE("identity flags separate the two axioms") {
    // e1e2 = e3 only.
    Algebra a("a", 3);
    a.set_constant(0, 1, 2, 1L);
    CHECK(check_identities(a).novikov);
    CHECK(check_identities(a).two_step);
    // e1e1 = e2, e2e1 = e3, e1e2 = e3
    Algebra b("b", 3);
    b.set_constant(0, 0, 1, 1L);
    b.set_constant(1, 0, 2, 1L);
    b.set_constant(0, 1, 2, 1L);
    IdentityFlags f = check_identities(b);
    CHECK(f.novikov == oracle::is_novikov(oracle::from(b)));
    CHECK_FALSE(f.two_step);
}

TEST_CASE("symbolic identities hold for every family") {
    for (const CatalogEntry* e : Catalog::builtin().list()) {
        INFO(e->name);
        CHECK(check_identities(e->algebra).novikov);
    }
}

TEST_CASE("derivations of the zero algebra and the sources") {
    CHECK(derivation_dim(Catalog::builtin().get("zero_4")) == 16);
    CHECK(derivation_dim(Catalog::builtin().entry("N4_20").algebra) == 3);
    CHECK(derivation_dim(Catalog::builtin().entry("N4_22").algebra) == 3);
    Assignment at{{Symbol("alpha"), GaussRational(2)}};
    CHECK(derivation_dim(Catalog::builtin().entry("N4_20").algebra, at) == 3);
}

TEST_CASE("change of basis matches the oracle and inverts") {
    std::mt19937_64 rng(9);
    for (const char* name : {"N4_05", "N4_13", "N4_24", "N3_01"}) {
        Algebra a = Catalog::builtin().get(name);
        oracle::Mat b = random_invertible(rng, a.dim());
        Algebra c = change_basis(a, to_rf(b));
        oracle::Dense expected = oracle::conjugate(oracle::from(a), b);
        CHECK(oracle::from(c).c == expected.c);
        CHECK(change_basis(c, inverse(to_rf(b))).same_constants(a));
        CHECK(derivation_dim(c) == derivation_dim(a));
        CHECK(invariant_profile(c) == invariant_profile(a));
    }
}

TEST_CASE("invariant profile") {
    InvariantProfile p = invariant_profile(Catalog::builtin().get("N4_01"));
    CHECK(p.dim_ann == 2);
    CHECK(p.dims_derived == std::vector<int>{4, 2, 1, 0});
    CHECK(p.dim_der == 6);
    CHECK(p.nilpotency_index == 4);
    CHECK(p.to_json().at("dim_der") == 6);
}

TEST_CASE("json roundtrip") {
    for (const CatalogEntry* e : Catalog::builtin().list()) {
        Algebra back = algebra_from_json(algebra_to_json(e->algebra));
        CHECK(back.same_constants(e->algebra));
        CHECK(back.params() == e->algebra.params());
        CHECK(back.constraints().size() == e->algebra.constraints().size());
    }
    CHECK_THROWS(algebra_from_json(nlohmann::json{{"name", "bad"}, {"dim", 2},
                                                  {"products", {{{"i", 3}, {"j", 1}, {"k", 1}, {"c", "1"}}}}}));
}

TEST_CASE("instantiate and constraints") {
    const Algebra& fam = Catalog::builtin().entry("N4_06").algebra;
    CHECK_THROWS_AS(fam.instantiate({{Symbol("alpha"), GaussRational(0)}}), std::domain_error);
    Algebra a = fam.instantiate({{Symbol("alpha"), GaussRational(5)}});
    CHECK(a.params().empty());
    CHECK(a.constant(1, 0, 3) == ScalarExpr(5L));
    Algebra s = fam.substitute({{Symbol("alpha"), parse_expr("t^2")}});
    CHECK(s.constant(1, 0, 3) == parse_expr("t^2"));
}

TEST_CASE("multiplication") {
    Algebra a = Catalog::builtin().get("N4_22", {{Symbol("lambda"), GaussRational(3)}});
    Vector x = {1L, 2L, 0L, 0L}, y = {0L, 1L, 1L, 0L};
    Vector xy = multiply(a, x, y);
    // e1e2 = e3, e1e3 = -e4, e2e2 = 3e4
    CHECK(xy[2] == ScalarExpr(1L));
    CHECK(xy[3] == ScalarExpr(5L));
    Tensor c(a);
    CHECK(c(1, 0, 2).constant_value() == GaussRational(3));
}

}
