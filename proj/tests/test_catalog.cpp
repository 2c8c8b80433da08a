#include "novikov/catalog.hpp"
#include "novikov/embedded_data.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace novikov;
using nlohmann::json;

namespace {

const Catalog& cat() { return Catalog::builtin(); }

std::vector<json> shipped_documents() {
    std::vector<json> docs;
    for (const auto& [name, text] : embedded_data()) {
        if (name != "table_b.json") docs.push_back(json::parse(text));
    }
    return docs;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("named instances") {
    Algebra n402 = cat().get("N4_02", {{Symbol("lambda"), GaussRational(3)}});
    CHECK(n402.params().empty());
    CHECK(n402.constant(0, 0, 1) == ScalarExpr(1L));
    CHECK(n402.constant(0, 1, 2) == ScalarExpr(1L));
    CHECK(n402.constant(1, 0, 2) == ScalarExpr(3L));
    CHECK(n402.constants().size() == 3);

    Algebra tr3 = cat().get("Ntriv_3", {{Symbol("alpha"), GaussRational(2)}});
    CHECK(tr3.constant(0, 1, 3) == ScalarExpr(2L));
    CHECK(tr3.constant(1, 0, 3) == ScalarExpr(-2L));
    CHECK(tr3.constant(2, 2, 3) == ScalarExpr(1L));
    CHECK(oracle::is_novikov(oracle::from(tr3)));
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(cat().get("N4_06", {{Symbol("alpha"), GaussRational(0)}}), std::domain_error);
    CHECK_NOTHROW(cat().get("N4_06", {{Symbol("alpha"), GaussRational(1)}}));
    CHECK_THROWS_AS(cat().get("N4_06"), std::invalid_argument);
    CHECK_THROWS_AS(cat().get("N4_01", {{Symbol("alpha"), GaussRational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(cat().get("N4_99"), std::out_of_range);
    CHECK_THROWS_AS(cat().get("N3s_04", {{Symbol("lambda"), GaussRational(0)}}), std::domain_error);
}

TEST_CASE("aliases") {
    CHECK(cat().entry("trivial_4").name == "zero_4");
    CHECK(cat().entry("𝔑₄").name == "zero_4");
    CHECK(cat().entry("N⁴₂₀").name == "N4_20");
    CHECK(cat().entry("N_3").name == "Ntriv_3");
    CHECK(cat().get("trivial_4").constants().empty());
    CHECK(cat().get("trivial_4").dim() == 4);
    CHECK(cat().contains("N³₀₂"));
    CHECK_FALSE(cat().contains("N5_01"));
}

TEST_CASE("listing") {
    CHECK(cat().list().size() == 34);
    ListFilter all;
    all.include_aux = true;
    CHECK(cat().list(all).size() == 38);
    ListFilter d3;
    d3.dim = 3;
    CHECK(cat().list(d3).size() == 6);
    ListFilter pure;
    pure.group = "pure4";
    CHECK(cat().list(pure).size() == 24);
    ListFilter trivial;
    trivial.group = "trivial4";
    CHECK(cat().list(trivial).size() == 2);
    auto names = cat().list();
    CHECK(names.front()->name == "N4_01");
}

TEST_CASE("symbolic specialization keeps t and new symbols") {
    Algebra a = cat().get_symbolic("N4_20", {{Symbol("alpha"), parse_expr("t^2 - 1")}});
    CHECK(a.params().empty());
    CHECK(a.constant(0, 0, 3) == parse_expr("t^2 - 1"));
    Algebra b = cat().get_symbolic("N4_04", {{Symbol("alpha"), parse_expr("beta + 1")}});
    REQUIRE(b.params().size() == 1);
    CHECK(b.params()[0].name() == "beta");
    CHECK(cat().get_symbolic("N4_04", {}).params().size() == 1);
}

TEST_CASE("catalog verification") {
    CatalogReport r = verify_catalog(cat(), 1);
    CHECK(r.failures == 0);
    CHECK(r.to_json().at("failures") == 0);
    std::mt19937_64 rng(1);
    for (const CatalogEntry* e : cat().list()) {
        EntryCheck c = check_entry(*e, 3, rng);
        INFO(e->name);
        CHECK(c.pass);
    }
}

TEST_CASE("a corrupted fixture is reported") {
    auto docs = shipped_documents();
    for (auto& d : docs) {
        if (!d.contains("algebras")) continue;
        for (auto& a : d["algebras"]) {
            // N4_05 becomes e1e1 = e1 (not nilpotent); N4_01 gains e1e2 = e4.
            if (a["name"] == "N4_01") a["products"].push_back({{"i", 1}, {"j", 2}, {"k", 4}, {"c", "1"}});
            if (a["name"] == "N4_05") a["products"] = json::array({{{"i", 1}, {"j", 1}, {"k", 1}, {"c", "1"}}});
        }
    }
    Catalog broken = Catalog::from_documents(docs);
    std::mt19937_64 rng(1);
    EntryCheck nil = check_entry(broken.entry("N4_05"), 2, rng);
    CHECK_FALSE(nil.pass);
    bool expected_n401 = oracle::is_novikov(oracle::from(broken.get("N4_01")));
    EntryCheck n401 = check_entry(broken.entry("N4_01"), 2, rng);
    CHECK(n401.pass == (expected_n401 && invariant_profile(broken.get("N4_01")).nilpotency_index.has_value()));
    CatalogReport r = verify_catalog(broken, 1);
    CHECK(r.failures >= 1);
}

TEST_CASE("a corrupted golden row is reported") {
    GoldenCohomology g = cat().golden_cohomology().front();
    g.h2.pop_back();
    GoldenCheck c = check_golden(cat(), g);
    CHECK_FALSE(c.pass);
    GoldenCohomology h = cat().golden_cohomology().front();
    h.b2 = {parse_cocycle(3, "D12")};
    CHECK_FALSE(check_golden(cat(), h).pass);
}

TEST_CASE("user files") {
    auto path = std::filesystem::temp_directory_path() / "novikov_user_algebra.json";
    {
        std::ofstream out(path);
        out << R"({"algebras": [{"name": "mine", "dim": 3, "params": ["a"], "constraints_nonzero": ["a"],
                   "products": [{"i": 1, "j": 2, "k": 3, "c": "a"}]}]})";
    }
    Catalog c = Catalog::builtin();
    c.load_file(path.string());
    std::filesystem::remove(path);
    CHECK(c.entry("mine").group == "user");
    CHECK(c.get("mine", {{Symbol("a"), GaussRational(4)}}).constant(0, 1, 2) == ScalarExpr(4L));
    CHECK_THROWS_AS(c.get("mine", {{Symbol("a"), GaussRational(0)}}), std::domain_error);
    CHECK_THROWS(c.load_file("/nonexistent/file.json"));
    CHECK_THROWS(c.add_algebras(json::parse(R"({"name": "N4_01", "dim": 2, "products": []})")));
}

TEST_CASE("extension witnesses parse") {
    const auto& ws = cat().extension_witnesses();
    CHECK(ws.size() == 27);
    auto it = std::find_if(ws.begin(), ws.end(), [](const ExtensionWitness& w) { return w.id == "N2s_01/2dim"; });
    REQUIRE(it != ws.end());
    CHECK(it->cocycles.size() == 2);
    CHECK(it->target == "N4_03");
    json bad = {{"id", "x"}, {"base", "N3s_01"}, {"cocycle", "D44"}, {"target", "N4_01"}};
    CHECK_THROWS(extension_witness_from_json(cat(), bad));
}

TEST_CASE("printed constraints are flagged") {
    for (const auto& w : cat().extension_witnesses()) {
        if (w.id != "N3s_01/1a") continue;
        WitnessCheck r = check_extension_witness(cat(), w);
        CHECK(r.pass);
        CHECK(r.constraint_flag.has_value());
    }
}

}
