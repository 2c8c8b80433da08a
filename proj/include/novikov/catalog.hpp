#pragma once

#include "novikov/cohomology.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace novikov {

struct CatalogEntry {
    std::string name;
    std::string label;
    std::string group;        // pure4, lowdim, trivial4, aux, user
    std::string source_ref;
    std::vector<std::string> aliases;
    Algebra algebra;
    bool purity_expected = true;

    const std::vector<Symbol>& family_params() const { return algebra.params(); }
};

struct ExtensionWitness {
    std::string id;
    std::string base;
    std::map<Symbol, ScalarExpr> base_params;
    std::vector<Cocycle> cocycles;
    std::string target;
    std::map<Symbol, ScalarExpr> target_params;
    std::string case_ref;
    std::vector<ScalarExpr> printed_constraints;
    bool expect_split = false;
    std::string note;
};

struct GoldenCohomology {
    std::string algebra;
    std::vector<Cocycle> z2;
    std::vector<Cocycle> b2;
    std::vector<Cocycle> h2;
};

struct ListFilter {
    std::optional<int> dim;
    std::optional<bool> pure;
    std::optional<std::string> group;
    bool include_aux = false;
};

class Catalog {
public:
    /// The shipped data: algebras, extension witnesses, golden cohomology, action formulas.
    static const Catalog& builtin();
    static Catalog from_documents(const std::vector<nlohmann::json>& docs);

    /// Accepts {"algebras": [...]}, a bare array, or a single algebra object.
    void add_algebras(const nlohmann::json& doc, const std::string& default_group = "user");
    void add_document(const nlohmann::json& doc);
    void load_file(const std::string& path);

    bool contains(std::string_view name) const;
    /// Resolves names, labels and aliases. Throws std::out_of_range("unknown algebra: ...").
    const CatalogEntry& entry(std::string_view name) const;
    /// Every family parameter must be assigned; constraints are checked.
    Algebra get(std::string_view name, const Assignment& params = {}) const;
    /// Symbolic specialization; unassigned parameters stay generic.
    Algebra get_symbolic(std::string_view name, const std::map<Symbol, ScalarExpr>& params) const;
    std::vector<const CatalogEntry*> list(const ListFilter& filter = {}) const;

    const std::vector<ExtensionWitness>& extension_witnesses() const { return witnesses_; }
    const std::vector<GoldenCohomology>& golden_cohomology() const { return golden_; }
    const std::vector<ActionFormulaCase>& action_cases() const { return actions_; }

private:
    std::vector<CatalogEntry> entries_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<ExtensionWitness> witnesses_;
    std::vector<GoldenCohomology> golden_;
    std::vector<ActionFormulaCase> actions_;
};

std::map<Symbol, ScalarExpr> parse_param_map(const nlohmann::json& j);

ExtensionWitness extension_witness_from_json(const Catalog& catalog, const nlohmann::json& j);

struct WitnessCheck {
    std::string id;
    bool cocycle = false;
    bool trivial_intersection = false;
    bool matches_target = false;
    bool pass = false;
    std::string detail;
    std::optional<std::string> constraint_flag;
};

/// Generic (exact) check of one witness. Split witnesses pass when the cocycle is
/// valid and Ann(A) meets Ann(theta).
WitnessCheck check_extension_witness(const Catalog& catalog, const ExtensionWitness& w);

struct GoldenCheck {
    std::string algebra;
    int z2 = 0, b2 = 0, h2 = 0;
    bool pass = false;
    std::string detail;
};

GoldenCheck check_golden(const Catalog& catalog, const GoldenCohomology& g);

struct EntryCheck {
    std::string name;
    bool pass = true;
    std::vector<std::string> failures;
};

/// Novikov identities, nilpotency and purity, generically and at `samples` admissible points.
EntryCheck check_entry(const CatalogEntry& e, int samples, std::mt19937_64& rng);

/// Admissible sample for the family parameters of `a` (empty if none).
Assignment sample_params(const Algebra& a, std::mt19937_64& rng);

struct CatalogReport {
    int failures = 0;
    std::vector<std::string> lines;
    std::vector<std::string> flags;
    std::vector<std::pair<std::string, std::string>> indistinguishable;
    nlohmann::json to_json() const;
};

CatalogReport verify_catalog(const Catalog& catalog, std::uint64_t seed);

}  // namespace novikov
