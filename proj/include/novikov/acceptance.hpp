#pragma once

#include "novikov/degeneration.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace novikov {

struct CriterionResult {
    int number = 0;
    std::string title;
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
    double seconds = 0;

    /// "criterion N PASS|FAIL title: summary"
    std::string line() const;
    nlohmann::json to_json() const;
};

struct AcceptanceOptions {
    std::uint64_t seed = 1;
    NumericOptions numeric;
};

/// Shared state for one acceptance run; degeneration rows are verified once.
class Acceptance {
public:
    explicit Acceptance(AcceptanceOptions opt = {}, const Catalog& catalog = Catalog::builtin());

    CriterionResult run(int number);
    std::vector<CriterionResult> run_all();

    const std::vector<RowOutcome>& table_b_outcomes();

    static constexpr int count = 8;

private:
    CriterionResult identities();
    CriterionResult cohomology();
    CriterionResult extensions();
    CriterionResult split_reextend();
    CriterionResult derivations();
    CriterionResult table();
    CriterionResult necessary();
    CriterionResult reachability();

    AcceptanceOptions opt_;
    const Catalog& catalog_;
    std::optional<std::vector<RowOutcome>> rows_;
};

/// Split along each annihilator basis vector and re-extend; empty on success,
/// otherwise one message per mismatch.
std::vector<std::string> split_roundtrip(const Algebra& a);

/// Families the reachability statement covers: the 24 four-dimensional families plus the two trivial ones.
std::vector<std::string> reachability_families(const Catalog& catalog);

}  // namespace novikov
