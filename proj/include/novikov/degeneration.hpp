#pragma once

#include "novikov/catalog.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace novikov {

enum class Tier { Auto, Exact, Numeric };

std::string tier_name(Tier t);

struct DegenerationWitness {
    std::string id;
    std::string source;
    std::map<Symbol, ScalarExpr> source_params;   // parametrized index, may contain t
    std::string target;
    std::map<Symbol, ScalarExpr> target_params;   // "free" maps a parameter to itself
    ExprMatrix basis;                              // row i: E_i = sum_j basis[i][j] e_j
    Tier tier = Tier::Auto;
    std::vector<ScalarExpr> nonzero;               // excluded parameter values

    /// Alternative reading of the row (a different source, index or basis).
    struct Variant {
        std::optional<std::string> source;
        std::optional<std::map<Symbol, ScalarExpr>> source_params;
        std::optional<ExprMatrix> basis;
        std::string note;
    };
    std::optional<Variant> fallback;
    std::optional<Variant> erratum;

    /// Symbols other than t appearing anywhere in the row.
    std::vector<Symbol> free_symbols() const;
    bool has_roots() const;
    DegenerationWitness with(const Variant& v) const;
};

DegenerationWitness degeneration_witness_from_json(const nlohmann::json& j);
/// The shipped degeneration table, in table order.
const std::vector<DegenerationWitness>& table_b();

struct EntryOutcome {
    int i = 0, j = 0, k = 0;   // zero-based
    bool pass = true;
    std::string detail;
};

struct VerificationReport {
    std::string id;
    std::string variant = "literal";   // literal | fallback | erratum
    std::string source;
    std::string target;
    Tier tier = Tier::Exact;
    bool pass = false;
    std::vector<EntryOutcome> entries;
    std::optional<double> max_residual;
    std::optional<double> decay_exponent;
    std::vector<Assignment> samples;
    std::vector<std::string> notes;

    std::vector<EntryOutcome> failing() const;
    nlohmann::json to_json() const;
    std::string summary() const;
};

/// c'_ij^k of E_i E_j = sum_k c'_ij^k E_k, index (i*n + j)*n + k.
/// Throws std::domain_error("singular basis").
std::vector<RationalFunction> conjugate_constants(const Tensor& c, const RFMatrix& basis);
std::vector<BigComplex> conjugate_constants(const std::vector<BigComplex>& c, const ComplexMatrix& basis,
                                            const BigFloat& tolerance);

struct NumericOptions {
    std::vector<Rational> schedule;   // empty: 10^(-6k), k = 1..5
    int digits = 120;
    int samples = 3;
    std::uint64_t seed = 1;
    double tolerance = 1e-8;
};

std::vector<Rational> default_schedule();

/// Throws std::invalid_argument on a tier mismatch (radicals in an exact-tier row).
VerificationReport verify_exact(const Catalog& catalog, const DegenerationWitness& w);
VerificationReport verify_numeric(const Catalog& catalog, const DegenerationWitness& w, const NumericOptions& opt);
/// Tier from the hint, or from expression inspection for Tier::Auto.
VerificationReport verify(const Catalog& catalog, const DegenerationWitness& w, const NumericOptions& opt);

struct RowOutcome {
    std::string id;
    VerificationReport literal;
    std::optional<VerificationReport> fallback;
    std::optional<VerificationReport> erratum;

    /// "pass", "fallback pass", "erratum pass" or "fail".
    std::string status() const;
    nlohmann::json to_json() const;
};

/// Literal reading first; fallback and erratum readings are run only when it fails.
RowOutcome verify_row(const Catalog& catalog, const DegenerationWitness& w, const NumericOptions& opt);
/// Rows are independent; they run concurrently and come back in input order.
std::vector<RowOutcome> verify_rows(const Catalog& catalog, const std::vector<DegenerationWitness>& rows,
                                    const NumericOptions& opt);

struct NecessaryReport {
    std::string id;
    bool skipped = false;
    bool pass = true;
    /// The index depends on t: a family degeneration A(*) -> B.
    bool parametrized_index = false;
    /// dim Der(A(alpha)) <= dim Der(B) at every sample, the family form of the condition.
    bool family_condition = true;
    std::vector<std::string> lines;
    nlohmann::json to_json() const;
};

/// dim Der(source) < dim Der(target) for two instantiated (or generic) algebras.
NecessaryReport check_necessary(const Algebra& source, const Algebra& target);
/// Per sampled parameter value, along the witness's parametrized index. Root-free
/// indices keep t generic; indices with radicals fall back to the generic source family.
NecessaryReport check_necessary(const Catalog& catalog, const DegenerationWitness& w, std::uint64_t seed,
                                int samples = 3);

struct Edge {
    std::string from;
    std::string to;
    std::string row;
    std::string via;   // literal | fallback | erratum
};

std::vector<Edge> verified_edges(const std::vector<RowOutcome>& rows);

struct ReachabilityReport {
    std::vector<std::string> sources;
    std::vector<std::string> families;
    std::map<std::string, std::vector<Edge>> paths;   // reachable family -> edge path from a source
    std::vector<std::string> unreachable;
    std::vector<Edge> edges_into_sources;             // proper edges ending at a source
    std::vector<Edge> edges;

    bool all_reachable() const { return unreachable.empty(); }
    std::string to_dot() const;
    nlohmann::json to_json() const;
};

ReachabilityReport build_reachability(const std::vector<Edge>& edges, const std::vector<std::string>& families,
                                      const std::vector<std::string>& sources = {"N4_20", "N4_22"});

/// Stable per-row seed.
std::uint64_t row_seed(std::uint64_t seed, const std::string& id);

}  // namespace novikov
