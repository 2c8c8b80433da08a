#include "novikov/sampling.hpp"

#include <stdexcept>

namespace novikov {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    long p = 0;
    while (p == 0) p = num(rng);
    Rational q(p, den(rng));
    q.canonicalize();
    return q;
}

Assignment sample_assignment(const std::vector<Symbol>& symbols, const std::vector<ScalarExpr>& nonzero,
                             std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Assignment at;
        for (Symbol s : symbols) at[s] = GaussRational(random_rational(rng));
        std::map<Symbol, ScalarExpr> values;
        for (const auto& [s, v] : at) values.emplace(s, ScalarExpr(v));
        bool ok = true;
        for (const auto& e : nonzero) {
            try {
                ScalarExpr v = simplify(substitute(e, values));
                if (v.is_literal_zero()) ok = false;
                if (v.has_roots() && is_zero(v, ZeroMode::numeric(40), at)) ok = false;
            } catch (const std::domain_error&) {
                ok = false;
            }
            if (!ok) break;
        }
        if (ok) return at;
    }
    throw std::runtime_error("could not sample an admissible parameter assignment");
}

}  // namespace novikov
