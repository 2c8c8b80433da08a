#include "novikov/puiseux.hpp"

#include <stdexcept>

namespace novikov {

namespace {

[[noreturn]] void not_normalizable() { throw std::domain_error("not Puiseux-normalizable"); }

ScalarExpr t_power(const Rational& q) {
    if (q.get_den() == 1) return ScalarExpr::t().pow(q.get_num().get_si());
    return root(q.get_den().get_si(), ScalarExpr::t().pow(q.get_num().get_si()));
}

}  // namespace

PuiseuxExpr PuiseuxExpr::monomial(ScalarExpr coeff, Rational exponent) {
    PuiseuxExpr p;
    p.add_term(coeff, exponent);
    return p;
}

void PuiseuxExpr::add_term(const ScalarExpr& coeff, const Rational& exponent) {
    auto it = terms_.begin();
    while (it != terms_.end() && it->exponent < exponent) ++it;
    if (it != terms_.end() && it->exponent == exponent) {
        ScalarExpr sum = simplify(it->coeff + coeff);
        if (sum.is_literal_zero()) {
            terms_.erase(it);
        } else {
            it->coeff = sum;
        }
        return;
    }
    ScalarExpr c = simplify(coeff);
    if (!c.is_literal_zero()) terms_.insert(it, Term{c, exponent});
}

std::optional<Rational> PuiseuxExpr::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().exponent;
}

PuiseuxExpr operator+(const PuiseuxExpr& a, const PuiseuxExpr& b) {
    PuiseuxExpr out = a;
    for (const auto& term : b.terms_) out.add_term(term.coeff, term.exponent);
    return out;
}

PuiseuxExpr operator*(const PuiseuxExpr& a, const PuiseuxExpr& b) {
    PuiseuxExpr out;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) out.add_term(x.coeff * y.coeff, Rational(x.exponent + y.exponent));
    }
    return out;
}

PuiseuxExpr PuiseuxExpr::operator-() const {
    PuiseuxExpr out = *this;
    for (auto& term : out.terms_) term.coeff = simplify(-term.coeff);
    return out;
}

ScalarExpr PuiseuxExpr::to_expr() const {
    ScalarExpr out;
    for (const auto& term : terms_) out = out + term.coeff * t_power(term.exponent);
    return out;
}

std::string PuiseuxExpr::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) out += ", ";
        out += "(" + terms_[k].coeff.to_string() + ", " + novikov::to_string(terms_[k].exponent) + ")";
    }
    return out + "]";
}

PuiseuxExpr puiseux_normalize(const ScalarExpr& e) {
    using Kind = ScalarExpr::Kind;
    const Symbol t = t_symbol();
    switch (e.kind()) {
        case Kind::Leaf: {
            const RationalFunction& f = e.leaf();
            const Polynomial& den = f.den();
            int k = den.low_degree(t);
            if (den.degree(t) != k) not_normalizable();
            RationalFunction den_rest(den.coefficient(t, k));
            PuiseuxExpr out;
            std::vector<Polynomial> parts = f.num().coefficients(t);
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (parts[j].is_zero()) continue;
                out.add_term(ScalarExpr(RationalFunction(parts[j]) / den_rest), Rational(static_cast<long>(j) - k));
            }
            return out;
        }
        case Kind::Add: {
            PuiseuxExpr out;
            for (const auto& a : e.args()) out = out + puiseux_normalize(a);
            return out;
        }
        case Kind::Mul: {
            PuiseuxExpr out = PuiseuxExpr::monomial(ScalarExpr(1L), Rational(0));
            for (const auto& a : e.args()) out = out * puiseux_normalize(a);
            return out;
        }
        case Kind::Div: {
            PuiseuxExpr den = puiseux_normalize(e.args()[1]);
            if (den.terms().size() != 1) not_normalizable();
            const auto& d = den.terms().front();
            return puiseux_normalize(e.args()[0]) *
                   PuiseuxExpr::monomial(ScalarExpr(1L) / d.coeff, Rational(-d.exponent));
        }
        case Kind::Pow: {
            PuiseuxExpr base = puiseux_normalize(e.args()[0]);
            long k = e.index();
            if (k < 0) {
                if (base.terms().size() != 1) not_normalizable();
                const auto& b = base.terms().front();
                return PuiseuxExpr::monomial(b.coeff.pow(k), Rational(b.exponent * k));
            }
            PuiseuxExpr out = PuiseuxExpr::monomial(ScalarExpr(1L), Rational(0));
            for (long j = 0; j < k; ++j) out = out * base;
            return out;
        }
        case Kind::Root: {
            PuiseuxExpr radicand = puiseux_normalize(e.args()[0]);
            if (radicand.is_zero()) return radicand;
            if (radicand.terms().size() != 1) not_normalizable();
            const auto& r = radicand.terms().front();
            return PuiseuxExpr::monomial(root(e.index(), r.coeff), Rational(r.exponent / e.index()));
        }
    }
    not_normalizable();
}

}  // namespace novikov
