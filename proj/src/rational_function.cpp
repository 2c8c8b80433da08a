#include "novikov/rational_function.hpp"

#include <stdexcept>

namespace novikov {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    if (num.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (!den.is_constant()) {
        Polynomial g = gcd(num, den);
        if (!g.is_constant()) {
            num = *num.divide_exact(g);
            den = *den.divide_exact(g);
        }
    }
    GaussRational lead = den.leading_coefficient();
    if (!lead.is_one()) {
        GaussRational inv = lead.inverse();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

GaussRational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("rational function is not constant");
    return num_.constant_term() / den_.constant_term();
}

std::set<Symbol> RationalFunction::symbols() const {
    auto out = num_.symbols();
    auto more = den_.symbols();
    out.insert(more.begin(), more.end());
    return out;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) return *this = RationalFunction(num_ + o.num_, den_);
    Polynomial g = gcd(den_, o.den_);
    Polynomial a = *den_.divide_exact(g);
    Polynomial b = *o.den_.divide_exact(g);
    return *this = RationalFunction(num_ * b + o.num_ * a, a * o.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    if (is_polynomial() && o.is_polynomial()) {
        return *this = RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    // Cross-cancel before multiplying to keep the final gcd small.
    Polynomial g1 = gcd(num_, o.den_);
    Polynomial g2 = gcd(o.num_, den_);
    Polynomial n = *num_.divide_exact(g1) * *o.num_.divide_exact(g2);
    Polynomial d = *den_.divide_exact(g2) * *o.den_.divide_exact(g1);
    return *this = RationalFunction(std::move(n), std::move(d));
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("zero denominator");
    return {den_, num_};
}

RationalFunction RationalFunction::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    return r;
}

RationalFunction RationalFunction::substitute(const std::map<Symbol, RationalFunction>& values) const {
    // Evaluate each polynomial as a rational function term by term.
    auto eval = [&values](const Polynomial& p) {
        RationalFunction acc;
        for (const auto& [m, c] : p.terms()) {
            RationalFunction term(c);
            Monomial kept;
            for (const auto& [sym, e] : m.factors()) {
                auto it = values.find(sym);
                if (it == values.end()) {
                    kept = kept * Monomial(sym, e);
                } else {
                    term *= it->second.pow(e);
                }
            }
            acc += term * RationalFunction(Polynomial(kept));
        }
        return acc;
    };
    return eval(num_) / eval(den_);
}

int RationalFunction::valuation(Symbol s) const { return num_.low_degree(s) - den_.low_degree(s); }

bool RationalFunction::regular_at_zero(Symbol s) const { return is_zero() || valuation(s) >= 0; }

RationalFunction RationalFunction::value_at_zero(Symbol s) const {
    if (is_zero()) return {};
    if (valuation(s) < 0) throw std::domain_error("pole at " + s.name() + " = 0");
    if (valuation(s) > 0) return {};
    int dn = num_.low_degree(s);
    int dd = den_.low_degree(s);
    return {num_.coefficient(s, dn), den_.coefficient(s, dd)};
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    std::string n = num_.to_string();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.to_string() + ")";
}

}  // namespace novikov
