#include "novikov/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace novikov {

Symbol::Symbol(std::string_view name) {
    static std::mutex mutex;
    static std::set<std::string, std::less<>> table;
    std::lock_guard lock(mutex);
    auto it = table.find(name);
    if (it == table.end()) it = table.emplace(name).first;
    name_ = &*it;
}

Symbol t_symbol() {
    static const Symbol t("t");
    return t;
}

Monomial::Monomial(Symbol s, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent in monomial");
    if (exp > 0) factors_.emplace_back(s, exp);
}

int Monomial::degree(Symbol s) const {
    for (const auto& [sym, e] : factors_) {
        if (sym == s) return e;
    }
    return 0;
}

int Monomial::total_degree() const {
    int d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

Monomial Monomial::without(Symbol s) const {
    Monomial m;
    for (const auto& f : factors_) {
        if (!(f.first == s)) m.factors_.push_back(f);
    }
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    for (const auto& [sym, e] : factors_) {
        if (other.degree(sym) < e) return false;
    }
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial m;
    for (const auto& [sym, e] : other.factors_) {
        int d = e - degree(sym);
        if (d > 0) m.factors_.emplace_back(sym, d);
    }
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            m.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            m.factors_.push_back(*j++);
        } else {
            m.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return m;
}

std::string Monomial::to_string() const {
    std::string out;
    for (const auto& [sym, e] : factors_) {
        if (!out.empty()) out += "*";
        out += sym.name();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (!(fa[i].first == fb[i].first)) return fa[i].first < fb[i].first;
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return fa.size() > fb.size();
}

Polynomial::Polynomial(GaussRational c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), std::move(c));
}

Polynomial::Polynomial(const Monomial& m, GaussRational c) {
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

GaussRational Polynomial::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? GaussRational() : it->second;
}

std::set<Symbol> Polynomial::symbols() const {
    std::set<Symbol> out;
    for (const auto& term : terms_) {
        for (const auto& f : term.first.factors()) out.insert(f.first);
    }
    return out;
}

bool Polynomial::contains(Symbol s) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [s](const auto& term) { return term.first.degree(s) > 0; });
}

int Polynomial::degree(Symbol s) const {
    int d = 0;
    for (const auto& term : terms_) d = std::max(d, term.first.degree(s));
    return d;
}

int Polynomial::low_degree(Symbol s) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first.degree(s);
    for (const auto& term : terms_) d = std::min(d, term.first.degree(s));
    return d;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& term : terms_) d = std::max(d, term.first.total_degree());
    return d;
}

Polynomial Polynomial::coefficient(Symbol s, int k) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.degree(s) == k) out.terms_.emplace(m.without(s), c);
    }
    return out;
}

std::vector<Polynomial> Polynomial::coefficients(Symbol s) const {
    std::vector<Polynomial> out(static_cast<std::size_t>(degree(s)) + 1);
    for (const auto& [m, c] : terms_) {
        out[static_cast<std::size_t>(m.degree(s))].terms_.emplace(m.without(s), c);
    }
    return out;
}

void Polynomial::add_term(const Monomial& m, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::scaled(const GaussRational& c) const {
    if (c.is_zero()) return {};
    Polynomial out;
    for (const auto& [m, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, v * c);
    return out;
}

Polynomial Polynomial::times(const Monomial& m) const {
    Polynomial out;
    for (const auto& [mm, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), mm * m, v);
    return out;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& other) const {
    if (other.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial quotient;
    Polynomial rest = *this;
    const Monomial& lm = other.leading_monomial();
    GaussRational inv = other.leading_coefficient().inverse();
    while (!rest.is_zero()) {
        const Monomial& rm = rest.leading_monomial();
        if (!lm.divides(rm)) return std::nullopt;
        Monomial q = lm.quotient_of(rm);
        GaussRational c = rest.leading_coefficient() * inv;
        quotient.add_term(q, c);
        rest -= other.times(q).scaled(c);
    }
    return quotient;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::substitute(Symbol s, const Polynomial& value) const {
    if (!contains(s)) return *this;
    auto coeffs = coefficients(s);
    // Horner in s.
    Polynomial out;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out = out * value + *it;
    return out;
}

Polynomial Polynomial::substitute(const std::map<Symbol, Polynomial>& values) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        Monomial kept;
        for (const auto& [sym, e] : m.factors()) {
            auto it = values.find(sym);
            if (it == values.end()) {
                kept = kept * Monomial(sym, e);
            } else {
                term *= it->second.pow(static_cast<unsigned>(e));
            }
        }
        out += term.times(kept);
    }
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        GaussRational coeff = c;
        bool negative = coeff.is_real() && sgn(coeff.re()) < 0;
        if (negative) coeff = -coeff;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string cs = coeff.to_string();
        bool fractional = coeff.is_real() && coeff.re().get_den() != 1;
        if (m.is_one()) {
            out += cs;
        } else if (coeff.is_one()) {
            out += m.to_string();
        } else {
            out += (fractional ? "(" + cs + ")" : cs) + "*" + m.to_string();
        }
    }
    return out;
}

namespace {

// Smallest symbol occurring in either polynomial.
std::optional<Symbol> main_symbol(const Polynomial& a, const Polynomial& b) {
    auto sa = a.symbols();
    auto sb = b.symbols();
    std::optional<Symbol> best;
    for (Symbol s : sa) {
        if (!best || s < *best) best = s;
    }
    for (Symbol s : sb) {
        if (!best || s < *best) best = s;
    }
    return best;
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    auto q = a.divide_exact(b);
    if (!q) throw std::logic_error("inexact polynomial division in gcd");
    return *q;
}

Polynomial primitive_part(const Polynomial& p, Symbol s) {
    if (p.is_zero()) return p;
    return exact_div(p, content(p, s));
}

// Pseudo-remainder of a by b in s; both have positive degree in s.
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, Symbol s) {
    int db = b.degree(s);
    Polynomial lb = b.coefficient(s, db);
    while (!a.is_zero() && a.degree(s) >= db) {
        int da = a.degree(s);
        Polynomial la = a.coefficient(s, da);
        a = lb * a - (la * b).times(Monomial(s, da - db));
    }
    return a;
}

}  // namespace

Polynomial content(const Polynomial& p, Symbol s) {
    Polynomial g;
    for (const auto& c : p.coefficients(s)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g.monic();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    Symbol s = *main_symbol(a, b);
    if (!a.contains(s)) return gcd(a, content(b, s));
    if (!b.contains(s)) return gcd(content(a, s), b);

    Polynomial ca = content(a, s);
    Polynomial cb = content(b, s);
    Polynomial c = gcd(ca, cb);
    Polynomial p = exact_div(a, ca);
    Polynomial q = exact_div(b, cb);
    if (p.degree(s) < q.degree(s)) std::swap(p, q);
    while (true) {
        Polynomial r = pseudo_remainder(p, q, s);
        if (r.is_zero()) break;
        if (r.degree(s) == 0) {
            q = Polynomial(1);
            break;
        }
        p = std::move(q);
        q = primitive_part(r, s);
    }
    return (c * primitive_part(q, s)).monic();
}

}  // namespace novikov
