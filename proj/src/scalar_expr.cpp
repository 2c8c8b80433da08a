#include "novikov/scalar_expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>

namespace novikov {

struct ScalarExpr::Node {
    Kind kind = Kind::Leaf;
    RationalFunction value;
    std::vector<ScalarExpr> args;
    long index = 0;
    bool has_roots = false;
};

ScalarExpr::ScalarExpr() : ScalarExpr(RationalFunction()) {}

ScalarExpr::ScalarExpr(RationalFunction value) {
    auto node = std::make_shared<Node>();
    node->value = std::move(value);
    node_ = std::move(node);
}

ScalarExpr ScalarExpr::symbol(std::string_view name) { return symbol(Symbol(name)); }

ScalarExpr ScalarExpr::symbol(Symbol s) { return ScalarExpr(RationalFunction::symbol(s)); }

ScalarExpr::Kind ScalarExpr::kind() const { return node_->kind; }

const RationalFunction& ScalarExpr::leaf() const {
    if (!is_leaf()) throw std::logic_error("expression is not a rational-function leaf");
    return node_->value;
}

const std::vector<ScalarExpr>& ScalarExpr::args() const { return node_->args; }

long ScalarExpr::index() const { return node_->index; }

bool ScalarExpr::has_roots() const { return node_->has_roots; }

bool ScalarExpr::contains(Symbol s) const {
    if (is_leaf()) return node_->value.contains(s);
    return std::any_of(args().begin(), args().end(), [s](const ScalarExpr& a) { return a.contains(s); });
}

std::set<Symbol> ScalarExpr::symbols() const {
    if (is_leaf()) return node_->value.symbols();
    std::set<Symbol> out;
    for (const auto& a : args()) {
        auto more = a.symbols();
        out.insert(more.begin(), more.end());
    }
    return out;
}

std::optional<RationalFunction> ScalarExpr::as_rational_function() const {
    if (is_leaf()) return node_->value;
    if (has_roots()) return std::nullopt;
    ScalarExpr s = simplify(*this);
    if (s.is_leaf()) return s.leaf();
    return std::nullopt;
}

ScalarExpr ScalarExpr::make(Kind kind, std::vector<ScalarExpr> args, long index) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->index = index;
    node->has_roots = kind == Kind::Root ||
                      std::any_of(args.begin(), args.end(), [](const ScalarExpr& a) { return a.has_roots(); });
    node->args = std::move(args);
    return ScalarExpr(std::shared_ptr<const Node>(std::move(node)));
}

ScalarExpr ScalarExpr::operator-() const {
    if (is_leaf()) return ScalarExpr(-leaf());
    return ScalarExpr(-1L) * *this;
}

ScalarExpr operator+(const ScalarExpr& a, const ScalarExpr& b) {
    RationalFunction acc;
    std::vector<ScalarExpr> args;
    auto push = [&](const ScalarExpr& x) {
        if (x.is_leaf()) {
            acc += x.leaf();
        } else if (x.kind() == ScalarExpr::Kind::Add) {
            for (const auto& y : x.args()) {
                if (y.is_leaf()) {
                    acc += y.leaf();
                } else {
                    args.push_back(y);
                }
            }
        } else {
            args.push_back(x);
        }
    };
    push(a);
    push(b);
    if (args.empty()) return ScalarExpr(acc);
    if (!acc.is_zero()) args.insert(args.begin(), ScalarExpr(acc));
    if (args.size() == 1) return args.front();
    return ScalarExpr::make(ScalarExpr::Kind::Add, std::move(args));
}

ScalarExpr operator-(const ScalarExpr& a, const ScalarExpr& b) { return a + (-b); }

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
    RationalFunction acc(1);
    std::vector<ScalarExpr> args;
    auto push = [&](const ScalarExpr& x) {
        if (x.is_leaf()) {
            acc *= x.leaf();
        } else if (x.kind() == ScalarExpr::Kind::Mul) {
            for (const auto& y : x.args()) {
                if (y.is_leaf()) {
                    acc *= y.leaf();
                } else {
                    args.push_back(y);
                }
            }
        } else {
            args.push_back(x);
        }
    };
    push(a);
    push(b);
    if (args.empty() || acc.is_zero()) return ScalarExpr(acc);
    if (!acc.is_one()) args.insert(args.begin(), ScalarExpr(acc));
    if (args.size() == 1) return args.front();
    return ScalarExpr::make(ScalarExpr::Kind::Mul, std::move(args));
}

ScalarExpr operator/(const ScalarExpr& a, const ScalarExpr& b) {
    if (b.is_leaf()) {
        if (b.leaf().is_zero()) throw std::domain_error("zero denominator");
        return a * ScalarExpr(b.leaf().inverse());
    }
    if (a.is_literal_zero()) return a;
    return ScalarExpr::make(ScalarExpr::Kind::Div, {a, b});
}

ScalarExpr ScalarExpr::pow(long k) const {
    if (is_leaf()) return ScalarExpr(leaf().pow(k));
    if (k == 0) return ScalarExpr(1L);
    if (k == 1) return *this;
    if (kind() == Kind::Pow) return args().front().pow(k * index());
    return make(Kind::Pow, {*this}, k);
}

ScalarExpr root(long m, const ScalarExpr& radicand) {
    if (m < 1) throw std::invalid_argument("root index must be positive");
    if (m == 1) return radicand;
    if (radicand.is_leaf() && (radicand.leaf().is_zero() || radicand.leaf().is_one())) return radicand;
    return ScalarExpr::make(ScalarExpr::Kind::Root, {radicand}, m);
}

bool operator==(const ScalarExpr& a, const ScalarExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.index() != b.index()) return false;
    if (a.is_leaf()) return a.leaf() == b.leaf();
    return a.args() == b.args();
}

namespace {

bool leaf_is_simple(const RationalFunction& f) {
    return f.is_polynomial() && f.num().terms().size() <= 1 &&
           (f.num().is_zero() || f.num().leading_coefficient().is_real());
}

std::string wrapped(const ScalarExpr& e) {
    std::string s = e.to_string();
    bool simple = (e.is_leaf() && leaf_is_simple(e.leaf())) || e.kind() == ScalarExpr::Kind::Root ||
                  e.kind() == ScalarExpr::Kind::Pow;
    return simple ? s : "(" + s + ")";
}

}  // namespace

std::string ScalarExpr::to_string() const {
    switch (kind()) {
        case Kind::Leaf:
            return leaf().to_string();
        case Kind::Add: {
            std::string out;
            for (const auto& a : args()) {
                std::string s = (a.is_leaf() && !leaf_is_simple(a.leaf())) ? "(" + a.to_string() + ")" : a.to_string();
                if (out.empty()) {
                    out = s;
                } else if (s.front() == '-') {
                    out += " - " + s.substr(1);
                } else {
                    out += " + " + s;
                }
            }
            return out;
        }
        case Kind::Mul: {
            std::string out;
            for (const auto& a : args()) {
                if (out.empty() && a.is_leaf() && a.leaf() == RationalFunction(-1)) {
                    out = "-";
                    continue;
                }
                std::string s = wrapped(a);
                if (out.empty() || out == "-") {
                    out += s;
                } else {
                    out += "*" + s;
                }
            }
            return out;
        }
        case Kind::Div:
            return wrapped(args()[0]) + "/" + wrapped(args()[1]);
        case Kind::Pow: {
            const auto& base = args().front();
            std::string b = base.kind() == Kind::Root ? base.to_string() : "(" + base.to_string() + ")";
            return b + "^" + (index() < 0 ? "(" + std::to_string(index()) + ")" : std::to_string(index()));
        }
        case Kind::Root:
            return "root(" + std::to_string(index()) + ", " + args().front().to_string() + ")";
    }
    return {};
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ScalarExpr parse() {
        ScalarExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("expression parse error at position " + std::to_string(pos_) + ": " +
                                    what + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    ScalarExpr expr() {
        ScalarExpr acc = term();
        while (true) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    ScalarExpr term() {
        ScalarExpr acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                acc = acc / factor();
            } else {
                return acc;
            }
        }
    }

    ScalarExpr factor() {
        if (accept('-')) return -factor();
        if (accept('+')) return factor();
        ScalarExpr b = base();
        if (accept('^')) return b.pow(exponent());
        return b;
    }

    long exponent() {
        bool paren = accept('(');
        bool negative = accept('-');
        long k = integer();
        if (paren) expect(')');
        return negative ? -k : k;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        if (pos_ - start > 9) fail("integer exponent too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    ScalarExpr base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ScalarExpr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return ScalarExpr(GaussRational(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            if (name == "i") return ScalarExpr::i();
            if ((name == "root" || name == "sqrt" || name == "cbrt") && peek() == '(') {
                ++pos_;
                long m = name == "sqrt" ? 2 : 3;
                if (name == "root") {
                    m = integer();
                    if (m < 1) fail("root index must be positive");
                    expect(',');
                }
                ScalarExpr radicand = expr();
                expect(')');
                return novikov::root(m, radicand);
            }
            return ScalarExpr::symbol(name);
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Simplification: radicals become opaque symbols "~root(...)" so the whole
// expression is a rational function; atom^m is then rewritten to its radicand.

namespace {

struct Atom {
    Symbol symbol;
    long index;
    RationalFunction radicand;
    ScalarExpr expr;
};

using AtomTable = std::map<Symbol, Atom>;

RationalFunction to_rational(const ScalarExpr& e, AtomTable& atoms) {
    using Kind = ScalarExpr::Kind;
    switch (e.kind()) {
        case Kind::Leaf:
            return e.leaf();
        case Kind::Add: {
            RationalFunction acc;
            for (const auto& a : e.args()) acc += to_rational(a, atoms);
            return acc;
        }
        case Kind::Mul: {
            RationalFunction acc(1);
            for (const auto& a : e.args()) acc *= to_rational(a, atoms);
            return acc;
        }
        case Kind::Div:
            return to_rational(e.args()[0], atoms) / to_rational(e.args()[1], atoms);
        case Kind::Pow:
            return to_rational(e.args()[0], atoms).pow(e.index());
        case Kind::Root: {
            ScalarExpr radicand = simplify(e.args()[0]);
            ScalarExpr atom = root(e.index(), radicand);
            if (atom.is_leaf()) return atom.leaf();
            Symbol sym("~" + atom.to_string());
            if (atoms.find(sym) == atoms.end()) {
                RationalFunction r = to_rational(radicand, atoms);
                atoms.emplace(sym, Atom{sym, e.index(), r, atom});
            }
            return RationalFunction::symbol(sym);
        }
    }
    return {};
}

RationalFunction reduce_powers(const Polynomial& p, const AtomTable& atoms, bool& changed) {
    RationalFunction acc;
    for (const auto& [m, c] : p.terms()) {
        RationalFunction term(c);
        Monomial kept;
        for (const auto& [sym, e] : m.factors()) {
            auto it = atoms.find(sym);
            if (it != atoms.end() && e >= it->second.index) {
                term *= it->second.radicand.pow(e / it->second.index);
                kept = kept * Monomial(sym, static_cast<int>(e % it->second.index));
                changed = true;
            } else {
                kept = kept * Monomial(sym, e);
            }
        }
        acc += term * RationalFunction(Polynomial(kept));
    }
    return acc;
}

bool is_atom(Symbol s) { return !s.name().empty() && s.name().front() == '~'; }

ScalarExpr from_polynomial(const Polynomial& p, const RationalFunction& scale, const AtomTable& atoms) {
    std::map<Monomial, Polynomial, LexGreater> groups;
    for (const auto& [m, c] : p.terms()) {
        Monomial atom_part;
        Monomial rest;
        for (const auto& [sym, e] : m.factors()) {
            if (is_atom(sym)) {
                atom_part = atom_part * Monomial(sym, e);
            } else {
                rest = rest * Monomial(sym, e);
            }
        }
        groups[atom_part] += Polynomial(rest, c);
    }
    ScalarExpr out;
    for (const auto& [atom_part, coeff] : groups) {
        ScalarExpr term(RationalFunction(coeff) * scale);
        for (const auto& [sym, e] : atom_part.factors()) term = term * atoms.at(sym).expr.pow(e);
        out = out + term;
    }
    return out;
}

}  // namespace

ScalarExpr simplify(const ScalarExpr& e) {
    if (e.is_leaf()) return e;
    AtomTable atoms;
    RationalFunction f = to_rational(e, atoms);
    for (int pass = 0; pass < 16; ++pass) {
        bool changed = false;
        RationalFunction n = reduce_powers(f.num(), atoms, changed);
        RationalFunction d = reduce_powers(f.den(), atoms, changed);
        if (!changed) break;
        f = n / d;
    }
    bool den_has_atoms = false;
    for (Symbol s : f.den().symbols()) den_has_atoms = den_has_atoms || is_atom(s);
    if (!den_has_atoms) return from_polynomial(f.num(), RationalFunction(f.den()).inverse(), atoms);
    return from_polynomial(f.num(), RationalFunction(1), atoms) /
           from_polynomial(f.den(), RationalFunction(1), atoms);
}

ScalarExpr substitute(const ScalarExpr& e, const std::map<Symbol, ScalarExpr>& values) {
    using Kind = ScalarExpr::Kind;
    switch (e.kind()) {
        case Kind::Leaf: {
            bool touched = false;
            bool all_leaves = true;
            for (Symbol s : e.leaf().symbols()) {
                auto it = values.find(s);
                if (it == values.end()) continue;
                touched = true;
                all_leaves = all_leaves && it->second.is_leaf();
            }
            if (!touched) return e;
            if (all_leaves) {
                std::map<Symbol, RationalFunction> rf;
                for (const auto& [s, v] : values) rf.emplace(s, v.leaf());
                return ScalarExpr(e.leaf().substitute(rf));
            }
            auto expand = [&values](const Polynomial& p) {
                ScalarExpr acc;
                for (const auto& [m, c] : p.terms()) {
                    ScalarExpr term{RationalFunction(c)};
                    for (const auto& [sym, k] : m.factors()) {
                        auto it = values.find(sym);
                        term = term * (it == values.end() ? ScalarExpr::symbol(sym) : it->second).pow(k);
                    }
                    acc = acc + term;
                }
                return acc;
            };
            return expand(e.leaf().num()) / expand(e.leaf().den());
        }
        case Kind::Add: {
            ScalarExpr acc;
            for (const auto& a : e.args()) acc = acc + substitute(a, values);
            return acc;
        }
        case Kind::Mul: {
            ScalarExpr acc(1L);
            for (const auto& a : e.args()) acc = acc * substitute(a, values);
            return acc;
        }
        case Kind::Div:
            return substitute(e.args()[0], values) / substitute(e.args()[1], values);
        case Kind::Pow:
            return substitute(e.args()[0], values).pow(e.index());
        case Kind::Root:
            return root(e.index(), substitute(e.args()[0], values));
    }
    return e;
}

// ---------------------------------------------------------------------------
// Zero tests and evaluation

namespace {

using LeafEval = std::function<BigComplex(const RationalFunction&)>;

BigComplex eval_tree(const ScalarExpr& e, const LeafEval& leaf, mpfr_prec_t prec, int digits) {
    using Kind = ScalarExpr::Kind;
    switch (e.kind()) {
        case Kind::Leaf:
            return leaf(e.leaf());
        case Kind::Add: {
            BigComplex acc(prec);
            for (const auto& a : e.args()) acc = acc + eval_tree(a, leaf, prec, digits);
            return acc;
        }
        case Kind::Mul: {
            BigComplex acc(BigFloat(prec, 1), BigFloat(prec));
            for (const auto& a : e.args()) acc = acc * eval_tree(a, leaf, prec, digits);
            return acc;
        }
        case Kind::Div: {
            BigComplex den = eval_tree(e.args()[1], leaf, prec, digits);
            if (den.abs() < power_of_ten(prec, -digits)) {
                throw std::domain_error("division by numerically zero subexpression");
            }
            return eval_tree(e.args()[0], leaf, prec, digits) / den;
        }
        case Kind::Pow: {
            BigComplex b = eval_tree(e.args()[0], leaf, prec, digits);
            if (e.index() < 0 && b.abs() < power_of_ten(prec, -digits)) {
                throw std::domain_error("division by numerically zero subexpression");
            }
            return b.pow(e.index());
        }
        case Kind::Root:
            return eval_tree(e.args()[0], leaf, prec, digits).principal_root(static_cast<unsigned long>(e.index()));
    }
    return BigComplex(prec);
}

void require_digits(int digits) {
    if (digits < 16) throw std::invalid_argument("evaluation needs at least 16 digits");
}

}  // namespace

BigComplex eval(const ScalarExpr& e, const Assignment& at, int digits) {
    require_digits(digits);
    mpfr_prec_t prec = precision_for_digits(digits + 10);
    std::map<Symbol, RationalFunction> values;
    for (const auto& [s, v] : at) values.emplace(s, RationalFunction(v));
    LeafEval leaf = [&](const RationalFunction& f) {
        for (Symbol s : f.symbols()) {
            if (values.find(s) == values.end()) throw std::domain_error("unassigned symbol '" + s.name() + "'");
        }
        RationalFunction v;
        try {
            v = f.substitute(values);
        } catch (const std::domain_error&) {
            throw std::domain_error("division by zero at the given assignment");
        }
        return BigComplex(prec, v.constant_value());
    };
    return eval_tree(e, leaf, prec, digits);
}

BigComplex eval(const ScalarExpr& e, const std::map<Symbol, BigComplex>& at, int digits) {
    require_digits(digits);
    mpfr_prec_t prec = precision_for_digits(digits + 10);
    auto poly = [&](const Polynomial& p) {
        BigComplex acc(prec);
        for (const auto& [m, c] : p.terms()) {
            BigComplex term(prec, c);
            for (const auto& [sym, k] : m.factors()) {
                auto it = at.find(sym);
                if (it == at.end()) throw std::domain_error("unassigned symbol '" + sym.name() + "'");
                term = term * it->second.pow(k);
            }
            acc = acc + term;
        }
        return acc;
    };
    LeafEval leaf = [&](const RationalFunction& f) {
        BigComplex den = poly(f.den());
        if (den.abs() < power_of_ten(prec, -digits)) {
            throw std::domain_error("division by numerically zero subexpression");
        }
        return poly(f.num()) / den;
    };
    return eval_tree(e, leaf, prec, digits);
}

bool is_zero(const ScalarExpr& e, ZeroMode mode, const Assignment& at) {
    if (mode.is_exact()) {
        if (e.has_roots()) throw std::domain_error("exact zero-test unsupported for radicals");
        return simplify(e).is_literal_zero();
    }
    BigComplex v = eval(e, at, mode.digits());
    return !(power_of_ten(v.precision(), -(mode.digits() / 2)) < v.abs());
}

std::optional<Rational> estimated_valuation(const ScalarExpr& e, Symbol s) {
    using Kind = ScalarExpr::Kind;
    switch (e.kind()) {
        case Kind::Leaf:
            if (e.leaf().is_zero()) return std::nullopt;
            return Rational(e.leaf().valuation(s));
        case Kind::Add: {
            std::optional<Rational> best;
            for (const auto& a : e.args()) {
                auto v = estimated_valuation(a, s);
                if (v && (!best || *v < *best)) best = v;
            }
            return best;
        }
        case Kind::Mul: {
            Rational acc(0);
            for (const auto& a : e.args()) {
                auto v = estimated_valuation(a, s);
                if (!v) return std::nullopt;
                acc += *v;
            }
            return acc;
        }
        case Kind::Div: {
            auto a = estimated_valuation(e.args()[0], s);
            auto b = estimated_valuation(e.args()[1], s);
            if (!a || !b) return std::nullopt;
            return Rational(*a - *b);
        }
        case Kind::Pow: {
            auto a = estimated_valuation(e.args()[0], s);
            if (!a) return std::nullopt;
            return Rational(*a * e.index());
        }
        case Kind::Root: {
            auto a = estimated_valuation(e.args()[0], s);
            if (!a) return std::nullopt;
            return Rational(*a / e.index());
        }
    }
    return std::nullopt;
}

}  // namespace novikov
