#include "novikov/degeneration.hpp"

#include "novikov/embedded_data.hpp"
#include "novikov/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <future>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace novikov {

namespace {

ExprMatrix basis_from_json(const nlohmann::json& j) {
    ExprMatrix m = parse_matrix(j);
    if (m.empty()) throw std::invalid_argument("empty basis");
    return m;
}

std::optional<DegenerationWitness::Variant> variant_from_json(const nlohmann::json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    const auto& v = j.at(key);
    DegenerationWitness::Variant out;
    if (v.contains("source")) out.source = v.at("source").get<std::string>();
    if (v.contains("source_params")) out.source_params = parse_param_map(v.at("source_params"));
    if (v.contains("basis")) out.basis = basis_from_json(v.at("basis"));
    out.note = v.value("note", std::string());
    return out;
}

std::string describe(const Assignment& at) {
    std::string s;
    for (const auto& [sym, v] : at) s += (s.empty() ? "" : ", ") + sym.name() + "=" + v.to_string();
    return s;
}

std::string ijk(int i, int j, int k) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

RFMatrix exact_basis(const ExprMatrix& b) {
    RFMatrix m;
    for (const auto& row : b) {
        RFVector r;
        for (const auto& e : row) r.push_back(*e.as_rational_function());
        m.push_back(std::move(r));
    }
    return m;
}

double log10_of(const BigFloat& x) { return x.log10_abs(); }

}  // namespace

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::Auto: return "auto";
        case Tier::Exact: return "exact";
        case Tier::Numeric: return "numeric";
    }
    return "auto";
}

std::vector<Symbol> DegenerationWitness::free_symbols() const {
    std::set<Symbol> s;
    auto add = [&](const ScalarExpr& e) {
        for (Symbol x : e.symbols()) s.insert(x);
    };
    for (const auto& [p, v] : source_params) add(v);
    for (const auto& [p, v] : target_params) add(v);
    for (const auto& row : basis) {
        for (const auto& e : row) add(e);
    }
    for (const auto& e : nonzero) add(e);
    s.erase(t_symbol());
    return {s.begin(), s.end()};
}

bool DegenerationWitness::has_roots() const {
    for (const auto& [p, v] : source_params) {
        if (v.has_roots()) return true;
    }
    for (const auto& [p, v] : target_params) {
        if (v.has_roots()) return true;
    }
    for (const auto& row : basis) {
        for (const auto& e : row) {
            if (e.has_roots()) return true;
        }
    }
    return false;
}

DegenerationWitness DegenerationWitness::with(const Variant& v) const {
    DegenerationWitness w = *this;
    if (v.source) {
        w.source = *v.source;
        w.source_params.clear();
    }
    if (v.source_params) w.source_params = *v.source_params;
    if (v.basis) w.basis = *v.basis;
    w.fallback.reset();
    w.erratum.reset();
    return w;
}

DegenerationWitness degeneration_witness_from_json(const nlohmann::json& j) {
    try {
        DegenerationWitness w;
        w.id = j.at("id").get<std::string>();
        w.source = j.at("source").get<std::string>();
        w.source_params = parse_param_map(j.value("source_params", nlohmann::json()));
        w.target = j.at("target").get<std::string>();
        nlohmann::json tp = j.value("target_params", nlohmann::json::object());
        for (const auto& [k, v] : tp.items()) {
            if (v.is_string() && v.get<std::string>() == "free") {
                w.target_params.emplace(Symbol(k), ScalarExpr::symbol(k));
            } else {
                w.target_params.emplace(Symbol(k), v.is_number_integer() ? ScalarExpr(v.get<long>())
                                                                         : parse_expr(v.get<std::string>()));
            }
        }
        w.basis = basis_from_json(j.at("basis"));
        std::string tier = j.value("tier", std::string("auto"));
        if (tier == "auto") {
            w.tier = Tier::Auto;
        } else if (tier == "exact") {
            w.tier = Tier::Exact;
        } else if (tier == "numeric") {
            w.tier = Tier::Numeric;
        } else {
            throw std::invalid_argument("unknown tier '" + tier + "'");
        }
        for (const auto& e : j.value("nonzero", nlohmann::json::array())) w.nonzero.push_back(parse_expr(e.get<std::string>()));
        w.fallback = variant_from_json(j, "fallback");
        w.erratum = variant_from_json(j, "erratum");
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed witness JSON: ") + e.what());
    }
}

const std::vector<DegenerationWitness>& table_b() {
    static const std::vector<DegenerationWitness> rows = [] {
        std::vector<DegenerationWitness> out;
        auto doc = nlohmann::json::parse(embedded_data().at("table_b.json"));
        for (const auto& j : doc.at("table_b")) out.push_back(degeneration_witness_from_json(j));
        return out;
    }();
    return rows;
}

std::vector<EntryOutcome> VerificationReport::failing() const {
    std::vector<EntryOutcome> out;
    for (const auto& e : entries) {
        if (!e.pass) out.push_back(e);
    }
    return out;
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["id"] = id;
    j["variant"] = variant;
    j["source"] = source;
    j["target"] = target;
    j["tier"] = tier_name(tier);
    j["pass"] = pass;
    j["entries_checked"] = entries.size();
    j["failing_entries"] = nlohmann::json::array();
    for (const auto& e : failing()) {
        j["failing_entries"].push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"k", e.k + 1}, {"detail", e.detail}});
    }
    if (max_residual) j["max_residual"] = *max_residual;
    if (decay_exponent) j["decay_exponent"] = *decay_exponent;
    j["samples"] = nlohmann::json::array();
    for (const auto& s : samples) {
        nlohmann::json o = nlohmann::json::object();
        for (const auto& [sym, v] : s) o[sym.name()] = v.to_string();
        j["samples"].push_back(o);
    }
    j["notes"] = notes;
    return j;
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    os << id << " [" << variant << ", " << tier_name(tier) << "] " << (pass ? "PASS" : "FAIL");
    if (max_residual) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2e", *max_residual);
        os << " max residual " << buf;
    }
    if (decay_exponent) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", *decay_exponent);
        os << " decay exponent " << buf;
    }
    auto f = failing();
    if (!f.empty()) os << "; " << f.size() << " failing entries, first " << ijk(f[0].i, f[0].j, f[0].k) << ": " << f[0].detail;
    return os.str();
}

std::vector<RationalFunction> conjugate_constants(const Tensor& c, const RFMatrix& basis) {
    int n = c.dim();
    RFMatrix inv;
    try {
        inv = inverse(basis);
    } catch (const std::domain_error&) {
        throw std::domain_error("singular basis");
    }
    std::vector<RationalFunction> out(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RFVector prod = c.multiply(basis[i], basis[j]);
            for (int k = 0; k < n; ++k) {
                RationalFunction s;
                for (int r = 0; r < n; ++r) {
                    if (!prod[r].is_zero() && !inv[r][k].is_zero()) s += prod[r] * inv[r][k];
                }
                out[(i * n + j) * n + k] = s;
            }
        }
    }
    return out;
}

std::vector<BigComplex> conjugate_constants(const std::vector<BigComplex>& c, const ComplexMatrix& basis,
                                            const BigFloat& tolerance) {
    int n = static_cast<int>(basis.size());
    mpfr_prec_t prec = tolerance.precision();
    ComplexMatrix inv;
    try {
        inv = inverse(basis, tolerance);
    } catch (const std::domain_error&) {
        throw std::domain_error("basis numerically singular");
    }
    std::vector<BigComplex> out;
    out.reserve(static_cast<std::size_t>(n) * n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<BigComplex> prod(n, BigComplex(prec));
            for (int p = 0; p < n; ++p) {
                if (basis[i][p].is_zero()) continue;
                for (int q = 0; q < n; ++q) {
                    if (basis[j][q].is_zero()) continue;
                    BigComplex w = basis[i][p] * basis[j][q];
                    for (int r = 0; r < n; ++r) {
                        const BigComplex& x = c[(p * n + q) * n + r];
                        if (!x.is_zero()) prod[r] = prod[r] + w * x;
                    }
                }
            }
            for (int k = 0; k < n; ++k) {
                BigComplex s(prec);
                for (int r = 0; r < n; ++r) s = s + prod[r] * inv[r][k];
                out.push_back(s);
            }
        }
    }
    return out;
}

std::vector<Rational> default_schedule() {
    std::vector<Rational> out;
    for (int k = 1; k <= 5; ++k) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, 6 * k);
        out.push_back(Rational(Integer(1), p));
    }
    return out;
}

VerificationReport verify_exact(const Catalog& catalog, const DegenerationWitness& w) {
    if (w.has_roots()) {
        throw std::invalid_argument("tier mismatch: " + w.id + " contains radicals; use the numeric tier");
    }
    VerificationReport rep;
    rep.id = w.id;
    rep.source = w.source;
    rep.target = w.target;
    rep.tier = Tier::Exact;
    Algebra src = catalog.get_symbolic(w.source, w.source_params);
    Algebra tgt = catalog.get_symbolic(w.target, w.target_params);
    int n = src.dim();
    if (tgt.dim() != n || static_cast<int>(w.basis.size()) != n) throw std::invalid_argument(w.id + ": dimension mismatch");
    Tensor cs(src), ct(tgt);
    RFMatrix b = exact_basis(w.basis);
    std::vector<RationalFunction> cp;
    try {
        cp = conjugate_constants(cs, b);
    } catch (const std::domain_error& e) {
        rep.pass = false;
        rep.notes.push_back(e.what());
        return rep;
    }
    Symbol t = t_symbol();
    rep.pass = true;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const RationalFunction& c = cp[(i * n + j) * n + k];
                EntryOutcome o{i, j, k, true, ""};
                if (!c.regular_at_zero(t)) {
                    o.pass = false;
                    o.detail = "pole of order " + std::to_string(-c.valuation(t)) + " at t = 0: " + c.to_string();
                } else {
                    RationalFunction lim = c.value_at_zero(t);
                    if (lim != ct(i, j, k)) {
                        o.pass = false;
                        o.detail = "limit " + lim.to_string() + ", target " + ct(i, j, k).to_string();
                    }
                }
                rep.pass = rep.pass && o.pass;
                rep.entries.push_back(std::move(o));
            }
        }
    }
    return rep;
}

VerificationReport verify_numeric(const Catalog& catalog, const DegenerationWitness& w, const NumericOptions& opt) {
    if (opt.digits < 16) throw std::invalid_argument("digits must be at least 16");
    VerificationReport rep;
    rep.id = w.id;
    rep.source = w.source;
    rep.target = w.target;
    rep.tier = Tier::Numeric;
    std::vector<Rational> schedule = opt.schedule.empty() ? default_schedule() : opt.schedule;
    Algebra src = catalog.get_symbolic(w.source, w.source_params);
    Algebra tgt = catalog.get_symbolic(w.target, w.target_params);
    int n = src.dim();
    if (tgt.dim() != n || static_cast<int>(w.basis.size()) != n) throw std::invalid_argument(w.id + ": dimension mismatch");
    Symbol t = t_symbol();

    std::vector<Symbol> free = w.free_symbols();
    std::vector<ScalarExpr> nonzero = w.nonzero;
    for (const auto& c : tgt.constraints()) nonzero.push_back(c);
    for (const auto& c : src.constraints()) {
        if (!c.contains(t)) nonzero.push_back(c);
    }

    // Guard digits against cancellation, sized from the t-orders of the inputs.
    double vmin = 0, vmax = 0, cmin = 0;
    bool first = true;
    for (const auto& row : w.basis) {
        for (const auto& e : row) {
            auto v = estimated_valuation(e, t);
            if (!v) continue;
            double d = v->get_d();
            vmin = first ? d : std::min(vmin, d);
            vmax = first ? d : std::max(vmax, d);
            first = false;
        }
    }
    for (const auto& [key, c] : src.constants()) {
        if (auto v = estimated_valuation(c, t)) cmin = std::min(cmin, v->get_d());
    }
    double depth = 0;
    for (const auto& tk : schedule) depth = std::max(depth, -std::log10(tk.get_d()));
    int guard = static_cast<int>(std::ceil((3 * (vmax - vmin) + 2 * std::max(0.0, -vmin) + std::max(0.0, -cmin) + 2) * depth)) + 20;
    int work = opt.digits + guard;
    mpfr_prec_t prec = precision_for_digits(work);
    BigFloat tolerance = power_of_ten(prec, -(work - 10));
    double floor_log = -(opt.digits - 10);
    double tol_log = std::log10(opt.tolerance);
    rep.notes.push_back("digits " + std::to_string(opt.digits) + " plus " + std::to_string(guard) + " guard digits");

    std::mt19937_64 rng(opt.seed);
    int nsamples = free.empty() ? 1 : opt.samples;
    std::size_t n3 = static_cast<std::size_t>(n) * n * n;
    std::vector<EntryOutcome> outcomes(n3);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) outcomes[(i * n + j) * n + k] = {i, j, k, true, ""};
        }
    }
    double max_res = -std::numeric_limits<double>::infinity();
    std::optional<double> decay;
    bool singular = false;

    for (int s = 0; s < nsamples && !singular; ++s) {
        Assignment at = free.empty() ? Assignment{} : sample_assignment(free, nonzero, rng);
        rep.samples.push_back(at);
        std::vector<BigComplex> target;
        target.reserve(n3);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) target.push_back(eval(tgt.constant(i, j, k), at, work));
            }
        }
        std::vector<std::vector<double>> res(schedule.size(), std::vector<double>(n3));
        for (std::size_t step = 0; step < schedule.size(); ++step) {
            Assignment here = at;
            here[t] = GaussRational(schedule[step]);
            ComplexMatrix a(n, std::vector<BigComplex>(n, BigComplex(prec)));
            std::vector<BigComplex> c(n3, BigComplex(prec));
            try {
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        if (!w.basis[i][j].is_literal_zero()) a[i][j] = eval(w.basis[i][j], here, work);
                    }
                }
                for (const auto& [key, v] : src.constants()) c[(key[0] * n + key[1]) * n + key[2]] = eval(v, here, work);
                std::vector<BigComplex> cp = conjugate_constants(c, a, tolerance);
                for (std::size_t idx = 0; idx < n3; ++idx) res[step][idx] = log10_of((cp[idx] - target[idx]).abs());
            } catch (const std::domain_error& e) {
                rep.notes.push_back(std::string(e.what()) + " at t = " + to_string(schedule[step]) +
                                    (at.empty() ? "" : ", " + describe(at)));
                singular = true;
                break;
            }
        }
        if (singular) break;
        std::size_t last = schedule.size() - 1;
        for (std::size_t idx = 0; idx < n3; ++idx) {
            EntryOutcome& o = outcomes[idx];
            auto where = [&](std::size_t step) {
                return "t = " + to_string(schedule[step]) + (at.empty() ? "" : ", " + describe(at));
            };
            for (std::size_t step = 1; step < schedule.size() && o.pass; ++step) {
                double prev = res[step - 1][idx], cur = res[step][idx];
                if (cur > floor_log && cur > prev + 1e-9) {
                    o.pass = false;
                    char buf[128];
                    std::snprintf(buf, sizeof buf, "residual grows from %.2e to %.2e at ", std::pow(10.0, prev), std::pow(10.0, cur));
                    o.detail = buf + where(step);
                }
            }
            double fin = res[last][idx];
            if (o.pass && fin > tol_log) {
                o.pass = false;
                char buf[128];
                std::snprintf(buf, sizeof buf, "residual %.2e exceeds tolerance at ", std::pow(10.0, fin));
                o.detail = buf + where(last);
            }
            max_res = std::max(max_res, fin);
            if (last >= 1 && res[last][idx] > floor_log && res[last - 1][idx] > floor_log) {
                double dt = std::log10(schedule[last - 1].get_d()) - std::log10(schedule[last].get_d());
                double e = (res[last - 1][idx] - res[last][idx]) / dt;
                decay = decay ? std::min(*decay, e) : e;
            }
        }
    }
    rep.pass = !singular;
    for (auto& o : outcomes) {
        rep.pass = rep.pass && o.pass;
        rep.entries.push_back(std::move(o));
    }
    if (!singular) rep.max_residual = std::isfinite(max_res) ? std::pow(10.0, max_res) : 0.0;
    rep.decay_exponent = decay;
    if (!singular && !decay) rep.notes.push_back("all final residuals below the noise floor");
    return rep;
}

VerificationReport verify(const Catalog& catalog, const DegenerationWitness& w, const NumericOptions& opt) {
    Tier tier = w.tier;
    if (tier == Tier::Auto) tier = w.has_roots() ? Tier::Numeric : Tier::Exact;
    return tier == Tier::Exact ? verify_exact(catalog, w) : verify_numeric(catalog, w, opt);
}

std::string RowOutcome::status() const {
    if (literal.pass) return "pass";
    if (fallback && fallback->pass) return "fallback pass";
    if (erratum && erratum->pass) return "erratum pass";
    return "fail";
}

nlohmann::json RowOutcome::to_json() const {
    nlohmann::json j;
    j["id"] = id;
    j["status"] = status();
    j["literal"] = literal.to_json();
    if (fallback) j["fallback"] = fallback->to_json();
    if (erratum) j["erratum"] = erratum->to_json();
    return j;
}

std::uint64_t row_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

RowOutcome verify_row(const Catalog& catalog, const DegenerationWitness& w, const NumericOptions& opt) {
    NumericOptions o = opt;
    o.seed = row_seed(opt.seed, w.id);
    auto run = [&](const DegenerationWitness& x, const std::string& variant, const std::string& note) {
        VerificationReport r;
        try {
            r = verify(catalog, x, o);
        } catch (const std::exception& e) {
            r.id = x.id;
            r.source = x.source;
            r.target = x.target;
            r.pass = false;
            r.notes.push_back(e.what());
        }
        r.variant = variant;
        if (!note.empty()) r.notes.push_back(note);
        return r;
    };
    RowOutcome out;
    out.id = w.id;
    out.literal = run(w, "literal", "");
    if (!out.literal.pass && w.fallback) out.fallback = run(w.with(*w.fallback), "fallback", w.fallback->note);
    if (!out.literal.pass && w.erratum) out.erratum = run(w.with(*w.erratum), "erratum", w.erratum->note);
    return out;
}

std::vector<RowOutcome> verify_rows(const Catalog& catalog, const std::vector<DegenerationWitness>& rows,
                                    const NumericOptions& opt) {
    std::vector<RowOutcome> out;
    if (!mpfr_buildopt_tls_p()) {
        for (const auto& w : rows) out.push_back(verify_row(catalog, w, opt));
        return out;
    }
    std::vector<std::future<RowOutcome>> jobs;
    for (const auto& w : rows) jobs.push_back(std::async(std::launch::async, [&catalog, &w, &opt] {
        RowOutcome r = verify_row(catalog, w, opt);
        mpfr_free_cache();
        return r;
    }));
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

nlohmann::json NecessaryReport::to_json() const {
    return {{"id", id},
            {"skipped", skipped},
            {"pass", pass},
            {"parametrized_index", parametrized_index},
            {"family_condition", family_condition},
            {"lines", lines}};
}

NecessaryReport check_necessary(const Algebra& source, const Algebra& target) {
    NecessaryReport r;
    r.id = source.name() + " -> " + target.name();
    if (source.name() == target.name() && source.same_constants(target)) {
        r.skipped = true;
        r.lines.push_back("same algebra: not a proper degeneration");
        return r;
    }
    int ds = derivation_dim(source), dt = derivation_dim(target);
    r.pass = ds < dt;
    r.family_condition = ds <= dt;
    r.lines.push_back("dim Der " + std::to_string(ds) + (r.pass ? " < " : " >= ") + std::to_string(dt));
    return r;
}

NecessaryReport check_necessary(const Catalog& catalog, const DegenerationWitness& w, std::uint64_t seed, int samples) {
    NecessaryReport r;
    r.id = w.id;
    Symbol t = t_symbol();
    Algebra src_family = catalog.entry(w.source).algebra;
    Algebra src = catalog.get_symbolic(w.source, w.source_params);
    Algebra tgt = catalog.get_symbolic(w.target, w.target_params);
    if (w.source == w.target && w.source_params.empty() && w.target_params.empty()) {
        r.skipped = true;
        r.lines.push_back("same algebra: not a proper degeneration");
        return r;
    }
    for (const auto& [p, v] : w.source_params) r.parametrized_index = r.parametrized_index || v.contains(t);
    std::vector<Symbol> free = w.free_symbols();
    std::vector<ScalarExpr> nonzero = w.nonzero;
    for (const auto& c : tgt.constraints()) nonzero.push_back(c);
    std::mt19937_64 rng(row_seed(seed, w.id + "/der"));
    int k = free.empty() ? 1 : samples;
    for (int s = 0; s < k; ++s) {
        Assignment at = free.empty() ? Assignment{} : sample_assignment(free, nonzero, rng);
        std::map<Symbol, ScalarExpr> values;
        for (const auto& [sym, v] : at) values.emplace(sym, ScalarExpr(v));
        Algebra target = tgt.substitute(values);
        Algebra source = src_family;
        std::string how = "generic family";
        if (!src.has_roots()) {
            source = src.substitute(values);
            bool has_t = false;
            for (const auto& [key, c] : source.constants()) has_t = has_t || c.contains(t);
            how = has_t ? "index generic in t" : "exact";
        }
        int ds = derivation_dim(source), dt = derivation_dim(target);
        bool ok = ds < dt;
        r.pass = r.pass && ok;
        r.family_condition = r.family_condition && ds <= dt;
        r.lines.push_back((at.empty() ? std::string() : describe(at) + ": ") + "dim Der " + w.source + " " +
                          std::to_string(ds) + (ok ? " < " : " >= ") + std::to_string(dt) + " " + w.target +
                          " (" + how + ")");
    }
    return r;
}

std::vector<Edge> verified_edges(const std::vector<RowOutcome>& rows) {
    std::vector<Edge> out;
    for (const auto& r : rows) {
        for (const VerificationReport* v : {&r.literal, r.fallback ? &*r.fallback : nullptr, r.erratum ? &*r.erratum : nullptr}) {
            if (v && v->pass) out.push_back({v->source, v->target, r.id, v->variant});
        }
    }
    return out;
}

ReachabilityReport build_reachability(const std::vector<Edge>& edges, const std::vector<std::string>& families,
                                      const std::vector<std::string>& sources) {
    ReachabilityReport rep;
    rep.sources = sources;
    rep.families = families;
    rep.edges = edges;
    std::deque<std::string> queue;
    for (const auto& s : sources) {
        rep.paths[s] = {};
        queue.push_back(s);
    }
    while (!queue.empty()) {
        std::string u = queue.front();
        queue.pop_front();
        for (const auto& e : edges) {
            if (e.from != u || rep.paths.count(e.to)) continue;
            std::vector<Edge> p = rep.paths[u];
            p.push_back(e);
            rep.paths[e.to] = std::move(p);
            queue.push_back(e.to);
        }
    }
    for (const auto& f : families) {
        if (!rep.paths.count(f)) rep.unreachable.push_back(f);
    }
    for (const auto& e : edges) {
        if (e.from != e.to && std::find(sources.begin(), sources.end(), e.to) != sources.end()) {
            rep.edges_into_sources.push_back(e);
        }
    }
    return rep;
}

std::string ReachabilityReport::to_dot() const {
    std::ostringstream os;
    os << "digraph degenerations {\n  rankdir=TB;\n";
    for (const auto& s : sources) os << "  \"" << s << "\" [shape=box];\n";
    for (const auto& f : families) {
        if (std::find(sources.begin(), sources.end(), f) != sources.end()) continue;
        os << "  \"" << f << "\"" << (paths.count(f) ? "" : " [style=dashed]") << ";\n";
    }
    for (const auto& e : edges) {
        os << "  \"" << e.from << "\" -> \"" << e.to << "\"";
        if (e.via != "literal") os << " [label=\"" << e.via << "\", style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::json ReachabilityReport::to_json() const {
    nlohmann::json j;
    j["sources"] = sources;
    j["reachable"] = nlohmann::json::object();
    for (const auto& f : families) {
        auto it = paths.find(f);
        if (it == paths.end()) continue;
        nlohmann::json p = nlohmann::json::array();
        for (const auto& e : it->second) p.push_back({{"row", e.row}, {"via", e.via}});
        j["reachable"][f] = p;
    }
    j["unreachable"] = unreachable;
    j["edges_into_sources"] = nlohmann::json::array();
    for (const auto& e : edges_into_sources) j["edges_into_sources"].push_back(e.row);
    return j;
}

}  // namespace novikov
