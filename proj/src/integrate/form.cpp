#include "liouville/integrate/form.hpp"

#include <optional>

#include "json.hpp"
#include "liouville/syntax/printer.hpp"

namespace liouville {

namespace {

bool negative_constant(const GaussRat& c) { return c.re().sign() < 0 || (c.re().is_zero() && c.im().sign() < 0); }

bool reads_negative(const TowerElem& f) { return !f.is_zero() && negative_constant(f.numerator().base_lc()); }

Expr power_expr(const Expr& base, int k) {
    if (k == 1) return base;
    return Expr::binary(Op::Pow, base, Expr::constant(GaussRat(k)));
}

// Signed sum of terms; a leading negative term keeps its sign on the constant.
class SumBuilder {
public:
    void add(Expr term, bool negative) {
        if (!sum_) {
            sum_ = negative ? negate_leading(term) : std::move(term);
        } else {
            sum_ = negative ? *sum_ - term : *sum_ + term;
        }
    }
    Expr result() const { return sum_ ? *sum_ : Expr::constant(GaussRat()); }

private:
    std::optional<Expr> sum_;
};

std::string coefficient_prefix(const GaussRat& c) {
    if (c.is_one()) return "";
    std::string s = c.str();
    if (s.find(' ') != std::string::npos) s = "(" + s + ")";
    return s + "*";
}

Expr constant_poly_expr(const Poly<GaussRat>& p, const Expr& var) {
    SumBuilder s;
    for (int k = p.degree(); k >= 0; --k) {
        GaussRat c = p.coeff(k);
        if (c.is_zero()) continue;
        bool neg = negative_constant(c);
        if (neg) c = -c;
        if (k == 0)
            s.add(Expr::constant(c), neg);
        else if (c.is_one())
            s.add(power_expr(var, k), neg);
        else
            s.add(Expr::constant(c) * power_expr(var, k), neg);
    }
    return s.result();
}

const Expr& alpha_var() {
    static const Expr a = Expr::variable("alpha");
    return a;
}

}  // namespace

std::string ConstantValue::str() const {
    if (is_exact()) return exact().str();
    return "RootOf(" + pretty_print(constant_poly_expr(root_of().poly, alpha_var())) + ")";
}

LogTerm LogTerm::exact(GaussRat lambda, TowerElem arg) { return {ConstantValue{std::move(lambda)}, TPoly(std::move(arg))}; }

std::vector<GaussRat> power_sums(const Poly<GaussRat>& q) {
    const int n = q.degree();
    std::vector<GaussRat> p(static_cast<size_t>(std::max(n, 0)));
    if (n <= 0) return p;
    p[0] = GaussRat(n);
    // a_j is the coefficient of z^j; Newton: p_k + a_{n-1} p_{k-1} + ... + a_{n-k+1} p_1 + k a_{n-k} = 0
    for (int k = 1; k < n; ++k) {
        GaussRat s = GaussRat(k) * q.coeff(n - k);
        for (int i = 1; i < k; ++i) s += q.coeff(n - i) * p[static_cast<size_t>(k - i)];
        p[static_cast<size_t>(k)] = -s;
    }
    return p;
}

namespace {

Poly<GaussRat> interpolate(const std::vector<GaussRat>& xs, std::vector<GaussRat> ys) {
    // Newton divided differences
    const size_t n = xs.size();
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
    Poly<GaussRat> p(ys[n - 1]);
    for (size_t i = n - 1; i-- > 0;)
        p = p * Poly<GaussRat>(std::vector<GaussRat>{-xs[i], GaussRat(1)}) + Poly<GaussRat>(ys[i]);
    return p;
}

Poly<GaussRat> at_point(const TPoly& p, const GaussRat& x0) {
    std::vector<GaussRat> v;
    for (const auto& c : p.coeffs()) v.push_back(evaluate_exact(c, {x0}));
    return Poly<GaussRat>(std::move(v));
}

GaussRat trace_of(const Poly<GaussRat>& w, const std::vector<GaussRat>& p) {
    GaussRat s;
    for (int k = 0; k <= w.degree(); ++k) s += w.coeff(k) * p[static_cast<size_t>(k)];
    return s;
}

// Sum of alpha*Dv/v over the roots of q when v has coefficients in Q(i)[x]
// and is monic of degree k in x: the sum is P/N with N = res_alpha(q, v) of
// degree n*k and deg P < n*k, both interpolated from exact values over Q(i).
std::optional<TowerElem> base_root_sum(const Tower& t, const Poly<GaussRat>& q, const TPoly& arg) {
    int k = 0;
    for (const auto& c : arg.coeffs()) {
        if (c.level() > 0 || !c.denominator().is_one()) return std::nullopt;
        if (c.level() == 0) k = std::max(k, c.num(0).degree());
    }
    const TPoly darg = t.derive_coefficients(arg);
    const std::vector<GaussRat> p = power_sums(q);
    const int n = q.degree();
    const size_t need = static_cast<size_t>(n * k + 1);
    std::vector<GaussRat> xs, ns, ps;
    for (long i = 0; xs.size() < need; ++i) {
        if (i > 4 * static_cast<long>(need) + 8) return std::nullopt;
        const GaussRat x0((i & 1) ? -(i + 1) / 2 : i / 2);
        const Poly<GaussRat> v0 = rem(at_point(arg, x0), q);
        if (v0.is_zero()) continue;
        auto e = extended_gcd(v0, q);
        if (e.g.degree() > 0) continue;
        const Poly<GaussRat> w = rem(Poly<GaussRat>::variable() * at_point(darg, x0) * e.s, q);
        const GaussRat nv = resultant(q, v0);
        xs.push_back(x0);
        ns.push_back(nv);
        ps.push_back(trace_of(w, p) * nv);
    }
    auto lift = [](const Poly<GaussRat>& f) {
        std::vector<TowerElem> c;
        for (const auto& a : f.coeffs()) c.emplace_back(a);
        return TPoly(std::move(c));
    };
    const Poly<GaussRat> den = interpolate(xs, ns), num = interpolate(xs, ps);
    if (num.is_zero()) return TowerElem();
    return TowerElem::fraction(0, lift(num), lift(den));
}

}  // namespace

TowerElem log_derivative(const Tower& t, const LogTerm& term) {
    if (term.lambda.is_exact()) {
        const TowerElem& a = term.exact_arg();
        return TowerElem(term.lambda.exact()) * t.derive(a) / a;
    }
    const Poly<GaussRat>& q = term.lambda.root_of().poly;
    if (auto r = base_root_sum(t, q, term.arg)) return *r;
    TPoly m;
    {
        std::vector<TowerElem> c;
        for (const auto& a : q.coeffs()) c.emplace_back(a);
        m = TPoly(std::move(c));
    }
    auto e = extended_gcd(term.arg, m);
    if (e.g.degree() > 0) throw std::logic_error("log argument vanishes at a root");
    TPoly w = rem(TPoly::variable() * t.derive_coefficients(term.arg) * e.s, m);
    std::vector<GaussRat> p = power_sums(q);
    TowerElem trace;
    for (int k = 0; k <= w.degree(); ++k) trace += w.coeff(k) * TowerElem(p[static_cast<size_t>(k)]);
    return trace;
}

TowerElem derivative_of(const Tower& t, const LiouvilleForm& form) {
    TowerElem d = t.derive(form.r0);
    for (const auto& term : form.logs) d += log_derivative(t, term);
    return d;
}

Expr alpha_poly_expr(const Tower& t, const TPoly& p, const Expr& alpha) {
    SumBuilder s;
    // constant term first so the sum nests to the left
    auto add = [&](int k) {
        TowerElem c = p.coeff(k);
        if (c.is_zero()) return;
        bool neg = reads_negative(c);
        if (neg) c = -c;
        if (k == 0)
            s.add(t.to_expr(c), neg);
        else if (c.is_one())
            s.add(power_expr(alpha, k), neg);
        else
            s.add(t.to_expr(c) * power_expr(alpha, k), neg);
    };
    add(0);
    for (int k = p.degree(); k >= 1; --k) add(k);
    return s.result();
}

std::string form_string(const Tower& t, const LiouvilleForm& form) {
    std::string out;
    if (!form.r0.is_zero()) out = t.str(form.r0);
    auto append = [&](const std::string& coeff, const std::string& arg, bool negative) {
        std::string term = coeff + "ln(" + arg + ")";
        if (out.empty())
            out = negative ? "-" + term : term;
        else
            out += (negative ? " - " : " + ") + term;
    };
    for (const auto& term : form.logs) {
        if (term.lambda.is_exact()) {
            GaussRat c = term.lambda.exact();
            bool neg = negative_constant(c);
            append(coefficient_prefix(neg ? -c : c), t.str(term.exact_arg()), neg);
            continue;
        }
        const Poly<GaussRat>& q = term.lambda.root_of().poly;
        if (q.degree() == 2) {
            // roots h +- r of z^2 + b z + c with h = -b/2, r = (h^2 - c)^(1/2);
            // arg(alpha) = v0 + v1*alpha = (v0 + v1*h) +- v1*r
            const GaussRat h = -q.coeff(1) / GaussRat(2);
            const Expr r = Expr::binary(Op::Pow, Expr::constant(h * h - q.coeff(0)), Expr::constant(GaussRat(Rat(1, 2))));
            const TowerElem v1 = term.arg.coeff(1);
            const TowerElem c0 = term.arg.coeff(0) + v1 * TowerElem(h);
            for (int sign : {1, -1}) {
                SumBuilder arg;
                if (!c0.is_zero()) arg.add(t.to_expr(c0), false);
                if (!v1.is_zero()) {
                    const bool neg = reads_negative(v1) != (sign < 0);
                    const TowerElem m = reads_negative(v1) ? -v1 : v1;
                    arg.add(m.is_one() ? r : t.to_expr(m) * r, neg);
                }
                std::string lam;
                if (h.is_zero()) {
                    lam = pretty_print(r) + "*";
                } else {
                    SumBuilder l;
                    l.add(Expr::constant(h), false);
                    l.add(r, sign < 0);
                    lam = "(" + pretty_print(l.result()) + ")*";
                }
                append(lam, pretty_print(arg.result()), sign < 0 && h.is_zero());
            }
            continue;
        }
        std::string s = "sum(alpha*ln(" + pretty_print(alpha_poly_expr(t, term.arg, alpha_var())) + ") over " +
                        pretty_print(constant_poly_expr(q, alpha_var())) + " = 0)";
        if (out.empty())
            out = s;
        else
            out += " + " + s;
    }
    return out.empty() ? "0" : out;
}

std::string form_json(const Tower& t, const LiouvilleForm& form) {
    nlohmann::ordered_json j;
    j["status"] = "elementary";
    j["r0"] = t.str(form.r0);
    j["logs"] = nlohmann::ordered_json::array();
    for (const auto& term : form.logs) {
        nlohmann::ordered_json l;
        if (term.lambda.is_exact()) {
            l["lambda"] = term.lambda.exact().str();
            l["arg"] = t.str(term.exact_arg());
        } else {
            l["lambda"] = "alpha";
            l["root_of"] = pretty_print(constant_poly_expr(term.lambda.root_of().poly, alpha_var()));
            l["arg"] = pretty_print(alpha_poly_expr(t, term.arg, alpha_var()));
        }
        j["logs"].push_back(std::move(l));
    }
    return j.dump();
}

std::string Certificate::kind_name() const {
    switch (kind) {
        case CertificateKind::ResidueNotConstant: return "residue_not_constant";
        case CertificateKind::RischOdeUnsolvable: return "risch_ode_unsolvable";
        case CertificateKind::LogDegreeObstruction: return "log_degree_obstruction";
    }
    return "";
}

std::string Certificate::summary() const {
    switch (kind) {
        case CertificateKind::ResidueNotConstant:
            return "residues of " + detail + " are not constant";
        case CertificateKind::RischOdeUnsolvable:
            return "Risch ODE " + detail + " has no rational solution";
        case CertificateKind::LogDegreeObstruction:
            if (cause) return detail + ", has no elementary integral: " + cause->summary();
            return detail + ", integrates only with a new logarithm";
    }
    return "";
}

namespace {

nlohmann::ordered_json certificate_object(const Certificate& c) {
    nlohmann::ordered_json j;
    j["kind"] = c.kind_name();
    j["level"] = c.level;
    switch (c.kind) {
        case CertificateKind::ResidueNotConstant: j["integrand"] = c.detail; break;
        case CertificateKind::RischOdeUnsolvable:
            j["ode"] = c.detail;
            j["trace"] = c.trace;
            break;
        case CertificateKind::LogDegreeObstruction:
            j["power"] = c.power;
            j["coefficient"] = c.detail;
            if (c.cause) j["cause"] = certificate_object(*c.cause);
            break;
    }
    return j;
}

}  // namespace

std::string certificate_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["status"] = "non_elementary";
    j["certificate"] = certificate_object(c);
    j["assumptions"] = c.assumptions;
    return j.dump();
}

}  // namespace liouville
