#include "liouville/verify/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "liouville/algebra/roots.hpp"
#include "liouville/syntax/printer.hpp"

namespace liouville {

using cplx = std::complex<double>;

std::string SingularityError::format_point(double x) {
    if (std::abs(x) < 1e-12) x = 0;
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

bool verify_derivative(const Tower& t, const LiouvilleForm& result, const TowerElem& f) {
    return (derivative_of(t, result) - f).is_zero();
}

namespace {

constexpr int scan_points = 2000;

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// A function of x on the interval whose zeros are singular points.
struct Watch {
    std::string name;
    std::function<cplx(double)> value;
    std::optional<Poly<GaussRat>> base;  // exact polynomial in x when available
    bool branch = false;                 // log monomial argument: also reject cut crossings
};

TowerElem as_elem(const MPoly& m) { return TowerElem::quotient(m, MPoly(1)); }

Watch watch_elem(const Tower& t, const TowerElem& e, bool branch = false) {
    Watch w;
    w.name = t.str(e);
    w.branch = branch;
    w.value = [&t, e](double x) { return evaluate_numeric(e, t.numeric_point(x)); };
    if (e.level() <= 0 && e.denominator().is_one()) {
        std::vector<GaussRat> c;
        const TPoly p = e.num(0);
        for (const auto& a : p.coeffs()) c.push_back(a.constant());
        w.base = Poly<GaussRat>(std::move(c));
    }
    return w;
}

void add_fraction(const Tower& t, std::vector<Watch>& out, const TowerElem& e, bool numerator_too) {
    if (e.is_constant()) return;
    if (!e.denominator().is_constant()) out.push_back(watch_elem(t, as_elem(e.denominator())));
    if (numerator_too) out.push_back(watch_elem(t, as_elem(e.numerator())));
}

std::vector<Watch> watches(const Tower& t, const LiouvilleForm& form, const TowerElem& f) {
    std::vector<Watch> out;
    for (int l = 1; l <= t.top_level(); ++l) {
        const Monomial& m = t.monomial(l);
        if (m.kind == MonomialKind::Log) {
            add_fraction(t, out, m.arg, true);
            Watch w = watch_elem(t, m.arg, true);
            w.base.reset();
            out.push_back(std::move(w));
        } else {
            add_fraction(t, out, m.arg, false);
        }
    }
    add_fraction(t, out, f, false);
    add_fraction(t, out, form.r0, false);
    for (const auto& term : form.logs) {
        if (term.lambda.is_exact()) {
            add_fraction(t, out, term.exact_arg(), true);
            continue;
        }
        for (const auto& c : term.arg.coeffs()) add_fraction(t, out, c, false);
        const std::string name = pretty_print(alpha_poly_expr(t, term.arg, Expr::variable("alpha")));
        for (cplx rho : numeric_roots(term.lambda.root_of().poly)) {
            Watch w;
            w.name = name;
            const TPoly arg = term.arg;
            w.value = [&t, arg, rho](double x) {
                const auto pt = t.numeric_point(x);
                cplx s = 0, pw = 1;
                for (const auto& c : arg.coeffs()) {
                    s += evaluate_numeric(c, pt) * pw;
                    pw *= rho;
                }
                return s;
            };
            out.push_back(std::move(w));
        }
    }
    return out;
}

bool near_real(cplx z) { return std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z)); }

// Location of a zero (or cut crossing) of w on [lo, hi], if any.
std::optional<double> find_bad_point(const Watch& w, double lo, double hi, bool& crossing) {
    crossing = false;
    if (w.base && !w.branch) {
        if (w.base->degree() <= 0) return std::nullopt;
        const double scale = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
        std::optional<double> best;
        for (cplx r : numeric_roots(*w.base)) {
            if (std::abs(r.imag()) > 1e-9 * std::max(1.0, std::abs(r))) continue;
            const double x = r.real();
            if (x < lo - 1e-12 * scale || x > hi + 1e-12 * scale) continue;
            if (!best || x < *best) best = x;
        }
        return best;
    }
    const double h = (hi - lo) / scan_points;
    std::vector<double> mod(scan_points + 1);
    double scale = 0;
    for (int k = 0; k <= scan_points; ++k) {
        const cplx v = w.value(lo + h * k);
        if (!finite(v)) return lo + h * k;
        mod[static_cast<size_t>(k)] = std::abs(v);
        scale = std::max(scale, mod[static_cast<size_t>(k)]);
    }
    // a zero of a complex-valued analytic function shows up as a local
    // minimum of the modulus; refine each by golden-section search
    for (int k = 0; k <= scan_points; ++k) {
        const double m = mod[static_cast<size_t>(k)];
        const double left = k > 0 ? mod[static_cast<size_t>(k - 1)] : HUGE_VAL;
        const double right = k < scan_points ? mod[static_cast<size_t>(k + 1)] : HUGE_VAL;
        if (left < m || right < m) continue;
        const double flat = 1e-12 * std::max(1.0, scale);
        if (std::abs(left - m) <= flat && std::abs(right - m) <= flat) continue;
        double a = lo + h * std::max(k - 1, 0), b = lo + h * std::min(k + 1, scan_points);
        const double g = (std::sqrt(5.0) - 1) / 2;
        for (int it = 0; it < 80 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
            const double c = b - g * (b - a), d = a + g * (b - a);
            if (std::abs(w.value(c)) < std::abs(w.value(d)))
                b = d;
            else
                a = c;
        }
        const double x = (a + b) / 2;
        const cplx v = w.value(x);
        if (!finite(v) || std::abs(v) < 1e-7 * std::max(1.0, scale)) return x;
    }
    cplx prev{};
    for (int k = 0; k <= scan_points; ++k) {
        const double x = lo + h * k;
        const cplx v = w.value(x);
        if (k > 0) {
            if (near_real(prev) && near_real(v) && (prev.real() < 0) != (v.real() < 0)) {
                // sign change of a real-valued function: bisect for the zero
                double a = x - h, b = x;
                for (int it = 0; it < 60; ++it) {
                    const double m = (a + b) / 2;
                    if ((w.value(m).real() < 0) == (prev.real() < 0))
                        a = m;
                    else
                        b = m;
                }
                return (a + b) / 2;
            }
            if (w.branch && prev.real() < 0 && v.real() < 0 && (prev.imag() < 0) != (v.imag() < 0) &&
                !(near_real(prev) && near_real(v))) {
                crossing = true;
                return x;
            }
        }
        prev = v;
    }
    return std::nullopt;
}

void check_interval(const std::vector<Watch>& ws, double lo, double hi) {
    for (const auto& w : ws) {
        bool crossing = false;
        if (auto x = find_bad_point(w, lo, hi, crossing))
            throw SingularityError(*x, w.name, crossing ? "crosses the branch cut of log" : "vanishes");
    }
}

cplx simpson_step(const std::function<cplx(double)>& g, double a, double b, cplx fa, cplx fm, cplx fb, cplx whole,
                  double eps, int depth) {
    const double m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
    const cplx flm = g(lm), frm = g(rm);
    const cplx left = (m - a) / 6 * (fa + 4.0 * flm + fm);
    const cplx right = (b - m) / 6 * (fm + 4.0 * frm + fb);
    const cplx delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15 * eps) return left + right + delta / 15.0;
    return simpson_step(g, a, m, fa, flm, fm, left, eps / 2, depth - 1) +
           simpson_step(g, m, b, fm, frm, fb, right, eps / 2, depth - 1);
}

cplx adaptive_simpson(const std::function<cplx(double)>& g, double a, double b, double eps) {
    const double m = (a + b) / 2;
    const cplx fa = g(a), fm = g(m), fb = g(b);
    const cplx whole = (b - a) / 6 * (fa + 4.0 * fm + fb);
    return simpson_step(g, a, b, fa, fm, fb, whole, eps, 48);
}

// log(u(b)) - log(u(a)) continued along the segment.
cplx log_change(const std::function<cplx(double)>& u, double a, double b) {
    int steps = 64;
    for (;;) {
        cplx total = 0, prev = u(a);
        bool ok = true;
        for (int k = 1; k <= steps && ok; ++k) {
            const cplx cur = u(a + (b - a) * k / steps);
            const cplx step = std::log(cur / prev);
            if (std::abs(step.imag()) > 0.5 && steps < (1 << 16)) ok = false;
            total += step;
            prev = cur;
        }
        if (ok) return total;
        steps *= 4;
    }
}

struct LogPiece {
    cplx weight;
    std::function<cplx(double)> arg;
};

std::vector<LogPiece> log_pieces(const Tower& t, const LiouvilleForm& form) {
    std::vector<LogPiece> out;
    for (const auto& term : form.logs) {
        if (term.lambda.is_exact()) {
            const TowerElem u = term.exact_arg();
            out.push_back({term.lambda.exact().to_complex(),
                           [&t, u](double x) { return evaluate_numeric(u, t.numeric_point(x)); }});
            continue;
        }
        const TPoly arg = term.arg;
        for (cplx rho : numeric_roots(term.lambda.root_of().poly)) {
            out.push_back({rho, [&t, arg, rho](double x) {
                               const auto pt = t.numeric_point(x);
                               cplx s = 0, pw = 1;
                               for (const auto& c : arg.coeffs()) {
                                   s += evaluate_numeric(c, pt) * pw;
                                   pw *= rho;
                               }
                               return s;
                           }});
        }
    }
    return out;
}

nlohmann::ordered_json complex_json(cplx z) {
    if (std::abs(z.imag()) <= 1e-12 * std::max(1.0, std::abs(z))) return z.real();
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

}  // namespace

std::complex<double> evaluate_form(const Tower& t, const LiouvilleForm& result, double x) {
    cplx v = evaluate_numeric(result.r0, t.numeric_point(x));
    for (const auto& piece : log_pieces(t, result)) v += piece.weight * std::log(piece.arg(x));
    return v;
}

bool VerificationReport::numeric_ok() const {
    for (const auto& s : numeric_samples)
        if (!(s.abs_error < tolerance)) return false;
    return true;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["symbolic_ok"] = symbolic_ok;
    j["numeric_ok"] = numeric_ok();
    j["numeric"] = nlohmann::ordered_json::array();
    for (const auto& s : numeric_samples) {
        nlohmann::ordered_json e;
        e["interval"] = {s.lo, s.hi};
        e["quadrature"] = complex_json(s.quadrature);
        e["difference"] = complex_json(s.difference);
        e["abs_error"] = s.abs_error;
        j["numeric"].push_back(std::move(e));
    }
    if (!numeric_skipped.empty()) j["numeric_skipped"] = numeric_skipped;
    j["assumptions"] = assumptions;
    return j.dump();
}

VerificationReport numeric_check(const Tower& t, const LiouvilleForm& result, const TowerElem& f,
                                 std::pair<double, double> interval, int n_points) {
    const auto [lo, hi] = interval;
    if (!(lo < hi)) throw std::invalid_argument("interval must satisfy lo < hi");
    if (n_points < 1) throw std::invalid_argument("need at least one sample");
    check_interval(watches(t, result, f), lo, hi);

    VerificationReport rep;
    rep.symbolic_ok = verify_derivative(t, result, f);
    rep.assumptions = t.assumptions();
    const std::function<cplx(double)> integrand = [&](double x) { return evaluate_numeric(f, t.numeric_point(x)); };
    const std::function<cplx(double)> r0 = [&](double x) { return evaluate_numeric(result.r0, t.numeric_point(x)); };
    const auto pieces = log_pieces(t, result);
    for (int k = 0; k < n_points; ++k) {
        NumericSample s;
        s.lo = lo + (hi - lo) * k / n_points;
        s.hi = k + 1 == n_points ? hi : lo + (hi - lo) * (k + 1) / n_points;
        s.quadrature = adaptive_simpson(integrand, s.lo, s.hi, 1e-9);
        s.difference = r0(s.hi) - r0(s.lo);
        for (const auto& p : pieces) s.difference += p.weight * log_change(p.arg, s.lo, s.hi);
        s.abs_error = std::abs(s.quadrature - s.difference);
        rep.numeric_samples.push_back(s);
    }
    return rep;
}

std::optional<std::pair<double, double>> default_interval(const Tower& t, const LiouvilleForm& result,
                                                          const TowerElem& f) {
    static const std::pair<double, double> candidates[] = {
        {1, 2}, {2, 3}, {0.25, 0.75}, {3, 4}, {-2, -1}, {1.1, 1.3}, {5, 6}, {-0.75, -0.25}, {0.05, 0.15}, {7, 7.5},
    };
    const auto ws = watches(t, result, f);
    for (const auto& c : candidates) {
        try {
            check_interval(ws, c.first, c.second);
            return c;
        } catch (const SingularityError&) {
        }
    }
    return std::nullopt;
}

VerificationReport verify(const Tower& t, const LiouvilleForm& result, const TowerElem& f,
                          std::optional<std::pair<double, double>> interval) {
    if (!interval) interval = default_interval(t, result, f);
    if (!interval) {
        VerificationReport rep;
        rep.symbolic_ok = verify_derivative(t, result, f);
        rep.assumptions = t.assumptions();
        rep.numeric_skipped = "no singularity-free sample interval found";
        return rep;
    }
    return numeric_check(t, result, f, *interval);
}

}  // namespace liouville
