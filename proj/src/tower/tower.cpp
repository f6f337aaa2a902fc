#include "liouville/tower/tower.hpp"

#include <random>

#include "json.hpp"
#include "liouville/algebra/linear.hpp"
#include "liouville/syntax/printer.hpp"

namespace liouville {

Tower::Tower(std::string variable) : var_(std::move(variable)), common_den_{MPoly(1)} {}

LevelKind Tower::kind(int level) const {
    if (level == 0) return LevelKind::Base;
    return monomial(level).kind == MonomialKind::Log ? LevelKind::Log : LevelKind::Exp;
}

const Monomial& Tower::monomial(int level) const {
    if (level < 1 || level > top_level()) throw std::out_of_range("no monomial at level " + std::to_string(level));
    return mons_[static_cast<size_t>(level - 1)];
}

int Tower::push(Monomial m) {
    if (m.arg.is_zero()) throw std::invalid_argument("monomial with zero argument");
    if (m.arg.level() > top_level()) throw std::invalid_argument("monomial argument above the tower");
    TowerElem da = derive(m.arg);
    etas_.push_back(m.kind == MonomialKind::Log ? da / m.arg : da);
    const MPoly& prev = common_den_.back();
    const MPoly& b = etas_.back().denominator();
    common_den_.push_back(prev * exact_quotient(b, gcd(prev, b)));
    mons_.push_back(std::move(m));
    return top_level();
}

const TowerElem& Tower::eta(int level) const {
    static const TowerElem one(1);
    if (level == 0) return one;
    monomial(level);
    return etas_[static_cast<size_t>(level - 1)];
}

TPoly Tower::generator_derivative(int level) const {
    if (level == 0) return TPoly::one();
    if (kind(level) == LevelKind::Log) return TPoly(eta(level));
    return TPoly::monomial(eta(level), 1);
}

TPoly Tower::derive_coefficients(const TPoly& p) const {
    std::vector<TowerElem> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(derive(a));
    return TPoly(std::move(c));
}

TPoly Tower::derive_poly(int level, const TPoly& p) const {
    TPoly r = derive_coefficients(p);
    if (p.degree() <= 0) return r;
    return r + derivative(p) * generator_derivative(level);
}

namespace {

// Partial derivative with respect to t_j.
MPoly partial(const MPoly& p, int j) {
    const int l = p.level();
    if (l < j) return MPoly();
    const MPoly::Poly c = p.as_poly(l);
    if (l == j) return MPoly::from_poly(l, derivative(c));
    std::vector<MPoly> v;
    for (const auto& a : c.coeffs()) v.push_back(partial(a, j));
    return MPoly::from_poly(l, MPoly::Poly(std::move(v)));
}

}  // namespace

MPoly Tower::scaled_derivative(const MPoly& p, const MPoly& e) const {
    MPoly s;
    for (int j = 0; j <= p.level(); ++j) {
        MPoly dp = partial(p, j);
        if (dp.is_zero()) continue;
        MPoly w = e;
        if (j > 0) {
            const TowerElem& eta = etas_[static_cast<size_t>(j - 1)];
            w = eta.numerator() * exact_quotient(e, eta.denominator());
            if (kind(j) == LevelKind::Exp) w *= MPoly::generator(j);
        }
        s += dp * w;
    }
    return s;
}

TowerElem Tower::derive(const TowerElem& f) const {
    const int l = f.level();
    if (l < 0) return TowerElem();
    const MPoly& e = common_den_[static_cast<size_t>(l)];
    const MPoly& n = f.numerator();
    const MPoly& d = f.denominator();
    MPoly dn = scaled_derivative(n, e);
    if (d.is_one()) return TowerElem::quotient(dn, e);
    MPoly dd = scaled_derivative(d, e);
    return TowerElem::quotient(dn * d - n * dd, e * d * d);
}

std::vector<std::complex<double>> Tower::numeric_point(std::complex<double> x) const {
    std::vector<std::complex<double>> v{x};
    for (const auto& m : mons_) {
        std::complex<double> a = evaluate_numeric(m.arg, v);
        v.push_back(m.kind == MonomialKind::Log ? std::log(a) : std::exp(a));
    }
    return v;
}

Expr Tower::generator_expr(int level) const {
    if (level == 0) return Expr::variable(var_);
    const Monomial& m = monomial(level);
    return Expr::apply(m.kind == MonomialKind::Log ? Op::Log : Op::Exp, to_expr(m.arg));
}

namespace {

bool negative_constant(const GaussRat& c) { return c.re().sign() < 0 || (c.re().is_zero() && c.im().sign() < 0); }

// An element reads as negative when its leading coefficient, followed down
// the levels, is a negative constant.
bool reads_negative(const TowerElem& f) {
    if (f.is_zero()) return false;
    return negative_constant(f.numerator().base_lc());
}

Expr power_expr(const Expr& base, int k) {
    if (k == 1) return base;
    return Expr::binary(Op::Pow, base, Expr::constant(GaussRat(k)));
}

}  // namespace

Expr Tower::to_expr(const TowerElem& f) const {
    if (f.is_constant()) return Expr::constant(f.constant());
    const int l = f.level();
    Expr t = generator_expr(l);

    auto poly_expr = [&](const TPoly& p) {
        std::optional<Expr> sum;
        for (int k = p.degree(); k >= 0; --k) {
            TowerElem c = p.coeff(k);
            if (c.is_zero()) continue;
            bool neg = reads_negative(c);
            if (neg) c = -c;
            Expr term;
            if (k == 0) {
                term = to_expr(c);
            } else if (c.is_one()) {
                term = power_expr(t, k);
            } else {
                term = to_expr(c) * power_expr(t, k);
            }
            if (!sum) {
                if (!neg) {
                    sum = term;
                } else {
                    sum = negate_leading(term);
                }
            } else {
                sum = neg ? *sum - term : *sum + term;
            }
        }
        return sum ? *sum : Expr::constant(GaussRat());
    };

    Expr n = poly_expr(f.num());
    if (f.den().is_one()) return n;
    return n / poly_expr(f.den());
}

std::string Tower::str(const TowerElem& f) const { return pretty_print(to_expr(f)); }

std::string Tower::to_json() const {
    nlohmann::ordered_json j;
    j["base"] = var_;
    j["monomials"] = nlohmann::ordered_json::array();
    for (const auto& m : mons_)
        j["monomials"].push_back({{"kind", m.kind == MonomialKind::Log ? "log" : "exp"}, {"arg", str(m.arg)}});
    return j.dump();
}

std::vector<std::string> Tower::assumptions() const {
    std::vector<std::string> out;
    std::string field = "C(" + var_;
    for (int l = 1; l <= top_level(); ++l) {
        std::string g = pretty_print(generator_expr(l));
        out.push_back(g + " transcendental over " + field + ")");
        field += ", " + g;
    }
    return out;
}

namespace {

template <class V, class Lift>
V evaluate_mpoly(const MPoly& p, const std::vector<V>& point, Lift lift) {
    if (p.is_constant()) return lift(p.is_zero() ? GaussRat() : p.constant());
    const int l = p.level();
    if (static_cast<size_t>(l) >= point.size()) throw std::out_of_range("evaluation point too short");
    const V& t = point[static_cast<size_t>(l)];
    const auto& c = p.poly().coeffs();
    V acc = lift(GaussRat());
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + evaluate_mpoly(*it, point, lift);
    return acc;
}

template <class V, class Lift>
V evaluate_generic(const TowerElem& f, const std::vector<V>& point, Lift lift) {
    V n = evaluate_mpoly(f.numerator(), point, lift);
    if (f.denominator().is_one()) return n;
    V d = evaluate_mpoly(f.denominator(), point, lift);
    if (d == lift(GaussRat())) throw PoleError("denominator vanishes at evaluation point");
    return n / d;
}

}  // namespace

GaussRat evaluate_exact(const TowerElem& f, const std::vector<GaussRat>& point) {
    return evaluate_generic(f, point, [](const GaussRat& c) { return c; });
}

std::complex<double> evaluate_numeric(const TowerElem& f, const std::vector<std::complex<double>>& point) {
    return evaluate_generic(f, point, [](const GaussRat& c) { return c.to_complex(); });
}

std::optional<GaussRat> constant_part(const Tower&, const TowerElem& f) {
    if (f.is_constant()) return f.constant();
    return std::nullopt;
}

std::optional<std::vector<GaussRat>> solve_constant_combination(const TowerElem& target,
                                                                 const std::vector<TowerElem>& basis,
                                                                 bool rational_only) {
    const size_t n = basis.size();
    if (n == 0) {
        if (target.is_zero()) return std::vector<GaussRat>{};
        return std::nullopt;
    }
    int top = target.level();
    for (const auto& b : basis) top = std::max(top, b.level());
    const size_t dim = static_cast<size_t>(std::max(top, 0) + 1);

    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long> numer(-97, 97), denom(1, 13);
    Matrix rows;
    std::vector<GaussRat> rhs;

    auto add_point = [&]() {
        for (int attempt = 0; attempt < 64; ++attempt) {
            std::vector<GaussRat> p;
            for (size_t k = 0; k < dim; ++k) p.emplace_back(Rat(numer(rng), denom(rng)));
            try {
                std::vector<GaussRat> row;
                for (const auto& b : basis) row.push_back(evaluate_exact(b, p));
                GaussRat y = evaluate_exact(target, p);
                if (rational_only) {
                    std::vector<GaussRat> re, im;
                    for (const auto& v : row) {
                        re.emplace_back(v.re());
                        im.emplace_back(v.im());
                    }
                    rows.push_back(std::move(re));
                    rhs.emplace_back(y.re());
                    rows.push_back(std::move(im));
                    rhs.emplace_back(y.im());
                } else {
                    rows.push_back(std::move(row));
                    rhs.push_back(std::move(y));
                }
                return;
            } catch (const PoleError&) {
            }
        }
        throw std::runtime_error("could not find a regular evaluation point");
    };

    size_t points = n + 2;
    for (size_t k = 0; k < points; ++k) add_point();
    for (int round = 0; round < 6; ++round) {
        auto sol = solve_linear(rows, rhs);
        if (!sol) return std::nullopt;
        TowerElem residual = target;
        for (size_t j = 0; j < n; ++j)
            if (!(*sol)[j].is_zero()) residual -= TowerElem((*sol)[j]) * basis[j];
        if (residual.is_zero()) return sol;
        for (size_t k = 0; k < points; ++k) add_point();
        points *= 2;
    }
    return std::nullopt;
}

}  // namespace liouville
