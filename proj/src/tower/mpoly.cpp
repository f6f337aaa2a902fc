#include "liouville/tower/mpoly.hpp"

#include <optional>
#include <stdexcept>

namespace liouville {

MPoly::MPoly(long c) : MPoly(GaussRat(c)) {}

MPoly::MPoly(GaussRat c) {
    if (!c.is_zero()) rep_ = std::make_shared<const Rep>(Rep{-1, std::move(c), {}});
}

MPoly MPoly::generator(int level) {
    return MPoly(std::make_shared<const Rep>(Rep{level, GaussRat(), Poly::variable()}));
}

MPoly MPoly::from_poly(int level, Poly p) {
    if (p.degree() <= 0) return p.coeff(0);
    return MPoly(std::make_shared<const Rep>(Rep{level, GaussRat(), std::move(p)}));
}

GaussRat MPoly::constant() const {
    if (!rep_) return GaussRat();
    if (rep_->level >= 0) throw std::logic_error("MPoly::constant on a non-constant polynomial");
    return rep_->value;
}

MPoly::Poly MPoly::as_poly(int l) const {
    if (level() > l) throw std::logic_error("MPoly::as_poly below the polynomial's level");
    if (level() == l) return rep_->coeffs;
    return Poly(*this);
}

const MPoly::Poly& MPoly::poly() const {
    if (level() < 0) throw std::logic_error("MPoly::poly on a constant");
    return rep_->coeffs;
}

int MPoly::degree_in(int l) const {
    if (!rep_) return -1;
    if (level() > l) throw std::logic_error("MPoly::degree_in below the polynomial's level");
    return level() == l ? rep_->coeffs.degree() : 0;
}

GaussRat MPoly::base_lc() const {
    if (!rep_) return GaussRat();
    if (rep_->level < 0) return rep_->value;
    return rep_->coeffs.lc().base_lc();
}

MPoly MPoly::operator-() const {
    if (!rep_) return *this;
    if (rep_->level < 0) return MPoly(-rep_->value);
    return MPoly(std::make_shared<const Rep>(Rep{rep_->level, GaussRat(), -rep_->coeffs}));
}

MPoly MPoly::scaled(const GaussRat& c) const {
    if (!rep_ || c.is_zero()) return MPoly();
    if (c.is_one()) return *this;
    if (rep_->level < 0) return MPoly(rep_->value * c);
    std::vector<MPoly> v;
    v.reserve(rep_->coeffs.coeffs().size());
    for (const auto& x : rep_->coeffs.coeffs()) v.push_back(x.scaled(c));
    return MPoly(std::make_shared<const Rep>(Rep{rep_->level, GaussRat(), Poly(std::move(v))}));
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int la = a.level(), lb = b.level();
    if (la < 0 && lb < 0) return MPoly(a.rep_->value + b.rep_->value);
    const int l = std::max(la, lb);
    return MPoly::from_poly(l, a.as_poly(l) + b.as_poly(l));
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    const int la = a.level(), lb = b.level();
    if (la < 0 && lb < 0) return MPoly(a.rep_->value * b.rep_->value);
    if (la < 0) return b.scaled(a.rep_->value);
    if (lb < 0) return a.scaled(b.rep_->value);
    if (la != lb) {
        const MPoly& hi = la > lb ? a : b;
        const MPoly& lo = la > lb ? b : a;
        std::vector<MPoly> v;
        for (const auto& c : hi.rep_->coeffs.coeffs()) v.push_back(c * lo);
        return MPoly::from_poly(hi.level(), MPoly::Poly(std::move(v)));
    }
    return MPoly::from_poly(la, a.rep_->coeffs * b.rep_->coeffs);
}

bool operator==(const MPoly& a, const MPoly& b) {
    if (a.rep_ == b.rep_) return true;
    if (!a.rep_ || !b.rep_) return false;
    if (a.rep_->level != b.rep_->level) return false;
    if (a.rep_->level < 0) return a.rep_->value == b.rep_->value;
    return a.rep_->coeffs == b.rep_->coeffs;
}

MPoly exact_quotient(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return a;
    if (b.is_constant()) return a.scaled(b.constant().inverse());
    const int la = a.level(), lb = b.level();
    if (lb > la) throw std::domain_error("inexact polynomial division");
    if (la > lb) {
        std::vector<MPoly> v;
        for (const auto& c : a.poly().coeffs()) v.push_back(exact_quotient(c, b));
        return MPoly::from_poly(la, MPoly::Poly(std::move(v)));
    }
    return MPoly::from_poly(la, exact_quotient(a.as_poly(la), b.as_poly(la)));
}

MPoly normalized(const MPoly& a) {
    if (a.is_zero()) return a;
    GaussRat c = a.base_lc();
    if (c.is_one()) return a;
    return a.scaled(c.inverse());
}

namespace {

MPoly coefficient_gcd(const MPoly& a, MPoly g, MPoly (*gcd_fn)(const MPoly&, const MPoly&)) {
    for (const auto& c : a.poly().coeffs()) {
        if (c.is_zero()) continue;
        g = gcd_fn(g, c);
        if (g.is_one()) break;
    }
    return g;
}

MPoly primitive_part(const MPoly& a, const MPoly& cont) { return cont.is_one() ? a : exact_quotient(a, cont); }

// gcd of two primitive polynomials of positive degree in t_l.
MPoly primitive_gcd(int l, MPoly::Poly a, MPoly::Poly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    MPoly g(1), h(1);
    for (;;) {
        const int delta = a.degree() - b.degree();
        MPoly::Poly r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        if (r.degree() == 0) return MPoly(1);
        a = std::move(b);
        b = exact_scalar_quotient(r, g * pow(h, delta));
        g = a.lc();
        if (delta > 0) h = exact_quotient(pow(g, delta), pow(h, delta - 1));
    }
    MPoly last = MPoly::from_poly(l, std::move(b));
    return primitive_part(last, coefficient_gcd(last, MPoly(), gcd_subresultant));
}

}  // namespace

MPoly content(const MPoly& a) {
    if (a.is_constant()) return a.is_zero() ? a : MPoly(1);
    return coefficient_gcd(a, MPoly(), gcd);
}

MPoly gcd_subresultant(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (a.is_constant() || b.is_constant()) return MPoly(1);
    const int la = a.level(), lb = b.level();
    // the lower one is a constant for the higher variable
    if (la > lb) return normalized(coefficient_gcd(a, b, gcd_subresultant));
    if (lb > la) return normalized(coefficient_gcd(b, a, gcd_subresultant));
    MPoly ca = coefficient_gcd(a, MPoly(), gcd_subresultant), cb = coefficient_gcd(b, MPoly(), gcd_subresultant);
    MPoly pa = primitive_part(a, ca), pb = primitive_part(b, cb);
    MPoly g = primitive_gcd(la, pa.poly(), pb.poly());
    return normalized(gcd_subresultant(ca, cb) * g);
}

namespace {

// Heuristic gcd over Z[i][t_0, ..., t_L]: evaluate the top variable at a
// large integer xi, recurse, and read the gcd back from its balanced xi-adic
// digits. For xi above twice the coefficient bound a candidate that divides
// both inputs is the gcd. Both inputs have Gaussian integer coefficients.

using ZI = std::pair<mpz_class, mpz_class>;  // re, im

template <class Fn>
void for_each_base(const MPoly& p, Fn&& fn) {
    if (p.is_zero()) return;
    if (p.is_constant()) {
        fn(p.constant());
        return;
    }
    for (const auto& c : p.poly().coeffs()) for_each_base(c, fn);
}

template <class Fn>
MPoly map_base(const MPoly& p, Fn&& fn) {
    if (p.is_zero()) return p;
    if (p.is_constant()) return MPoly(fn(p.constant()));
    std::vector<MPoly> v;
    for (const auto& c : p.poly().coeffs()) v.push_back(map_base(c, fn));
    return MPoly::from_poly(p.level(), MPoly::Poly(std::move(v)));
}

mpz_class denominator_lcm(const MPoly& p) {
    mpz_class d = 1;
    for_each_base(p, [&](const GaussRat& c) {
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.re().denominator().get_mpz_t());
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.im().denominator().get_mpz_t());
    });
    return d;
}

mpz_class max_norm(const MPoly& p) {
    mpz_class m = 0;
    for_each_base(p, [&](const GaussRat& c) {
        mpz_class r = abs(c.re().numerator()), i = abs(c.im().numerator());
        if (r > m) m = r;
        if (i > m) m = i;
    });
    return m;
}

// Round-to-nearest division in Z[i].
ZI gauss_rem(const ZI& a, const ZI& b) {
    mpz_class n = b.first * b.first + b.second * b.second;
    // a * conj(b)
    mpz_class re = a.first * b.first + a.second * b.second;
    mpz_class im = a.second * b.first - a.first * b.second;
    auto round_div = [&](const mpz_class& x) {
        mpz_class q;
        mpz_class twice = 2 * x + n;
        mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * n).get_mpz_t());
        return q;
    };
    mpz_class qr = round_div(re), qi = round_div(im);
    return {a.first - (qr * b.first - qi * b.second), a.second - (qr * b.second + qi * b.first)};
}

ZI gauss_gcd(ZI a, ZI b) {
    while (b.first != 0 || b.second != 0) {
        ZI r = gauss_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

ZI to_zi(const GaussRat& c) { return {c.re().numerator(), c.im().numerator()}; }
GaussRat from_zi(const ZI& z) { return GaussRat(Rat(z.first), Rat(z.second)); }

ZI integer_content(const MPoly& p) {
    ZI g{0, 0};
    for_each_base(p, [&](const GaussRat& c) {
        if (g.first == 1 && g.second == 0) return;
        g = gauss_gcd(g, to_zi(c));
        mpz_class n = g.first * g.first + g.second * g.second;
        if (n == 1) g = {1, 0};
    });
    return g;
}

MPoly remove_integer_content(const MPoly& p) {
    ZI c = integer_content(p);
    if (c.first == 1 && c.second == 0) return p;
    return p.scaled(from_zi(c).inverse());
}

// p with t_l replaced by xi.
MPoly eval_at(const MPoly& p, int l, const mpz_class& xi) {
    if (p.level() < l) return p;
    if (p.level() > l) {
        std::vector<MPoly> v;
        for (const auto& c : p.poly().coeffs()) v.push_back(eval_at(c, l, xi));
        return MPoly::from_poly(p.level(), MPoly::Poly(std::move(v)));
    }
    MPoly acc;
    const GaussRat x{Rat(xi)};
    const auto& c = p.poly().coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc.scaled(x) + *it;
    return acc;
}

mpz_class balanced_mod(const mpz_class& v, const mpz_class& xi) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), xi.get_mpz_t());
    if (2 * r > xi) r -= xi;
    return r;
}

// Polynomial in t_l whose balanced xi-adic digits are the coefficients of g.
MPoly reconstruct(MPoly g, int l, const mpz_class& xi) {
    std::vector<MPoly> digits;
    const GaussRat inv{Rat(mpq_class(1, xi))};
    while (!g.is_zero()) {
        MPoly d = map_base(g, [&](const GaussRat& c) {
            return GaussRat(Rat(balanced_mod(c.re().numerator(), xi)), Rat(balanced_mod(c.im().numerator(), xi)));
        });
        g = (g - d).scaled(inv);
        digits.push_back(std::move(d));
    }
    return MPoly::from_poly(l, MPoly::Poly(std::move(digits)));
}

bool divides(const MPoly& d, const MPoly& a) {
    try {
        exact_quotient(a, d);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

int total_degree_bound(const MPoly& p) {
    if (p.is_constant()) return 0;
    int m = 0;
    for (const auto& c : p.poly().coeffs()) m = std::max(m, total_degree_bound(c));
    return p.poly().degree() + m;
}

std::optional<MPoly> heuristic_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_constant() || b.is_constant()) {
        ZI g = gauss_gcd(integer_content(a), integer_content(b));
        return MPoly(from_zi(g));
    }
    const int l = std::max(a.level(), b.level());
    mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    xi *= 2;
    const int deg = std::max(total_degree_bound(a), total_degree_bound(b));
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<size_t>(deg) > 400000) return std::nullopt;
        auto gamma = heuristic_gcd(eval_at(a, l, xi), eval_at(b, l, xi));
        if (!gamma) return std::nullopt;
        MPoly g = remove_integer_content(reconstruct(*gamma, l, xi));
        if (!g.is_zero() && divides(g, a) && divides(g, b)) {
            ZI c = gauss_gcd(integer_content(a), integer_content(b));
            return g.scaled(from_zi(c));
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (a.is_constant() || b.is_constant()) return MPoly(1);
    if (a == b) return normalized(a);
    const GaussRat sa{Rat(denominator_lcm(a))}, sb{Rat(denominator_lcm(b))};
    if (auto g = heuristic_gcd(a.scaled(sa), b.scaled(sb))) return normalized(*g);
    return gcd_subresultant(a, b);
}

}  // namespace liouville
