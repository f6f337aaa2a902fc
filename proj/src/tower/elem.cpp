#include "liouville/tower/elem.hpp"

#include <stdexcept>

namespace liouville {

TowerElem::TowerElem(long c) : num_(c) {}

TowerElem::TowerElem(GaussRat c) : num_(std::move(c)) {}

TowerElem TowerElem::generator(int level) { return TowerElem(MPoly::generator(level), MPoly(1)); }

TowerElem TowerElem::coprime(MPoly n, MPoly d) {
    if (n.is_zero()) return TowerElem();
    GaussRat c = d.base_lc();
    if (!c.is_one()) {
        GaussRat inv = c.inverse();
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    return TowerElem(std::move(n), std::move(d));
}

TowerElem TowerElem::quotient(const MPoly& n, const MPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by zero in tower field");
    if (n.is_zero()) return TowerElem();
    if (d.is_constant()) return TowerElem(n.scaled(d.constant().inverse()), MPoly(1));
    MPoly g = gcd(n, d);
    if (g.is_one()) return coprime(n, d);
    return coprime(exact_quotient(n, g), exact_quotient(d, g));
}

MPoly clear_denominators(int l, const TPoly& p) {
    MPoly common(1);
    for (const auto& c : p.coeffs()) {
        if (c.is_zero() || c.denominator().is_one()) continue;
        const MPoly& d = c.denominator();
        common = common * exact_quotient(d, gcd(common, d));
    }
    std::vector<MPoly> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (c.is_zero()) {
            v.emplace_back();
        } else if (c.level() >= l) {
            throw std::logic_error("coefficient at or above the polynomial's variable");
        } else {
            v.push_back(c.numerator() * exact_quotient(common, c.denominator()));
        }
    }
    return MPoly::from_poly(l, MPoly::Poly(std::move(v)));
}

TPoly to_tpoly(int l, const MPoly& m) {
    std::vector<TowerElem> v;
    const MPoly::Poly mp = m.as_poly(l);
    for (const auto& c : mp.coeffs()) v.push_back(TowerElem::quotient(c, MPoly(1)));
    return TPoly(std::move(v));
}

TowerElem TowerElem::fraction(int level, const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero in tower field");
    if (num.is_zero()) return TowerElem();
    // num = N / cn and den = D / cd with cn, cd free of t_level
    MPoly n = clear_denominators(level, num), d = clear_denominators(level, den);
    TowerElem scale = quotient(n.as_poly(level).lc(), MPoly(1)) / num.lc();
    scale = scale * den.lc() / quotient(d.as_poly(level).lc(), MPoly(1));
    // value = (n / cn) / (d / cd) = (n * cd) / (d * cn), with cd / cn = 1 / scale
    return quotient(n * scale.den_, d * scale.num_);
}

TowerElem TowerElem::polynomial(int level, const Poly& p) { return fraction(level, p, TPoly::one()); }

GaussRat TowerElem::constant() const {
    if (!is_constant()) throw std::logic_error("TowerElem::constant on a non-constant element");
    return num_.is_zero() ? GaussRat() : num_.constant();
}

TowerElem::Poly TowerElem::num(int l) const {
    if (level() > l) throw std::logic_error("TowerElem::num below the element's level");
    if (level() < l) return Poly(*this);
    MPoly lc = den_.as_poly(l).lc();
    std::vector<TowerElem> v;
    const MPoly::Poly np = num_.as_poly(l);
    for (const auto& c : np.coeffs()) v.push_back(quotient(c, lc));
    return Poly(std::move(v));
}

TowerElem::Poly TowerElem::den(int l) const {
    if (level() > l) throw std::logic_error("TowerElem::den below the element's level");
    if (level() < l) return TPoly::one();
    MPoly::Poly d = den_.as_poly(l);
    if (d.degree() == 0) return TPoly::one();
    std::vector<TowerElem> v;
    for (const auto& c : d.coeffs()) v.push_back(quotient(c, d.lc()));
    return Poly(std::move(v));
}

TowerElem::Poly TowerElem::num() const {
    if (level() < 0) throw std::logic_error("TowerElem::num on a constant");
    return num(level());
}

TowerElem::Poly TowerElem::den() const {
    if (level() < 0) throw std::logic_error("TowerElem::den on a constant");
    return den(level());
}

TowerElem TowerElem::operator-() const { return TowerElem(-num_, den_); }

TowerElem TowerElem::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in tower field");
    return coprime(den_, num_);
}

TowerElem TowerElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    // powers of coprime polynomials stay coprime
    MPoly n(1), d(1), bn = num_, bd = den_;
    while (e > 0) {
        if (e & 1) {
            n *= bn;
            d *= bd;
        }
        e >>= 1;
        if (e) {
            bn *= bn;
            bd *= bd;
        }
    }
    return coprime(n, d);
}

TowerElem operator+(const TowerElem& a, const TowerElem& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
        if (a.den_.is_one()) return TowerElem(a.num_ + b.num_, a.den_);
        return TowerElem::quotient(a.num_ + b.num_, a.den_);
    }
    // gcd(n + s d, d) = gcd(n, d)
    if (a.den_.is_one()) return TowerElem(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return TowerElem(a.num_ + b.num_ * a.den_, a.den_);
    MPoly g = gcd(a.den_, b.den_);
    if (g.is_one()) return TowerElem(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    MPoly ad = exact_quotient(a.den_, g), bd = exact_quotient(b.den_, g);
    MPoly n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero()) return TowerElem();
    // a common factor of n and ad * bd * g can only divide g
    MPoly h = gcd(n, g);
    if (!h.is_one()) {
        n = exact_quotient(n, h);
        g = exact_quotient(g, h);
    }
    return TowerElem::coprime(n, ad * bd * g);
}

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    if (a.is_zero() || b.is_zero()) return TowerElem();
    MPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    if (!bd.is_one()) {
        MPoly g = gcd(an, bd);
        if (!g.is_one()) {
            an = exact_quotient(an, g);
            bd = exact_quotient(bd, g);
        }
    }
    if (!ad.is_one()) {
        MPoly g = gcd(bn, ad);
        if (!g.is_one()) {
            bn = exact_quotient(bn, g);
            ad = exact_quotient(ad, g);
        }
    }
    return TowerElem::coprime(an * bn, ad * bd);
}

namespace {

std::string mpoly_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    if (p.is_constant()) return p.constant().str();
    const int l = p.level();
    std::string out;
    const auto& c = p.poly().coeffs();
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) {
        const MPoly& a = c[static_cast<size_t>(k)];
        if (a.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + mpoly_string(a) + ")";
        if (k > 0) out += "*t" + std::to_string(l);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace

std::string TowerElem::debug_string() const {
    std::string n = mpoly_string(num_);
    if (den_.is_one()) return n;
    return "(" + n + ")/(" + mpoly_string(den_) + ")";
}

int coeff_level(const TPoly& p) {
    int l = -1;
    for (const auto& c : p.coeffs()) l = std::max(l, c.level());
    return l;
}

TPoly gcd(const TPoly& a, const TPoly& b) {
    if (a.is_zero() && b.is_zero()) return TPoly();
    const int l = std::max(coeff_level(a), coeff_level(b)) + 1;
    MPoly g = gcd(clear_denominators(l, a), clear_denominators(l, b));
    return monic(to_tpoly(l, g));
}

}  // namespace liouville
