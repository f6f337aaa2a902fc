#pragma once

// Dense univariate polynomials over an exact coefficient domain.
//
// The coefficient type F must be default-constructible to zero, constructible
// from an int, and provide + - * together with the free functions
// is_zero(const F&) and exact_quotient(const F&, const F&). Algorithms that
// need a field (divmod, gcd, squarefree decomposition, partial fractions)
// additionally use F's operator/. Resultants only need exact division, so
// they also run over polynomial rings such as Poly<Poly<K>>.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace liouville {

namespace detail {
template <class T>
bool coeff_is_zero(const T& v) {
    return is_zero(v);
}
}  // namespace detail

template <class F>
class Poly {
public:
    using coeff_type = F;

    Poly() = default;
    explicit Poly(F c) {
        if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(F c, int k) {
        if (detail::coeff_is_zero(c)) return Poly();
        std::vector<F> v(static_cast<size_t>(k) + 1);
        v[static_cast<size_t>(k)] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(F(1), 1); }
    static Poly one() { return Poly(F(1)); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }

    F coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : F();
    }
    const F& lc() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<F>& coeffs() const { return c_; }

    /// Lowest index with a nonzero coefficient; pre: nonzero.
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!liouville_is_zero(c_[i])) return static_cast<int>(i);
        throw std::logic_error("valuation of zero polynomial");
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (liouville_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly scaled(const F& s) const {
        if (liouville_is_zero(s)) return Poly();
        Poly r(*this);
        for (auto& c : r.c_) c = c * s;
        r.trim();
        return r;
    }
    /// Multiply by t^k (k >= 0).
    Poly shifted(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<F> v(static_cast<size_t>(k));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    F operator()(const F& x) const {
        F acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    static bool liouville_is_zero(const F& v) { return detail::coeff_is_zero(v); }
    void trim() {
        while (!c_.empty() && liouville_is_zero(c_.back())) c_.pop_back();
    }

    std::vector<F> c_;
};

template <class F>
bool is_zero(const Poly<F>& p) {
    return p.is_zero();
}

template <class F>
Poly<F> pow(const Poly<F>& p, int e) {
    Poly<F> result = Poly<F>::one(), base = p;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

template <class F>
F pow(const F& v, int e) requires(!requires { typename F::coeff_type; }) {
    F result(1), base = v;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

/// Formal derivative d/dt.
template <class F>
Poly<F> derivative(const Poly<F>& p) {
    if (p.degree() <= 0) return Poly<F>();
    std::vector<F> v(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) v[static_cast<size_t>(i - 1)] = p.coeff(i) * F(i);
    return Poly<F>(std::move(v));
}

/// Quotient and remainder over a field: a = q*b + r, deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly<F>(), a};
    std::vector<F> r = a.coeffs();
    std::vector<F> q(static_cast<size_t>(a.degree() - b.degree() + 1));
    const F inv_lc = F(1) / b.lc();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        F c = r[static_cast<size_t>(k)];
        if (is_zero(c)) continue;
        c = c * inv_lc;
        q[static_cast<size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<size_t>(k - db + j)];
            slot = slot - c * b.coeff(j);
        }
    }
    r.resize(static_cast<size_t>(db));
    return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> rem(const Poly<F>& a, const Poly<F>& b) {
    return divmod(a, b).second;
}

/// Exact quotient over an integral domain; throws if b does not divide a.
template <class F>
Poly<F> exact_quotient(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.is_zero()) return Poly<F>();
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    std::vector<F> r = a.coeffs();
    std::vector<F> q(static_cast<size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        F c = r[static_cast<size_t>(k)];
        if (is_zero(c)) continue;
        c = exact_quotient(c, b.lc());
        q[static_cast<size_t>(k - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& slot = r[static_cast<size_t>(k - db + j)];
            slot = slot - c * b.coeff(j);
        }
    }
    for (const auto& c : r)
        if (!is_zero(c)) throw std::domain_error("inexact polynomial division");
    return Poly<F>(std::move(q));
}

/// Divide every coefficient exactly by a scalar.
template <class F>
Poly<F> exact_scalar_quotient(const Poly<F>& a, const F& s) {
    std::vector<F> v = a.coeffs();
    for (auto& c : v) c = exact_quotient(c, s);
    return Poly<F>(std::move(v));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
template <class F>
Poly<F> pseudo_remainder(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    Poly<F> r = a;
    int e = a.degree() - b.degree() + 1;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        Poly<F> t = Poly<F>::monomial(r.lc(), r.degree() - db);
        r = r.scaled(b.lc()) - t * b;
        --e;
    }
    return e > 0 ? r.scaled(pow(b.lc(), e)) : r;
}

template <class F>
Poly<F> monic(const Poly<F>& p) {
    if (p.is_zero()) return p;
    return p.scaled(F(1) / p.lc());
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = rem(a, b);
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

template <class F>
struct ExtendedGcd {
    Poly<F> g;
    Poly<F> s;
    Poly<F> t;
};

/// g = s*a + t*b with g the monic gcd. For b | a the result is (monic(b), 0, 1/lc(b)).
template <class F>
ExtendedGcd<F> extended_gcd(const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of zeros");
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::one(), s1;
    Poly<F> t0, t1 = Poly<F>::one();
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        Poly<F> s2 = s0 - q * s1;
        s0 = std::exchange(s1, std::move(s2));
        Poly<F> t2 = t0 - q * t1;
        t0 = std::exchange(t1, std::move(t2));
    }
    F inv = F(1) / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Solve s*a + t*b = c with deg s < deg b; pre: gcd(a, b) divides c.
template <class F>
std::pair<Poly<F>, Poly<F>> solve_bezout(const Poly<F>& a, const Poly<F>& b, const Poly<F>& c) {
    auto e = extended_gcd(a, b);
    auto [q, r] = divmod(c, e.g);
    if (!r.is_zero()) throw std::domain_error("bezout right-hand side not divisible by gcd");
    Poly<F> s = e.s * q;
    Poly<F> t = e.t * q;
    if (!b.is_zero() && b.degree() > 0) {
        auto [k, s_red] = divmod(s, b);
        s = s_red;
        t = t + k * a;
    }
    return {s, t};
}

template <class F>
struct SquarefreeFactor {
    Poly<F> factor;
    int multiplicity;
    friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. p = lc(p) * prod factor^multiplicity, with monic pairwise
/// coprime squarefree factors listed by increasing multiplicity.
template <class F>
std::vector<SquarefreeFactor<F>> squarefree_decompose(const Poly<F>& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<SquarefreeFactor<F>> out;
    if (p.degree() == 0) return out;
    Poly<F> dp = derivative(p);
    Poly<F> g = gcd(p, dp);
    Poly<F> c = exact_quotient(p, g);
    Poly<F> d = exact_quotient(dp, g) - derivative(c);
    for (int i = 1; c.degree() > 0; ++i) {
        Poly<F> a = gcd(c, d);
        c = exact_quotient(c, a);
        d = exact_quotient(d, a) - derivative(c);
        if (a.degree() > 0) out.push_back({monic(a), i});
    }
    return out;
}

/// Monic product of the distinct irreducible factors of p.
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
    if (p.degree() <= 0) return Poly<F>::one();
    return monic(exact_quotient(p, gcd(p, derivative(p))));
}

/// Resultant by the subresultant pseudo-remainder sequence. Only exact
/// division is used, so F may be any integral domain.
template <class F>
F resultant(Poly<F> a, Poly<F> b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    if (a.degree() == 0) return pow(a.lc(), b.degree());
    if (b.degree() == 0) return pow(b.lc(), a.degree());
    F sign(1);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
    }
    F g(1), h(1);
    for (;;) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        Poly<F> r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return F();
        b = exact_scalar_quotient(r, g * pow(h, delta));
        g = a.lc();
        if (delta > 0) h = exact_quotient(pow(g, delta), pow(h, delta - 1));
        if (b.degree() == 0) {
            const int da = a.degree();
            return sign * exact_quotient(pow(b.lc(), da), pow(h, da - 1));
        }
    }
}

template <class F>
struct PartialFraction {
    Poly<F> numerator;
    Poly<F> factor;
    int power;
    friend bool operator==(const PartialFraction&, const PartialFraction&) = default;
};

/// Expand num/den over a coprime factorisation den ~ prod factor^mult
/// (equality up to a constant). Each term has deg numerator < deg factor.
template <class F>
std::vector<PartialFraction<F>> partial_fractions(const Poly<F>& num, const Poly<F>& den,
                                                  const std::vector<SquarefreeFactor<F>>& den_factors) {
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    if (num.degree() >= den.degree()) throw std::invalid_argument("call poly_divmod first");
    Poly<F> product = Poly<F>::one();
    for (const auto& f : den_factors) product = product * pow(f.factor, f.multiplicity);
    if (monic(product) != monic(den))
        throw std::invalid_argument("denominator factors do not multiply to the denominator");
    // num/den == (num * lc(product)/lc(den)) / product
    Poly<F> n = num.scaled(product.lc() / den.lc());
    std::vector<PartialFraction<F>> out;
    for (const auto& f : den_factors) {
        Poly<F> q = pow(f.factor, f.multiplicity);
        Poly<F> cofactor = exact_quotient(product, q);
        // A/q with A = n * cofactor^{-1} mod q
        auto e = extended_gcd(cofactor, q);
        if (e.g.degree() != 0) throw std::invalid_argument("denominator factors are not coprime");
        Poly<F> a = rem(n * e.s, q);
        std::vector<PartialFraction<F>> local;
        for (int k = f.multiplicity; k >= 1 && !a.is_zero(); --k) {
            auto [quo, r] = divmod(a, f.factor);
            if (!r.is_zero()) local.push_back({r, f.factor, k});
            a = quo;
        }
        std::reverse(local.begin(), local.end());
        out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

/// Reduced fraction num/den with monic denominator.
template <class F>
class RatFunc {
public:
    RatFunc() : den_(Poly<F>::one()) {}
    RatFunc(Poly<F> num) : num_(std::move(num)), den_(Poly<F>::one()) {}
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>::one();
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
        F inv = F(1) / den_.lc();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    Poly<F> num_;
    Poly<F> den_;
};

template <class F>
RatFunc<F> derivative(const RatFunc<F>& f) {
    return RatFunc<F>(derivative(f.num()) * f.den() - f.num() * derivative(f.den()), f.den() * f.den());
}

}  // namespace liouville
