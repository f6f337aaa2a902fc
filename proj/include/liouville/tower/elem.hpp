#pragma once

#include <string>

#include "liouville/algebra/poly.hpp"
#include "liouville/algebra/rational.hpp"
#include "liouville/tower/mpoly.hpp"

namespace liouville {

/// Element of a tower field K_L = Q(i)(t_0, t_1, ..., t_L), where t_0 = x and
/// t_l for l >= 1 is the l-th monomial.
///
/// Stored as a reduced quotient num/den of polynomials in Q(i)[t_0, ..., t_L]
/// with gcd(num, den) = 1 and den.base_lc() = 1, so equal values have equal
/// representations and equality is structural. The level is the largest l
/// such that t_l occurs; constants have level -1.
///
/// Arithmetic only needs the levels; the derivation lives in Tower.
class TowerElem {
public:
    using Poly = liouville::Poly<TowerElem>;

    TowerElem() = default;  // zero
    TowerElem(long c);
    TowerElem(GaussRat c);

    /// t_level; level 0 is the base variable.
    static TowerElem generator(int level);
    /// num/den in K_{level-1}[t_level]. Coefficients must lie below `level`.
    static TowerElem fraction(int level, const Poly& num, const Poly& den);
    static TowerElem polynomial(int level, const Poly& p);
    /// n/d reduced; throws std::domain_error when d = 0.
    static TowerElem quotient(const MPoly& n, const MPoly& d);

    int level() const { return std::max(num_.level(), den_.level()); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return level() < 0; }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// pre: is_constant()
    GaussRat constant() const;

    /// Numerator and denominator as polynomials in t_l over K_{l-1}, for
    /// any l >= level(). The denominator is monic.
    Poly num(int l) const;
    Poly den(int l) const;
    /// num(level()) and den(level()). pre: level() >= 0.
    Poly num() const;
    Poly den() const;
    bool is_polynomial_in(int l) const { return den_.degree_in(l) <= 0; }

    /// The reduced polynomial quotient.
    const MPoly& numerator() const { return num_; }
    const MPoly& denominator() const { return den_; }

    TowerElem operator-() const;
    TowerElem inverse() const;
    TowerElem pow(long e) const;

    friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator-(const TowerElem& a, const TowerElem& b) { return a + (-b); }
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator/(const TowerElem& a, const TowerElem& b) { return a * b.inverse(); }
    TowerElem& operator+=(const TowerElem& o) { return *this = *this + o; }
    TowerElem& operator-=(const TowerElem& o) { return *this = *this - o; }
    TowerElem& operator*=(const TowerElem& o) { return *this = *this * o; }
    TowerElem& operator/=(const TowerElem& o) { return *this = *this / o; }

    friend bool operator==(const TowerElem& a, const TowerElem& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    /// Debug rendering with generators named t0 (= x), t1, ...
    std::string debug_string() const;

private:
    TowerElem(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) {}
    /// pre: gcd(n, d) = 1, d != 0.
    static TowerElem coprime(MPoly n, MPoly d);

    MPoly num_;
    MPoly den_ = MPoly(1);
};

inline bool is_zero(const TowerElem& e) { return e.is_zero(); }
inline TowerElem exact_quotient(const TowerElem& a, const TowerElem& b) { return a / b; }

using TPoly = TowerElem::Poly;

/// Maximum level among the coefficients of p (-1 if p is constant in Q(i)).
int coeff_level(const TPoly& p);

/// Largest level at which an expression combining a and b lives.
inline int joint_level(const TowerElem& a, const TowerElem& b) { return std::max(a.level(), b.level()); }

/// Monic gcd over the coefficient field, computed fraction-free in the
/// polynomial ring. Found by argument-dependent lookup ahead of the generic
/// Euclidean gcd.
TPoly gcd(const TPoly& a, const TPoly& b);

/// p with coefficient denominators cleared, as a polynomial in t_l: the
/// returned MPoly equals p times an element of Q(i)[t_0, ..., t_{l-1}].
MPoly clear_denominators(int l, const TPoly& p);

/// Coefficients of m in t_l, as a polynomial over K_{l-1}.
TPoly to_tpoly(int l, const MPoly& m);

}  // namespace liouville
