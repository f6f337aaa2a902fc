#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liouville/algebra/poly.hpp"
#include "liouville/tower/elem.hpp"

namespace liouville {

/// Thrown when an element of K[alpha]/(m) that is not invertible gets
/// inverted. `factor` is the monic gcd of the element with m, a proper
/// factor of m with coefficients in Q(i).
class ZeroDivisor : public std::runtime_error {
public:
    explicit ZeroDivisor(Poly<GaussRat> f) : std::runtime_error("zero divisor modulo root polynomial"), factor(std::move(f)) {}
    Poly<GaussRat> factor;
};

/// Element of K[alpha]/(m) with K a tower field and m in Q(i)[alpha]
/// squarefree. Stored reduced, as a polynomial in alpha of degree < deg m.
/// Elements of degree 0 need no modulus; the modulus is taken from whichever
/// operand carries one.
class AlgElem {
public:
    using Modulus = std::shared_ptr<const TPoly>;

    AlgElem() = default;
    AlgElem(long c) : p_(TowerElem(c)) {}
    AlgElem(TowerElem c) : p_(std::move(c)) {}
    AlgElem(TPoly p, Modulus m);

    const TPoly& poly() const { return p_; }
    const Modulus& modulus() const { return mod_; }
    bool is_zero() const { return p_.is_zero(); }

    AlgElem operator-() const { return AlgElem(-p_, mod_, true); }
    friend AlgElem operator+(const AlgElem& a, const AlgElem& b);
    friend AlgElem operator-(const AlgElem& a, const AlgElem& b) { return a + (-b); }
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b);
    /// Throws ZeroDivisor when b is a zero divisor.
    friend AlgElem operator/(const AlgElem& a, const AlgElem& b);
    AlgElem& operator+=(const AlgElem& o) { return *this = *this + o; }
    AlgElem& operator-=(const AlgElem& o) { return *this = *this - o; }
    AlgElem& operator*=(const AlgElem& o) { return *this = *this * o; }
    friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.p_ == b.p_; }

private:
    AlgElem(TPoly p, Modulus m, bool) : p_(std::move(p)), mod_(std::move(m)) {}
    TPoly p_;
    Modulus mod_;
};

inline bool is_zero(const AlgElem& a) { return a.is_zero(); }

using APoly = Poly<AlgElem>;

/// Lift of a Q(i) polynomial in alpha to tower coefficients.
TPoly lift_constant_poly(const Poly<GaussRat>& p);

/// Monic gcd of a and b in (K[alpha]/(m))[t], with m split into coprime
/// factors whenever a zero divisor shows up (dynamic evaluation). Returns
/// one (factor of m, gcd modulo that factor) pair per branch; the factors
/// multiply to m.
std::vector<std::pair<Poly<GaussRat>, APoly>> split_gcd(const Poly<GaussRat>& m, const APoly& a, const APoly& b);

}  // namespace liouville
