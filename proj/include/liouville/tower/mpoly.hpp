#pragma once

#include <memory>

#include "liouville/algebra/poly.hpp"
#include "liouville/algebra/rational.hpp"

namespace liouville {

/// Polynomial in Q(i)[t_0, t_1, ..., t_L], stored recursively: at level l it
/// is a polynomial of positive degree in t_l whose coefficients have level
/// below l. Constants have level -1. The representation is unique, so
/// equality is structural.
class MPoly {
public:
    using Poly = liouville::Poly<MPoly>;

    MPoly() = default;  // zero
    MPoly(long c);
    MPoly(GaussRat c);

    static MPoly generator(int level);
    /// Polynomial in t_level with coefficients below `level`; collapses to the
    /// constant coefficient when p has degree <= 0.
    static MPoly from_poly(int level, Poly p);

    int level() const { return rep_ ? rep_->level : -1; }
    bool is_zero() const { return !rep_; }
    bool is_constant() const { return level() < 0; }
    bool is_one() const { return rep_ && rep_->level < 0 && rep_->value.is_one(); }
    /// pre: is_constant()
    GaussRat constant() const;
    /// Coefficients in t_l for l >= level().
    Poly as_poly(int l) const;
    /// Coefficients in t_level(). pre: level() >= 0.
    const Poly& poly() const;
    /// Degree in t_l, for l >= level(); -1 for zero.
    int degree_in(int l) const;

    /// The leading coefficient followed down every level: an element of Q(i).
    GaussRat base_lc() const;

    MPoly operator-() const;
    MPoly scaled(const GaussRat& c) const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend bool operator==(const MPoly& a, const MPoly& b);

private:
    struct Rep {
        int level;
        GaussRat value;  // level -1
        Poly coeffs;     // level >= 0
    };
    explicit MPoly(std::shared_ptr<const Rep> r) : rep_(std::move(r)) {}

    std::shared_ptr<const Rep> rep_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// a / b when b divides a; throws std::domain_error otherwise.
MPoly exact_quotient(const MPoly& a, const MPoly& b);

/// Greatest common divisor normalized to base_lc() = 1; gcd(0, 0) = 0.
/// Heuristic gcd by integer evaluation, falling back to gcd_subresultant.
MPoly gcd(const MPoly& a, const MPoly& b);

/// Same value as gcd(): content and primitive part recursively, with a
/// subresultant remainder sequence per level.
MPoly gcd_subresultant(const MPoly& a, const MPoly& b);

/// gcd of the coefficients of a as a polynomial in its top variable, normalized.
MPoly content(const MPoly& a);

/// a scaled so that base_lc() = 1 (zero stays zero).
MPoly normalized(const MPoly& a);

}  // namespace liouville
