#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <string>
#include <string_view>

namespace liouville {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rat {
public:
    Rat() = default;
    Rat(long v) : v_(v) {}
    Rat(long num, long den);
    explicit Rat(mpq_class v);
    explicit Rat(const mpz_class& v) : v_(v) {}

    /// Accepts "12", "-3/4" and terminating decimals such as "1.25".
    static Rat parse(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    bool fits_long() const;
    long to_long() const;  // pre: is_integer() && fits_long()
    double to_double() const { return v_.get_d(); }

    Rat inverse() const;
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat pow(long e) const;

    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

/// Element of Q(i): re + im*i.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}
    GaussRat(Rat re) : re_(std::move(re)) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat imaginary_unit() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_rational_integer() const { return is_real() && re_.is_integer(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    Rat norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;
    GaussRat pow(long e) const;

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// Human-readable form that the expression parser reads back, e.g.
    /// "3", "-1/2", "i", "-1/4*i", "1/2 + 3/4*i".
    std::string str() const;

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o) { return *this *= o.inverse(); }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) = default;

private:
    Rat re_;
    Rat im_;
};

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_zero(const GaussRat& r) { return r.is_zero(); }
inline Rat exact_quotient(const Rat& a, const Rat& b) { return a / b; }
inline GaussRat exact_quotient(const GaussRat& a, const GaussRat& b) { return a / b; }

}  // namespace liouville
