#include "liouville/algebra/rational.hpp"

#include <climits>
#include <stdexcept>

namespace liouville {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty number");
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        if (whole.empty()) whole = "0";
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class digits(whole + frac, 10);
        return Rat(mpq_class(digits, scale));
    }
    mpq_class q(s, 10);
    q.canonicalize();
    return Rat(q);
}

bool Rat::fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }

long Rat::to_long() const {
    if (!fits_long()) throw std::overflow_error("rational does not fit a machine integer");
    return v_.get_num().get_si();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rat(mpq_class(n, d));
}

std::string Rat::str() const { return v_.get_str(); }

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat re = re_ * o.re_ - im_ * o.im_;
    Rat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rat n = norm();
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat GaussRat::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussRat result(1), base(*this);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

namespace {

std::string imaginary_part(const Rat& im) {
    if (im.is_one()) return "i";
    if (im == Rat(-1)) return "-i";
    return im.str() + "*i";
}

}  // namespace

std::string GaussRat::str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) return imaginary_part(im_);
    if (im_.sign() < 0) return re_.str() + " - " + imaginary_part(-im_);
    return re_.str() + " + " + imaginary_part(im_);
}

}  // namespace liouville
