#include "liouville/algebra/roots.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace liouville {

namespace {

std::complex<double> eval(const std::vector<std::complex<double>>& c, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

mpz_class lcm_of_denominators(const Poly<GaussRat>& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().denominator().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().denominator().get_mpz_t());
    }
    return l;
}

Rat round_to_integer(double v) { return Rat(mpz_class(static_cast<long>(std::llround(v)))); }

}  // namespace

std::vector<std::complex<double>> numeric_roots(const Poly<GaussRat>& p) {
    const int n = p.degree();
    if (n <= 0) return {};
    std::vector<std::complex<double>> c;
    for (const auto& v : p.coeffs()) c.push_back(v.to_complex());
    const std::complex<double> lead = c.back();
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<size_t>(i)] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    std::vector<std::complex<double>> dc;
    for (int i = 1; i <= n; ++i) dc.push_back(c[static_cast<size_t>(i)] * double(i));
    std::vector<std::complex<double>> roots;
    for (int i = 0; i < n; ++i) {
        std::complex<double> z = solver.eigenvalues()[i];
        for (int it = 0; it < 3; ++it) {
            auto d = eval(dc, z);
            if (std::abs(d) < 1e-300) break;
            auto step = eval(c, z) / d;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            if (std::abs(step) > 1e-3 * (1 + std::abs(z))) break;
            z -= step;
        }
        roots.push_back(z);
    }
    return roots;
}

std::vector<GaussRat> gaussian_rational_roots(const Poly<GaussRat>& p) {
    std::vector<GaussRat> found;
    if (p.degree() <= 0) return found;
    Poly<GaussRat> q = squarefree_part(p);
    // integral form: every coefficient in Z[i]
    Poly<GaussRat> integral = q.scaled(GaussRat(Rat(lcm_of_denominators(q))));
    const std::complex<double> lead = integral.lc().to_complex();
    const GaussRat lead_exact = integral.lc();
    for (auto z : numeric_roots(q)) {
        // lead * root is a Gaussian integer whenever root is in Q(i)
        std::complex<double> w = lead * z;
        if (!(std::abs(w.real()) < 1e15 && std::abs(w.imag()) < 1e15)) continue;
        GaussRat cand = GaussRat(round_to_integer(w.real()), round_to_integer(w.imag())) / lead_exact;
        bool seen = false;
        for (const auto& f : found) seen = seen || f == cand;
        if (!seen && q(cand).is_zero()) found.push_back(cand);
    }
    return found;
}

}  // namespace liouville
