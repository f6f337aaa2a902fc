#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liouville/integrate/form.hpp"
#include "liouville/tower/tower.hpp"

namespace liouville {

/// The sample interval meets a zero of a denominator or of a log argument,
/// or a log monomial's argument crosses the negative real axis.
class SingularityError : public std::runtime_error {
public:
    SingularityError(double where, std::string subterm, const std::string& what = "vanishes")
        : std::runtime_error("singularity at x = " + format_point(where) + ": " + subterm + " " + what),
          where_(where),
          subterm_(std::move(subterm)) {}
    double where() const { return where_; }
    const std::string& subterm() const { return subterm_; }

    static std::string format_point(double x);

private:
    double where_;
    std::string subterm_;
};

struct NumericSample {
    double lo = 0, hi = 0;
    std::complex<double> quadrature;
    std::complex<double> difference;  // F(hi) - F(lo)
    double abs_error = 0;
};

struct VerificationReport {
    bool symbolic_ok = false;
    std::vector<NumericSample> numeric_samples;
    std::vector<std::string> assumptions;
    /// Set when no numeric check ran, with the reason.
    std::string numeric_skipped;

    static constexpr double tolerance = 1e-6;
    bool numeric_ok() const;
    std::string to_json() const;
};

/// Exact check D(r0) + sum lambda D(r)/r == f.
bool verify_derivative(const Tower& t, const LiouvilleForm& result, const TowerElem& f);

/// Adaptive Simpson quadrature of f over n_points equal pieces of
/// (lo, hi), each compared with the difference of the antiderivative.
/// Logarithms follow the principal branch at lo and are continued along the
/// segment. Throws SingularityError if the closed interval meets a zero of
/// a denominator, of a log argument or of a log monomial's argument.
VerificationReport numeric_check(const Tower& t, const LiouvilleForm& result, const TowerElem& f,
                                 std::pair<double, double> interval, int n_points = 4);

/// First interval from a fixed list of candidates free of singularities.
std::optional<std::pair<double, double>> default_interval(const Tower& t, const LiouvilleForm& result,
                                                          const TowerElem& f);

/// symbolic_ok, assumptions and, when an interval is available, numeric samples.
VerificationReport verify(const Tower& t, const LiouvilleForm& result, const TowerElem& f,
                          std::optional<std::pair<double, double>> interval = std::nullopt);

/// Numeric value of the antiderivative at x, logs on the principal branch.
std::complex<double> evaluate_form(const Tower& t, const LiouvilleForm& result, double x);

}  // namespace liouville
