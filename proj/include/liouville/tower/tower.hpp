#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liouville/syntax/expr.hpp"
#include "liouville/tower/elem.hpp"

namespace liouville {

enum class MonomialKind { Log, Exp };

struct Monomial {
    MonomialKind kind;
    TowerElem arg;  // nonzero, strictly below the monomial's level
};

/// Kind of the generator at a level: the base variable, or a monomial.
enum class LevelKind { Base, Log, Exp };

/// Raised when an evaluation homomorphism hits a zero denominator.
class PoleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Differential field K_L = Q(i)(x, t_1, ..., t_L) with Dx = 1,
/// D t_l = D(a)/a for t_l = log(a) and D t_l = D(b) t_l for t_l = exp(b).
/// Levels are numbered from 0 (x) to top_level().
class Tower {
public:
    explicit Tower(std::string variable = "x");

    const std::string& variable() const { return var_; }
    int top_level() const { return static_cast<int>(mons_.size()); }
    LevelKind kind(int level) const;
    /// pre: 1 <= level <= top_level()
    const Monomial& monomial(int level) const;
    const std::vector<Monomial>& monomials() const { return mons_; }

    /// Appends a monomial without any independence check and returns its level.
    int push(Monomial m);

    /// D(log a) = Da/a, D(b) for exp(b), 1 for the base level.
    const TowerElem& eta(int level) const;

    TowerElem derive(const TowerElem& f) const;
    /// D on K_{level-1}[t_level].
    TPoly derive_poly(int level, const TPoly& p) const;
    /// Derivative of the coefficients only (t_level treated as a constant).
    TPoly derive_coefficients(const TPoly& p) const;
    /// D(t_level) as a polynomial in t_level.
    TPoly generator_derivative(int level) const;

    /// Values of x, t_1, ..., t_L at a point, by exp/log of the arguments
    /// on principal branches.
    std::vector<std::complex<double>> numeric_point(std::complex<double> x) const;

    /// Surface form of an element, e.g. "x*log(x) - x".
    Expr to_expr(const TowerElem& f) const;
    std::string str(const TowerElem& f) const;
    Expr generator_expr(int level) const;

    /// {"base":"x","monomials":[{"kind":"exp","arg":"x^2"}]}
    std::string to_json() const;
    /// One line per monomial, e.g. "exp(x^2) transcendental over C(x)".
    std::vector<std::string> assumptions() const;

private:
    /// e * D(p) for a polynomial p, where e is a multiple of the
    /// denominators of D(t_j) for every t_j occurring in p.
    MPoly scaled_derivative(const MPoly& p, const MPoly& e) const;

    std::string var_;
    std::vector<Monomial> mons_;
    std::vector<TowerElem> etas_;
    /// common_den_[l]: lcm of the denominators of D(t_1), ..., D(t_l).
    std::vector<MPoly> common_den_;
};

/// Image of f under t_l -> point[l] (l = 0..level(f)). Throws PoleError on a
/// vanishing denominator.
GaussRat evaluate_exact(const TowerElem& f, const std::vector<GaussRat>& point);
std::complex<double> evaluate_numeric(const TowerElem& f, const std::vector<std::complex<double>>& point);

/// Constant value of f if D f = 0. Under tower validity the constants of
/// the tower are exactly Q(i), so this is the level -1 test.
std::optional<GaussRat> constant_part(const Tower& t, const TowerElem& f);

inline bool is_zero(const Tower&, const TowerElem& f) { return f.is_zero(); }

/// Constants c_j with target = sum_j c_j * basis[j], or nullopt if none
/// exist. With rational_only the c_j are restricted to Q.
///
/// Candidates come from exact evaluation at random points, which is valid
/// because x and the monomials are algebraically independent; every
/// candidate is confirmed by exact arithmetic before it is returned.
std::optional<std::vector<GaussRat>> solve_constant_combination(const TowerElem& target,
                                                                 const std::vector<TowerElem>& basis,
                                                                 bool rational_only = false);

}  // namespace liouville
