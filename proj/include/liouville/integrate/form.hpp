#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "liouville/algebra/poly.hpp"
#include "liouville/algebra/rational.hpp"
#include "liouville/syntax/expr.hpp"
#include "liouville/tower/tower.hpp"

namespace liouville {

/// Formal root alpha of a squarefree polynomial over Q(i) of degree >= 2
/// with no root in Q(i). A log term carrying it stands for the sum over all
/// roots.
struct RootOf {
    Poly<GaussRat> poly;  // monic
    friend bool operator==(const RootOf&, const RootOf&) = default;
};

struct ConstantValue {
    std::variant<GaussRat, RootOf> value;

    bool is_exact() const { return std::holds_alternative<GaussRat>(value); }
    const GaussRat& exact() const { return std::get<GaussRat>(value); }
    const RootOf& root_of() const { return std::get<RootOf>(value); }
    std::string str() const;
};

/// lambda * log(arg). For an exact lambda, arg is a constant polynomial in
/// alpha holding the tower element. For RootOf, the term is the sum of
/// alpha * log(arg(alpha)) over the roots alpha, with arg a polynomial in
/// alpha of degree below that of the root polynomial.
struct LogTerm {
    ConstantValue lambda;
    TPoly arg;

    static LogTerm exact(GaussRat lambda, TowerElem arg);
    const TowerElem& exact_arg() const { return arg.lc(); }
};

struct LiouvilleForm {
    TowerElem r0;
    std::vector<LogTerm> logs;
};

enum class CertificateKind { ResidueNotConstant, RischOdeUnsolvable, LogDegreeObstruction };

/// Why an integrand has no elementary integral over the tower.
struct Certificate {
    CertificateKind kind;
    int level = 0;
    /// ResidueNotConstant: the resultant in z, monic, with a non-constant coefficient.
    /// RischOdeUnsolvable: the equation y' + f*y = g over K_{level-1}.
    std::string detail;
    TowerElem f, g;
    /// ResidueNotConstant: numerator and squarefree denominator of the
    /// simple part in t_level, and the resultant with coefficients in K_{level-1}.
    TPoly num, den;
    Poly<TPoly> resultant;
    /// Steps of the Risch differential equation solver.
    std::vector<std::string> trace;
    /// LogDegreeObstruction: power of t_level whose coefficient failed.
    int power = 0;
    std::shared_ptr<const Certificate> cause;
    std::vector<std::string> assumptions;

    std::string kind_name() const;
    /// One line, e.g. "Risch ODE y' + 2*x*y = 1 has no rational solution".
    std::string summary() const;
};

using IntegrationResult = std::variant<LiouvilleForm, Certificate>;

/// D(r0) + sum lambda * D(arg)/arg, summed over the roots for RootOf terms.
TowerElem derivative_of(const Tower& t, const LiouvilleForm& form);
TowerElem log_derivative(const Tower& t, const LogTerm& term);

/// Newton power sums p_0 .. p_{n-1} of the roots of a monic polynomial of degree n.
std::vector<GaussRat> power_sums(const Poly<GaussRat>& monic_poly);

/// "r0 + lambda*ln(arg) + ...". Quadratic root sums appear with explicit
/// square roots; higher ones as sum(alpha*ln(...), alpha^3 + ... = 0).
std::string form_string(const Tower& t, const LiouvilleForm& form);
/// {"status":"elementary","r0":...,"logs":[{"lambda":...,"arg":...}]}
std::string form_json(const Tower& t, const LiouvilleForm& form);
std::string certificate_json(const Certificate& c);

/// Surface expression of a polynomial in alpha with tower coefficients,
/// with alpha rendered as `alpha`.
Expr alpha_poly_expr(const Tower& t, const TPoly& p, const Expr& alpha);

}  // namespace liouville
