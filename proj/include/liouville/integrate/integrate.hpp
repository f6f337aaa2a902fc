#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liouville/integrate/form.hpp"
#include "liouville/syntax/expr.hpp"
#include "liouville/tower/tower.hpp"

namespace liouville {

/// A degree bound above the configured cap; reported as unsupported input.
class DegreeLimitError : public UnsupportedError {
public:
    using UnsupportedError::UnsupportedError;
};

/// LIOUVILLE_MAX_DEGREE, default 64.
int max_degree();

struct HermiteResult {
    TowerElem rational_part;
    TPoly num;  // deg num < deg den
    TPoly den;  // monic, squarefree
};

/// a/d = D(rational_part) + num/den for a proper a/d in K_{level-1}[t_level]
/// with d normal (coprime to t_level at an exponential level).
HermiteResult hermite_reduce(const Tower& t, int level, const TPoly& a, const TPoly& d);

/// Log part of a/d, for d squarefree monic normal and deg a < deg d. On
/// success a/d minus the derivative of the logs lies in K_{level-1}.
std::variant<std::vector<LogTerm>, Certificate> rothstein_trager(const Tower& t, int level, const TPoly& a,
                                                                 const TPoly& d);

/// Integral of a polynomial in a logarithmic t_level, of degree at most one more.
IntegrationResult integrate_polypart_log(const Tower& t, int level, const TPoly& p);

struct RdeResult {
    std::optional<TowerElem> solution;
    std::vector<std::string> trace;
};

/// y in K_level with D(y) + f*y = g.
RdeResult solve_rde(const Tower& t, int level, const TowerElem& f, const TowerElem& g);

/// Sum of forms: r0 added, logs with equal or proportional arguments merged,
/// zero coefficients dropped, arguments normalized to leading coefficient 1.
LiouvilleForm combine(const Tower& t, const std::vector<LiouvilleForm>& parts);

/// Elementary integral of f over the tower, or the reason none exists.
IntegrationResult integrate(const Tower& t, const TowerElem& f);

/// "y' + f*y = g".
std::string ode_string(const Tower& t, const TowerElem& f, const TowerElem& g);

}  // namespace liouville
