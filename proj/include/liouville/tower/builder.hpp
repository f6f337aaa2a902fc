#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liouville/syntax/expr.hpp"
#include "liouville/tower/tower.hpp"

namespace liouville {

/// A log or exp that is algebraic over the tower below it and cannot be
/// rewritten inside the tower. `relation` is the witness found.
class DependentMonomialError : public UnsupportedError {
public:
    DependentMonomialError(const std::string& monomial, std::string relation, std::vector<Expr> seeds = {})
        : UnsupportedError("dependent monomial " + monomial + ": " + relation),
          relation_(std::move(relation)),
          seeds_(std::move(seeds)) {}
    const std::string& relation() const { return relation_; }
    /// Monomials that make the relation integral when registered first.
    const std::vector<Expr>& seeds() const { return seeds_; }

private:
    std::string relation_;
    std::vector<Expr> seeds_;
};

struct MonomialCheck {
    bool valid = true;
    /// For a dependent monomial: "exp(b) = ..." or "log(a) = ...".
    std::string relation;
    /// Equal value inside the existing tower, when one exists.
    std::optional<TowerElem> replacement;
    /// When the relation has fractional exponents only: exp(u/q) for each
    /// exp(u) involved with exponent denominator q, or the log itself.
    std::vector<Expr> seeds;
};

/// Independence test from the structure theorems for elementary extensions.
/// exp(b) is dependent iff Db = sum r_l D(u_l) with rational r_l, where u_l
/// runs over the log monomials and the arguments of the exp monomials;
/// log(a) is dependent iff Da/a is such a combination. The rational
/// coefficients come from an exact linear solve, not a bounded search.
MonomialCheck check_monomial(const Tower& t, MonomialKind kind, const TowerElem& arg);

/// Converts expressions into one shared tower, adding a monomial for each
/// new exp/log subterm (arguments first) and reusing monomials whose
/// argument is equal.
class TowerBuilder {
public:
    explicit TowerBuilder(std::string variable = "x") : tower_(std::move(variable)) {}

    /// Trig functions are rewritten first. Throws UnsupportedError for
    /// fractional powers ("algebraic extension: ..."), unknown
    /// symbols, transcendental constants and dependent monomials.
    TowerElem add(const Expr& e);

    const Tower& tower() const { return tower_; }

private:
    TowerElem convert(const Expr& e);
    TowerElem monomial(MonomialKind kind, const TowerElem& arg);

    Tower tower_;
};

struct BuiltTower {
    Tower tower;
    TowerElem elem;
};

BuiltTower build_tower(const Expr& e, const std::string& variable = "x");

}  // namespace liouville
