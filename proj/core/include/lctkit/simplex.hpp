#pragma once

#include "lctkit/rational.hpp"

#include <vector>

namespace lctkit {

enum class LpRelation { le, eq, ge };

struct LpConstraint {
    std::vector<Rational> coeffs;
    LpRelation rel = LpRelation::le;
    Rational rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Rational objective;
    std::vector<Rational> x;
};

/// Minimize c^T x subject to the constraints and x >= 0, in exact rational
/// arithmetic.  Two-phase dense simplex with Bland's rule; intended for the
/// tiny problems this library produces (a handful of variables), where
/// exactness costs nothing.
LpSolution lp_minimize(const std::vector<Rational>& objective, const std::vector<LpConstraint>& constraints);

}  // namespace lctkit
