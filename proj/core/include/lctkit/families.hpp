#pragma once

#include "lctkit/solver.hpp"
#include "lctkit/threshold_set.hpp"

#include <string>
#include <vector>

namespace lctkit {

/// Thresholds of irreducible plane curves, { 1/a + 1/b : 2 <= a <= b },
/// restricted to (t, 1]: for each a, the tail in b forms a decreasing family
/// with limit 1/a -- stored as a sequence when the whole tail stays above t,
/// as finitely many points otherwise.
ThresholdSet igusa_set(const Rational& t);

/// Thresholds in dimension one, { 1/m : m >= 1 }, restricted to (t, 1].
ThresholdSet t1_set(const Rational& t);

/// Accumulation points of the plane-curve slice above t must equal the
/// dimension-one thresholds above t with 1 removed, each limit witnessed by
/// an explicit decreasing family.
struct DimLadderReport {
    bool ok = true;
    std::vector<Rational> accumulation_points;
    std::vector<Rational> dim1_values;  // 1 already removed
    std::vector<std::string> failures;
};
DimLadderReport verify_dim_ladder(const Rational& t);

/// Every plane-curve threshold above t is a solution of the degree-two sum
/// equation: checked elementwise on points and sampled family terms, plus a
/// structural tail match against the solver's own families.
struct N1ComparisonReport {
    bool ok = true;
    long long values_checked = 0;
    std::vector<std::string> failures;
};
N1ComparisonReport compare_n1_igusa(const Rational& t);

}  // namespace lctkit
