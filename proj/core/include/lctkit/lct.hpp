#pragma once

#include "lctkit/rational.hpp"
#include "lctkit/simplex.hpp"

#include <optional>
#include <vector>

namespace lctkit {

/// Threshold value together with its uncapped companion.  The raw minimum
/// ratio can exceed 1 (or be infinite for divisors missing the origin); the
/// threshold itself is the value capped at 1.  Both are always reported.
struct LctValue {
    Rational capped{1};
    bool uncapped_finite = false;
    Rational uncapped;  // meaningful only when uncapped_finite
};

struct ResolutionRow {
    Rational log_discrepancy;  // >= 0
    Rational multiplicity;     // > 0
};

/// Rows of (log discrepancy, multiplicity) read off a log resolution.  The
/// empty table is the smooth case.
class ResolutionTable {
public:
    ResolutionTable() = default;
    explicit ResolutionTable(std::vector<ResolutionRow> rows);
    const std::vector<ResolutionRow>& rows() const { return rows_; }

private:
    std::vector<ResolutionRow> rows_;
};

Rational lct_from_resolution(const ResolutionTable& table);
LctValue lct_from_resolution_full(const ResolutionTable& table);

/// Exponent-vector set of a monomial hypersurface in N variables.
/// Componentwise-dominated vectors are pruned on construction (they do not
/// change the Newton polytope); the input must not consist of zero vectors
/// only.
class MonomialDivisor {
public:
    MonomialDivisor(int ambient_dim, std::vector<std::vector<Int>> exponents);

    int dim() const { return dim_; }
    const std::vector<std::vector<Int>>& exponents() const { return exps_; }

    /// Divisor misses the origin (a pruned exponent vector is zero); all
    /// candidate ratios are infinite then.
    bool degenerate() const;

    /// Minimum coordinate sum over exponent vectors.
    Int multiplicity() const;

private:
    int dim_;
    std::vector<std::vector<Int>> exps_;
};

/// Positive rational weight vector of a weighted blow-up.
class WeightVector {
public:
    explicit WeightVector(std::vector<Rational> w);
    const std::vector<Rational>& entries() const { return w_; }

private:
    std::vector<Rational> w_;
};

struct Candidate {
    bool finite = true;
    Rational value;  // +infinity marker when !finite
};

/// Log-discrepancy-to-multiplicity ratio of the monomial valuation w:
/// (sum of weights) / min_e <w, e>.  Infinite when the order vanishes.
Candidate weighted_candidate(const WeightVector& w, const MonomialDivisor& d);

/// Threshold from the Newton polytope: min(1, 1/t*) where t* is the first
/// diagonal parameter inside conv(exponents) + R^N_{>=0}, computed by exact
/// rational linear programming.
LctValue newton_lct(const MonomialDivisor& d);

struct NewtonCertificate {
    LctValue lct;
    Rational t_star;
    std::vector<Rational> mu;  // convex multipliers per stored exponent
};
NewtonCertificate newton_lct_certified(const MonomialDivisor& d);

/// Independent route for surfaces (N = 2): intersect the diagonal with the
/// polygon boundary directly.  Cross-checked against the LP in tests.
LctValue newton_lct_polygon(const MonomialDivisor& d);

/// Threshold of the plane curve x^a + y^b with the full agreement report:
/// the degree-0 adjunction identity and both independent computations.
struct CurveLctReport {
    Rational lct;       // capped
    Rational uncapped;  // 1/a + 1/b
    bool identity_ok = false;
    bool newton_agrees = false;
    bool weighted_agrees = false;
    bool ok() const { return identity_ok && newton_agrees && weighted_agrees; }
};
CurveLctReport curve_lct(const Int& a, const Int& b);

/// Multiplicity bounds 1/mult <= lct <= N/mult; the upper bound is asserted
/// only when mult >= N, and nothing is asserted when mult < N - 1.
struct MultiplicityBoundsReport {
    bool asserted = false;
    bool upper_asserted = false;
    bool ok = true;
    Int multiplicity;
    int dim = 0;
    Rational lct;
    Rational lower;
    std::optional<Rational> upper;
};
MultiplicityBoundsReport check_multiplicity_bounds(const MonomialDivisor& d);

}  // namespace lctkit
