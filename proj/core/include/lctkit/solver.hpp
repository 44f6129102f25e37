#pragma once

#include "lctkit/threshold_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lctkit {

/// The requested slice has accumulation points of accumulation points (two
/// or more indices escaping to infinity at once), which the fractional-linear
/// representation cannot carry.  Raised instead of returning a truncation.
class nested_accumulation_error : public infinite_slice_error {
public:
    explicit nested_accumulation_error(const std::string& what) : infinite_slice_error(what) {}
};

/// One summand (m - 1 + f + k*a) / m of a sum decomposition.  m_free marks
/// an index sent to infinity (term value 1 in the limit); surfaced free
/// terms always have k == 0.
struct TermDatum {
    Int m = 1;
    bool m_free = false;
    Int k = 0;
    Rational f;

    Rational value_at(const Rational& a) const;
    bool operator==(const TermDatum&) const = default;
};

/// Certified solution of  leading + sum of term values == target  with every
/// term value in (0, 1] and at least one k >= 1.
struct SolutionWitness {
    Rational a;
    std::vector<TermDatum> terms;
    Rational target{2};
    std::optional<Rational> leading;

    /// Exact independent recheck of all invariants.
    bool verify() const;
};

struct SolverOptions {
    bool allow_zero_k = true;  // permit terms with no a-dependence
    Int max_terms = 0;         // 0 = derive the complete bound; >0 caps the search (incomplete)
};

/// Completeness bounds derived from the query, reported so the search is
/// auditable.
struct SolverBounds {
    Int max_terms;
    Int max_k;
    Rational min_positive_term;
};

struct Enumeration {
    ThresholdSet set;
    SolverBounds bounds;
};

/// Decide membership of `a` in the solution set for the given generating
/// set and target; returns a verified witness when one exists.  The search
/// is complete within bounds derived from (a, gens, target).
std::optional<SolutionWitness> n1_member(const Rational& a, const std::vector<Rational>& gens,
                                         const Rational& target = Rational(2),
                                         const SolverOptions& opts = {});

/// The solution set intersected with (t, 1] as a ThresholdSet: fixed-index
/// data yield points, one escaping index yields a decreasing family.
ThresholdSet n1_enumerate_above(const Rational& t, const std::vector<Rational>& gens,
                                const Rational& target = Rational(2), const SolverOptions& opts = {});
Enumeration n1_enumerate_above_report(const Rational& t, const std::vector<Rational>& gens,
                                      const Rational& target = Rational(2), const SolverOptions& opts = {});

/// Largest solution other than 1, found by sweeping the cutoff downward.
Rational n1_sup_below_one(const std::vector<Rational>& gens, const Rational& target = Rational(2),
                          const SolverOptions& opts = {});

/// Limits of the solution families above t: values of the reduced equations
/// obtained by sending indices to infinity.
std::vector<Rational> n1_accumulation_points_above(const Rational& t, const std::vector<Rational>& gens,
                                                   const Rational& target = Rational(2),
                                                   const SolverOptions& opts = {});

/// General single-unknown form: leading element a0 from gens (or 0) plus a
/// sum of terms equal to any member of `targets`.
ThresholdSet sum_equation_solve(const std::vector<Rational>& gens, const std::vector<Rational>& targets,
                                const Rational& t, const SolverOptions& opts = {});

/// Canonical JSON for a witness; rationals as "p/q" strings, free indices
/// as the string "free".
std::string witness_to_json(const SolutionWitness& w);

}  // namespace lctkit
