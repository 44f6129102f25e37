#pragma once

#include "lctkit/threshold_set.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lctkit {

/// One boundary coefficient written in the adjunction shape
///     (m - 1 + f + sum_j k_j * c_j) / m
/// with f a small sum from the generating set and k_j counting how often the
/// unknown coefficient c_j enters.
struct CoefficientForm {
    Int m = 1;
    Rational f;
    std::vector<std::pair<Int, Rational>> kc_terms;  // (k, c) with k >= 0, c in (0,1]

    Rational value() const;
    /// A collection of forms is "ordinary" when every m equals 1; this form
    /// contributes to that flag.
    bool unit_index() const { return m == 1; }
};

enum class SeqVariant { C, CPlus };

/// Finite nonempty sequence of coefficients in (0, 1].  The CPlus variant
/// additionally requires strictly increasing entries.
struct CoefficientSequence {
    std::vector<Rational> entries;
    SeqVariant variant = SeqVariant::C;

    CoefficientSequence(std::vector<Rational> e, SeqVariant v);
};

/// All finite sums of elements of I (repetition allowed) that are < 1,
/// plus 0 for the empty sum when include_empty_sum is set.  Elements must
/// lie in (0, 1].
ThresholdSet i_plus(const std::vector<Rational>& gens, bool include_empty_sum = true);

struct DWitness {
    Int m;
    Rational f;
};

/// Decide a = (m - 1 + f)/m for some m >= 1 and f in I_+ (empty sum
/// included); returns the witness with smallest m.  Requires a <= 1.
std::optional<DWitness> d_contains(const std::vector<Rational>& gens, const Rational& a);

/// The derived coefficient set as a ThresholdSet: one increasing family
/// m |-> (m - 1 + f)/m with limit 1 per f.  The literal set excludes 1;
/// d_set_closed adds it for callers that want the generating set inside.
ThresholdSet d_set(const std::vector<Rational>& gens);
ThresholdSet d_set_closed(const std::vector<Rational>& gens);

/// Composition law for nested coefficient forms:
///     (m-1)/m + ((n-1+f)/n)/m == (mn-1+f)/(mn).
/// Returns (m*n, f) and checks the identity exactly.
std::pair<Int, Rational> dcoef_compose(const Int& m, const Int& n, const Rational& f);

struct ClosureReport {
    bool ok = true;
    long long sums_checked = 0;
    long long compositions_checked = 0;
    std::vector<std::string> counterexamples;
};

/// Verify the two closure identities of the derived coefficient set on a
/// deterministic sample: sums of up to `max_summands` elements that stay
/// below one land back in the set, and (m-1+g)/m lands back for g already
/// in the set.  Any violation is a bug in the implementation and is
/// reported with the exact counterexample.
ClosureReport verify_dcoef_closure(const std::vector<Rational>& gens, long long sample_count,
                                   int max_summands = 4, long long max_m = 12);

/// Log pullback coefficient of the exceptional divisor of a smooth-point
/// blow-up on a surface: sum(mult_i * coeff_i) - 1.
Rational blowup_pullback_coefficient(const std::vector<Int>& multiplicities,
                                     const std::vector<Rational>& coefficients);

/// Strict partial order on coefficient sequences: x < y iff they differ,
/// len(x) <= len(y) and x_i <= y_i on the common prefix; CPlus additionally
/// needs at least one strict coordinate.
bool seq_less(const CoefficientSequence& x, const CoefficientSequence& y);

/// For a chain strictly increasing under seq_less, extract strictly
/// increasing numbers x_i with x_i an entry of chain[i] (greedy, minimal
/// choices -- succeeds whenever any witness exists).
std::optional<std::vector<Rational>> increasing_witness(const std::vector<CoefficientSequence>& chain);

}  // namespace lctkit
