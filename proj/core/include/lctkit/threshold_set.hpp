#pragma once

#include "lctkit/interval.hpp"
#include "lctkit/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lctkit {

/// Slice query whose exact answer would be an infinite list.
/// Carries a description of the offending sequence.
class infinite_slice_error : public std::runtime_error {
public:
    explicit infinite_slice_error(const std::string& what) : std::runtime_error(what) {}
};

/// sup_below hit a supremum that the set does not attain.
class sup_not_attained_error : public std::domain_error {
public:
    explicit sup_not_attained_error(const std::string& what) : std::domain_error(what) {}
};

enum class Direction { increasing, decreasing };

/// Strictly monotone sequence with fractional-linear closed form
///
///     term(n) = (p*n + q) / (r*n + s),   n >= n0,
///
/// rational limit p/r, and exactly solvable membership.  Instances are
/// normalized on construction: the coefficient tuple is divided by its
/// content, the sign is fixed so r > 0, and the start index is shifted to
/// n0 = 1.  Two instances describe the same sequence of values iff their
/// normalized tuples are equal.
class MonotoneSequence {
public:
    MonotoneSequence(Int p, Int q, Int r, Int s, Int n0 = 1);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& s() const { return s_; }
    static Int n0() { return 1; }

    Rational term(const Int& n) const;
    Rational first_term() const { return term(1); }
    Rational limit() const { return Rational(p_, r_); }
    Direction direction() const { return dir_; }

    /// Solve term(n) == x; the index if x is a term of the sequence.
    std::optional<Int> index_of(const Rational& x) const;

    /// Terms strictly above t, descending.  Throws infinite_slice_error when
    /// infinitely many terms exceed t.
    std::vector<Rational> terms_above(const Rational& t) const;

    /// Largest term strictly below x, if one exists.  For an increasing
    /// sequence whose limit is <= x no largest term exists; nullopt then
    /// means "supremum equals the limit and is not attained".
    std::optional<Rational> max_term_below(const Rational& x) const;
    bool sup_below_unattained(const Rational& x) const;

    /// True when every term lies inside `ambient`.
    bool within(const Interval& ambient) const;

    /// term_this(n) == term_other(n + d) for all n, for some integer d.
    /// Returns d when the two closed forms are shifts of one another.
    std::optional<Int> shift_matching(const MonotoneSequence& other) const;

    std::string describe() const;

    friend bool operator==(const MonotoneSequence& a, const MonotoneSequence& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.s_ == b.s_;
    }
    friend bool operator<(const MonotoneSequence& a, const MonotoneSequence& b);

private:
    Int p_, q_, r_, s_;
    Direction dir_;
};

/// Finite union of rational points and monotone fractional-linear sequences
/// inside an ambient interval.  The represented set is exactly
///
///     points  ∪  { term(n) : n >= 1 }  over all stored sequences.
///
/// Canonical form is maintained at all times: points sorted descending and
/// deduplicated, sequences normalized, deduplicated by coefficient tuple,
/// and no stored point equal to a term of a stored sequence.  Values are
/// immutable after construction; all queries are pure.
class ThresholdSet {
public:
    explicit ThresholdSet(Interval ambient = Interval{}) : ambient_(std::move(ambient)) {}
    ThresholdSet(std::vector<Rational> points, std::vector<MonotoneSequence> sequences, Interval ambient);

    static ThresholdSet from_points(std::vector<Rational> points, Interval ambient = Interval{});

    const Interval& ambient() const { return ambient_; }
    const std::vector<Rational>& points() const { return points_; }
    const std::vector<MonotoneSequence>& sequences() const { return seqs_; }
    bool empty() const { return points_.empty() && seqs_.empty(); }

    /// Exact membership.  Throws std::domain_error when x is outside the
    /// ambient interval.
    bool contains(const Rational& x) const;

    /// Elements in (t, hi of ambient], sorted descending.  Refuses infinite
    /// answers with infinite_slice_error instead of truncating.
    std::vector<Rational> elements_above(const Rational& t) const;

    /// Sequence limits above t, deduplicated, descending.  These are exactly
    /// the accumulation points of the represented set above t.
    std::vector<Rational> accumulation_points_above(const Rational& t) const;

    struct AccVerdict {
        bool satisfied = true;
        std::optional<MonotoneSequence> certificate;  // increasing family above t when violated
    };
    /// Ascending chain condition on the part of the set above t.
    AccVerdict satisfies_acc_above(const Rational& t) const;

    /// Exact image under f |-> (m - 1 + f) / m.  Requires the set to live
    /// inside [0, 1].
    ThresholdSet map_dcoef(const Int& m) const;

    static ThresholdSet union_of(const ThresholdSet& a, const ThresholdSet& b);

    /// Largest element strictly below x; nullopt when no element is below x.
    /// Throws sup_not_attained_error when the supremum below x is a limit the
    /// set does not attain.
    std::optional<Rational> sup_below(const Rational& x) const;

    bool operator==(const ThresholdSet& o) const {
        return ambient_ == o.ambient_ && points_ == o.points_ && seqs_ == o.seqs_;
    }

private:
    void canonicalize();

    Interval ambient_;
    std::vector<Rational> points_;        // descending, unique
    std::vector<MonotoneSequence> seqs_;  // sorted by tuple, unique
};

}  // namespace lctkit
