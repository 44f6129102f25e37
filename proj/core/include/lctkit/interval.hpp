#pragma once

#include "lctkit/rational.hpp"

namespace lctkit {

/// Interval with rational endpoints and per-endpoint openness.
/// The library default is the half-open unit interval (0, 1].
struct Interval {
    Rational lo{0};
    Rational hi{1};
    bool lo_open = true;
    bool hi_open = false;

    static Interval open_closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, false}; }
    static Interval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }

    bool contains(const Rational& x) const {
        if (x < lo || (lo_open && x == lo)) return false;
        if (x > hi || (hi_open && x == hi)) return false;
        return true;
    }

    bool subset_of(const Interval& outer) const {
        if (lo < outer.lo || (lo == outer.lo && outer.lo_open && !lo_open)) return false;
        if (hi > outer.hi || (hi == outer.hi && outer.hi_open && !hi_open)) return false;
        return true;
    }

    /// Smallest interval containing both (used by set union).
    static Interval hull(const Interval& a, const Interval& b) {
        Interval out;
        if (a.lo < b.lo) {
            out.lo = a.lo;
            out.lo_open = a.lo_open;
        } else if (b.lo < a.lo) {
            out.lo = b.lo;
            out.lo_open = b.lo_open;
        } else {
            out.lo = a.lo;
            out.lo_open = a.lo_open && b.lo_open;
        }
        if (a.hi > b.hi) {
            out.hi = a.hi;
            out.hi_open = a.hi_open;
        } else if (b.hi > a.hi) {
            out.hi = b.hi;
            out.hi_open = b.hi_open;
        } else {
            out.hi = a.hi;
            out.hi_open = a.hi_open && b.hi_open;
        }
        return out;
    }

    bool operator==(const Interval&) const = default;
};

}  // namespace lctkit
