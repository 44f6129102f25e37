#include "lctkit/threshold_set.hpp"

#include <algorithm>
#include <functional>

namespace lctkit {

namespace {

Int content4(const Int& a, const Int& b, const Int& c, const Int& d) {
    using boost::multiprecision::gcd;
    Int g = gcd(gcd(abs(a), abs(b)), gcd(abs(c), abs(d)));
    return g == 0 ? Int(1) : g;
}

}  // namespace

MonotoneSequence::MonotoneSequence(Int p, Int q, Int r, Int s, Int n0) {
    if (n0 < 1) throw std::domain_error("MonotoneSequence: start index must be positive");
    if (r == 0) throw std::domain_error("MonotoneSequence: r must be nonzero so the limit p/r is rational");
    if (r < 0) {
        p = -p;
        q = -q;
        r = -r;
        s = -s;
    }
    // shift the start index to 1: term'(n) = term(n + n0 - 1)
    Int off = n0 - 1;
    q += p * off;
    s += r * off;
    if (r + s <= 0) throw std::domain_error("MonotoneSequence: denominator r*n + s must stay positive");
    Int g = content4(p, q, r, s);
    p_ = p / g;
    q_ = q / g;
    r_ = r / g;
    s_ = s / g;
    Int det = p_ * s_ - q_ * r_;
    if (det == 0) throw std::domain_error("MonotoneSequence: term is constant, not strictly monotone");
    dir_ = det > 0 ? Direction::increasing : Direction::decreasing;
}

Rational MonotoneSequence::term(const Int& n) const {
    if (n < 1) throw std::domain_error("MonotoneSequence: index below start");
    return Rational(p_ * n + q_, r_ * n + s_);
}

std::optional<Int> MonotoneSequence::index_of(const Rational& x) const {
    // (p n + q) / (r n + s) = x  <=>  n (p - x r) = x s - q
    Rational a = Rational(p_) - x * Rational(r_);
    if (a.is_zero()) return std::nullopt;  // x is the limit, never attained
    Rational n = (x * Rational(s_) - Rational(q_)) / a;
    if (!n.is_integer() || n.num() < 1) return std::nullopt;
    return n.num();
}

std::vector<Rational> MonotoneSequence::terms_above(const Rational& t) const {
    Rational lim = limit();
    if (dir_ == Direction::increasing) {
        if (lim > t) throw infinite_slice_error("infinite slice: increasing sequence " + describe() +
                                                " exceeds " + t.str() + " from some index on");
        return {};
    }
    if (lim >= t)
        throw infinite_slice_error("infinite slice: decreasing sequence " + describe() +
                                   " stays above " + t.str());
    // decreasing with limit < t: term(n) > t  <=>  n < (t s - q)/(p - t r), rhs denominator negative
    Rational bound = (t * Rational(s_) - Rational(q_)) / (Rational(p_) - t * Rational(r_));
    Int n_max = bound.is_integer() ? Int(bound.num() - 1) : bound.floor();
    std::vector<Rational> out;
    for (Int n = 1; n <= n_max; ++n) out.push_back(term(n));
    return out;
}

std::optional<Rational> MonotoneSequence::max_term_below(const Rational& x) const {
    Rational lim = limit();
    if (dir_ == Direction::decreasing) {
        if (lim >= x) return std::nullopt;  // every term exceeds the limit, hence >= x
        // first n with term(n) < x:  n > (x s - q)/(p - x r), denominator negative
        Rational bound = (x * Rational(s_) - Rational(q_)) / (Rational(p_) - x * Rational(r_));
        Int n_first = bound.is_integer() ? Int(bound.num() + 1) : bound.ceil();
        if (n_first < 1) n_first = 1;
        return term(n_first);
    }
    if (lim <= x) return std::nullopt;  // supremum is the limit, not attained
    // increasing with limit > x: terms below x form a (possibly empty) initial segment
    Rational bound = (x * Rational(s_) - Rational(q_)) / (Rational(p_) - x * Rational(r_));
    Int n_last = bound.is_integer() ? Int(bound.num() - 1) : bound.floor();
    if (n_last < 1) return std::nullopt;
    return term(n_last);
}

bool MonotoneSequence::sup_below_unattained(const Rational& x) const {
    return dir_ == Direction::increasing && limit() <= x;
}

bool MonotoneSequence::within(const Interval& ambient) const {
    Rational first = term(1);
    Rational lim = limit();
    if (!ambient.contains(first)) return false;
    if (dir_ == Direction::increasing) return lim <= ambient.hi;  // terms stay strictly below the limit
    return lim >= ambient.lo;                                     // terms stay strictly above the limit
}

std::optional<Int> MonotoneSequence::shift_matching(const MonotoneSequence& other) const {
    // want term_this(n) == term_other(n + d): tuples proportional after shifting other by d
    if (p_ * other.r_ != other.p_ * r_) return std::nullopt;
    Rational lambda(r_, other.r_);
    Rational d_rat;
    if (other.p_ != 0) {
        d_rat = (Rational(q_) / lambda - Rational(other.q_)) / Rational(other.p_);
    } else {
        d_rat = (Rational(s_) / lambda - Rational(other.s_)) / Rational(other.r_);
    }
    if (!d_rat.is_integer()) return std::nullopt;
    Int d = d_rat.num();
    // verify all four coefficients
    if (Rational(q_) != lambda * Rational(other.q_ + other.p_ * d)) return std::nullopt;
    if (Rational(s_) != lambda * Rational(other.s_ + other.r_ * d)) return std::nullopt;
    if (Rational(p_) != lambda * Rational(other.p_)) return std::nullopt;
    return d;
}

std::string MonotoneSequence::describe() const {
    std::string out = "(" + p_.str() + "*n" + (q_ >= 0 ? "+" : "") + q_.str() + ")/(" + r_.str() + "*n" +
                      (s_ >= 0 ? "+" : "") + s_.str() + "), n>=1, " +
                      (dir_ == Direction::increasing ? "increasing" : "decreasing") + ", limit " + limit().str();
    return out;
}

bool operator<(const MonotoneSequence& a, const MonotoneSequence& b) {
    if (a.p_ != b.p_) return a.p_ < b.p_;
    if (a.q_ != b.q_) return a.q_ < b.q_;
    if (a.r_ != b.r_) return a.r_ < b.r_;
    return a.s_ < b.s_;
}

ThresholdSet::ThresholdSet(std::vector<Rational> points, std::vector<MonotoneSequence> sequences, Interval ambient)
    : ambient_(std::move(ambient)), points_(std::move(points)), seqs_(std::move(sequences)) {
    if (ambient_.hi < ambient_.lo || (ambient_.hi == ambient_.lo && (ambient_.lo_open || ambient_.hi_open)))
        throw std::domain_error("ThresholdSet: empty ambient interval");
    for (const Rational& x : points_)
        if (!ambient_.contains(x))
            throw std::domain_error("ThresholdSet: point " + x.str() + " outside ambient interval");
    for (const MonotoneSequence& s : seqs_)
        if (!s.within(ambient_))
            throw std::domain_error("ThresholdSet: sequence " + s.describe() + " leaves ambient interval");
    canonicalize();
}

ThresholdSet ThresholdSet::from_points(std::vector<Rational> points, Interval ambient) {
    return ThresholdSet(std::move(points), {}, std::move(ambient));
}

void ThresholdSet::canonicalize() {
    std::sort(points_.begin(), points_.end(), std::greater<Rational>());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    std::sort(seqs_.begin(), seqs_.end());
    seqs_.erase(std::unique(seqs_.begin(), seqs_.end()), seqs_.end());
    if (!seqs_.empty()) {
        auto covered = [&](const Rational& x) {
            for (const MonotoneSequence& s : seqs_)
                if (s.index_of(x)) return true;
            return false;
        };
        points_.erase(std::remove_if(points_.begin(), points_.end(), covered), points_.end());
    }
}

bool ThresholdSet::contains(const Rational& x) const {
    if (!ambient_.contains(x))
        throw std::domain_error("contains: " + x.str() + " outside ambient interval");
    if (std::binary_search(points_.begin(), points_.end(), x, std::greater<Rational>())) return true;
    for (const MonotoneSequence& s : seqs_)
        if (s.index_of(x)) return true;
    return false;
}

std::vector<Rational> ThresholdSet::elements_above(const Rational& t) const {
    std::vector<Rational> out;
    for (const MonotoneSequence& s : seqs_) {
        auto terms = s.terms_above(t);  // throws infinite_slice_error on infinite slices
        out.insert(out.end(), terms.begin(), terms.end());
    }
    for (const Rational& x : points_)
        if (x > t) out.push_back(x);
    std::sort(out.begin(), out.end(), std::greater<Rational>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> ThresholdSet::accumulation_points_above(const Rational& t) const {
    std::vector<Rational> out;
    for (const MonotoneSequence& s : seqs_) {
        Rational lim = s.limit();
        if (lim > t) out.push_back(lim);
    }
    std::sort(out.begin(), out.end(), std::greater<Rational>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ThresholdSet::AccVerdict ThresholdSet::satisfies_acc_above(const Rational& t) const {
    for (const MonotoneSequence& s : seqs_)
        if (s.direction() == Direction::increasing && s.limit() > t) return {false, s};
    return {true, std::nullopt};
}

ThresholdSet ThresholdSet::map_dcoef(const Int& m) const {
    if (m < 1) throw std::domain_error("map_dcoef: m must be positive");
    if (ambient_.lo < Rational(0) || ambient_.hi > Rational(1))
        throw std::domain_error("map_dcoef: set must live inside [0, 1]");
    Rational mm(m);
    auto img = [&](const Rational& f) { return (Rational(m - 1) + f) / mm; };
    Interval amb{img(ambient_.lo), img(ambient_.hi), ambient_.lo_open, ambient_.hi_open};
    std::vector<Rational> pts;
    pts.reserve(points_.size());
    for (const Rational& x : points_) pts.push_back(img(x));
    std::vector<MonotoneSequence> sq;
    sq.reserve(seqs_.size());
    for (const MonotoneSequence& s : seqs_)
        sq.emplace_back((m - 1) * s.r() + s.p(), (m - 1) * s.s() + s.q(), m * s.r(), m * s.s());
    return ThresholdSet(std::move(pts), std::move(sq), std::move(amb));
}

ThresholdSet ThresholdSet::union_of(const ThresholdSet& a, const ThresholdSet& b) {
    std::vector<Rational> pts = a.points_;
    pts.insert(pts.end(), b.points_.begin(), b.points_.end());
    std::vector<MonotoneSequence> sq = a.seqs_;
    sq.insert(sq.end(), b.seqs_.begin(), b.seqs_.end());
    return ThresholdSet(std::move(pts), std::move(sq), Interval::hull(a.ambient_, b.ambient_));
}

std::optional<Rational> ThresholdSet::sup_below(const Rational& x) const {
    std::optional<Rational> best;
    for (const Rational& p : points_) {  // descending: first hit is the best point
        if (p < x) {
            best = p;
            break;
        }
    }
    std::vector<const MonotoneSequence*> unattained;
    for (const MonotoneSequence& s : seqs_) {
        if (s.sup_below_unattained(x)) {
            unattained.push_back(&s);
            continue;
        }
        auto mt = s.max_term_below(x);
        if (mt && (!best || *mt > *best)) best = mt;
    }
    for (const MonotoneSequence* s : unattained) {
        if (!best || s->limit() > *best)
            throw sup_not_attained_error("sup_below " + x.str() + ": supremum is the unattained limit " +
                                         s->limit().str() + " of " + s->describe());
    }
    return best;
}

}  // namespace lctkit
