#include "lctkit/solver.hpp"

#include "lctkit/adjunction.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace lctkit {

Rational TermDatum::value_at(const Rational& a) const {
    if (m_free) throw std::domain_error("TermDatum: free index has no finite value");
    return (Rational(m - 1) + f + Rational(k) * a) / Rational(m);
}

bool SolutionWitness::verify() const {
    Rational sum = leading.value_or(Rational(0));
    Int total_k = 0;
    for (const TermDatum& t : terms) {
        if (t.m_free) return false;  // a certified decomposition has finite indices only
        if (t.m < 1 || t.k < 0) return false;
        if (t.f.sign() < 0 || t.f >= Rational(1)) return false;
        Rational v = t.value_at(a);
        if (v <= Rational(0) || v > Rational(1)) return false;
        sum += v;
        total_k += t.k;
    }
    return sum == target && total_k >= 1;
}

std::string witness_to_json(const SolutionWitness& w) {
    nlohmann::json terms = nlohmann::json::array();
    for (const TermDatum& t : w.terms) {
        nlohmann::json jt{{"k", t.k.convert_to<long long>()}, {"f", t.f.str()}};
        if (t.m_free)
            jt["m"] = "free";
        else
            jt["m"] = t.m.convert_to<long long>();
        terms.push_back(jt);
    }
    nlohmann::json doc{{"a", w.a.str()}, {"target", w.target.str()}, {"terms", terms}};
    if (w.leading) doc["leading"] = w.leading->str();
    return doc.dump();
}

namespace {

// alpha*c + beta over the unknown c
struct Affine {
    Rational alpha;
    Rational beta;
    Rational at(const Rational& c) const { return alpha * c + beta; }
};

struct CIv {
    Rational lo, hi;
    bool lo_strict = false, hi_strict = false;
    bool dead = false;

    bool contains(const Rational& c) const {
        if (dead) return false;
        if (c < lo || (c == lo && lo_strict)) return false;
        if (c > hi || (c == hi && hi_strict)) return false;
        return true;
    }
    void check_empty() {
        if (lo > hi || (lo == hi && (lo_strict || hi_strict))) dead = true;
    }
    // intersect with { c : alpha*c + beta >= 0 }  (strict: > 0)
    void refine(const Rational& alpha, const Rational& beta, bool strict) {
        if (dead) return;
        if (alpha.is_zero()) {
            if (beta.sign() < 0 || (beta.is_zero() && strict)) dead = true;
            return;
        }
        Rational bound = -beta / alpha;
        if (alpha.sign() > 0) {
            if (bound > lo) {
                lo = bound;
                lo_strict = strict;
            } else if (bound == lo) {
                lo_strict = lo_strict || strict;
            }
        } else {
            if (bound < hi) {
                hi = bound;
                hi_strict = strict;
            } else if (bound == hi) {
                hi_strict = hi_strict || strict;
            }
        }
        check_empty();
    }
};

// integer range [lo, hi] with optional infinite top, narrowed by linear
// inequalities  slope*m + icept >= 0  (or > 0)
struct MRange {
    Int lo = 1;
    std::optional<Int> hi;
    bool dead = false;

    void restrict(const Rational& slope, const Rational& icept, bool strict) {
        if (dead) return;
        if (slope.is_zero()) {
            if (icept.sign() < 0 || (icept.is_zero() && strict)) dead = true;
            return;
        }
        Rational root = -icept / slope;
        if (slope.sign() > 0) {  // m >= root (or >)
            Int b = strict ? Int(root.floor() + 1) : root.ceil();
            if (b > lo) lo = b;
        } else {  // m <= root (or <)
            Int b = strict ? Int(root.ceil() - 1) : root.floor();
            if (!hi || b < *hi) hi = b;
        }
        if (hi && lo > *hi) dead = true;
    }
};

class Engine {
public:
    Engine(std::vector<Rational> fvals, Rational target, CIv init, std::optional<Rational> leading,
           const SolverOptions& opts, bool first_witness_only)
        : fvals_(std::move(fvals)),
          target_(std::move(target)),
          init_(std::move(init)),
          leading_(std::move(leading)),
          opts_(opts),
          first_only_(first_witness_only) {
        // every positive term value is at least min(lo, 1/2, smallest positive f)
        Rational delta = min(init_.lo, Rational(1, 2));
        for (const Rational& f : fvals_)
            if (f.sign() > 0) {
                delta = min(delta, f);
                break;  // fvals ascending
            }
        bounds_.min_positive_term = delta;
        bounds_.max_terms = (target_ / delta).floor();
        if (opts_.max_terms > 0 && opts_.max_terms < bounds_.max_terms) bounds_.max_terms = opts_.max_terms;
        bounds_.max_k = init_.lo.reciprocal().floor();
    }

    void run() {
        Int s_min = target_.ceil();
        if (s_min < 1) s_min = 1;
        for (Int s = s_min; s <= bounds_.max_terms; ++s) {
            if (first_only_ && first_) return;
            Rational deficit = Rational(s) - target_;
            if (deficit.sign() < 0) continue;
            std::vector<TermDatum> chosen;
            recurse(init_, Affine{Rational(0), deficit}, std::nullopt, s, chosen);
        }
    }

    const SolverBounds& bounds() const { return bounds_; }
    const std::map<Rational, SolutionWitness>& points() const { return points_; }
    const std::vector<MonotoneSequence>& families() const { return families_; }
    const std::optional<SolutionWitness>& first() const { return first_; }

private:
    void emit_point(const Rational& c, std::vector<TermDatum> terms) {
        std::sort(terms.begin(), terms.end(), [](const TermDatum& a, const TermDatum& b) {
            if (a.m != b.m) return a.m < b.m;
            if (a.k != b.k) return a.k < b.k;
            return a.f < b.f;
        });
        SolutionWitness w{c, std::move(terms), target_, leading_};
        if (!w.verify()) throw std::logic_error("solver: emitted decomposition failed exact recheck");
        if (first_only_ && !first_) first_ = w;
        points_.emplace(c, std::move(w));
    }

    // remaining slots all carry value exactly 1; such a term pins c = (1-f)/k
    void value_one_branch(const CIv& iv, const Affine& delta_rem, const Int& slots,
                          const std::vector<TermDatum>& chosen) {
        for (Int k = 1; k <= bounds_.max_k; ++k) {
            for (const Rational& f : fvals_) {
                Rational c = (Rational(1) - f) / Rational(k);
                if (!iv.contains(c)) continue;
                if (!delta_rem.at(c).is_zero()) continue;
                std::vector<TermDatum> terms = chosen;
                for (Int i = 0; i < slots; ++i) terms.push_back(TermDatum{1, false, k, f});
                emit_point(c, std::move(terms));
                if (first_only_ && first_) return;
            }
        }
    }

    // last slot: the remaining deficit equals e(c)/m; solving per index m
    // gives a fractional-linear value family c(m) with positive denominator
    void last_slot(const CIv& iv, const Affine& dr, const std::optional<Affine>& prev_u,
                   const std::vector<TermDatum>& chosen) {
        for (Int k = 0; k <= bounds_.max_k; ++k) {
            if (k == 0 && !opts_.allow_zero_k) continue;
            if (k == 0 && dr.alpha.is_zero()) continue;  // c would stay undetermined
            for (const Rational& f : fvals_) {
                Rational one_f = Rational(1) - f;
                // c(m) = (one_f - beta*m) / (alpha*m + k)
                auto restrict_affine = [&](MRange& mr, const Rational& g, const Rational& d, bool strict) {
                    // g*c(m) + d >= 0  multiplied by the positive denominator
                    mr.restrict(d * dr.alpha - g * dr.beta, g * one_f + d * Rational(k), strict);
                };
                MRange mr;
                restrict_affine(mr, Rational(1), -iv.lo, iv.lo_strict);         // c >= lo
                restrict_affine(mr, Rational(-1), iv.hi, iv.hi_strict);         // c <= hi
                restrict_affine(mr, dr.alpha, dr.beta, true);                   // remaining deficit > 0
                restrict_affine(mr, -dr.alpha, Rational(1) - dr.beta, true);    // term value > 0
                if (prev_u)
                    restrict_affine(mr, prev_u->alpha - dr.alpha, prev_u->beta - dr.beta, false);
                if (mr.dead) continue;

                auto value_at_m = [&](const Int& m) {
                    return (one_f - dr.beta * Rational(m)) / (dr.alpha * Rational(m) + Rational(k));
                };
                if (!mr.hi) {
                    if (first_only_) {
                        // degenerate interval pins c; the smallest index realizes it
                        emit_point(value_at_m(mr.lo), append(chosen, TermDatum{mr.lo, false, k, f}));
                        if (first_) return;
                        continue;
                    }
                    Int L = boost::multiprecision::lcm(boost::multiprecision::lcm(dr.beta.den(), one_f.den()),
                                                       dr.alpha.den());
                    Int p = Int((-dr.beta * Rational(L)).num());
                    Int q = Int((one_f * Rational(L)).num());
                    Int r = Int((dr.alpha * Rational(L)).num());
                    Int s = k * L;
                    if (r == 0) throw std::logic_error("solver: unbounded index range with linear value map");
                    if (p * s - q * r == 0) {
                        emit_point(value_at_m(mr.lo), append(chosen, TermDatum{mr.lo, false, k, f}));
                    } else {
                        families_.emplace_back(p, q, r, s, mr.lo);
                    }
                } else {
                    for (Int m = mr.lo; m <= *mr.hi; ++m) {
                        emit_point(value_at_m(m), append(chosen, TermDatum{m, false, k, f}));
                        if (first_only_ && first_) return;
                    }
                }
            }
        }
    }

    void windowed_slot(const CIv& iv, const Affine& dr, const std::optional<Affine>& prev_u, const Int& slots,
                       std::vector<TermDatum>& chosen) {
        Rational slots_r(slots);
        for (Int k = 0; k <= bounds_.max_k; ++k) {
            if (k == 0 && !opts_.allow_zero_k) continue;
            for (const Rational& f : fvals_) {
                Rational one_f = Rational(1) - f;
                CIv iv2 = iv;
                iv2.refine(Rational(-k), one_f, true);  // e(c) > 0: term value stays below 1
                if (iv2.dead) continue;
                // largest index compatible with "this term is the largest remaining":
                // m <= slots * e(c) / deficit(c), maximized over the interval
                auto ratio = [&](const Rational& c) {
                    return slots_r * (one_f - Rational(k) * c) / dr.at(c);
                };
                Rational m_cap = max(ratio(iv2.lo), ratio(iv2.hi));
                Int m_max = m_cap.floor();
                for (Int m = 1; m <= m_max; ++m) {
                    Rational mr(m);
                    CIv iv3 = iv2;
                    // slots*e(c) - m*deficit(c) >= 0
                    iv3.refine(-slots_r * Rational(k) - mr * dr.alpha, slots_r * one_f - mr * dr.beta, false);
                    // m*deficit(c) - e(c) >= 0
                    iv3.refine(mr * dr.alpha + Rational(k), mr * dr.beta - one_f, false);
                    if (prev_u)
                        iv3.refine(mr * prev_u->alpha + Rational(k), mr * prev_u->beta - one_f, false);
                    if (m == 1) {
                        if (k == 0 && f.is_zero()) continue;  // would realize value 0
                        iv3.refine(Rational(k), f, true);     // value f + k c > 0
                    }
                    if (iv3.dead) continue;
                    Rational ka(k), ma(m);
                    Affine u{-ka / ma, one_f / ma};
                    Affine dr2{dr.alpha + ka / ma, dr.beta - one_f / ma};
                    chosen.push_back(TermDatum{m, false, k, f});
                    recurse(iv3, dr2, u, slots - 1, chosen);
                    chosen.pop_back();
                    if (first_only_ && first_) return;
                }
            }
        }
    }

    void recurse(const CIv& iv, const Affine& dr, const std::optional<Affine>& prev_u, const Int& slots,
                 std::vector<TermDatum>& chosen) {
        if (iv.dead) return;
        if (first_only_ && first_) return;

        value_one_branch(iv, dr, slots, chosen);
        if (first_only_ && first_) return;

        CIv ivp = iv;
        ivp.refine(dr.alpha, dr.beta, true);  // strictly positive deficit remains
        if (ivp.dead) return;
        if (dr.at(ivp.lo).is_zero())
            throw nested_accumulation_error(
                "slice not representable: several indices escape to infinity near c = " + ivp.lo.str() +
                "; the remaining deficit vanishes inside the search interval");

        if (slots == 1) {
            last_slot(ivp, dr, prev_u, chosen);
        } else {
            windowed_slot(ivp, dr, prev_u, slots, chosen);
        }
    }

    static std::vector<TermDatum> append(std::vector<TermDatum> v, TermDatum t) {
        v.push_back(std::move(t));
        return v;
    }

    std::vector<Rational> fvals_;  // ascending, contains 0
    Rational target_;
    CIv init_;
    std::optional<Rational> leading_;
    SolverOptions opts_;
    bool first_only_;
    SolverBounds bounds_;
    std::map<Rational, SolutionWitness> points_;
    std::vector<MonotoneSequence> families_;
    std::optional<SolutionWitness> first_;
};

std::vector<Rational> f_values(const std::vector<Rational>& gens) {
    ThresholdSet ip = i_plus(gens, true);  // includes the empty sum 0
    std::vector<Rational> out(ip.points().rbegin(), ip.points().rend());
    return out;  // ascending
}

}  // namespace

std::optional<SolutionWitness> n1_member(const Rational& a, const std::vector<Rational>& gens,
                                         const Rational& target, const SolverOptions& opts) {
    if (a <= Rational(0) || a > Rational(1))
        throw std::domain_error("n1_member: value " + a.str() + " outside (0, 1]");
    if (target < Rational(1)) throw std::domain_error("n1_member: target must be at least 1");
    Engine eng(f_values(gens), target, CIv{a, a}, std::nullopt, opts, true);
    eng.run();
    return eng.first();
}

Enumeration n1_enumerate_above_report(const Rational& t, const std::vector<Rational>& gens,
                                      const Rational& target, const SolverOptions& opts) {
    if (t <= Rational(0) || t >= Rational(1))
        throw std::domain_error("enumerate_above: cutoff " + t.str() + " outside (0, 1)");
    if (target < Rational(1)) throw std::domain_error("enumerate_above: target must be at least 1");
    Engine eng(f_values(gens), target, CIv{t, Rational(1), true, false}, std::nullopt, opts, false);
    eng.run();
    std::vector<Rational> pts;
    for (const auto& [c, w] : eng.points()) pts.push_back(c);
    ThresholdSet set(std::move(pts), eng.families(), Interval{t, Rational(1), true, false});
    return Enumeration{std::move(set), eng.bounds()};
}

ThresholdSet n1_enumerate_above(const Rational& t, const std::vector<Rational>& gens, const Rational& target,
                                const SolverOptions& opts) {
    return n1_enumerate_above_report(t, gens, target, opts).set;
}

Rational n1_sup_below_one(const std::vector<Rational>& gens, const Rational& target, const SolverOptions& opts) {
    const Rational one(1);
    for (Int j = 2; j <= 64; ++j) {
        ThresholdSet slice = n1_enumerate_above(Rational(1, j), gens, target, opts);
        std::optional<Rational> best;
        for (const Rational& p : slice.points())
            if (p != one && (!best || p > *best)) best = p;
        for (const MonotoneSequence& s : slice.sequences()) {
            if (s.direction() == Direction::increasing) {
                if (!best || s.limit() > *best)
                    throw sup_not_attained_error("sup_below_one: increasing family " + s.describe());
                continue;
            }
            Rational top = s.first_term();
            if (top != one && (!best || top > *best)) best = top;
        }
        if (best) return *best;
    }
    throw std::runtime_error("n1_sup_below_one: no element below one with denominator cutoff 64");
}

std::vector<Rational> n1_accumulation_points_above(const Rational& t, const std::vector<Rational>& gens,
                                                   const Rational& target, const SolverOptions& opts) {
    return n1_enumerate_above(t, gens, target, opts).accumulation_points_above(t);
}

ThresholdSet sum_equation_solve(const std::vector<Rational>& gens, const std::vector<Rational>& targets,
                                const Rational& t, const SolverOptions& opts) {
    if (t <= Rational(0) || t >= Rational(1))
        throw std::domain_error("sum_equation_solve: cutoff " + t.str() + " outside (0, 1)");
    std::vector<Rational> leads{Rational(0)};
    for (const Rational& g : gens) leads.push_back(g);
    std::sort(leads.begin(), leads.end());
    leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
    std::vector<Rational> ks = targets;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

    ThresholdSet acc(Interval{t, Rational(1), true, false});
    std::vector<Rational> fv = f_values(gens);
    for (const Rational& lead : leads) {
        for (const Rational& target : ks) {
            Rational t_eff = target - lead;
            if (t_eff.sign() <= 0) continue;
            Engine eng(fv, t_eff, CIv{t, Rational(1), true, false}, lead, opts, false);
            eng.run();
            std::vector<Rational> pts;
            for (const auto& [c, w] : eng.points()) pts.push_back(c);
            ThresholdSet part(std::move(pts), eng.families(), Interval{t, Rational(1), true, false});
            acc = ThresholdSet::union_of(acc, part);
        }
    }
    return acc;
}

}  // namespace lctkit
