#include "lctkit/adjunction.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace lctkit {

Rational CoefficientForm::value() const {
    Rational acc = Rational(m - 1) + f;
    for (const auto& [k, c] : kc_terms) acc += Rational(k) * c;
    return acc / Rational(m);
}

CoefficientSequence::CoefficientSequence(std::vector<Rational> e, SeqVariant v)
    : entries(std::move(e)), variant(v) {
    if (entries.empty()) throw std::domain_error("CoefficientSequence: must be nonempty");
    for (const Rational& x : entries)
        if (x <= Rational(0) || x > Rational(1))
            throw std::domain_error("CoefficientSequence: entry " + x.str() + " outside (0, 1]");
    if (variant == SeqVariant::CPlus)
        for (size_t i = 1; i < entries.size(); ++i)
            if (!(entries[i - 1] < entries[i]))
                throw std::domain_error("CoefficientSequence: CPlus variant requires strictly increasing entries");
}

ThresholdSet i_plus(const std::vector<Rational>& gens, bool include_empty_sum) {
    const Rational one(1);
    for (const Rational& g : gens)
        if (g <= Rational(0) || g > one)
            throw std::domain_error("i_plus: generator " + g.str() + " outside (0, 1]");
    std::set<Rational> sums;
    // breadth-first closure of nonempty sums below one
    std::vector<Rational> frontier;
    for (const Rational& g : gens)
        if (g < one && sums.insert(g).second) frontier.push_back(g);
    while (!frontier.empty()) {
        std::vector<Rational> next;
        for (const Rational& s : frontier)
            for (const Rational& g : gens) {
                Rational t = s + g;
                if (t < one && sums.insert(t).second) next.push_back(t);
            }
        frontier = std::move(next);
    }
    if (include_empty_sum) sums.insert(Rational(0));
    return ThresholdSet::from_points(std::vector<Rational>(sums.begin(), sums.end()),
                                     Interval::closed(Rational(0), Rational(1)));
}

std::optional<DWitness> d_contains(const std::vector<Rational>& gens, const Rational& a) {
    if (a > Rational(1)) throw std::domain_error("d_contains: value " + a.str() + " exceeds 1");
    if (a == Rational(1)) return std::nullopt;  // would need f = 1, never a sum below one
    ThresholdSet ip = i_plus(gens, true);
    // f = m(a-1) + 1 decreases with m; stop once negative
    for (Int m = 1;; ++m) {
        Rational f = Rational(m) * (a - Rational(1)) + Rational(1);
        if (f.sign() < 0) return std::nullopt;
        if (ip.contains(f)) return DWitness{m, f};
    }
}

ThresholdSet d_set(const std::vector<Rational>& gens) {
    ThresholdSet ip = i_plus(gens, true);
    std::vector<MonotoneSequence> seqs;
    for (const Rational& f : ip.points()) {
        // term(m) = (m - 1 + f)/m = (v m + (u - v)) / (v m) for f = u/v
        const Int& u = f.num();
        const Int& v = f.den();
        seqs.emplace_back(v, u - v, v, 0);
    }
    return ThresholdSet({}, std::move(seqs), Interval::closed(Rational(0), Rational(1)));
}

ThresholdSet d_set_closed(const std::vector<Rational>& gens) {
    return ThresholdSet::union_of(d_set(gens),
                                  ThresholdSet::from_points({Rational(1)}, Interval::closed(Rational(0), Rational(1))));
}

std::pair<Int, Rational> dcoef_compose(const Int& m, const Int& n, const Rational& f) {
    if (m < 1 || n < 1) throw std::domain_error("dcoef_compose: indices must be positive");
    if (f.sign() < 0 || f >= Rational(1)) throw std::domain_error("dcoef_compose: f must lie in [0, 1)");
    Int r = m * n;
    Rational lhs = Rational(m - 1, m) + (Rational(n - 1) + f) / Rational(n) / Rational(m);
    Rational rhs = (Rational(r - 1) + f) / Rational(r);
    if (lhs != rhs) throw std::logic_error("dcoef_compose: composition identity failed");
    return {r, f};
}

ClosureReport verify_dcoef_closure(const std::vector<Rational>& gens, long long sample_count,
                                   int max_summands, long long max_m) {
    ClosureReport rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        rep.counterexamples.push_back(what);
    };

    // deterministic sample of set elements: (m - 1 + f)/m over f in I_+, m <= max_m
    ThresholdSet ip = i_plus(gens, true);
    std::set<Rational> elems;
    for (const Rational& f : ip.points())
        for (Int m = 1; m <= max_m; ++m) {
            Rational e = (Rational(m - 1) + f) / Rational(m);
            if (e < Rational(1)) elems.insert(e);
        }
    std::vector<Rational> sample(elems.begin(), elems.end());

    // every sampled element is itself a one-term sum and must be recognized
    for (const Rational& e : sample) {
        if (!d_contains(gens, e)) fail("element " + e.str() + " not recognized by membership");
    }

    // sums of 2..max_summands sampled elements below one stay in the set
    std::vector<size_t> idx;
    long long budget = sample_count;
    std::function<void(size_t, int, const Rational&)> rec = [&](size_t start, int depth, const Rational& acc) {
        if (budget <= 0) return;
        if (depth >= 2) {
            ++rep.sums_checked;
            --budget;
            if (!d_contains(gens, acc)) {
                std::string expr;
                for (size_t i : idx) expr += (expr.empty() ? "" : " + ") + sample[i].str();
                fail("sum " + expr + " = " + acc.str() + " escaped the set");
            }
        }
        if (depth == max_summands) return;
        for (size_t i = start; i < sample.size(); ++i) {
            Rational next = acc + sample[i];
            if (next >= Rational(1)) break;  // sample is ascending; later elements only grow
            idx.push_back(i);
            rec(i, depth + 1, next);
            idx.pop_back();
            if (budget <= 0) return;
        }
    };
    rec(0, 0, Rational(0));

    // nested forms: g already in the set, h = (m - 1 + g)/m must stay inside
    budget = sample_count;
    for (const Rational& g : sample) {
        for (Int m = 1; m <= max_m && budget > 0; ++m) {
            Rational h = (Rational(m - 1) + g) / Rational(m);
            if (h >= Rational(1)) continue;
            ++rep.compositions_checked;
            --budget;
            if (!d_contains(gens, h))
                fail("nested form (" + Int(m - 1).str() + " + " + g.str() + ")/" + m.str() + " = " + h.str() +
                     " escaped the set");
        }
        if (budget <= 0) break;
    }
    return rep;
}

Rational blowup_pullback_coefficient(const std::vector<Int>& multiplicities,
                                     const std::vector<Rational>& coefficients) {
    if (multiplicities.size() != coefficients.size())
        throw std::domain_error("blowup_pullback_coefficient: length mismatch");
    Rational acc(-1);
    for (size_t i = 0; i < multiplicities.size(); ++i) {
        if (multiplicities[i] < 1) throw std::domain_error("blowup_pullback_coefficient: multiplicities are positive");
        if (coefficients[i] <= Rational(0) || coefficients[i] > Rational(1))
            throw std::domain_error("blowup_pullback_coefficient: coefficient outside (0, 1]");
        acc += Rational(multiplicities[i]) * coefficients[i];
    }
    return acc;
}

bool seq_less(const CoefficientSequence& x, const CoefficientSequence& y) {
    if (x.variant != y.variant) throw std::domain_error("seq_less: variant mismatch");
    if (x.entries.size() > y.entries.size()) return false;
    if (x.entries == y.entries) return false;
    bool strict = false;
    for (size_t i = 0; i < x.entries.size(); ++i) {
        if (x.entries[i] > y.entries[i]) return false;
        if (x.entries[i] < y.entries[i]) strict = true;
    }
    if (x.variant == SeqVariant::CPlus && !strict) return false;
    return true;
}

std::optional<std::vector<Rational>> increasing_witness(const std::vector<CoefficientSequence>& chain) {
    for (size_t i = 1; i < chain.size(); ++i)
        if (!seq_less(chain[i - 1], chain[i])) return std::nullopt;
    // greedy minimal choices: optimal, so failure means no witness exists
    std::vector<Rational> out;
    for (const CoefficientSequence& seq : chain) {
        const Rational* pick = nullptr;
        for (const Rational& e : seq.entries) {
            if (!out.empty() && !(e > out.back())) continue;
            if (!pick || e < *pick) pick = &e;
        }
        if (!pick) return std::nullopt;
        out.push_back(*pick);
    }
    return out;
}

}  // namespace lctkit
