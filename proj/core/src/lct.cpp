#include "lctkit/lct.hpp"

#include <algorithm>
#include <stdexcept>

namespace lctkit {

ResolutionTable::ResolutionTable(std::vector<ResolutionRow> rows) : rows_(std::move(rows)) {
    for (const ResolutionRow& r : rows_) {
        if (r.log_discrepancy.sign() < 0)
            throw std::domain_error("ResolutionTable: log discrepancy must be nonnegative");
        if (r.multiplicity.sign() <= 0) throw std::domain_error("ResolutionTable: multiplicity must be positive");
    }
}

LctValue lct_from_resolution_full(const ResolutionTable& table) {
    LctValue out;
    for (const ResolutionRow& r : table.rows()) {
        Rational ratio = r.log_discrepancy / r.multiplicity;
        if (!out.uncapped_finite || ratio < out.uncapped) {
            out.uncapped = ratio;
            out.uncapped_finite = true;
        }
    }
    out.capped = out.uncapped_finite ? min(Rational(1), out.uncapped) : Rational(1);
    return out;
}

Rational lct_from_resolution(const ResolutionTable& table) { return lct_from_resolution_full(table).capped; }

MonomialDivisor::MonomialDivisor(int ambient_dim, std::vector<std::vector<Int>> exponents) : dim_(ambient_dim) {
    if (dim_ < 1) throw std::domain_error("MonomialDivisor: ambient dimension must be positive");
    if (exponents.empty()) throw std::domain_error("MonomialDivisor: at least one exponent vector required");
    bool any_nonzero = false;
    for (const auto& e : exponents) {
        if (static_cast<int>(e.size()) != dim_)
            throw std::domain_error("MonomialDivisor: exponent vector of wrong length");
        for (const Int& c : e) {
            if (c < 0) throw std::domain_error("MonomialDivisor: exponents must be nonnegative");
            if (c != 0) any_nonzero = true;
        }
    }
    if (!any_nonzero) throw std::domain_error("MonomialDivisor: all exponent vectors are zero");
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    auto dominates = [](const std::vector<Int>& lo, const std::vector<Int>& hi) {
        for (size_t j = 0; j < lo.size(); ++j)
            if (lo[j] > hi[j]) return false;
        return true;
    };
    for (const auto& e : exponents) {
        bool redundant = false;
        for (const auto& other : exponents)
            if (other != e && dominates(other, e)) {
                redundant = true;
                break;
            }
        if (!redundant) exps_.push_back(e);
    }
}

bool MonomialDivisor::degenerate() const {
    for (const auto& e : exps_) {
        bool zero = true;
        for (const Int& c : e)
            if (c != 0) zero = false;
        if (zero) return true;
    }
    return false;
}

Int MonomialDivisor::multiplicity() const {
    Int best(-1);
    for (const auto& e : exps_) {
        Int sum(0);
        for (const Int& c : e) sum += c;
        if (best < 0 || sum < best) best = sum;
    }
    return best;
}

WeightVector::WeightVector(std::vector<Rational> w) : w_(std::move(w)) {
    if (w_.empty()) throw std::domain_error("WeightVector: empty");
    for (const Rational& x : w_)
        if (x.sign() <= 0) throw std::domain_error("WeightVector: entries must be positive");
}

Candidate weighted_candidate(const WeightVector& w, const MonomialDivisor& d) {
    if (static_cast<int>(w.entries().size()) != d.dim())
        throw std::domain_error("weighted_candidate: dimension mismatch");
    Rational total(0);
    for (const Rational& x : w.entries()) total += x;
    std::optional<Rational> ord;
    for (const auto& e : d.exponents()) {
        Rational dot(0);
        for (int j = 0; j < d.dim(); ++j) dot += w.entries()[j] * Rational(e[j]);
        if (!ord || dot < *ord) ord = dot;
    }
    if (ord->is_zero()) return Candidate{false, Rational(0)};  // divisor misses the singular point
    return Candidate{true, total / *ord};
}

NewtonCertificate newton_lct_certified(const MonomialDivisor& d) {
    const auto& exps = d.exponents();
    const size_t ecount = exps.size();
    const size_t nvars = 1 + ecount;  // t, then one multiplier per exponent

    std::vector<LpConstraint> cons;
    for (int j = 0; j < d.dim(); ++j) {
        LpConstraint c;
        c.coeffs.assign(nvars, Rational(0));
        c.coeffs[0] = Rational(-1);
        for (size_t e = 0; e < ecount; ++e) c.coeffs[1 + e] = Rational(exps[e][j]);
        c.rel = LpRelation::le;
        c.rhs = Rational(0);
        cons.push_back(std::move(c));
    }
    LpConstraint sum;
    sum.coeffs.assign(nvars, Rational(1));
    sum.coeffs[0] = Rational(0);
    sum.rel = LpRelation::eq;
    sum.rhs = Rational(1);
    cons.push_back(std::move(sum));

    std::vector<Rational> obj(nvars, Rational(0));
    obj[0] = Rational(1);
    LpSolution sol = lp_minimize(obj, cons);
    if (sol.status != LpStatus::optimal) throw std::logic_error("newton_lct: diagonal program not optimal");

    NewtonCertificate cert;
    cert.t_star = sol.objective;
    cert.mu.assign(sol.x.begin() + 1, sol.x.end());
    if (cert.t_star.is_zero()) {
        cert.lct = LctValue{Rational(1), false, Rational(0)};
    } else {
        Rational unc = cert.t_star.reciprocal();
        cert.lct = LctValue{min(Rational(1), unc), true, unc};
    }
    return cert;
}

LctValue newton_lct(const MonomialDivisor& d) { return newton_lct_certified(d).lct; }

LctValue newton_lct_polygon(const MonomialDivisor& d) {
    if (d.dim() != 2) throw std::domain_error("newton_lct_polygon: surface route needs N = 2");
    const auto& exps = d.exponents();
    std::optional<Rational> t_star;
    auto consider = [&](const Rational& t) {
        if (!t_star || t < *t_star) t_star = t;
    };
    for (const auto& e : exps) consider(max(Rational(e[0]), Rational(e[1])));
    for (size_t i = 0; i < exps.size(); ++i)
        for (size_t j = i + 1; j < exps.size(); ++j) {
            // diagonal crossing of the segment [u, v]: solve x(l) = y(l)
            Rational u0(exps[i][0]), u1(exps[i][1]), v0(exps[j][0]), v1(exps[j][1]);
            Rational den = (u0 - v0) - (u1 - v1);
            if (den.is_zero()) continue;
            Rational l = (v1 - v0) / den;
            if (l < Rational(0) || l > Rational(1)) continue;
            consider(l * u0 + (Rational(1) - l) * v0);
        }
    if (t_star->is_zero()) return LctValue{Rational(1), false, Rational(0)};
    Rational unc = t_star->reciprocal();
    return LctValue{min(Rational(1), unc), true, unc};
}

CurveLctReport curve_lct(const Int& a, const Int& b) {
    if (a < 1 || b < 1) throw std::domain_error("curve_lct: exponents must be positive");
    CurveLctReport rep;
    Rational ra(a), rb(b);
    rep.uncapped = ra.reciprocal() + rb.reciprocal();
    rep.lct = min(Rational(1), rep.uncapped);
    Rational identity = Rational(-2) + Rational(a - 1) / ra + Rational(b - 1) / rb + rep.uncapped;
    rep.identity_ok = identity.is_zero();

    MonomialDivisor d(2, {{a, Int(0)}, {Int(0), b}});
    LctValue nv = newton_lct(d);
    rep.newton_agrees = nv.uncapped_finite && nv.uncapped == rep.uncapped && nv.capped == rep.lct;

    Candidate wc = weighted_candidate(WeightVector({rb, ra}), d);
    rep.weighted_agrees = wc.finite && wc.value == rep.uncapped;
    return rep;
}

MultiplicityBoundsReport check_multiplicity_bounds(const MonomialDivisor& d) {
    MultiplicityBoundsReport rep;
    rep.dim = d.dim();
    rep.multiplicity = d.multiplicity();
    rep.lct = newton_lct(d).capped;
    if (rep.multiplicity < 1 || rep.multiplicity < Int(rep.dim - 1)) return rep;  // bounds not asserted
    rep.asserted = true;
    rep.lower = Rational(1, rep.multiplicity);
    bool ok = rep.lower <= rep.lct;
    if (rep.multiplicity >= Int(rep.dim)) {
        rep.upper_asserted = true;
        rep.upper = Rational(Int(rep.dim), rep.multiplicity);
        ok = ok && rep.lct <= *rep.upper;
    }
    rep.ok = ok;
    return rep;
}

}  // namespace lctkit
