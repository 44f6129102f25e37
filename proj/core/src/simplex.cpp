#include "lctkit/simplex.hpp"

#include <stdexcept>

namespace lctkit {

namespace {

// Dense tableau: rows are constraints (all equalities after adding slacks),
// last row is the objective; column layout [structural | slack | artificial | rhs].
class Tableau {
public:
    Tableau(size_t rows, size_t cols) : cols_(cols), data_(rows * cols) {}
    Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

private:
    size_t cols_;
    std::vector<Rational> data_;
};

}  // namespace

LpSolution lp_minimize(const std::vector<Rational>& objective, const std::vector<LpConstraint>& constraints) {
    const size_t n = objective.size();
    const size_t m = constraints.size();
    for (const LpConstraint& c : constraints)
        if (c.coeffs.size() != n) throw std::domain_error("lp_minimize: constraint arity mismatch");

    // column counts
    size_t n_slack = 0;
    for (const LpConstraint& c : constraints)
        if (c.rel != LpRelation::eq) ++n_slack;
    const size_t n_art = m;  // one artificial per row keeps the start basis trivial
    const size_t total = n + n_slack + n_art;
    const size_t rhs_col = total;

    Tableau t(m + 1, total + 1);
    std::vector<size_t> basis(m);

    size_t slack_at = n;
    for (size_t i = 0; i < m; ++i) {
        const LpConstraint& c = constraints[i];
        bool flip = c.rhs.sign() < 0;  // keep rhs nonnegative so the artificial start is feasible
        for (size_t j = 0; j < n; ++j) t.at(i, j) = flip ? -c.coeffs[j] : c.coeffs[j];
        t.at(i, rhs_col) = flip ? -c.rhs : c.rhs;
        if (c.rel != LpRelation::eq) {
            Rational s = c.rel == LpRelation::le ? Rational(1) : Rational(-1);
            t.at(i, slack_at++) = flip ? -s : s;
        }
        t.at(i, n + n_slack + i) = Rational(1);
        basis[i] = n + n_slack + i;
    }

    auto pivot = [&](size_t row, size_t col) {
        Rational inv = t.at(row, col).reciprocal();
        for (size_t j = 0; j <= rhs_col; ++j) t.at(row, j) *= inv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == row) continue;
            Rational factor = t.at(i, col);
            if (factor.is_zero()) continue;
            for (size_t j = 0; j <= rhs_col; ++j) t.at(i, j) -= factor * t.at(row, j);
        }
        basis[row] = col;
    };

    // Bland's rule: smallest-index entering column, smallest-index tie break
    // on the ratio test; guarantees termination without any tolerance.
    auto simplex_loop = [&](size_t col_limit) -> bool {
        for (;;) {
            size_t enter = col_limit;
            for (size_t j = 0; j < col_limit; ++j)
                if (t.at(m, j).sign() < 0) {
                    enter = j;
                    break;
                }
            if (enter == col_limit) return true;  // optimal
            size_t leave = m;
            for (size_t i = 0; i < m; ++i) {
                if (t.at(i, enter).sign() <= 0) continue;
                if (leave == m) {
                    leave = i;
                    continue;
                }
                Rational cur = t.at(i, rhs_col) / t.at(i, enter);
                Rational best = t.at(leave, rhs_col) / t.at(leave, enter);
                if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
            }
            if (leave == m) return false;  // unbounded direction
            pivot(leave, enter);
        }
    };

    LpSolution out;

    // phase 1: minimize the artificial sum
    for (size_t j = n + n_slack; j < total; ++j) t.at(m, j) = Rational(1);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= rhs_col; ++j) t.at(m, j) -= t.at(i, j);
    if (!simplex_loop(total)) throw std::logic_error("lp_minimize: phase 1 unbounded");
    if (t.at(m, rhs_col).sign() != 0) {
        out.status = LpStatus::infeasible;
        return out;
    }
    // drive leftover artificials out of the basis
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < n + n_slack) continue;
        size_t col = n + n_slack;
        for (size_t j = 0; j < n + n_slack; ++j)
            if (!t.at(i, j).is_zero()) {
                col = j;
                break;
            }
        if (col < n + n_slack) pivot(i, col);
        // a fully zero row is a redundant constraint; its artificial stays
        // basic at level zero and never re-enters
    }

    // phase 2: original objective over structural and slack columns
    for (size_t j = 0; j <= rhs_col; ++j) t.at(m, j) = Rational(0);
    for (size_t j = 0; j < n; ++j) t.at(m, j) = objective[j];
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] >= n) continue;
        Rational factor = t.at(m, basis[i]);
        if (factor.is_zero()) continue;
        for (size_t j = 0; j <= rhs_col; ++j) t.at(m, j) -= factor * t.at(i, j);
    }
    if (!simplex_loop(n + n_slack)) {
        out.status = LpStatus::unbounded;
        return out;
    }

    out.status = LpStatus::optimal;
    out.x.assign(n, Rational(0));
    for (size_t i = 0; i < m; ++i)
        if (basis[i] < n) out.x[basis[i]] = t.at(i, rhs_col);
    out.objective = -t.at(m, rhs_col);
    return out;
}

}  // namespace lctkit
