#include "schur/lp.hpp"

#include <stdexcept>

namespace schur {

namespace {

// Dense tableau, columns: structural | slacks | artificials | rhs.
class Tableau {
public:
    Tableau(const LinearProgram& lp) {
        nv_ = lp.num_vars;
        nslack_ = static_cast<int>(lp.a_ub.size());
        nrows_ = nslack_ + static_cast<int>(lp.a_eq.size());
        nart_ = nrows_;
        ncols_ = nv_ + nslack_ + nart_;
        t_.assign(nrows_, std::vector<Rational>(ncols_ + 1, Rational(0)));
        basis_.resize(nrows_);

        for (int i = 0; i < nslack_; ++i) {
            for (int j = 0; j < nv_; ++j) t_[i][j] = lp.a_ub[i][j];
            t_[i][nv_ + i] = 1;
            t_[i][ncols_] = lp.b_ub[i];
        }
        for (std::size_t r = 0; r < lp.a_eq.size(); ++r) {
            const int i = nslack_ + static_cast<int>(r);
            for (int j = 0; j < nv_; ++j) t_[i][j] = lp.a_eq[r][j];
            t_[i][ncols_] = lp.b_eq[r];
        }
        for (int i = 0; i < nrows_; ++i) {
            if (t_[i][ncols_] < 0) {
                for (auto& v : t_[i]) v = -v;
            }
            t_[i][nv_ + nslack_ + i] = 1;
            basis_[i] = nv_ + nslack_ + i;
        }
    }

    // Minimizes cost.x with Bland's rule; `allowed` marks enterable columns.
    void run(const std::vector<Rational>& cost, const std::vector<bool>& allowed) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols_; ++j) {
                if (!allowed[j]) continue;
                // reduced cost c_j - c_B . column_j
                Rational r = cost[j];
                for (int i = 0; i < nrows_; ++i) r -= cost[basis_[i]] * t_[i][j];
                if (r < 0) { enter = j; break; }
            }
            if (enter < 0) return;

            int leave = -1;
            Rational best;
            for (int i = 0; i < nrows_; ++i) {
                if (t_[i][enter] <= 0) continue;
                Rational ratio = t_[i][ncols_] / t_[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw std::logic_error("linear program is unbounded");
            pivot(leave, enter);
        }
    }

    Rational objective(const std::vector<Rational>& cost) const {
        Rational z = 0;
        for (int i = 0; i < nrows_; ++i) z += cost[basis_[i]] * t_[i][ncols_];
        return z;
    }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(nv_, Rational(0));
        for (int i = 0; i < nrows_; ++i) {
            if (basis_[i] < nv_) x[basis_[i]] = t_[i][ncols_];
        }
        return x;
    }

    int nv() const { return nv_; }
    int nslack() const { return nslack_; }
    int nart() const { return nart_; }
    int ncols() const { return ncols_; }

private:
    void pivot(int row, int col) {
        const Rational p = t_[row][col];
        for (auto& v : t_[row]) v /= p;
        for (int i = 0; i < nrows_; ++i) {
            if (i == row || t_[i][col] == 0) continue;
            const Rational f = t_[i][col];
            for (int j = 0; j <= ncols_; ++j) t_[i][j] -= f * t_[row][j];
        }
        basis_[row] = col;
    }

    int nv_, nslack_, nrows_, nart_, ncols_;
    std::vector<std::vector<Rational>> t_;
    std::vector<int> basis_;
};

}  // namespace

LpSolution solve_max(const LinearProgram& lp) {
    Tableau tab(lp);
    const int ncols = tab.ncols();

    // Phase 1: drive the artificials to zero.
    std::vector<Rational> phase1(ncols, Rational(0));
    for (int j = tab.nv() + tab.nslack(); j < ncols; ++j) phase1[j] = 1;
    std::vector<bool> allowed(ncols, true);
    tab.run(phase1, allowed);
    if (tab.objective(phase1) != 0) throw std::domain_error("linear program is infeasible");

    // Phase 2: artificials may stay basic at zero but never re-enter.
    std::vector<Rational> phase2(ncols, Rational(0));
    for (int j = 0; j < tab.nv(); ++j) phase2[j] = -lp.objective[j];
    for (int j = tab.nv() + tab.nslack(); j < ncols; ++j) allowed[j] = false;
    tab.run(phase2, allowed);

    LpSolution sol;
    sol.x = tab.solution();
    sol.value = -tab.objective(phase2);
    return sol;
}

}  // namespace schur
