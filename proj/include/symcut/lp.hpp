#pragma once

// Exact rational linear programming via two-phase tableau simplex with
// Bland's rule (no cycling, no tolerances).  Free variables are split into
// differences of nonnegative ones.  Built for desk-scale polyhedral work:
// feasibility, strict feasibility, support-function maximization.

#include "symcut/rational.hpp"

namespace symcut {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status;
  Rat value;    // objective value when Optimal
  RatVec point; // an optimal point when Optimal
};

namespace detail {

class SimplexTableau {
 public:
  // rows: coefficient rows over `nvars` nonnegative variables, one per
  // constraint, each paired with a relation (-1: <=, 0: ==) and rhs.
  SimplexTableau(std::size_t nvars, std::vector<RatVec> rows, std::vector<int> rel,
                 RatVec rhs)
      : nvars_(nvars) {
    std::size_t m = rows.size();
    // Normalize to rhs >= 0; "<=" rows with negative rhs become ">=" rows.
    std::vector<int> kind(m); // 0: slack only, 1: surplus+artificial, 2: artificial
    for (std::size_t i = 0; i < m; ++i) {
      bool ge = false;
      if (rhs[i] < 0) {
        for (auto& v : rows[i]) v = -v;
        rhs[i] = -rhs[i];
        if (rel[i] == -1) ge = true;
      }
      kind[i] = rel[i] == 0 ? 2 : (ge ? 1 : 0);
    }
    std::size_t nslack = 0, nart = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (kind[i] != 2) ++nslack;
      if (kind[i] != 0) ++nart;
    }
    total_ = nvars_ + nslack + nart;
    art_begin_ = nvars_ + nslack;
    tab_.assign(m, RatVec(total_ + 1, Rat(0)));
    basis_.assign(m, 0);
    std::size_t si = nvars_, ai = art_begin_;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < nvars_; ++j) tab_[i][j] = rows[i][j];
      tab_[i][total_] = rhs[i];
      if (kind[i] == 0) {
        tab_[i][si] = 1;
        basis_[i] = si++;
      } else if (kind[i] == 1) {
        tab_[i][si] = -1;
        ++si;
        tab_[i][ai] = 1;
        basis_[i] = ai++;
      } else {
        tab_[i][ai] = 1;
        basis_[i] = ai++;
      }
    }
  }

  // Phase 1: drive sum of artificials to zero.  Returns false on infeasible.
  bool phase1() {
    if (art_begin_ == total_) return true;
    RatVec obj(total_ + 1, Rat(0));
    for (std::size_t j = art_begin_; j < total_; ++j) obj[j] = -1;
    reduce_objective(obj);
    run(obj);
    if (obj[total_] != 0) return false;
    // Pivot artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tab_.size();) {
      if (basis_[i] < art_begin_) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < art_begin_ && tab_[i][j] == 0) ++j;
      if (j == art_begin_) {
        tab_.erase(tab_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        pivot(i, j);
        ++i;
      }
    }
    total_eff_ = art_begin_; // artificial columns frozen out of play
    return true;
  }

  // Phase 2: maximize c over the structural variables.  Returns false when
  // unbounded.  On success *value receives the optimum.
  bool phase2(const RatVec& c, Rat* value) {
    RatVec obj(total_ + 1, Rat(0));
    for (std::size_t j = 0; j < nvars_ && j < c.size(); ++j) obj[j] = c[j];
    reduce_objective(obj);
    if (!run(obj)) return false;
    *value = -obj[total_];
    return true;
  }

  RatVec solution() const {
    RatVec x(nvars_, Rat(0));
    for (std::size_t i = 0; i < tab_.size(); ++i)
      if (basis_[i] < nvars_) x[basis_[i]] = tab_[i][total_];
    return x;
  }

 private:
  void reduce_objective(RatVec& obj) {
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      const Rat f = obj[basis_[i]];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= total_; ++j)
        if (tab_[i][j] != 0) obj[j] -= f * tab_[i][j];
      obj[basis_[i]] = 0;
    }
    // Invariant kept by the uniform pivot update below: obj[total_] holds
    // MINUS the current objective value.
  }

  // Bland's rule simplex loop; returns false when unbounded.
  bool run(RatVec& obj) {
    const std::size_t limit = total_eff_ ? total_eff_ : total_;
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      std::size_t leave = tab_.size();
      Rat best;
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rat ratio = tab_[i][total_] / tab_[i][enter];
        if (leave == tab_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == tab_.size()) return false; // unbounded
      pivot(leave, enter);
      const Rat f = obj[enter];
      if (f != 0)
        for (std::size_t j = 0; j <= total_; ++j)
          if (tab_[leave][j] != 0) obj[j] -= f * tab_[leave][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = Rat(1) / tab_[r][c];
    for (auto& v : tab_[r]) v *= inv;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == r) continue;
      const Rat f = tab_[i][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= total_; ++j)
        if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t nvars_, total_, art_begin_, total_eff_ = 0;
  std::vector<RatVec> tab_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

// maximize c.x subject to A_le x <= b_le and A_eq x = b_eq, x free.
inline LpResult solve_lp(const std::vector<RatVec>& A_le, const RatVec& b_le,
                         const std::vector<RatVec>& A_eq, const RatVec& b_eq,
                         const RatVec& c) {
  const std::size_t n = c.size();
  auto split = [n](const RatVec& row) {
    RatVec z(2 * n, Rat(0));
    for (std::size_t j = 0; j < n && j < row.size(); ++j) {
      z[2 * j] = row[j];
      z[2 * j + 1] = -row[j];
    }
    return z;
  };
  std::vector<RatVec> rows;
  std::vector<int> rel;
  RatVec rhs;
  for (std::size_t i = 0; i < A_le.size(); ++i) {
    rows.push_back(split(A_le[i]));
    rel.push_back(-1);
    rhs.push_back(b_le[i]);
  }
  for (std::size_t i = 0; i < A_eq.size(); ++i) {
    rows.push_back(split(A_eq[i]));
    rel.push_back(0);
    rhs.push_back(b_eq[i]);
  }
  detail::SimplexTableau t(2 * n, std::move(rows), std::move(rel), std::move(rhs));
  if (!t.phase1()) return {LpStatus::Infeasible, Rat(0), {}};
  Rat value;
  if (!t.phase2(split(c), &value)) return {LpStatus::Unbounded, Rat(0), {}};
  RatVec z = t.solution();
  RatVec x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = z[2 * j] - z[2 * j + 1];
  return {LpStatus::Optimal, value, std::move(x)};
}

inline bool lp_feasible(const std::vector<RatVec>& A_le, const RatVec& b_le,
                        const std::vector<RatVec>& A_eq, const RatVec& b_eq,
                        std::size_t nvars) {
  RatVec c(nvars, Rat(0));
  return solve_lp(A_le, b_le, A_eq, b_eq, c).status != LpStatus::Infeasible;
}

// Feasibility of { A_le x <= b_le, A_lt x < b_lt, A_eq x = b_eq }: maximize a
// margin variable t with A_lt x + t <= b_lt, t <= 1; strict-feasible iff the
// optimum is positive.
inline bool lp_strictly_feasible(const std::vector<RatVec>& A_le, const RatVec& b_le,
                                 const std::vector<RatVec>& A_lt, const RatVec& b_lt,
                                 const std::vector<RatVec>& A_eq, const RatVec& b_eq,
                                 std::size_t nvars) {
  std::vector<RatVec> le;
  RatVec ble;
  auto widen = [nvars](const RatVec& row, const Rat& tcoef) {
    RatVec r(nvars + 1, Rat(0));
    for (std::size_t j = 0; j < row.size(); ++j) r[j] = row[j];
    r[nvars] = tcoef;
    return r;
  };
  for (std::size_t i = 0; i < A_le.size(); ++i) {
    le.push_back(widen(A_le[i], 0));
    ble.push_back(b_le[i]);
  }
  for (std::size_t i = 0; i < A_lt.size(); ++i) {
    le.push_back(widen(A_lt[i], 1));
    ble.push_back(b_lt[i]);
  }
  RatVec tcap(nvars + 1, Rat(0));
  tcap[nvars] = 1;
  le.push_back(tcap);
  ble.push_back(Rat(1));
  std::vector<RatVec> eq;
  RatVec beq;
  for (std::size_t i = 0; i < A_eq.size(); ++i) {
    eq.push_back(widen(A_eq[i], 0));
    beq.push_back(b_eq[i]);
  }
  RatVec c(nvars + 1, Rat(0));
  c[nvars] = 1;
  LpResult r = solve_lp(le, ble, eq, beq, c);
  return r.status == LpStatus::Optimal && r.value > 0;
}

}  // namespace symcut
