#pragma once

// Rational linear constraint systems: membership, feasibility (weak and
// strict), support maximization, exact redundancy elimination, and
// Fourier-Motzkin projection.

#include <algorithm>

#include "symcut/lp.hpp"

namespace symcut {

enum class Rel { Le, Lt, Eq };

struct LinRow {
  RatVec a;
  Rat b;
  Rel rel;
};

struct LinearSystem {
  std::size_t nvars = 0;
  std::vector<LinRow> rows;

  LinearSystem() = default;
  explicit LinearSystem(std::size_t n) : nvars(n) {}

  void add(RatVec a, Rat b, Rel rel = Rel::Le) {
    if (a.size() != nvars) throw std::invalid_argument("row width mismatch");
    rows.push_back({std::move(a), std::move(b), rel});
  }

  bool contains(const RatVec& x) const {
    for (const auto& r : rows) {
      Rat v = dot(r.a, x);
      if (r.rel == Rel::Le && !(v <= r.b)) return false;
      if (r.rel == Rel::Lt && !(v < r.b)) return false;
      if (r.rel == Rel::Eq && v != r.b) return false;
    }
    return true;
  }

  void split(std::vector<RatVec>* A_le, RatVec* b_le, std::vector<RatVec>* A_lt,
             RatVec* b_lt, std::vector<RatVec>* A_eq, RatVec* b_eq) const {
    for (const auto& r : rows) {
      if (r.rel == Rel::Le) {
        A_le->push_back(r.a);
        b_le->push_back(r.b);
      } else if (r.rel == Rel::Lt) {
        A_lt->push_back(r.a);
        b_lt->push_back(r.b);
      } else {
        A_eq->push_back(r.a);
        b_eq->push_back(r.b);
      }
    }
  }

  // Feasibility honoring strict rows exactly.
  bool feasible() const {
    std::vector<RatVec> le, lt, eq;
    RatVec ble, blt, beq;
    split(&le, &ble, &lt, &blt, &eq, &beq);
    if (lt.empty()) return lp_feasible(le, ble, eq, beq, nvars);
    return lp_strictly_feasible(le, ble, lt, blt, eq, beq, nvars);
  }

  // Maximizes c over the closure (strict rows weakened).
  LpResult maximize(const RatVec& c) const {
    std::vector<RatVec> le, lt, eq;
    RatVec ble, blt, beq;
    split(&le, &ble, &lt, &blt, &eq, &beq);
    for (std::size_t i = 0; i < lt.size(); ++i) {
      le.push_back(lt[i]);
      ble.push_back(blt[i]);
    }
    return solve_lp(le, ble, eq, beq, c);
  }
};

// True when every point of `inner` satisfies every row of `outer` (closures;
// strict rows are weakened on both sides).  Vacuously true for empty `inner`.
inline bool system_contained_in(const LinearSystem& inner, const LinearSystem& outer) {
  if (inner.nvars != outer.nvars) throw std::invalid_argument("ambient mismatch");
  if (!inner.feasible()) return true;
  for (const auto& r : outer.rows) {
    LpResult up = inner.maximize(r.a);
    if (up.status == LpStatus::Unbounded) return false;
    if (up.value > r.b) return false;
    if (r.rel == Rel::Eq) {
      LpResult down = inner.maximize(negate(r.a));
      if (down.status == LpStatus::Unbounded) return false;
      if (-down.value < r.b) return false;
    }
  }
  return true;
}

inline bool systems_equal(const LinearSystem& a, const LinearSystem& b) {
  return system_contained_in(a, b) && system_contained_in(b, a);
}

namespace detail {

// Canonical form for dedup: integer primitive scaling of (a | b).
inline void normalize_row(LinRow& r) {
  RatVec full = r.a;
  full.push_back(r.b);
  IntVec prim = primitive(full);
  // primitive() keeps orientation (positive multiple), required for Le rows.
  for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] = Rat(prim[j]);
  r.b = Rat(prim.back());
}

}  // namespace detail

// Removes duplicate rows (after canonical scaling) keeping the first, then
// removes rows implied by the remaining ones.  Scanning is in index order, so
// among mutually redundant rows the earliest survives.  Only weak systems.
inline LinearSystem eliminate_redundancy(LinearSystem sys) {
  for (auto& r : sys.rows) {
    if (r.rel == Rel::Lt) throw std::invalid_argument("strict rows unsupported here");
    detail::normalize_row(r);
  }
  // exact duplicate removal, first occurrence wins
  {
    std::vector<LinRow> kept;
    for (auto& r : sys.rows) {
      bool dup = false;
      for (const auto& k : kept)
        dup = dup || (k.rel == r.rel && k.b == r.b && k.a == r.a);
      if (!dup) kept.push_back(std::move(r));
    }
    sys.rows = std::move(kept);
  }
  // a Le row is dropped iff the others already imply it
  for (std::size_t i = 0; i < sys.rows.size();) {
    if (sys.rows[i].rel != Rel::Le) {
      ++i;
      continue;
    }
    LinearSystem rest(sys.nvars);
    for (std::size_t j = 0; j < sys.rows.size(); ++j)
      if (j != i) rest.rows.push_back(sys.rows[j]);
    if (!rest.feasible()) {
      ++i;
      continue;
    }
    LpResult r = rest.maximize(sys.rows[i].a);
    if (r.status == LpStatus::Optimal && r.value <= sys.rows[i].b)
      sys.rows.erase(sys.rows.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return sys;
}

// Exact Fourier-Motzkin elimination of the listed variables (0-based).  When
// an equality mentions the variable it is used as a pivot for substitution;
// otherwise positive/negative inequality pairs are combined.  The returned
// system is over the remaining variables, in their original relative order,
// with redundant rows removed.
inline LinearSystem fourier_motzkin_eliminate(LinearSystem sys,
                                              std::vector<std::size_t> vars,
                                              bool simplify = true) {
  for (const auto& r : sys.rows)
    if (r.rel == Rel::Lt)
      throw std::invalid_argument("fourier_motzkin_eliminate: strict rows unsupported");
  std::vector<bool> eliminate(sys.nvars, false);
  for (auto v : vars) {
    if (v >= sys.nvars) throw std::invalid_argument("variable index out of range");
    eliminate[v] = true;
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  for (auto v : vars) {
    std::size_t eq_pivot = sys.rows.size();
    for (std::size_t i = 0; i < sys.rows.size(); ++i)
      if (sys.rows[i].rel == Rel::Eq && sys.rows[i].a[v] != 0) {
        eq_pivot = i;
        break;
      }
    std::vector<LinRow> next;
    if (eq_pivot < sys.rows.size()) {
      const LinRow piv = sys.rows[eq_pivot];
      for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (i == eq_pivot) continue;
        LinRow r = sys.rows[i];
        if (r.a[v] != 0) {
          Rat f = r.a[v] / piv.a[v];
          for (std::size_t j = 0; j < sys.nvars; ++j) r.a[j] -= f * piv.a[j];
          r.b -= f * piv.b;
        }
        next.push_back(std::move(r));
      }
    } else {
      std::vector<std::size_t> pos, neg;
      for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        if (sys.rows[i].a[v] > 0)
          pos.push_back(i);
        else if (sys.rows[i].a[v] < 0)
          neg.push_back(i);
        else
          next.push_back(sys.rows[i]);
      }
      for (auto p : pos)
        for (auto q : neg) {
          const LinRow &rp = sys.rows[p], &rq = sys.rows[q];
          Rat fp = Rat(1) / rp.a[v], fq = Rat(-1) / rq.a[v];
          LinRow r{RatVec(sys.nvars, Rat(0)), fp * rp.b + fq * rq.b, Rel::Le};
          for (std::size_t j = 0; j < sys.nvars; ++j)
            r.a[j] = fp * rp.a[j] + fq * rq.a[j];
          next.push_back(std::move(r));
        }
    }
    sys.rows = std::move(next);
    for (auto& r : sys.rows) r.a[v] = 0;
    if (simplify) sys = eliminate_redundancy(std::move(sys));
  }

  // compress the eliminated columns away
  LinearSystem out;
  for (std::size_t j = 0; j < sys.nvars; ++j)
    if (!eliminate[j]) ++out.nvars;
  for (const auto& r : sys.rows) {
    RatVec a;
    a.reserve(out.nvars);
    for (std::size_t j = 0; j < sys.nvars; ++j)
      if (!eliminate[j]) a.push_back(r.a[j]);
    out.rows.push_back({std::move(a), r.b, r.rel});
  }
  return out;
}

}  // namespace symcut
