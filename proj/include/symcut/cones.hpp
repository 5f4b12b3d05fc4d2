#pragma once

// Rational polyhedral cones with both representations:
//   H-rep: { x : a.x >= 0 for ineqs, e.x = 0 for eqs }
//   V-rep: nonnegative spans of rays plus a lineality basis of lines.
// Conversion in both directions runs the incremental double-description
// method with the exact algebraic adjacency test; lineality and non-full-
// dimensional cones are handled by restricting to complements first.
// A Hilbert-basis enumeration (Gordan zonotope bound) is provided for
// ambient dimension <= 4, optionally relative to a sublattice.

#include <functional>

#include "symcut/linalg.hpp"
#include "symcut/lp.hpp"

namespace symcut {

struct ConeVRep {
  std::vector<IntVec> rays;   // primitive, lex-sorted
  std::vector<IntVec> lines;  // primitive basis of the lineality space
};

namespace detail {

inline RatVec mat_apply_cols(const std::vector<RatVec>& cols, const RatVec& y) {
  // x = sum_j y_j cols[j]
  if (cols.empty()) return {};
  RatVec x(cols[0].size(), Rat(0));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[j] * cols[j][i];
  return x;
}

// Extreme rays of the pointed cone { y : rows.y >= 0 } (ker(rows) must be 0).
inline std::vector<RatVec> dd_pointed(std::size_t d, const std::vector<RatVec>& rows) {
  if (d == 0) return {};
  // greedy deterministic choice of d independent starting rows
  std::vector<std::size_t> init;
  std::vector<RatVec> picked;
  for (std::size_t i = 0; i < rows.size() && init.size() < d; ++i) {
    picked.push_back(rows[i]);
    if (rank_of_rows(picked) == picked.size())
      init.push_back(i);
    else
      picked.pop_back();
  }
  if (init.size() < d)
    throw std::invalid_argument("double description: cone is not pointed");
  RatMat B = RatMat::from_rows(picked);
  RatMat Binv = inverse(B);
  struct Ray {
    RatVec v;
    IntVec prim;
  };
  auto make_ray = [](RatVec v) {
    IntVec p = primitive(v);
    return Ray{to_rat(p), std::move(p)};
  };
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) rays.push_back(make_ray(Binv.col(j)));

  std::vector<std::size_t> processed = init;
  std::vector<bool> used(rows.size(), false);
  for (auto i : init) used[i] = true;

  for (std::size_t step = 0; step < rows.size(); ++step) {
    if (used[step]) continue;
    const RatVec& a = rows[step];
    std::vector<Rat> val(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k) val[k] = dot(a, rays[k].v);
    std::vector<std::size_t> pos, neg;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (val[k] > 0) pos.push_back(k);
      if (val[k] < 0) neg.push_back(k);
    }
    if (!neg.empty()) {
      std::vector<Ray> next;
      for (std::size_t k = 0; k < rays.size(); ++k)
        if (val[k] >= 0) next.push_back(rays[k]);
      for (auto p : pos)
        for (auto n : neg) {
          // adjacency: active processed rows common to both have rank d-2
          std::vector<RatVec> active;
          for (auto t : processed) {
            if (dot(rows[t], rays[p].v) == 0 && dot(rows[t], rays[n].v) == 0)
              active.push_back(rows[t]);
          }
          if (rank_of_rows(active) + 2 != d) continue;
          RatVec w = val[p] * rays[n].v - val[n] * rays[p].v;
          Ray cand = make_ray(std::move(w));
          bool dup = false;
          for (const auto& r : next) dup = dup || r.prim == cand.prim;
          if (!dup) next.push_back(std::move(cand));
        }
      rays = std::move(next);
    }
    processed.push_back(step);
    used[step] = true;
  }
  std::vector<RatVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(to_rat(r.prim));
  return out;
}

}  // namespace detail

// V-representation of { x in Q^dim : a.x >= 0 (ineqs), e.x = 0 (eqs) }.
inline ConeVRep dd_generators(std::size_t dim, const std::vector<RatVec>& ineqs,
                              const std::vector<RatVec>& eqs) {
  // restrict to the equality subspace
  std::vector<RatVec> N;  // columns: basis of { x : eqs.x = 0 }
  if (eqs.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      RatVec e(dim, Rat(0));
      e[i] = 1;
      N.push_back(std::move(e));
    }
  } else {
    N = nullspace(RatMat::from_rows(eqs));
  }
  ConeVRep out;
  if (N.empty()) return out;
  const std::size_t d1 = N.size();
  std::vector<RatVec> rows1;  // inequalities in reduced coordinates
  for (const auto& a : ineqs) {
    RatVec r(d1);
    for (std::size_t j = 0; j < d1; ++j) r[j] = dot(a, N[j]);
    rows1.push_back(std::move(r));
  }
  // split off lineality: ker of the reduced inequality matrix
  std::vector<RatVec> L =
      rows1.empty() ? [&] {
        std::vector<RatVec> full;
        for (std::size_t i = 0; i < d1; ++i) {
          RatVec e(d1, Rat(0));
          e[i] = 1;
          full.push_back(std::move(e));
        }
        return full;
      }()
                    : nullspace(RatMat::from_rows(rows1));
  for (const auto& l : L) out.lines.push_back(primitive(detail::mat_apply_cols(N, l)));
  std::vector<RatVec> W;  // complement of the lineality inside reduced coords
  if (!rows1.empty()) {
    Rref rr = rref(RatMat::from_rows(rows1));
    for (auto c : rr.pivot_cols) {
      RatVec e(d1, Rat(0));
      e[c] = 1;
      W.push_back(std::move(e));
    }
  }
  if (!W.empty()) {
    const std::size_t d2 = W.size();
    std::vector<RatVec> rows2;
    for (const auto& a : rows1) {
      RatVec r(d2);
      for (std::size_t j = 0; j < d2; ++j) r[j] = dot(a, W[j]);
      rows2.push_back(std::move(r));
    }
    for (const auto& y : detail::dd_pointed(d2, rows2)) {
      RatVec z = detail::mat_apply_cols(W, y);
      out.rays.push_back(primitive(detail::mat_apply_cols(N, z)));
    }
  }
  std::sort(out.rays.begin(), out.rays.end());
  std::sort(out.lines.begin(), out.lines.end());
  return out;
}

struct ConeHRep {
  std::vector<RatVec> ineqs;
  std::vector<RatVec> eqs;
};

// H-representation of cone(rays) + span(lines), via the dual cone.
inline ConeHRep dd_inequalities(std::size_t dim, const std::vector<RatVec>& rays,
                                const std::vector<RatVec>& lines) {
  ConeVRep dual = dd_generators(dim, rays, lines);
  ConeHRep h;
  for (const auto& r : dual.rays) h.ineqs.push_back(to_rat(r));
  for (const auto& l : dual.lines) h.eqs.push_back(to_rat(l));
  return h;
}

class RationalCone {
 public:
  static RationalCone from_inequalities(std::size_t dim, std::vector<RatVec> ineqs,
                                        std::vector<RatVec> eqs = {}) {
    RationalCone c;
    c.dim_ = dim;
    c.ineqs_ = std::move(ineqs);
    c.eqs_ = std::move(eqs);
    ConeVRep v = dd_generators(dim, c.ineqs_, c.eqs_);
    for (auto& r : v.rays) c.rays_.push_back(to_rat(r));
    for (auto& l : v.lines) c.lines_.push_back(to_rat(l));
    c.check_consistency();
    return c;
  }

  static RationalCone from_generators(std::size_t dim, std::vector<RatVec> rays,
                                      std::vector<RatVec> lines = {}) {
    RationalCone c;
    c.dim_ = dim;
    ConeHRep h = dd_inequalities(dim, rays, lines);
    c.ineqs_ = std::move(h.ineqs);
    c.eqs_ = std::move(h.eqs);
    // canonicalize: extreme rays / lineality basis recomputed from the H-rep
    ConeVRep v = dd_generators(dim, c.ineqs_, c.eqs_);
    for (auto& r : v.rays) c.rays_.push_back(to_rat(r));
    for (auto& l : v.lines) c.lines_.push_back(to_rat(l));
    c.check_consistency();
    for (const auto& g : rays)
      if (!c.contains(g)) throw std::runtime_error("cone representations inconsistent");
    for (const auto& l : lines)
      if (!c.contains(l) || !c.contains(negate(l)))
        throw std::runtime_error("cone representations inconsistent");
    return c;
  }

  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& inequalities() const { return ineqs_; }
  const std::vector<RatVec>& equalities() const { return eqs_; }
  const std::vector<RatVec>& rays() const { return rays_; }
  const std::vector<RatVec>& lines() const { return lines_; }

  bool contains(const RatVec& x) const {
    for (const auto& a : ineqs_)
      if (dot(a, x) < 0) return false;
    for (const auto& e : eqs_)
      if (dot(e, x) != 0) return false;
    return true;
  }

  bool pointed() const { return lines_.empty(); }

  // Extreme rays recomputed from the stored H-rep (canonical form).
  std::vector<IntVec> extreme_rays() const {
    return dd_generators(dim_, ineqs_, eqs_).rays;
  }

 private:
  void check_consistency() const {
    for (const auto& g : rays_)
      if (!contains(g)) throw std::runtime_error("cone representations inconsistent");
    for (const auto& l : lines_) {
      if (!contains(l) || !contains(negate(l)))
        throw std::runtime_error("cone representations inconsistent");
    }
  }

  std::size_t dim_ = 0;
  std::vector<RatVec> ineqs_, eqs_, rays_, lines_;
};

inline bool cone_contains_cone(const RationalCone& outer, const RationalCone& inner) {
  for (const auto& r : inner.rays())
    if (!outer.contains(r)) return false;
  for (const auto& l : inner.lines())
    if (!outer.contains(l) || !outer.contains(negate(l))) return false;
  return true;
}

inline bool cones_equal(const RationalCone& a, const RationalCone& b) {
  return cone_contains_cone(a, b) && cone_contains_cone(b, a);
}

// Minimal generating set of the monoid (cone intersect lattice), where the
// lattice is { x in Z^dim : in_lattice(x) }.  Pointed cones only; the Gordan
// zonotope bound keeps the search finite.  Guarded to ambient dimension <= 4.
inline std::vector<IntVec> hilbert_basis(
    const RationalCone& cone,
    const std::function<bool(const IntVec&)>& in_lattice = nullptr) {
  if (cone.dim() > 4)
    throw std::invalid_argument("hilbert_basis: dimension too large (max 4)");
  if (!cone.pointed()) throw std::invalid_argument("hilbert_basis: cone not pointed");
  const std::size_t d = cone.dim();
  std::vector<IntVec> rays = cone.extreme_rays();
  if (rays.empty()) return {};
  // scale each primitive ray to the smallest positive multiple in the lattice
  std::vector<IntVec> scaled;
  for (const auto& r : rays) {
    IntVec s = r;
    if (in_lattice) {
      int k = 1;
      for (; k <= 64; ++k) {
        for (std::size_t i = 0; i < d; ++i) s[i] = r[i] * k;
        if (in_lattice(s)) break;
      }
      if (k > 64)
        throw std::invalid_argument("hilbert_basis: ray does not meet the lattice");
    }
    scaled.push_back(std::move(s));
  }
  // bounding box of the ray zonotope
  IntVec lo(d, Int(0)), hi(d, Int(0));
  for (const auto& r : scaled)
    for (std::size_t i = 0; i < d; ++i) {
      if (r[i] < 0) lo[i] += r[i];
      if (r[i] > 0) hi[i] += r[i];
    }
  Int cells = 1;
  for (std::size_t i = 0; i < d; ++i) cells *= hi[i] - lo[i] + 1;
  if (cells > 2000000)
    throw std::invalid_argument("hilbert_basis: search region too large");

  auto in_zonotope = [&](const IntVec& x) {
    // exists t in [0,1]^k with sum t_i scaled_i = x
    const std::size_t k = scaled.size();
    std::vector<RatVec> le;
    RatVec ble;
    for (std::size_t i = 0; i < k; ++i) {
      RatVec up(k, Rat(0)), down(k, Rat(0));
      up[i] = 1;
      down[i] = -1;
      le.push_back(up);
      ble.push_back(Rat(1));
      le.push_back(down);
      ble.push_back(Rat(0));
    }
    std::vector<RatVec> eq;
    RatVec beq;
    for (std::size_t c = 0; c < d; ++c) {
      RatVec row(k);
      for (std::size_t i = 0; i < k; ++i) row[i] = Rat(scaled[i][c]);
      eq.push_back(std::move(row));
      beq.push_back(Rat(x[c]));
    }
    return lp_feasible(le, ble, eq, beq, k);
  };

  std::vector<IntVec> candidates;
  IntVec x = lo;
  for (;;) {
    bool zero = true;
    for (const auto& v : x) zero = zero && v == 0;
    RatVec xr = to_rat(x);
    if (!zero && cone.contains(xr) && (!in_lattice || in_lattice(x)) && in_zonotope(x))
      candidates.push_back(x);
    std::size_t c = 0;
    while (c < d && x[c] == hi[c]) {
      x[c] = lo[c];
      ++c;
    }
    if (c == d) break;
    x[c] += 1;
  }

  // order by a functional strictly positive on the cone minus the origin
  RatVec phi(d, Rat(0));
  for (const auto& a : cone.inequalities()) phi = phi + a;
  std::sort(candidates.begin(), candidates.end(),
            [&](const IntVec& u, const IntVec& v) {
              Rat pu = dot(phi, to_rat(u)), pv = dot(phi, to_rat(v));
              if (pu != pv) return pu < pv;
              return u < v;
            });
  std::vector<IntVec> basis;
  for (const auto& cnd : candidates) {
    bool reducible = false;
    for (const auto& h : basis) {
      IntVec diff(d);
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) {
        diff[i] = cnd[i] - h[i];
        zero = zero && diff[i] == 0;
      }
      if (zero || !cone.contains(to_rat(diff))) continue;
      reducible = true;
      break;
    }
    if (!reducible) basis.push_back(cnd);
  }
  return basis;
}

}  // namespace symcut
