#pragma once

// Labeled rational polyhedral sets attached to a root datum.  A polyhedron is
// a finite list of facets (beta, xi, m) describing { x : <beta_i, x> <= xi_i }
// either inside the closed positive chamber ("chamber" ambient) or in all of
// t* ("full" ambient).  beta_i is an integral coweight equal to m_i times a
// primitive vector; the label m_i is stored redundantly and checked.
//
// On top of the representation sit the geometric predicates used by the
// cutting constructions: face enumeration by active sets, simplicity,
// outward-positivity, universality (chamber walls met perpendicularly),
// the restricted admissibility test against a Kirwan polytope, W-invariant
// extensions, stacky normal fans, exact intersection with redundancy
// elimination, projections, a Delzant vertex test, and the eigenvalue
// strata used for torus cuts.  Everything is exact rational arithmetic.

#include <functional>
#include <optional>

#include "symcut/linear_system.hpp"
#include "symcut/cones.hpp"
#include "symcut/rootsys.hpp"

namespace symcut {

enum class Ambient { Chamber, Full };

struct LabeledFacet {
  IntVec beta;  // integral outward normal in coroot coordinates
  Rat xi;       // level
  Int label;    // positive integer, equal to the content of beta
};

struct LabeledPolyhedron {
  RootDatum datum;
  Ambient ambient = Ambient::Chamber;
  std::vector<LabeledFacet> facets;
  bool empty_marker = false;  // explicit empty set (no facet list semantics)

  std::size_t dim() const { return datum.dim; }

  // Full constraint system over t* coordinates; chamber walls included in
  // chamber-relative mode.  The empty marker yields an infeasible system.
  LinearSystem system() const {
    LinearSystem sys(dim());
    if (empty_marker) {
      sys.add(RatVec(dim(), Rat(0)), Rat(-1), Rel::Le);
      return sys;
    }
    if (ambient == Ambient::Chamber) {
      for (std::size_t i = 0; i < datum.simple_count(); ++i) {
        RatVec row(dim(), Rat(0));
        row[i] = -1;
        sys.add(std::move(row), Rat(0), Rel::Le);
      }
    }
    for (const auto& f : facets) sys.add(to_rat(f.beta), f.xi, Rel::Le);
    return sys;
  }
};

inline LabeledPolyhedron empty_polyhedron(RootDatum rd, Ambient amb) {
  LabeledPolyhedron p;
  p.datum = std::move(rd);
  p.ambient = amb;
  p.empty_marker = true;
  return p;
}

// Validating constructor: integral nonzero normals, label consistency
// (content(beta) == label), each half-space meets the chamber in
// chamber-relative mode, and the represented set is nonempty.
inline LabeledPolyhedron make_polyhedron(RootDatum rd, Ambient amb,
                                         std::vector<LabeledFacet> facets) {
  LabeledPolyhedron p;
  p.datum = std::move(rd);
  p.ambient = amb;
  p.facets = std::move(facets);
  for (const auto& f : p.facets) {
    if (f.beta.size() != p.dim())
      throw std::invalid_argument("facet normal has wrong dimension");
    Int c = content(f.beta);
    if (c == 0) throw std::invalid_argument("facet normal must be nonzero");
    if (f.label <= 0) throw std::invalid_argument("facet label must be positive");
    if (c != f.label)
      throw std::invalid_argument("facet label inconsistent with normal content");
  }
  if (amb == Ambient::Chamber) {
    for (const auto& f : p.facets) {
      LinearSystem half(p.dim());
      for (std::size_t i = 0; i < p.datum.simple_count(); ++i) {
        RatVec row(p.dim(), Rat(0));
        row[i] = -1;
        half.add(std::move(row), Rat(0), Rel::Le);
      }
      half.add(to_rat(f.beta), f.xi, Rel::Le);
      if (!half.feasible())
        throw std::invalid_argument("facet half-space misses the positive chamber");
    }
  }
  if (!p.system().feasible())
    throw std::invalid_argument("polyhedron is empty; use empty_polyhedron");
  return p;
}

// Set equality inside t* (chamber walls count in chamber-relative mode).
inline bool polyhedra_equal(const LabeledPolyhedron& a, const LabeledPolyhedron& b) {
  if (!a.datum.same_as(b.datum)) throw std::invalid_argument("root data differ");
  return systems_equal(a.system(), b.system());
}

// ---------------------------------------------------------------------------
// Faces
// ---------------------------------------------------------------------------

struct Face {
  std::vector<std::size_t> active;     // facet indices I with <beta_i,x> = xi_i
  RatVec point;                        // one exact point on the face
  std::vector<RatVec> hull_basis;      // linear part of the affine hull
  std::size_t dim() const { return hull_basis.size(); }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t m) {
  std::vector<std::vector<std::size_t>> subsets;
  subsets.reserve(std::size_t(1) << m);
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t(1) << i)) s.push_back(i);
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return subsets;
}

// System of P with the facets in `active` turned into equalities.
inline LinearSystem face_system(const LabeledPolyhedron& p,
                                const std::vector<std::size_t>& active) {
  LinearSystem sys = p.system();
  for (auto i : active) sys.add(to_rat(p.facets[i].beta), p.facets[i].xi, Rel::Eq);
  return sys;
}

// Exact affine hull of the solution set of a weak system: explicit equalities
// plus every inequality that is implicitly tight on the whole set.  Returns
// the linear part as a basis (empty = single point), plus one point.
inline std::pair<RatVec, std::vector<RatVec>> affine_hull(const LinearSystem& sys) {
  LpResult fp = sys.maximize(RatVec(sys.nvars, Rat(0)));
  if (fp.status != LpStatus::Optimal)
    throw std::invalid_argument("affine hull of an empty set");
  std::vector<RatVec> eq_rows;
  for (const auto& r : sys.rows) {
    if (r.rel == Rel::Eq) {
      eq_rows.push_back(r.a);
      continue;
    }
    // implicit equality iff min a.x over the set equals the bound b
    LpResult low = sys.maximize(negate(r.a));
    if (low.status == LpStatus::Optimal && -low.value == r.b) eq_rows.push_back(r.a);
  }
  std::vector<RatVec> basis;
  if (eq_rows.empty()) {
    for (std::size_t i = 0; i < sys.nvars; ++i) {
      RatVec e(sys.nvars, Rat(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = nullspace(RatMat::from_rows(eq_rows));
  }
  return {fp.point, std::move(basis)};
}

}  // namespace detail

// All nonempty faces P_I (indexed by active facet subsets), including P
// itself at I = {}.  Ordered by (|I|, lexicographic).
inline std::vector<Face> faces(const LabeledPolyhedron& p) {
  if (p.empty_marker) throw std::invalid_argument("faces of the empty set");
  std::vector<Face> out;
  for (auto& subset : detail::subsets_by_size(p.facets.size())) {
    LinearSystem sys = detail::face_system(p, subset);
    if (!sys.feasible()) continue;
    auto [point, basis] = detail::affine_hull(sys);
    out.push_back({std::move(subset), std::move(point), std::move(basis)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

struct SimplicityResult {
  bool simple = false;
  std::optional<Face> violating_face;  // a face whose active normals are dependent
  explicit operator bool() const { return simple; }
};

// True iff at every nonempty face the active facet normals are linearly
// independent.
inline SimplicityResult is_simple(const LabeledPolyhedron& p) {
  if (p.empty_marker) throw std::invalid_argument("is_simple of the empty set");
  for (const auto& f : faces(p)) {
    std::vector<RatVec> normals;
    for (auto i : f.active) normals.push_back(to_rat(p.facets[i].beta));
    if (!linearly_independent(normals)) return {false, f};
  }
  return {true, std::nullopt};
}

// True iff every facet normal is a dominant coweight.
inline bool is_outward_positive(const LabeledPolyhedron& p) {
  if (p.ambient != Ambient::Chamber)
    throw std::invalid_argument("outward-positivity is a chamber-relative notion");
  if (p.empty_marker) throw std::invalid_argument("empty set");
  for (const auto& f : p.facets)
    if (!is_dominant_coweight(p.datum, to_rat(f.beta))) return false;
  return true;
}

struct WallViolation {
  std::vector<std::size_t> face_active;     // active set I of the face
  std::vector<std::size_t> wall_vanishing;  // vanishing set S of the chamber face
};

struct UniversalityResult {
  bool holds = false;
  std::optional<Face> nonsimple_face;
  std::optional<WallViolation> wall_violation;
  explicit operator bool() const { return holds; }
};

namespace detail {

// Shared engine for is_universal and the restricted admissibility test: for
// every face P_I and chamber face sigma meeting the region
// P_I /\ sigma /\ extra, the linear part of the affine hull of P_I has to
// contain the pairing-orthogonal complement of sigma.
inline UniversalityResult wall_perpendicularity(const LabeledPolyhedron& p,
                                                const LinearSystem* extra) {
  if (p.ambient != Ambient::Chamber)
    throw std::invalid_argument("wall conditions are chamber-relative");
  SimplicityResult s = is_simple(p);
  if (!s.simple) return {false, std::move(s.violating_face), std::nullopt};
  auto all_faces = faces(p);
  auto walls = chamber_faces(p.datum);
  for (const auto& f : all_faces) {
    for (const auto& w : walls) {
      auto perp = perp_subspace(p.datum, w);
      if (perp.empty()) continue;
      LinearSystem meet = detail::face_system(p, f.active);
      for (auto j : w.vanishing) {
        RatVec row(p.dim(), Rat(0));
        row[j] = 1;
        meet.add(std::move(row), Rat(0), Rel::Eq);
      }
      if (extra)
        for (const auto& r : extra->rows) meet.add(r.a, r.b, r.rel);
      if (!meet.feasible()) continue;
      bool contained = true;
      for (const auto& v : perp) contained = contained && in_span(f.hull_basis, v);
      if (!contained) return {false, std::nullopt, WallViolation{f.active, w.vanishing}};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

}  // namespace detail

// Universality: simple, and every face meets every chamber wall
// perpendicularly (the affine hull absorbs the wall's normal directions).
inline UniversalityResult is_universal(const LabeledPolyhedron& p) {
  return detail::wall_perpendicularity(p, nullptr);
}

// Admissibility conditions (1) and (3): as above, but a wall only matters
// where the face meets it inside the given Kirwan polytope.
inline UniversalityResult admissibility_13(const LabeledPolyhedron& p,
                                           const LabeledPolyhedron& kirwan) {
  if (!p.datum.same_as(kirwan.datum))
    throw std::invalid_argument("admissibility_13: root data differ");
  if (kirwan.ambient != Ambient::Chamber)
    throw std::invalid_argument("admissibility_13: kirwan polytope must be chamber-relative");
  LinearSystem ksys = kirwan.system();
  return detail::wall_perpendicularity(p, &ksys);
}

// ---------------------------------------------------------------------------
// W-invariant extension
// ---------------------------------------------------------------------------

// WP: facet orbit {(w beta_i, xi_i, m_i)}, duplicates merged (labels by gcd),
// facets sorted lexicographically.  Requires outward-positivity; the defining
// property WP /\ chamber = P is verified exactly and enforced.
inline LabeledPolyhedron w_invariant_extension(const LabeledPolyhedron& p) {
  if (p.empty_marker) throw std::invalid_argument("empty set");
  if (!is_outward_positive(p))
    throw std::invalid_argument(
        "w_invariant_extension requires an outward-positive polyhedron");
  std::vector<LabeledFacet> ext;
  for (const auto& f : p.facets)
    for (const auto& w : p.datum.weyl_words) {
      RatVec moved = apply_word_coweight(p.datum, w, to_rat(f.beta));
      IntVec beta(moved.size());
      for (std::size_t i = 0; i < moved.size(); ++i) beta[i] = num(moved[i]);
      ext.push_back({std::move(beta), f.xi, f.label});
    }
  std::sort(ext.begin(), ext.end(), [](const LabeledFacet& a, const LabeledFacet& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.xi < b.xi;
  });
  std::vector<LabeledFacet> merged;
  for (auto& f : ext) {
    if (!merged.empty() && merged.back().beta == f.beta && merged.back().xi == f.xi)
      merged.back().label = gcd_int(merged.back().label, f.label);
    else
      merged.push_back(std::move(f));
  }
  LabeledPolyhedron wp = make_polyhedron(p.datum, Ambient::Full, std::move(merged));

  // defining property: WP restricted to the chamber is exactly P
  LinearSystem restricted = wp.system();
  for (std::size_t i = 0; i < p.datum.simple_count(); ++i) {
    RatVec row(p.dim(), Rat(0));
    row[i] = -1;
    restricted.add(std::move(row), Rat(0), Rel::Le);
  }
  if (!systems_equal(restricted, p.system()))
    throw std::logic_error("w_invariant_extension: extension does not restrict to P");
  return wp;
}

// ---------------------------------------------------------------------------
// Stacky normal fan
// ---------------------------------------------------------------------------

struct StackyFan {
  struct Ray {
    IntVec generator;  // primitive
    Int multiplicity;  // >= 1
  };
  std::vector<Ray> rays;
  std::vector<std::vector<std::size_t>> cones;  // ray index sets, face-closed
};

// Normal fan with multiplicities from the facet labels.  Rays appear in
// first-facet order; cones are the active sets of the nonempty faces
// translated to ray indices (deduplicated, ordered by (size, lex)).  For an
// outward-positive chamber-relative input every ray is checked dominant.
inline StackyFan stacky_normal_fan(const LabeledPolyhedron& p) {
  if (p.empty_marker) throw std::invalid_argument("fan of the empty set");
  StackyFan fan;
  std::vector<std::size_t> ray_of_facet(p.facets.size());
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    IntVec prim = primitive(p.facets[i].beta);
    std::size_t k = fan.rays.size();
    for (std::size_t j = 0; j < fan.rays.size(); ++j)
      if (fan.rays[j].generator == prim) {
        k = j;
        break;
      }
    if (k == fan.rays.size())
      fan.rays.push_back({std::move(prim), p.facets[i].label});
    else
      fan.rays[k].multiplicity = gcd_int(fan.rays[k].multiplicity, p.facets[i].label);
    ray_of_facet[i] = k;
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& f : faces(p)) {
    std::vector<std::size_t> cone;
    for (auto i : f.active) cone.push_back(ray_of_facet[i]);
    std::sort(cone.begin(), cone.end());
    cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
    cones.push_back(std::move(cone));
  }
  std::sort(cones.begin(), cones.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  fan.cones = std::move(cones);

  if (p.ambient == Ambient::Chamber && is_outward_positive(p)) {
    for (const auto& r : fan.rays)
      if (!is_dominant_coweight(p.datum, to_rat(r.generator)))
        throw std::logic_error("stacky fan of an outward-positive set left the cone");
  }
  return fan;
}

// ---------------------------------------------------------------------------
// Intersection
// ---------------------------------------------------------------------------

// Exact intersection: concatenated facets, identical (beta, xi) pairs merged
// with gcd labels, then redundancy elimination (a facet survives iff its
// removal strictly enlarges the set, chamber walls counted).  Lowest-index
// facets win ties.  Empty intersections return the explicit marker.
inline LabeledPolyhedron intersect(const LabeledPolyhedron& p, const LabeledPolyhedron& q) {
  if (!p.datum.same_as(q.datum))
    throw std::invalid_argument("intersect: root data differ");
  if (p.ambient != q.ambient)
    throw std::invalid_argument("intersect: ambient modes differ");
  if (p.empty_marker || q.empty_marker) return empty_polyhedron(p.datum, p.ambient);

  std::vector<LabeledFacet> all = p.facets;
  all.insert(all.end(), q.facets.begin(), q.facets.end());
  // merge duplicates, first occurrence wins the position
  std::vector<LabeledFacet> merged;
  for (auto& f : all) {
    bool dup = false;
    for (auto& m : merged)
      if (m.beta == f.beta && m.xi == f.xi) {
        m.label = gcd_int(m.label, f.label);
        dup = true;
        break;
      }
    if (!dup) merged.push_back(std::move(f));
  }

  LabeledPolyhedron r;
  r.datum = p.datum;
  r.ambient = p.ambient;
  r.facets = std::move(merged);
  if (!r.system().feasible()) return empty_polyhedron(p.datum, p.ambient);

  // drop facets implied by the rest (ascending index, greedy)
  for (std::size_t i = 0; i < r.facets.size();) {
    LabeledPolyhedron rest = r;
    rest.facets.erase(rest.facets.begin() + static_cast<std::ptrdiff_t>(i));
    LpResult up = rest.system().maximize(to_rat(r.facets[i].beta));
    if (up.status == LpStatus::Optimal && up.value <= r.facets[i].xi)
      r.facets.erase(r.facets.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  // re-validate through the checking constructor
  return make_polyhedron(r.datum, r.ambient, std::move(r.facets));
}

// ---------------------------------------------------------------------------
// Projection to a labeled polyhedron
// ---------------------------------------------------------------------------

// Fourier-Motzkin projection of a weak rational system onto the complement of
// `vars`, packaged over the given root datum (whose rank must match the
// number of remaining variables).  Projected facets are primitive with label
// 1; equality rows become opposite facet pairs.
inline LabeledPolyhedron project_to_polyhedron(const LinearSystem& sys,
                                               const std::vector<std::size_t>& vars,
                                               RootDatum rd,
                                               Ambient amb = Ambient::Full) {
  LinearSystem proj = fourier_motzkin_eliminate(sys, vars);
  if (proj.nvars != rd.dim)
    throw std::invalid_argument("projection rank does not match the root datum");
  if (!proj.feasible()) return empty_polyhedron(std::move(rd), amb);
  std::vector<LabeledFacet> facets;
  auto push = [&facets](const RatVec& a, const Rat& b) {
    IntVec beta = primitive(a);  // beta = t * a for the unique t > 0
    std::size_t j = 0;
    while (a[j] == 0) ++j;
    Rat t = Rat(beta[j]) / a[j];
    facets.push_back({std::move(beta), t * b, Int(1)});
  };
  for (const auto& r : proj.rows) {
    bool zero = is_zero(r.a);
    if (zero) continue;  // constant rows: feasibility already established
    if (r.rel == Rel::Le) {
      push(r.a, r.b);
    } else if (r.rel == Rel::Eq) {
      push(r.a, r.b);
      push(negate(r.a), -r.b);
    } else {
      throw std::invalid_argument("strict rows cannot form facets");
    }
  }
  return make_polyhedron(std::move(rd), amb, std::move(facets));
}

// ---------------------------------------------------------------------------
// Delzant test
// ---------------------------------------------------------------------------

namespace detail {

// Vertex set of { rows.a x <= rows.b }: all basic solutions that satisfy the
// system.  Requires boundedness (checked by coordinate support functions).
inline std::vector<RatVec> vertex_set(const LinearSystem& sys) {
  const std::size_t d = sys.nvars;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec c(d, Rat(0));
    c[j] = 1;
    if (sys.maximize(c).status != LpStatus::Optimal)
      throw std::invalid_argument("unbounded polyhedron");
    c[j] = -1;
    if (sys.maximize(c).status != LpStatus::Optimal)
      throw std::invalid_argument("unbounded polyhedron");
  }
  std::vector<RatVec> verts;
  // iterate over all d-subsets of rows
  std::vector<std::size_t> comb;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (comb.size() == d) {
      std::vector<RatVec> rows;
      RatVec rhs;
      for (auto i : comb) {
        rows.push_back(sys.rows[i].a);
        rhs.push_back(sys.rows[i].b);
      }
      RatMat A = RatMat::from_rows(rows);
      if (rank(A) != d) return;
      auto x = solve(A, rhs);
      if (!x || !sys.contains(*x)) return;
      for (const auto& v : verts)
        if (v == *x) return;
      verts.push_back(*x);
      return;
    }
    for (std::size_t i = start; i < sys.rows.size(); ++i) {
      comb.push_back(i);
      rec(i + 1);
      comb.pop_back();
    }
  };
  rec(0);
  std::sort(verts.begin(), verts.end());
  return verts;
}

// Delzant condition at every vertex of a bounded weak system: the tangent
// cone is simplicial and its primitive ray directions form a basis of the
// given lattice (columns of `basis`).
inline bool delzant_on_system(const LinearSystem& sys, const RatMat& basis) {
  const std::size_t d = sys.nvars;
  if (d == 0) return true;
  if (basis.rows() != d || basis.cols() != d || determinant(basis) == 0)
    throw std::invalid_argument("lattice basis must be square and invertible");
  for (const auto& v : vertex_set(sys)) {
    std::vector<RatVec> active;
    for (const auto& r : sys.rows)
      if (dot(r.a, v) == r.b) active.push_back(negate(r.a));
    RationalCone cone = RationalCone::from_inequalities(d, active);
    if (!cone.pointed() || cone.rays().size() != d) return false;  // not simple
    std::vector<RatVec> dirs;
    for (const auto& ray : cone.rays()) {
      auto c = solve(basis, ray);
      if (!c) return false;
      dirs.push_back(to_rat(primitive(*c)));  // primitive in lattice coords
    }
    Rat det = determinant(RatMat::from_rows(dirs));
    if (det != 1 && det != -1) return false;
  }
  return true;
}

}  // namespace detail

// Delzant test for a bounded polyhedron: at every vertex the primitive edge
// directions form a basis of the lattice (default: the standard lattice in
// the ambient coordinates).  Unbounded or empty input is an error.
inline bool is_delzant(const LabeledPolyhedron& p,
                       const std::optional<RatMat>& lattice = std::nullopt) {
  if (p.empty_marker) throw std::invalid_argument("is_delzant of the empty set");
  return detail::delzant_on_system(p.system(),
                                   lattice ? *lattice : RatMat::identity(p.dim()));
}

// H-representation of the convex hull of finitely many points (exact).
inline LinearSystem convex_hull_system(const std::vector<RatVec>& points) {
  if (points.empty()) throw std::invalid_argument("hull of no points");
  const std::size_t d = points[0].size();
  std::vector<RatVec> lifted;
  for (const auto& pt : points) {
    if (pt.size() != d) throw std::invalid_argument("ragged point list");
    RatVec r{Rat(1)};
    r.insert(r.end(), pt.begin(), pt.end());
    lifted.push_back(std::move(r));
  }
  ConeHRep h = dd_inequalities(d + 1, lifted, {});
  LinearSystem sys(d);
  for (const auto& row : h.ineqs) {
    // row = (c0, c): c0 + c.x >= 0  ->  (-c).x <= c0
    RatVec a(row.begin() + 1, row.end());
    sys.add(negate(a), row[0], Rel::Le);
  }
  for (const auto& row : h.eqs) {
    RatVec a(row.begin() + 1, row.end());
    sys.add(std::move(a), -row[0], Rel::Eq);
  }
  return sys;
}

// Delzant test for the convex hull of a finite vertex list.
inline bool is_delzant(const std::vector<RatVec>& vertices,
                       const std::optional<RatMat>& lattice = std::nullopt) {
  LinearSystem hull = convex_hull_system(vertices);
  const std::size_t d = hull.nvars;
  return detail::delzant_on_system(hull, lattice ? *lattice : RatMat::identity(d));
}

// ---------------------------------------------------------------------------
// Eigenvalue strata
// ---------------------------------------------------------------------------

struct WeitsmanStratum {
  std::size_t k = 0;       // number of coordinates pinned to eps
  LinearSystem system;     // over (lambda_1, ..., lambda_n)
};

// The locally closed sets
//   S_k = { lambda_1 >= ... >= lambda_{n-k} > eps,
//           lambda_{n-k+1} = ... = lambda_n = eps },   k = 0..n.
// Their union is the closed set { chain, lambda_n >= eps } and they are
// pairwise disjoint.
inline std::vector<WeitsmanStratum> weitsman_strata(std::size_t n, const Rat& eps) {
  if (n == 0) throw std::invalid_argument("weitsman_strata: n must be positive");
  std::vector<WeitsmanStratum> out;
  for (std::size_t k = 0; k <= n; ++k) {
    LinearSystem sys(n);
    const std::size_t free_count = n - k;
    for (std::size_t i = 0; i + 1 < free_count; ++i) {
      RatVec row(n, Rat(0));
      row[i] = -1;
      row[i + 1] = 1;  // lambda_{i+1} <= lambda_i
      sys.add(std::move(row), Rat(0), Rel::Le);
    }
    if (k < n) {
      RatVec row(n, Rat(0));
      row[free_count - 1] = -1;  // lambda_{n-k} > eps
      sys.add(std::move(row), -eps, Rel::Lt);
    }
    for (std::size_t j = free_count; j < n; ++j) {
      RatVec row(n, Rat(0));
      row[j] = 1;
      sys.add(std::move(row), eps, Rel::Eq);
    }
    out.push_back({k, std::move(sys)});
  }
  return out;
}

// The closure of the k = 0 stratum: { lambda_1 >= ... >= lambda_n >= eps }.
inline LinearSystem weitsman_closure(std::size_t n, const Rat& eps) {
  LinearSystem sys(n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RatVec row(n, Rat(0));
    row[i] = -1;
    row[i + 1] = 1;
    sys.add(std::move(row), Rat(0), Rel::Le);
  }
  RatVec row(n, Rat(0));
  row[n - 1] = -1;
  sys.add(std::move(row), -eps, Rel::Le);
  return sys;
}

}  // namespace symcut
