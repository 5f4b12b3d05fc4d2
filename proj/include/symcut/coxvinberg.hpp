#pragma once

// Lattice and cone constructions behind the cutting spaces: the Delzant/Cox
// exact sequence of a toric fan (kernel lattice, surjectivity, cokernel), the
// moment image of the associated torus quotient as an exact projection, the
// Vinberg cone Q_G and its beta-extension Q_{G,beta}, the abelianization cone
// spanned by the simple roots, the extension criterion for the monoid map
// phi_beta, the character lattice of the doubled torus, and the Kirwan-cut
// operation on moment polytopes.

#include <optional>
#include <utility>

#include "symcut/polyhedra.hpp"
#include "symcut/smith.hpp"

namespace symcut {

// Integer matrix of a lattice map Z^n -> Z^r (columns are the images of the
// standard basis vectors) together with its Smith factorization.
struct LatticeMap {
  IntMat matrix;          // r x n
  SmithNormalForm smith;  // U * matrix * V = D
};

inline LatticeMap make_lattice_map(const std::vector<IntVec>& columns, std::size_t target_rank) {
  IntMat m(target_rank, IntVec(columns.size(), Int(0)));
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i].size() != target_rank)
      throw std::invalid_argument("lattice map column has wrong rank");
    for (std::size_t j = 0; j < target_rank; ++j) m[j][i] = columns[i][j];
  }
  return {m, smith_normal_form(m)};
}

// ---------------------------------------------------------------------------
// Delzant / Cox sequence
// ---------------------------------------------------------------------------

// Data of the sequence 0 -> L -> Z^n -> Z^r, e_i |-> beta_i.
struct DelzantSequence {
  LatticeMap map;
  std::vector<IntVec> kernel_basis;     // basis of L = ker(Z^n -> Z^r)
  bool exact_on_right = false;          // surjective after tensoring with Q
  std::vector<Int> cokernel_invariants; // Smith divisors != 1 (torsion part)
  std::size_t cokernel_free_rank = 0;   // r - rank (nonzero iff not exact)
};

inline DelzantSequence delzant_sequence(const std::vector<IntVec>& betas) {
  if (betas.empty()) throw std::invalid_argument("delzant_sequence: no vectors");
  const std::size_t r = betas[0].size();
  DelzantSequence seq;
  seq.map = make_lattice_map(betas, r);
  seq.kernel_basis = integer_kernel_basis(seq.map.smith);
  seq.exact_on_right = (seq.map.smith.rank == r);
  for (const auto& d : seq.map.smith.divisors())
    if (d != 1) seq.cokernel_invariants.push_back(d);
  seq.cokernel_free_rank = r - seq.map.smith.rank;
  return seq;
}

// Moment image of the toric quotient determined by (beta, xi): the exact
// projection of { (s, h) : s_j >= 0, s_j + <beta_j, h> = xi_j } onto the h
// block.  Equals { h : <beta_j, h> <= xi_j } as a set.
inline LabeledPolyhedron delzant_moment_image(const std::vector<IntVec>& betas,
                                              const RatVec& xi) {
  if (betas.empty()) throw std::invalid_argument("delzant_moment_image: no vectors");
  if (betas.size() != xi.size())
    throw std::invalid_argument("delzant_moment_image: xi has wrong length");
  const std::size_t n = betas.size();
  const std::size_t r = betas[0].size();
  LinearSystem sys(n + r);
  for (std::size_t j = 0; j < n; ++j) {
    RatVec row(n + r, Rat(0));
    row[j] = -1;  // s_j >= 0
    sys.add(std::move(row), Rat(0), Rel::Le);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (betas[j].size() != r)
      throw std::invalid_argument("delzant_moment_image: ragged beta list");
    RatVec row(n + r, Rat(0));
    row[j] = 1;
    for (std::size_t k = 0; k < r; ++k) row[n + k] = Rat(betas[j][k]);
    sys.add(std::move(row), xi[j], Rel::Eq);
  }
  std::vector<std::size_t> svars(n);
  for (std::size_t j = 0; j < n; ++j) svars[j] = j;
  return project_to_polyhedron(sys, svars, torus_datum(r), Ambient::Full);
}

// ---------------------------------------------------------------------------
// Vinberg cones
// ---------------------------------------------------------------------------

// Q_G = { (x, x + sum m_i alpha_i) : x dominant, m_i >= 0 } in t* + t*,
// generated by the diagonal fundamental weights and the roots in the second
// block.
inline RationalCone vinberg_cone(const RootDatum& rd) {
  const std::size_t d = rd.dim;
  std::vector<RatVec> rays;
  std::vector<RatVec> lines;
  for (std::size_t j = 0; j < d; ++j) {
    RatVec g(2 * d, Rat(0));
    g[j] = 1;
    g[d + j] = 1;
    if (j < rd.simple_count())
      rays.push_back(std::move(g));  // (w_j, w_j)
    else
      lines.push_back(std::move(g));  // torus directions are unconstrained
  }
  for (std::size_t i = 0; i < rd.simple_count(); ++i) {
    RatVec g(2 * d, Rat(0));
    RatVec alpha = simple_root(rd, i);
    for (std::size_t k = 0; k < d; ++k) g[d + k] = alpha[k];
    rays.push_back(std::move(g));  // (0, alpha_i)
  }
  return RationalCone::from_generators(2 * d, std::move(rays), std::move(lines));
}

// Q_{G,beta} = { (x, y) : x dominant, y_i >= <beta_i, x> } in t* + Q^n.
inline RationalCone extended_cone(const RootDatum& rd, const std::vector<IntVec>& betas) {
  const std::size_t d = rd.dim;
  const std::size_t n = betas.size();
  std::vector<RatVec> ineqs;
  for (std::size_t j = 0; j < rd.simple_count(); ++j) {
    RatVec row(d + n, Rat(0));
    row[j] = 1;
    ineqs.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (betas[i].size() != d)
      throw std::invalid_argument("extended_cone: beta has wrong rank");
    RatVec row(d + n, Rat(0));
    for (std::size_t k = 0; k < d; ++k) row[k] = -Rat(betas[i][k]);
    row[d + i] = 1;
    ineqs.push_back(std::move(row));
  }
  return RationalCone::from_inequalities(d + n, std::move(ineqs));
}

// Slice of the extended cone at fixed second-block values xi, projected back
// to t*: { x dominant : <beta_i, x> <= xi_i }.
inline LinearSystem extended_cone_slice(const RootDatum& rd,
                                        const std::vector<IntVec>& betas,
                                        const RatVec& xi) {
  if (betas.size() != xi.size())
    throw std::invalid_argument("extended_cone_slice: xi has wrong length");
  RationalCone cone = extended_cone(rd, betas);
  const std::size_t d = rd.dim;
  const std::size_t n = betas.size();
  LinearSystem sys(d + n);
  for (const auto& a : cone.inequalities()) sys.add(negate(a), Rat(0), Rel::Le);
  for (const auto& e : cone.equalities()) sys.add(e, Rat(0), Rel::Eq);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(d + n, Rat(0));
    row[d + i] = 1;
    sys.add(std::move(row), xi[i], Rel::Eq);
  }
  std::vector<std::size_t> yvars(n);
  for (std::size_t i = 0; i < n; ++i) yvars[i] = d + i;
  return fourier_motzkin_eliminate(sys, yvars);
}

// Cone spanned by the simple roots.  The relevant torus has character lattice
// equal to the root lattice itself, in which the alpha_i are a basis by
// construction, so the associated affine toric variety is smooth; the flag
// re-derives this instead of hard-coding it.
struct AbelianizationCone {
  RationalCone cone;
  bool smooth = false;
};

inline AbelianizationCone abelianization_cone(const RootDatum& rd) {
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < rd.simple_count(); ++i) gens.push_back(simple_root(rd, i));
  if (gens.empty())
    return {RationalCone::from_generators(rd.dim, {}), true};
  RationalCone cone = RationalCone::from_generators(rd.dim, gens);
  // smooth iff the generators are a basis of the lattice they span: the
  // coefficient matrix of the alpha_i over that lattice is unimodular, which
  // via Smith reduces to all invariant factors of [alpha_1 ... alpha_s],
  // taken in root-lattice coordinates, being 1.  In those coordinates the
  // matrix is the identity; equivalently the alpha_i are linearly
  // independent, which we check.
  bool smooth = linearly_independent(gens);
  return {std::move(cone), smooth};
}

// Extension criterion for phi_beta: the monoid map extends iff every beta_i
// pairs nonnegatively with every simple root, i.e. each beta_i is dominant.
struct PhiBetaResult {
  bool extends = false;
  // violating (beta index, simple root index) when it does not extend
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  explicit operator bool() const { return extends; }
};

inline PhiBetaResult phi_beta_extends(const RootDatum& rd, const std::vector<IntVec>& betas) {
  for (std::size_t i = 0; i < betas.size(); ++i) {
    RatVec pairings = root_pairings(rd, to_rat(betas[i]));
    for (std::size_t j = 0; j < pairings.size(); ++j)
      if (pairings[j] < 0) return {false, std::make_pair(i, j)};
  }
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Vinberg lattice
// ---------------------------------------------------------------------------

// Character lattice of the doubled torus: pairs of weights (x, y) with
// x - y in the root lattice.
struct VinbergLattice {
  RootDatum datum;
  RatMat root_columns;  // columns are the simple roots (weight coordinates)
};

inline VinbergLattice vinberg_lattice(RootDatum rd) {
  const std::size_t s = rd.simple_count();
  RatMat cols(rd.dim, s);
  for (std::size_t i = 0; i < s; ++i) {
    RatVec alpha = simple_root(rd, i);
    for (std::size_t k = 0; k < rd.dim; ++k) cols(k, i) = alpha[k];
  }
  return {std::move(rd), std::move(cols)};
}

// Membership test: x - y = sum n_i alpha_i with integer n_i.
inline bool vinberg_lattice_member(const VinbergLattice& vl, const RatVec& x,
                                   const RatVec& y) {
  if (x.size() != vl.datum.dim || y.size() != vl.datum.dim)
    throw std::invalid_argument("vinberg_lattice_member: wrong dimension");
  RatVec diff = x - y;
  if (vl.datum.simple_count() == 0) return is_zero(diff);
  auto n = solve(vl.root_columns, diff);
  if (!n) return false;
  for (const auto& c : *n)
    if (den(c) != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Kirwan cut
// ---------------------------------------------------------------------------

// Moment-polytope shadow of the cut: the intersection, plus the verdict of
// the restricted admissibility test of P against the Kirwan polytope.  A
// failed test does not block the intersection; callers surface the flag.
struct KirwanCut {
  LabeledPolyhedron polytope;
  UniversalityResult admissibility;
  bool admissible = false;
};

inline KirwanCut kirwan_cut(const LabeledPolyhedron& kirwan, const LabeledPolyhedron& p) {
  UniversalityResult adm = admissibility_13(p, kirwan);
  LabeledPolyhedron cut = intersect(kirwan, p);
  bool ok = adm.holds;
  return {std::move(cut), std::move(adm), ok};
}

}  // namespace symcut
