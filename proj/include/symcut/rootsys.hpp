#pragma once

// Root systems for the supported compact groups, in exact rational
// arithmetic.
//
// Coordinate conventions (used by every module downstream):
//   * Vectors of t* are stored in the fundamental-weight basis, so a weight x
//     has <x, alpha_i^vee> = x[i] and dominance is a coordinate sign check.
//     Simple root alpha_i is then row i of the Cartan matrix,
//     cartan(i,j) = <alpha_i, alpha_j^vee>.
//   * Vectors of t (coweights, facet normals) are stored in the simple-coroot
//     basis, so <beta, x> is the plain dot product of coordinate vectors and
//     integral coordinates mean membership in the coroot lattice.  Dominance
//     of beta is the sign check of C.beta.
//   * The W-invariant pairing on t* is normalized so long roots have squared
//     length 2 in each simple factor; its Gram matrix in the weight basis is
//     C^{-1}.diag(d_i) with d_i = (alpha_i, alpha_i)/2.
//
// Weyl group elements are words in simple reflections (0-based indices); the
// word [i1, i2, ..., ik] acts as s_{i1} after s_{i2} after ... s_{ik}.  The
// enumeration below assigns each element its canonical word: shortest, then
// lexicographically smallest.
//
// A rank-r torus datum (no roots, trivial Weyl group, identity pairing) is
// provided for lattice-level operations that do not involve a chamber.

#include <algorithm>
#include <cctype>
#include <map>

#include "symcut/linalg.hpp"

namespace symcut {

struct RootDatum {
  std::string name;
  std::size_t dim = 0;            // ambient coordinate dimension of t*
  RatMat cartan;                  // s x s with s = dim (semisimple) or 0 (torus)
  RatVec half_lengths;            // d_i = (alpha_i, alpha_i)/2
  RatMat pairing;                 // Gram matrix of the weight basis
  std::vector<int> longest_word;  // canonical word for the longest element
  std::vector<std::vector<int>> weyl_words;  // all elements, (length, lex) order

  std::size_t rank() const { return dim; }
  std::size_t simple_count() const { return cartan.rows(); }
  bool is_torus() const { return simple_count() == 0 && dim > 0; }
  std::size_t weyl_order() const { return weyl_words.size(); }

  bool same_as(const RootDatum& o) const {
    return name == o.name && dim == o.dim && cartan == o.cartan &&
           half_lengths == o.half_lengths;
  }
};

inline RatVec simple_root(const RootDatum& rd, std::size_t i) {
  if (i >= rd.simple_count()) throw std::invalid_argument("simple root index");
  return rd.cartan.row(i);
}

// alpha_i^vee in the coroot basis is the i-th standard vector.
inline RatVec simple_coroot(const RootDatum& rd, std::size_t i) {
  if (i >= rd.simple_count()) throw std::invalid_argument("coroot index");
  RatVec e(rd.dim, Rat(0));
  e[i] = 1;
  return e;
}

inline RatVec fundamental_weight(const RootDatum& rd, std::size_t i) {
  if (i >= rd.dim) throw std::invalid_argument("fundamental weight index");
  RatVec e(rd.dim, Rat(0));
  e[i] = 1;
  return e;
}

// <alpha_i, beta> for all i at once: the Cartan matrix applied to beta.
inline RatVec root_pairings(const RootDatum& rd, const RatVec& beta) {
  return rd.cartan.apply(beta);
}

inline Rat weight_coweight_pairing(const RatVec& beta, const RatVec& x) {
  return dot(beta, x);
}

inline Rat invariant_pairing(const RootDatum& rd, const RatVec& x, const RatVec& y) {
  return dot(x, rd.pairing.apply(y));
}

inline RatVec reflect_weight(const RootDatum& rd, std::size_t i, const RatVec& x) {
  if (x.size() != rd.dim) throw std::invalid_argument("weight size mismatch");
  RatVec r = x;
  const Rat c = x[i];
  if (c == 0) return r;
  for (std::size_t j = 0; j < rd.dim; ++j) r[j] -= c * rd.cartan(i, j);
  return r;
}

inline RatVec reflect_coweight(const RootDatum& rd, std::size_t i, const RatVec& b) {
  if (b.size() != rd.dim) throw std::invalid_argument("coweight size mismatch");
  RatVec r = b;
  Rat c = 0;
  for (std::size_t j = 0; j < rd.dim; ++j) c += rd.cartan(i, j) * b[j];
  r[i] -= c;
  return r;
}

inline RatVec apply_word(const RootDatum& rd, const std::vector<int>& word,
                         const RatVec& x) {
  RatVec y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    y = reflect_weight(rd, static_cast<std::size_t>(*it), y);
  return y;
}

inline RatVec apply_word_coweight(const RootDatum& rd, const std::vector<int>& word,
                                  const RatVec& b) {
  RatVec y = b;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    y = reflect_coweight(rd, static_cast<std::size_t>(*it), y);
  return y;
}

inline bool is_dominant_weight(const RootDatum& rd, const RatVec& x) {
  if (x.size() != rd.dim) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < rd.simple_count(); ++i)
    if (x[i] < 0) return false;
  return true;
}

inline bool is_dominant_coweight(const RootDatum& rd, const RatVec& b) {
  RatVec p = root_pairings(rd, b);
  for (const auto& v : p)
    if (v < 0) return false;
  return true;
}

// closed=false tests the open chamber (all simple pairings strictly positive).
inline bool in_chamber(const RootDatum& rd, const RatVec& x, bool closed = true) {
  if (x.size() != rd.dim) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < rd.simple_count(); ++i) {
    if (closed ? x[i] < 0 : x[i] <= 0) return false;
  }
  return true;
}

struct DominantRepresentative {
  RatVec representative;  // the unique dominant point of the orbit
  std::vector<int> word;  // word w with w.x = representative
};

inline DominantRepresentative dominant_representative(const RootDatum& rd,
                                                      const RatVec& x) {
  RatVec y = x;
  std::vector<int> picks;
  for (;;) {
    std::size_t i = 0;
    while (i < rd.simple_count() && y[i] >= 0) ++i;
    if (i == rd.simple_count()) break;
    y = reflect_weight(rd, i, y);
    picks.push_back(static_cast<int>(i));
    if (picks.size() > 10000)
      throw std::runtime_error("dominant_representative failed to terminate");
  }
  std::reverse(picks.begin(), picks.end());
  return {std::move(y), std::move(picks)};
}

// Full orbit W.x, sorted lexicographically (deterministic).
inline std::vector<RatVec> weyl_orbit(const RootDatum& rd, const RatVec& x) {
  std::map<RatVec, bool> seen;
  std::vector<RatVec> frontier{x};
  seen[x] = true;
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const auto& p : frontier)
      for (std::size_t i = 0; i < rd.simple_count(); ++i) {
        RatVec q = reflect_weight(rd, i, p);
        if (seen.emplace(q, true).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<RatVec> orbit;
  orbit.reserve(seen.size());
  for (auto& kv : seen) orbit.push_back(kv.first);
  return orbit;
}

// tau(x) = -w0(x); an involution of the closed chamber.
inline RatVec tau(const RootDatum& rd, const RatVec& x) {
  return negate(apply_word(rd, rd.longest_word, x));
}

// A face of the closed chamber: the vanishing set S of simple-root pairings.
struct ChamberFace {
  std::vector<std::size_t> vanishing;  // sorted indices i with x_i = 0
};

inline std::vector<ChamberFace> chamber_faces(const RootDatum& rd) {
  const std::size_t s = rd.simple_count();
  std::vector<ChamberFace> faces;
  faces.reserve(std::size_t(1) << s);
  for (std::size_t mask = 0; mask < (std::size_t(1) << s); ++mask) {
    ChamberFace f;
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (std::size_t(1) << i)) f.vanishing.push_back(i);
    faces.push_back(std::move(f));
  }
  std::sort(faces.begin(), faces.end(), [](const ChamberFace& a, const ChamberFace& b) {
    if (a.vanishing.size() != b.vanishing.size())
      return a.vanishing.size() < b.vanishing.size();
    return a.vanishing < b.vanishing;
  });
  return faces;
}

// Basis of the linear span of the face (the span of the fundamental weights
// whose index is not in the vanishing set).
inline std::vector<RatVec> face_span(const RootDatum& rd, const ChamberFace& f) {
  std::vector<bool> vanish(rd.dim, false);
  for (auto i : f.vanishing) vanish[i] = true;
  std::vector<RatVec> basis;
  for (std::size_t i = 0; i < rd.dim; ++i)
    if (!vanish[i]) basis.push_back(fundamental_weight(rd, i));
  return basis;
}

// Exact basis of the orthogonal complement of span(face) under the invariant
// pairing: { y : (y, w_i) = 0 for all i outside the vanishing set }.
inline std::vector<RatVec> perp_subspace(const RootDatum& rd, const ChamberFace& f) {
  std::vector<bool> vanish(rd.dim, false);
  for (auto i : f.vanishing) vanish[i] = true;
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < rd.dim; ++i)
    if (!vanish[i]) rows.push_back(rd.pairing.row(i));
  if (rows.empty()) {
    std::vector<RatVec> all;
    for (std::size_t i = 0; i < rd.dim; ++i) all.push_back(fundamental_weight(rd, i));
    return all;
  }
  return nullspace(RatMat::from_rows(rows));
}

namespace detail {

inline void enumerate_weyl(RootDatum& rd) {
  rd.weyl_words.clear();
  const std::size_t s = rd.simple_count();
  RatVec rho(rd.dim, Rat(0));
  for (std::size_t i = 0; i < s; ++i) rho[i] = 1;
  std::map<RatVec, std::size_t> seen;
  seen[rho] = 0;
  rd.weyl_words.push_back({});
  std::vector<std::pair<RatVec, std::vector<int>>> level{{rho, {}}};
  while (!level.empty()) {
    std::vector<std::pair<RatVec, std::vector<int>>> next;
    for (std::size_t i = 0; i < s; ++i)
      for (const auto& [img, word] : level) {
        RatVec q = reflect_weight(rd, i, img);
        if (seen.count(q)) continue;
        std::vector<int> w;
        w.reserve(word.size() + 1);
        w.push_back(static_cast<int>(i));
        w.insert(w.end(), word.begin(), word.end());
        seen[q] = rd.weyl_words.size();
        rd.weyl_words.push_back(w);
        next.emplace_back(std::move(q), std::move(w));
        if (rd.weyl_words.size() > 50000)
          throw std::invalid_argument("Weyl group too large or not finite");
      }
    level = std::move(next);
  }
  rd.longest_word = rd.weyl_words.back();
}

inline RatMat diag(const RatVec& d) {
  RatMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

}  // namespace detail

// Builds a datum from explicit Cartan data: integer Cartan matrix with
// diagonal 2 and nonpositive off-diagonal entries, symmetrizable by the given
// positive d_i.  Finiteness of the Weyl group is required (enumeration cap).
inline RootDatum build_root_datum_from_cartan(const std::string& name, RatMat cartan,
                                              RatVec half_lengths) {
  const std::size_t s = cartan.rows();
  if (cartan.cols() != s || half_lengths.size() != s)
    throw std::invalid_argument("Cartan data with inconsistent dimensions");
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const Rat& c = cartan(i, j);
      if (den(c) != 1) throw std::invalid_argument("Cartan entries must be integers");
      if (i == j && c != 2) throw std::invalid_argument("Cartan diagonal must be 2");
      if (i != j && c > 0)
        throw std::invalid_argument("Cartan off-diagonal entries must be <= 0");
      if (i != j && ((c == 0) != (cartan(j, i) == 0)))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
    }
  for (std::size_t i = 0; i < s; ++i) {
    if (half_lengths[i] <= 0) throw std::invalid_argument("half lengths must be positive");
    for (std::size_t j = 0; j < s; ++j)
      if (cartan(i, j) * half_lengths[j] != cartan(j, i) * half_lengths[i])
        throw std::invalid_argument("Cartan matrix not symmetrizable by given lengths");
  }
  RootDatum rd;
  rd.name = name;
  rd.dim = s;
  rd.cartan = std::move(cartan);
  rd.half_lengths = std::move(half_lengths);
  rd.pairing = inverse(rd.cartan) * detail::diag(rd.half_lengths);
  detail::enumerate_weyl(rd);
  return rd;
}

inline RootDatum torus_datum(std::size_t r) {
  if (r == 0) throw std::invalid_argument("torus rank must be positive");
  RootDatum rd;
  rd.name = "T" + std::to_string(r);
  rd.dim = r;
  rd.cartan = RatMat(0, 0);
  rd.pairing = RatMat::identity(r);
  rd.weyl_words.push_back({});
  return rd;
}

inline RootDatum product(const RootDatum& a, const RootDatum& b) {
  if (a.is_torus() || b.is_torus())
    throw std::invalid_argument("products with torus factors are not supported");
  RootDatum rd;
  rd.name = a.name + "x" + b.name;
  rd.dim = a.dim + b.dim;
  rd.cartan = RatMat(rd.dim, rd.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) rd.cartan(i, j) = a.cartan(i, j);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      rd.cartan(a.dim + i, a.dim + j) = b.cartan(i, j);
  rd.half_lengths = a.half_lengths;
  rd.half_lengths.insert(rd.half_lengths.end(), b.half_lengths.begin(),
                         b.half_lengths.end());
  rd.pairing = inverse(rd.cartan) * detail::diag(rd.half_lengths);
  detail::enumerate_weyl(rd);
  return rd;
}

// Supported names: A1, A2, A3, B2, C2, G2 and x-products of total rank <= 3
// (e.g. "A1xA1", "A1xB2").  Case-insensitive; whitespace around factors ok.
inline RootDatum build_root_datum(const std::string& type_name) {
  auto build_factor = [](std::string t) -> RootDatum {
    for (auto& ch : t) ch = static_cast<char>(std::toupper(ch));
    if (t == "A1")
      return build_root_datum_from_cartan("A1", RatMat{{2}}, {Rat(1)});
    if (t == "A2")
      return build_root_datum_from_cartan("A2", RatMat{{2, -1}, {-1, 2}},
                                          {Rat(1), Rat(1)});
    if (t == "A3")
      return build_root_datum_from_cartan(
          "A3", RatMat{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {Rat(1), Rat(1), Rat(1)});
    if (t == "B2")
      return build_root_datum_from_cartan("B2", RatMat{{2, -2}, {-1, 2}},
                                          {Rat(1), Rat(1, 2)});
    if (t == "C2")
      return build_root_datum_from_cartan("C2", RatMat{{2, -1}, {-2, 2}},
                                          {Rat(1, 2), Rat(1)});
    if (t == "G2")
      return build_root_datum_from_cartan("G2", RatMat{{2, -1}, {-3, 2}},
                                          {Rat(1, 3), Rat(1)});
    throw std::invalid_argument("unsupported Cartan type: " + t);
  };
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : type_name) {
    if (ch == 'x' || ch == 'X') {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.empty() || parts[0].empty())
    throw std::invalid_argument("unsupported Cartan type: " + type_name);
  RootDatum rd = build_factor(parts[0]);
  for (std::size_t k = 1; k < parts.size(); ++k) rd = product(rd, build_factor(parts[k]));
  if (rd.dim > 3)
    throw std::invalid_argument("unsupported Cartan type: total rank exceeds 3");
  return rd;
}

}  // namespace symcut
