#pragma once

// Floating-point matrix geometry on M_N(C), the unitary groups that act on
// it, and the decompositions used by the symplectic-cut construction:
//
//   * Euclidean metric  g_E(A,B) = Tr(A B*), its real part, and the
//     symplectic form  omega_E(A,B) = -Im Tr(A B*);
//   * moment map of the right U(N) action  mu(A) = i A* A, and its
//     restriction to a subalgebra given by an orthonormal basis;
//   * polar and Cartan (KAK-free, g = k e^{i lambda}) decompositions;
//   * the moment-map section  s(B) = sqrt(-i B)  on the image cone, its
//     subalgebra variants for u(2) and su(2), and the cut chart t_top;
//   * the SL(2) cut function  f(A) = sqrt(-det(A*A - 1/2 Tr(A*A) I)).
//
// Everything is dense Eigen over std::complex<double>; all Hermitian
// functional calculus goes through SelfAdjointEigenSolver so structure is
// exact by construction.  Tolerances follow one convention: validation
// thresholds scale with the Frobenius norm of the input plus one.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcut/rng.hpp"

namespace symcut {

using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr Complex imag_unit{0.0, 1.0};

// ---------------------------------------------------------------------------
// group / algebra membership tags
// ---------------------------------------------------------------------------

enum class GroupTag {
  FullMatrixMonoid,  // all of M_N(C)
  GeneralLinear,
  SpecialLinear,
  Unitary,
  SpecialUnitary,
};

enum class AlgebraTag {
  Unitary,         // u(N): anti-Hermitian
  SpecialUnitary,  // su(N): anti-Hermitian traceless
};

// A group element together with the group it is asserted to live in.
struct MatrixPoint {
  CMat entries;
  GroupTag tag = GroupTag::FullMatrixMonoid;
};

// A Lie algebra element together with its algebra.
struct LieAlgebraElement {
  CMat entries;
  AlgebraTag tag = AlgebraTag::Unitary;
};

inline bool group_member(const CMat& a, GroupTag tag, double tol = 1e-10) {
  if (a.rows() != a.cols()) return false;
  const auto n = a.rows();
  double scale = 1.0 + a.norm();
  switch (tag) {
    case GroupTag::FullMatrixMonoid:
      return true;
    case GroupTag::GeneralLinear:
      return std::abs(a.determinant()) > tol * scale;
    case GroupTag::SpecialLinear:
      return std::abs(a.determinant() - 1.0) <= tol * scale;
    case GroupTag::Unitary:
      return (a.adjoint() * a - CMat::Identity(n, n)).norm() <= tol * scale;
    case GroupTag::SpecialUnitary:
      return (a.adjoint() * a - CMat::Identity(n, n)).norm() <= tol * scale &&
             std::abs(a.determinant() - 1.0) <= tol * scale;
  }
  return false;
}

inline bool algebra_member(const CMat& x, AlgebraTag tag, double tol = 1e-10) {
  if (x.rows() != x.cols()) return false;
  double scale = 1.0 + x.norm();
  bool anti = (x + x.adjoint()).norm() <= tol * scale;
  if (tag == AlgebraTag::Unitary) return anti;
  return anti && std::abs(x.trace()) <= tol * scale;
}

inline bool tag_member(const MatrixPoint& p, double tol = 1e-10) {
  return group_member(p.entries, p.tag, tol);
}

inline bool tag_member(const LieAlgebraElement& x, double tol = 1e-10) {
  return algebra_member(x.entries, x.tag, tol);
}

// ---------------------------------------------------------------------------
// metric and symplectic form
// ---------------------------------------------------------------------------

namespace detail {

inline void require_same_shape(const CMat& a, const CMat& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " vs " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()) + ")");
  }
}

inline void require_square(const CMat& a, const char* op) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(op) + ": matrix must be square");
  }
}

}  // namespace detail

// Hermitian inner product g_E(A,B) = Tr(A B*).
inline Complex metric(const CMat& a, const CMat& b) {
  detail::require_same_shape(a, b, "metric");
  return (a * b.adjoint()).trace();
}

// Riemannian metric: the real part of g_E.
inline double real_metric(const CMat& a, const CMat& b) {
  return metric(a, b).real();
}

// Symplectic form omega_E(A,B) = -Im Tr(A B*) = -Im g_E(A,B).
inline double symplectic_form(const CMat& a, const CMat& b) {
  return -metric(a, b).imag();
}

// ---------------------------------------------------------------------------
// Hermitian functional calculus
// ---------------------------------------------------------------------------

namespace detail {

inline void require_hermitian(const CMat& h, const char* op, double tol = 1e-8) {
  require_square(h, op);
  if ((h - h.adjoint()).norm() > tol * (1.0 + h.norm())) {
    throw std::invalid_argument(std::string(op) + ": matrix is not Hermitian");
  }
}

// f applied to the eigenvalues of a Hermitian matrix.
inline CMat hermitian_function(const CMat& h,
                               const std::function<double(double)>& f) {
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  Eigen::VectorXd vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) vals[i] = f(vals[i]);
  return es.eigenvectors() * vals.asDiagonal() *
         es.eigenvectors().adjoint();
}

inline CMat hermitian_exp(const CMat& h) {
  return hermitian_function(h, [](double t) { return std::exp(t); });
}

}  // namespace detail

// exp(i X) for anti-Hermitian X: the exponent i X is Hermitian, so the
// result is computed through an exact eigendecomposition and is Hermitian
// positive definite by construction.
inline CMat exp_i(const CMat& x) {
  CMat h = imag_unit * x;
  detail::require_hermitian(h, "exp_i");
  return detail::hermitian_exp((h + h.adjoint()) / 2.0);
}

// ---------------------------------------------------------------------------
// moment map and restriction
// ---------------------------------------------------------------------------

// Moment map of the right U(N) action on (M_N(C), omega_E), valued in u(N)
// via the pairing <X,Y> = -Tr(XY):  mu(A) = i A* A.
inline CMat moment_map_R(const CMat& a) {
  detail::require_square(a, "moment_map_R");
  return imag_unit * (a.adjoint() * a);
}

// Duality pairing on u(N): <X,Y> = -Tr(XY), real for anti-Hermitian X, Y.
inline double algebra_pairing(const CMat& x, const CMat& y) {
  detail::require_same_shape(x, y, "algebra_pairing");
  return -(x * y).trace().real();
}

// Coefficients of mu(A) against an orthonormal basis of a subalgebra of
// u(N).  Orthonormality is with respect to <X,Y> = -Tr(XY) and is validated.
inline Eigen::VectorXd restrict_moment(const CMat& a,
                                       const std::vector<CMat>& basis) {
  CMat mu = moment_map_R(a);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!algebra_member(basis[i], AlgebraTag::Unitary, 1e-10)) {
      throw std::invalid_argument(
          "restrict_moment: basis element is not anti-Hermitian");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(algebra_pairing(basis[i], basis[j]) - want) > 1e-10) {
        throw std::invalid_argument(
            "restrict_moment: basis is not orthonormal for -Tr(XY)");
      }
    }
  }
  Eigen::VectorXd out(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] = algebra_pairing(mu, basis[i]);
  }
  return out;
}

// Orthonormal basis of u(2) for -Tr(XY):  (i/sqrt2) I, (i/sqrt2) sigma_j.
inline std::vector<CMat> u2_basis() {
  constexpr double c = 0.70710678118654752440;  // 1/sqrt(2)
  CMat id = CMat::Identity(2, 2);
  CMat s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -imag_unit, imag_unit, 0;
  s3 << 1, 0, 0, -1;
  return {imag_unit * c * id, imag_unit * c * s1, imag_unit * c * s2,
          imag_unit * c * s3};
}

// Orthonormal basis of su(2): the traceless part of the u(2) basis.
inline std::vector<CMat> su2_basis() {
  auto full = u2_basis();
  return {full[1], full[2], full[3]};
}

// ---------------------------------------------------------------------------
// polar and Cartan decompositions
// ---------------------------------------------------------------------------

struct PolarDecomposition {
  CMat unitary;    // U
  CMat positive;   // P Hermitian PSD, A = U P
};

// A = U P via SVD; valid for singular A as well (U is then one choice).
inline PolarDecomposition polar_decompose(const CMat& a) {
  detail::require_square(a, "polar_decompose");
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CMat u = svd.matrixU() * svd.matrixV().adjoint();
  CMat p = svd.matrixV() * svd.singularValues().asDiagonal() *
           svd.matrixV().adjoint();
  return {u, p};
}

struct CartanDecomposition {
  CMat k;       // unitary factor
  CMat lambda;  // anti-Hermitian, g = k exp(i lambda), exp(i lambda) > 0
};

// g = k e^{i lambda} with lambda = -(i/2) log(g* g).  Requires invertible g;
// the positive factor e^{i lambda} always has positive determinant, which
// fixes the phase for special-linear inputs.
inline CartanDecomposition cartan_decompose(const CMat& g) {
  detail::require_square(g, "cartan_decompose");
  CMat m = g.adjoint() * g;
  Eigen::SelfAdjointEigenSolver<CMat> es(m);
  Eigen::VectorXd vals = es.eigenvalues();
  double scale = 1.0 + m.norm();
  if (vals.minCoeff() <= 1e-12 * scale) {
    throw std::invalid_argument(
        "cartan_decompose: input is singular (or nearly so)");
  }
  Eigen::VectorXd logv(vals.size()), isqrt(vals.size());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    logv[i] = std::log(vals[i]);
    isqrt[i] = 1.0 / std::sqrt(vals[i]);
  }
  const CMat& v = es.eigenvectors();
  CMat logm = v * logv.asDiagonal() * v.adjoint();
  CMat inv_sqrt = v * isqrt.asDiagonal() * v.adjoint();
  CartanDecomposition out;
  out.lambda = Complex(0.0, -0.5) * logm;
  out.k = g * inv_sqrt;
  return out;
}

// ---------------------------------------------------------------------------
// moment-map sections
// ---------------------------------------------------------------------------

// Section of mu over its image: s(B) = sqrt(-i B), defined for anti-Hermitian
// B with -i B positive semidefinite.  mu(s(B)) = B and s(mu(A)) is the polar
// positive factor of A.  Eigenvalues of -i B in [-1e-10 * (1 + |B|), 0) are
// treated as roundoff and clamped to zero; anything lower is outside the
// moment image.
inline CMat section_s(const CMat& b) {
  detail::require_square(b, "section_s");
  double scale = 1.0 + b.norm();
  if ((b + b.adjoint()).norm() > 1e-8 * scale) {
    throw std::invalid_argument("section_s: input is not anti-Hermitian");
  }
  CMat h = -imag_unit * b;
  Eigen::SelfAdjointEigenSolver<CMat> es((h + h.adjoint()) / 2.0);
  Eigen::VectorXd vals = es.eigenvalues();
  if (vals.minCoeff() < -1e-10 * scale) {
    throw std::runtime_error("section_s: value outside the moment image");
  }
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    vals[i] = std::sqrt(std::max(0.0, vals[i]));
  }
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

// Section of the restricted moment map for L = U(2) or SU(2), taking the
// coefficient vector of a point of l* in the orthonormal basis (u2_basis or
// su2_basis) and returning a matrix with trivial unitary polar factor.
//
// For u(2) the restriction is the identity on u(2)*, so the section is
// section_s of the reconstructed matrix.  For su(2) the section lands in the
// determinant-one positive slice: S = exp(G) with G = sum_j h_j sigma_j
// Hermitian traceless, where h solves  sqrt(2) sinh(2|h|) h/|h| = x.  The
// radial equation is solved by a damped Newton iteration (<= 100 steps).
inline CMat section_s_L(const Eigen::VectorXd& x, AlgebraTag tag) {
  if (tag == AlgebraTag::Unitary) {
    if (x.size() != 4) {
      throw std::invalid_argument("section_s_L: u(2) expects 4 coefficients");
    }
    auto basis = u2_basis();
    CMat b = CMat::Zero(2, 2);
    for (int i = 0; i < 4; ++i) b += x[i] * basis[i];
    return section_s(b);
  }
  if (x.size() != 3) {
    throw std::invalid_argument("section_s_L: su(2) expects 3 coefficients");
  }
  double r = x.norm();
  if (r == 0.0) return CMat::Identity(2, 2);

  // solve sqrt(2) sinh(2t) = r for t >= 0
  double t = 0.5 * std::asinh(r);  // starting guess, exact up to scaling
  auto val = [&](double s) { return std::sqrt(2.0) * std::sinh(2.0 * s) - r; };
  bool converged = false;
  for (int iter = 0; iter < 100; ++iter) {
    double f = val(t);
    if (std::abs(f) <= 1e-13 * (1.0 + r)) {
      converged = true;
      break;
    }
    double df = 2.0 * std::sqrt(2.0) * std::cosh(2.0 * t);
    double step = f / df;
    double next = t - step;
    for (int halving = 0; halving < 50 && std::abs(val(next)) > std::abs(f);
         ++halving) {
      step *= 0.5;
      next = t - step;
    }
    t = next;
  }
  if (!converged) {
    throw std::runtime_error("section_s_L: Newton iteration did not converge");
  }

  CMat s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -imag_unit, imag_unit, 0;
  s3 << 1, 0, 0, -1;
  CMat g = (t / r) * (x[0] * s1 + x[1] * s2 + x[2] * s3);
  return detail::hermitian_exp(g);
}

// Chart for the top stratum of the SL(2) cut: (k, gamma, xi) with k unitary,
// gamma >= 0 the dominant su(2)* value and xi the u(1) level, mapped to
// k * s(B) where -i B = diag((xi + gamma)/sqrt2, (xi - gamma)/sqrt2).  The
// moment values of the result recover (gamma, xi) and do not depend on k.
inline CMat t_top(const CMat& k, double gamma, double xi) {
  if (k.rows() != 2 || k.cols() != 2) {
    throw std::invalid_argument("t_top: k must be 2x2");
  }
  if (!group_member(k, GroupTag::Unitary, 1e-8)) {
    throw std::invalid_argument("t_top: k must be unitary");
  }
  if (gamma < 0.0) {
    throw std::invalid_argument("t_top: gamma must be nonnegative");
  }
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  CMat b = CMat::Zero(2, 2);
  b(0, 0) = imag_unit * ((xi + gamma) * inv_sqrt2);
  b(1, 1) = imag_unit * ((xi - gamma) * inv_sqrt2);
  return k * section_s(b);
}

// ---------------------------------------------------------------------------
// SL(2) cut function
// ---------------------------------------------------------------------------

// f(A) = sqrt(-det(A*A - 1/2 Tr(A*A) I)) on M_2(C).  The argument of the
// square root is (sigma1^2 - sigma2^2)^2 / 4 >= 0 in exact arithmetic; small
// negative values from roundoff are clamped after an internal sanity check.
inline double sl2_cut_function(const CMat& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw std::invalid_argument("sl2_cut_function: matrix must be 2x2");
  }
  CMat m = a.adjoint() * a;
  CMat t = m - 0.5 * m.trace() * CMat::Identity(2, 2);
  Complex det = t(0, 0) * t(1, 1) - t(0, 1) * t(1, 0);
  double scale = 1.0 + std::pow(static_cast<double>(a.norm()), 4);
  double val = -det.real();
  if (val < -1e-12 * scale || std::abs(det.imag()) > 1e-12 * scale) {
    throw std::logic_error("sl2_cut_function: discriminant not nonnegative");
  }
  return std::sqrt(std::max(0.0, val));
}

// ---------------------------------------------------------------------------
// random elements (for verification trials)
// ---------------------------------------------------------------------------

inline CMat random_matrix(CounterRng& rng, int n, double sigma = 1.0) {
  CMat a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = sigma * rng.complex_gaussian();
  }
  return a;
}

inline CMat random_anti_hermitian(CounterRng& rng, int n, double sigma = 1.0) {
  CMat a = random_matrix(rng, n, sigma);
  return (a - a.adjoint()) / 2.0;
}

inline CMat random_traceless_anti_hermitian(CounterRng& rng, int n,
                                            double sigma = 1.0) {
  CMat a = random_anti_hermitian(rng, n, sigma);
  return a - (a.trace() / static_cast<double>(n)) * CMat::Identity(n, n);
}

// Haar-ish unitary: QR of a complex Gaussian with the R-diagonal phase fix.
inline CMat random_unitary(CounterRng& rng, int n) {
  CMat a = random_matrix(rng, n);
  Eigen::HouseholderQR<CMat> qr(a);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    double mag = std::abs(d);
    Complex phase = (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

inline CMat random_special_unitary(CounterRng& rng, int n) {
  CMat u = random_unitary(rng, n);
  Complex det = u.determinant();
  double theta = std::arg(det);
  Complex corr = std::exp(Complex(0.0, -theta / static_cast<double>(n)));
  return corr * u;
}

}  // namespace symcut
