#pragma once

// Numerical verification suites for the matrix-geometry layer.  Each suite
// runs a number of randomized trials driven by a counter-based generator
// (one independent stream per trial, derived from the suite id and the trial
// index) and returns a report with the seed, the worst residual seen, and a
// pass flag.  Finite differences follow one convention throughout: central
// differences with step h = 1e-4 * (1 + |base point|) and one level of
// Richardson extrapolation.
//
//   * verify_lagrangian_fibers: the fibers k * exp(i u(N)) of the Cartan
//     projection are Lagrangian.  Checked two ways per trial: the mixed
//     partial  d^2/dtds Im Tr(e^{i(lambda + t nu)} e^{i(lambda + s xi)})
//     at 0 vanishes, and omega_E vanishes on pairs of finite-difference
//     fiber tangents.
//   * verify_fiber_is_orbit: for N = 2 and L in {U(2), SU(2)}, the
//     restricted moment map is L-invariant, and a matrix pair related by
//     the action has its group element recovered explicitly - by B A^{-1}
//     for invertible A and by a rank-one Procrustes fit for singular A.
//   * verify_sl2_hamiltonian: on the determinant-zero stratum of M_2(C)
//     the cut function f generates a multiple of the rotation field
//     R(A) = i A: the linear system omega_E(X_f, .) = df(.) in a tangent
//     frame of the stratum has solution X_f = c * R(A) with c constant
//     across trials.  The measured constant is reported; its distance from
//     the reference value 1/2 is informational and does not gate the pass
//     flag (constancy and tangential residual do).

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "symcut/matnum.hpp"
#include "symcut/rng.hpp"

namespace symcut {

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double max_residual = 0.0;
  bool pass = false;
  // verify_sl2_hamiltonian only: measured Hamiltonian constant and its
  // distance from 1/2 (informational).
  double hamiltonian_constant = 0.0;
  double deviation_from_half = 0.0;
};

namespace detail {

inline double fd_step(double base_norm) { return 1e-4 * (1.0 + base_norm); }

// one Richardson level on a quantity computed at steps h and h/2 whose
// leading finite-difference error is O(h^2)
inline double richardson(double at_h, double at_half_h) {
  return (4.0 * at_half_h - at_h) / 3.0;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lagrangian fibers
// ---------------------------------------------------------------------------

inline VerifyReport verify_lagrangian_fibers(int n, int trials,
                                             std::uint64_t seed) {
  if (n < 1 || n > 6) {
    throw std::invalid_argument("verify_lagrangian_fibers: need 1 <= N <= 6");
  }
  if (trials < 1) {
    throw std::invalid_argument("verify_lagrangian_fibers: trials >= 1");
  }
  constexpr std::uint64_t stream = 1;
  VerifyReport report{"lagrangian_fibers", seed, trials, 0.0, true, 0.0, 0.0};

  for (int trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, stream, static_cast<std::uint64_t>(trial));
    CMat lambda = random_anti_hermitian(rng, n, 0.4);
    CMat nu = random_anti_hermitian(rng, n, 0.4);
    CMat xi = random_anti_hermitian(rng, n, 0.4);
    CMat k = random_unitary(rng, n);

    auto value = [&](double t, double s) {
      return ((exp_i(lambda + t * nu) * exp_i(lambda + s * xi)).trace()).imag();
    };
    auto mixed = [&](double h) {
      return (value(h, h) - value(h, -h) - value(-h, h) + value(-h, -h)) /
             (4.0 * h * h);
    };
    double h = detail::fd_step(lambda.norm());
    double d2 = detail::richardson(mixed(h), mixed(h / 2.0));

    CMat base = exp_i(lambda);
    double scale = 1.0 + nu.norm() * xi.norm() * base.squaredNorm();
    double residual = std::abs(d2) / scale;

    // the same statement through tangent vectors: finite-difference the
    // fiber curves t -> k e^{i(lambda + t nu)} and pair them under omega_E
    CMat t_nu = (k * exp_i(lambda + h * nu) - k * exp_i(lambda - h * nu)) /
                (2.0 * h);
    CMat t_xi = (k * exp_i(lambda + h * xi) - k * exp_i(lambda - h * xi)) /
                (2.0 * h);
    double pair_scale = 1.0 + t_nu.norm() * t_xi.norm();
    double pair_residual = std::abs(symplectic_form(t_nu, t_xi)) / pair_scale;

    double worst = std::max(residual, pair_residual);
    report.max_residual = std::max(report.max_residual, worst);
  }
  report.pass = report.max_residual <= 1e-6;
  return report;
}

// ---------------------------------------------------------------------------
// fibers of the restricted moment map are orbits (N = 2)
// ---------------------------------------------------------------------------

inline VerifyReport verify_fiber_is_orbit(int n, AlgebraTag tag, int trials,
                                          std::uint64_t seed) {
  if (n != 2) {
    throw std::invalid_argument("verify_fiber_is_orbit: only N = 2 supported");
  }
  if (trials < 1) {
    throw std::invalid_argument("verify_fiber_is_orbit: trials >= 1");
  }
  constexpr std::uint64_t stream = 2;
  VerifyReport report;
  report.suite = (tag == AlgebraTag::Unitary) ? "fiber_is_orbit_u2"
                                              : "fiber_is_orbit_su2";
  report.seed = seed;
  report.trials = trials;
  report.pass = true;

  auto basis = (tag == AlgebraTag::Unitary) ? u2_basis() : su2_basis();
  auto draw_group = [&](CounterRng& rng) {
    return (tag == AlgebraTag::Unitary) ? random_unitary(rng, 2)
                                        : random_special_unitary(rng, 2);
  };
  auto in_group = [&](const CMat& k, double tol) {
    GroupTag g = (tag == AlgebraTag::Unitary) ? GroupTag::Unitary
                                              : GroupTag::SpecialUnitary;
    return group_member(k, g, tol);
  };

  for (int trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, stream, static_cast<std::uint64_t>(trial));
    CMat k = draw_group(rng);

    // invariance: the restricted moment map does not see the L factor
    CMat a = random_matrix(rng, 2);
    Eigen::VectorXd before = restrict_moment(a, basis);
    Eigen::VectorXd after = restrict_moment(k * a, basis);
    double invariance = (after - before).norm();
    bool ok = invariance <= 1e-10;

    // invertible case: the group element is B A^{-1}
    CMat ai = a;
    for (int redraw = 0; redraw < 64 && std::abs(ai.determinant()) < 0.3;
         ++redraw) {
      ai = random_matrix(rng, 2);
    }
    CMat b = k * ai;
    CMat k_hat = b * ai.inverse();
    double recon = (b - k_hat * ai).norm() / (1.0 + b.norm());
    double membership = (k_hat.adjoint() * k_hat - CMat::Identity(2, 2)).norm();
    if (tag == AlgebraTag::SpecialUnitary) {
      membership =
          std::max(membership, std::abs(k_hat.determinant() - Complex(1.0)));
    }
    ok = ok && recon <= 1e-9 && membership <= 1e-9;

    // rank-one case: recover the group element by Procrustes on B A*
    CMat u(2, 1), v(2, 1);
    u << rng.complex_gaussian(), rng.complex_gaussian();
    v << rng.complex_gaussian(), rng.complex_gaussian();
    u.normalize();
    v.normalize();
    CMat rank1 = (0.5 + rng.uniform()) * (u * v.adjoint());
    CMat b1 = k * rank1;
    Eigen::JacobiSVD<CMat> svd(b1 * rank1.adjoint(),
                               Eigen::ComputeFullU | Eigen::ComputeFullV);
    CMat fit = svd.matrixU() * svd.matrixV().adjoint();
    if (tag == AlgebraTag::SpecialUnitary) {
      // rotate the phase onto the null direction of A* to stay in SU(2)
      CMat d = CMat::Identity(2, 2);
      d(1, 1) = std::conj(fit.determinant());
      fit = svd.matrixU() * d * svd.matrixV().adjoint();
    }
    double rank1_resid = (b1 - fit * rank1).norm() / (1.0 + b1.norm());
    ok = ok && rank1_resid <= 1e-7 && in_group(fit, 1e-9);

    double worst = std::max({invariance, recon, membership, rank1_resid});
    report.max_residual = std::max(report.max_residual, worst);
    report.pass = report.pass && ok;
  }
  return report;
}

// ---------------------------------------------------------------------------
// the SL(2) cut function is Hamiltonian on the singular stratum
// ---------------------------------------------------------------------------

namespace detail {

// real orthonormal basis of M_2(C) as R^8 for Re Tr(X Y*)
inline std::vector<CMat> real_matrix_basis() {
  std::vector<CMat> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CMat e = CMat::Zero(2, 2);
      e(i, j) = 1.0;
      out.push_back(e);
      CMat f = CMat::Zero(2, 2);
      f(i, j) = imag_unit;
      out.push_back(f);
    }
  }
  return out;
}

// adjugate of a 2x2 matrix; d det(A)[E] = Tr(adj(A) E)
inline CMat adjugate2(const CMat& a) {
  CMat out(2, 2);
  out(0, 0) = a(1, 1);
  out(0, 1) = -a(0, 1);
  out(1, 0) = -a(1, 0);
  out(1, 1) = a(0, 0);
  return out;
}

}  // namespace detail

inline VerifyReport verify_sl2_hamiltonian(int trials, std::uint64_t seed) {
  if (trials < 2) {
    throw std::invalid_argument("verify_sl2_hamiltonian: trials >= 2");
  }
  constexpr std::uint64_t stream = 3;
  VerifyReport report{"sl2_hamiltonian", seed, trials, 0.0, true, 0.0, 0.0};

  auto frame_basis = detail::real_matrix_basis();
  std::vector<double> constants;
  constants.reserve(static_cast<std::size_t>(trials));

  for (int trial = 0; trial < trials; ++trial) {
    CounterRng rng(seed, stream, static_cast<std::uint64_t>(trial));
    CMat u(2, 1), v(2, 1);
    u << rng.complex_gaussian(), rng.complex_gaussian();
    v << rng.complex_gaussian(), rng.complex_gaussian();
    u.normalize();
    v.normalize();
    CMat a = (0.7 + 0.8 * rng.uniform()) * (u * v.adjoint());

    // tangent frame of {det = 0} at a: kernel of the real differential of
    // (Re det, Im det), a 2x8 matrix of rank 2 away from a = 0
    CMat adj = detail::adjugate2(a);
    Eigen::MatrixXd jac(2, 8);
    for (int m = 0; m < 8; ++m) {
      Complex d = (adj * frame_basis[static_cast<std::size_t>(m)]).trace();
      jac(0, m) = d.real();
      jac(1, m) = d.imag();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> jsvd(
        jac, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (jsvd.singularValues()(1) <= 1e-8 * jsvd.singularValues()(0)) {
      throw std::logic_error("verify_sl2_hamiltonian: degenerate tangent frame");
    }
    std::vector<CMat> frame;
    for (int m = 2; m < 8; ++m) {
      CMat t = CMat::Zero(2, 2);
      for (int p = 0; p < 8; ++p) {
        t += jsvd.matrixV()(p, m) * frame_basis[static_cast<std::size_t>(p)];
      }
      frame.push_back(t);
    }

    // restricted symplectic form and finite-difference df in the frame
    double h = detail::fd_step(a.norm());
    Eigen::MatrixXd omega(6, 6);
    Eigen::VectorXd grad(6);
    for (int m = 0; m < 6; ++m) {
      for (int p = 0; p < 6; ++p) {
        omega(m, p) = symplectic_form(frame[static_cast<std::size_t>(m)],
                                      frame[static_cast<std::size_t>(p)]);
      }
      auto diff = [&](double step) {
        return (sl2_cut_function(a + step * frame[static_cast<std::size_t>(m)]) -
                sl2_cut_function(a - step * frame[static_cast<std::size_t>(m)])) /
               (2.0 * step);
      };
      grad(m) = detail::richardson(diff(h), diff(h / 2.0));
    }
    // X_f = sum_m c_m T_m with omega(X_f, T_p) = df(T_p), i.e. the transpose
    // of the frame matrix omega(T_m, T_p) acts on the coefficient vector
    Eigen::FullPivLU<Eigen::MatrixXd> lu(omega.transpose());
    if (!lu.isInvertible()) {
      throw std::logic_error(
          "verify_sl2_hamiltonian: restricted symplectic form is degenerate");
    }
    Eigen::VectorXd coeff = lu.solve(grad);
    CMat x_f = CMat::Zero(2, 2);
    for (int m = 0; m < 6; ++m) {
      x_f += coeff(m) * frame[static_cast<std::size_t>(m)];
    }

    // compare against the rotation field R(A) = i A
    CMat rot = imag_unit * a;
    double c = real_metric(x_f, rot) / real_metric(rot, rot);
    double tangential = (x_f - c * rot).norm() / (1.0 + x_f.norm());
    constants.push_back(c);

    // f is invariant along its own Hamiltonian field
    CMat direction = x_f / x_f.norm();
    auto along = [&](double step) {
      return (sl2_cut_function(a + step * direction) -
              sl2_cut_function(a - step * direction)) /
             (2.0 * step);
    };
    double invariance = std::abs(detail::richardson(along(h), along(h / 2.0))) /
                        (1.0 + sl2_cut_function(a));

    report.max_residual =
        std::max({report.max_residual, tangential, invariance});
    report.pass = report.pass && tangential <= 1e-5 && invariance <= 1e-6;
  }

  double mean = 0.0;
  for (double c : constants) mean += c;
  mean /= static_cast<double>(constants.size());
  double var = 0.0;
  for (double c : constants) var += (c - mean) * (c - mean);
  var /= static_cast<double>(constants.size() - 1);
  double cv = std::sqrt(var) / std::max(1e-300, std::abs(mean));

  report.hamiltonian_constant = mean;
  report.deviation_from_half = std::abs(mean - 0.5);
  report.max_residual = std::max(report.max_residual, cv);
  report.pass = report.pass && cv <= 1e-4;
  return report;
}

}  // namespace symcut
