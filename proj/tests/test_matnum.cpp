#include <catch2/catch_amalgamated.hpp>

#include "symcut/matnum.hpp"

#include <cmath>

using namespace symcut;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2026ULL;

CMat diag2(Complex a, Complex b) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// central difference with one Richardson level, matching the library's
// finite-difference convention
double fd_derivative(const std::function<double(double)>& f, double h) {
  auto central = [&](double step) {
    return (f(step) - f(-step)) / (2.0 * step);
  };
  return (4.0 * central(h / 2.0) - central(h)) / 3.0;
}

}  // namespace

TEST_CASE("metric, real metric, and symplectic form") {
  for (int n : {1, 2, 4, 6}) {
    CMat id = CMat::Identity(n, n);
    CHECK(std::abs(metric(id, id) - Complex(n)) < 1e-14);
    CHECK(real_metric(id, id) == Catch::Approx(n));
    CHECK(std::abs(symplectic_form(id, id)) < 1e-14);
  }

  CounterRng rng(kSeed, 100);
  for (int trial = 0; trial < 50; ++trial) {
    CMat a = random_matrix(rng, 3);
    CMat b = random_matrix(rng, 3);
    // antisymmetry and the compatibility omega(X,Y) = Re g(iX, Y)
    CHECK(std::abs(symplectic_form(a, b) + symplectic_form(b, a)) < 1e-12);
    CHECK(std::abs(symplectic_form(a, a)) < 1e-12);
    CHECK(symplectic_form(a, b) ==
          Catch::Approx(real_metric(imag_unit * a, b)).margin(1e-12));
    // sesquilinearity of the metric under the adjoint swap
    CHECK(std::abs(metric(a, b) - std::conj(metric(b, a))) < 1e-12);
  }

  CMat two = CMat::Identity(2, 2);
  CMat three = CMat::Identity(3, 3);
  CHECK_THROWS_AS(metric(two, three), std::invalid_argument);
  CHECK_THROWS_AS(symplectic_form(two, three), std::invalid_argument);
}

TEST_CASE("group and algebra membership tags") {
  CMat id = CMat::Identity(2, 2);
  CHECK(group_member(id, GroupTag::FullMatrixMonoid));
  CHECK(group_member(id, GroupTag::GeneralLinear));
  CHECK(group_member(id, GroupTag::SpecialLinear));
  CHECK(group_member(id, GroupTag::Unitary));
  CHECK(group_member(id, GroupTag::SpecialUnitary));

  CHECK(group_member(diag2(2.0, 1.0), GroupTag::GeneralLinear));
  CHECK_FALSE(group_member(diag2(2.0, 1.0), GroupTag::SpecialLinear));
  CHECK_FALSE(group_member(diag2(2.0, 1.0), GroupTag::Unitary));
  CHECK(group_member(diag2(2.0, 0.5), GroupTag::SpecialLinear));
  CHECK_FALSE(group_member(CMat::Zero(2, 2), GroupTag::GeneralLinear));
  CHECK(group_member(CMat::Zero(2, 2), GroupTag::FullMatrixMonoid));

  CounterRng rng(kSeed, 101);
  for (int trial = 0; trial < 20; ++trial) {
    CMat u = random_unitary(rng, 3);
    CMat su = random_special_unitary(rng, 3);
    CHECK(group_member(u, GroupTag::Unitary));
    CHECK(group_member(su, GroupTag::SpecialUnitary));
    CHECK(group_member(u, GroupTag::GeneralLinear));
  }

  CMat is3 = imag_unit * diag2(1.0, -1.0);  // i sigma_3
  CHECK(algebra_member(is3, AlgebraTag::Unitary));
  CHECK(algebra_member(is3, AlgebraTag::SpecialUnitary));
  CMat ii = imag_unit * CMat::Identity(2, 2);
  CHECK(algebra_member(ii, AlgebraTag::Unitary));
  CHECK_FALSE(algebra_member(ii, AlgebraTag::SpecialUnitary));
  CHECK_FALSE(algebra_member(diag2(1.0, 0.0), AlgebraTag::Unitary));

  MatrixPoint p{diag2(2.0, 0.5), GroupTag::SpecialLinear};
  CHECK(tag_member(p));
  LieAlgebraElement x{ii, AlgebraTag::SpecialUnitary};
  CHECK_FALSE(tag_member(x));
}

TEST_CASE("moment map of the right unitary action") {
  CMat id = CMat::Identity(3, 3);
  CHECK((moment_map_R(id) - imag_unit * id).norm() < 1e-14);
  CHECK(moment_map_R(CMat::Zero(2, 2)).norm() == 0.0);

  CounterRng rng(kSeed, 102);
  for (int trial = 0; trial < 30; ++trial) {
    CMat a = random_matrix(rng, 3);
    CMat mu = moment_map_R(a);
    // lands in u(3), and -i mu is positive semidefinite
    CHECK(algebra_member(mu, AlgebraTag::Unitary, 1e-12));
    Eigen::SelfAdjointEigenSolver<CMat> es(
        ((-imag_unit * mu) + (-imag_unit * mu).adjoint()) / 2.0);
    CHECK(es.eigenvalues().minCoeff() >= -1e-12 * (1.0 + a.squaredNorm()));

    // equivariance under the right action: mu(A u) = u* mu(A) u
    CMat u = random_unitary(rng, 3);
    CHECK((moment_map_R(a * u) - u.adjoint() * mu * u).norm() <=
          1e-12 * (1.0 + a.squaredNorm()));
    // invariance under the left action
    CHECK((moment_map_R(u * a) - mu).norm() <= 1e-12 * (1.0 + a.squaredNorm()));
  }
}

TEST_CASE("moment map components are Hamiltonian with factor two") {
  // For H_xi(A) = <mu(A), xi> = -Tr(i A*A xi) and the action vector field
  // X_xi(A) = -A xi, the exact identity with these conventions is
  //   dH_xi = 2 omega_E(X_xi, .),
  // i.e. twice the normalization used in the usual continuum statement.
  CounterRng rng(kSeed, 103);
  for (int trial = 0; trial < 25; ++trial) {
    CMat a = random_matrix(rng, 3);
    CMat xi = random_anti_hermitian(rng, 3);
    CMat e = random_matrix(rng, 3);

    auto h_along = [&](double t) {
      return algebra_pairing(moment_map_R(a + t * e), xi);
    };
    double h = 1e-4 * (1.0 + a.norm());
    double lhs = fd_derivative(h_along, h);
    double rhs = 2.0 * symplectic_form(-a * xi, e);
    double scale = 1.0 + std::abs(lhs) + std::abs(rhs);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * scale);
  }
}

TEST_CASE("restricted moment map") {
  auto u2 = u2_basis();
  auto su2 = su2_basis();

  // the bases really are orthonormal for -Tr(XY)
  for (std::size_t i = 0; i < u2.size(); ++i) {
    for (std::size_t j = 0; j < u2.size(); ++j) {
      double want = (i == j) ? 1.0 : 0.0;
      CHECK(std::abs(algebra_pairing(u2[i], u2[j]) - want) < 1e-14);
    }
  }

  CounterRng rng(kSeed, 104);
  for (int trial = 0; trial < 30; ++trial) {
    CMat a = random_matrix(rng, 2);
    CMat mu = moment_map_R(a);

    // the full u(2) coefficients reconstruct mu exactly
    Eigen::VectorXd full = restrict_moment(a, u2);
    CMat rebuilt = CMat::Zero(2, 2);
    for (int i = 0; i < 4; ++i) rebuilt += full[i] * u2[static_cast<std::size_t>(i)];
    CHECK((rebuilt - mu).norm() <= 1e-12 * (1.0 + a.squaredNorm()));

    // the su(2) coefficients reconstruct the traceless projector applied to mu
    Eigen::VectorXd part = restrict_moment(a, su2);
    CMat proj = mu - (mu.trace() / 2.0) * CMat::Identity(2, 2);
    CMat rebuilt_part = CMat::Zero(2, 2);
    for (int i = 0; i < 3; ++i) {
      rebuilt_part += part[i] * su2[static_cast<std::size_t>(i)];
    }
    CHECK((rebuilt_part - proj).norm() <= 1e-12 * (1.0 + a.squaredNorm()));

    // unitary points have central moment value: the su(2) part vanishes
    CMat u = random_unitary(rng, 2);
    CHECK(restrict_moment(u, su2).norm() <= 1e-12);
  }

  // non-orthonormal bases are rejected
  std::vector<CMat> bad = {2.0 * u2[0], u2[1]};
  CHECK_THROWS_AS(restrict_moment(CMat::Identity(2, 2), bad),
                  std::invalid_argument);
  std::vector<CMat> not_anti = {CMat::Identity(2, 2)};
  CHECK_THROWS_AS(restrict_moment(CMat::Identity(2, 2), not_anti),
                  std::invalid_argument);
}

TEST_CASE("polar decomposition") {
  CounterRng rng(kSeed, 105);

  // unitary input: positive factor is the identity
  for (int trial = 0; trial < 10; ++trial) {
    CMat u = random_unitary(rng, 3);
    auto [w, p] = polar_decompose(u);
    CHECK((p - CMat::Identity(3, 3)).norm() < 1e-12);
    CHECK((w - u).norm() < 1e-12);
  }

  // Hermitian PSD input: unitary factor is the identity
  CMat psd = diag2(3.0, 0.5);
  auto [w0, p0] = polar_decompose(psd);
  CHECK((w0 - CMat::Identity(2, 2)).norm() < 1e-12);
  CHECK((p0 - psd).norm() < 1e-12);

  // generic input: reconstruction, unitarity, and P = sqrt(A*A)
  for (int trial = 0; trial < 30; ++trial) {
    CMat a = random_matrix(rng, 4);
    auto [w, p] = polar_decompose(a);
    CHECK((a - w * p).norm() <= 1e-10 * (1.0 + a.norm()));
    CHECK(group_member(w, GroupTag::Unitary, 1e-10));
    CHECK((p - p.adjoint()).norm() <= 1e-12 * (1.0 + a.norm()));
    CMat sq = detail::hermitian_function(
        a.adjoint() * a, [](double t) { return std::sqrt(std::max(0.0, t)); });
    CHECK((p - sq).norm() <= 1e-10 * (1.0 + a.norm()));
  }

  // rank-deficient input still decomposes
  CMat e11 = diag2(1.0, 0.0);
  auto [w1, p1] = polar_decompose(e11);
  CHECK((e11 - w1 * p1).norm() < 1e-12);
  CHECK(group_member(w1, GroupTag::Unitary, 1e-12));
}

TEST_CASE("section of the moment map") {
  CMat id2 = CMat::Identity(2, 2);
  CHECK((section_s(imag_unit * id2) - id2).norm() < 1e-14);
  CHECK(section_s(CMat::Zero(3, 3)).norm() < 1e-14);

  CounterRng rng(kSeed, 106);
  for (int trial = 0; trial < 30; ++trial) {
    CMat a = random_matrix(rng, 3);
    CMat mu = moment_map_R(a);

    // mu o section_s is the identity on the image
    CMat s = section_s(mu);
    CHECK((moment_map_R(s) - mu).norm() <= 1e-8 * (1.0 + mu.norm()));

    // section_s o mu is the positive polar factor
    CHECK((s - polar_decompose(a).positive).norm() <= 1e-8 * (1.0 + a.norm()));

    // the section output is Hermitian PSD (trivial unitary factor)
    CHECK((s - s.adjoint()).norm() <= 1e-12 * (1.0 + s.norm()));
  }

  // negative directions are outside the moment image
  CHECK_THROWS_AS(section_s(-imag_unit * id2), std::runtime_error);
  CHECK_THROWS_AS(section_s(imag_unit * diag2(1.0, -0.5)), std::runtime_error);
  // non-anti-Hermitian input is a usage error
  CHECK_THROWS_AS(section_s(diag2(1.0, 1.0)), std::invalid_argument);
}

TEST_CASE("Cartan decomposition") {
  // diag(a, 1/a): unitary factor is the identity and exp(i lambda) = g
  double a = 2.0;
  CMat g = diag2(a, 1.0 / a);
  auto dec = cartan_decompose(g);
  CHECK((dec.k - CMat::Identity(2, 2)).norm() < 1e-12);
  CHECK((exp_i(dec.lambda) - g).norm() < 1e-12);
  CHECK(algebra_member(dec.lambda, AlgebraTag::Unitary, 1e-12));

  CounterRng rng(kSeed, 107);
  for (int trial = 0; trial < 30; ++trial) {
    CMat m = random_matrix(rng, 3);
    if (std::abs(m.determinant()) < 0.2) continue;

    auto d = cartan_decompose(m);
    CMat pos = exp_i(d.lambda);
    // reconstruction and factor structure
    CHECK((m - d.k * pos).norm() <= 1e-9 * (1.0 + m.norm()));
    CHECK(group_member(d.k, GroupTag::Unitary, 1e-9));
    CHECK(algebra_member(d.lambda, AlgebraTag::Unitary, 1e-9));
    // agreement with the polar decomposition
    auto p = polar_decompose(m);
    CHECK((pos - p.positive).norm() <= 1e-9 * (1.0 + m.norm()));
    CHECK((d.k - p.unitary).norm() <= 1e-9 * (1.0 + m.norm()));
    // the positive factor has positive determinant (phase normalization)
    Complex det = pos.determinant();
    CHECK(det.real() > 0.0);
    CHECK(std::abs(det.imag()) <= 1e-10 * std::abs(det));

    // equivariance: g -> k1 g k2* maps (k, lambda) to (k1 k k2*, k2 lambda k2*)
    CMat k1 = random_unitary(rng, 3);
    CMat k2 = random_unitary(rng, 3);
    auto moved = cartan_decompose(k1 * m * k2.adjoint());
    CHECK((moved.k - k1 * d.k * k2.adjoint()).norm() <=
          1e-9 * (1.0 + m.norm()));
    CHECK((moved.lambda - k2 * d.lambda * k2.adjoint()).norm() <=
          1e-9 * (1.0 + m.norm()));
  }

  // unitary input: lambda = 0
  CMat u = random_unitary(rng, 3);
  auto du = cartan_decompose(u);
  CHECK(du.lambda.norm() < 1e-12);
  CHECK((du.k - u).norm() < 1e-12);

  // special linear input keeps both factors special
  CMat sl = diag2(Complex(0.0, 2.0), Complex(0.0, -0.5));  // det = 1
  auto dsl = cartan_decompose(sl);
  CHECK(std::abs(dsl.k.determinant() - Complex(1.0)) < 1e-12);
  CHECK(std::abs(exp_i(dsl.lambda).determinant() - Complex(1.0)) < 1e-12);

  // singular input is rejected
  CHECK_THROWS_AS(cartan_decompose(diag2(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("sl(2) cut function") {
  CHECK(sl2_cut_function(CMat::Identity(2, 2)) == Catch::Approx(0.0).margin(1e-14));
  CHECK(sl2_cut_function(CMat::Zero(2, 2)) == Catch::Approx(0.0).margin(1e-14));

  // diag(a, 1/a) -> (a^2 - a^-2) / 2
  for (double a : {2.0, 3.0, 1.5}) {
    CMat g = diag2(a, 1.0 / a);
    double want = (a * a - 1.0 / (a * a)) / 2.0;
    CHECK(sl2_cut_function(g) == Catch::Approx(want).epsilon(1e-12));
  }

  CounterRng rng(kSeed, 108);
  for (int trial = 0; trial < 30; ++trial) {
    CMat m = random_matrix(rng, 2);
    double f = sl2_cut_function(m);
    CHECK(f >= 0.0);

    // depends only on singular values: invariant under both unitary sides
    CMat u = random_unitary(rng, 2);
    CMat v = random_unitary(rng, 2);
    CHECK(sl2_cut_function(u * m * v) ==
          Catch::Approx(f).margin(1e-12 * (1.0 + std::pow(m.norm(), 2))));

    // equals half the spread of the squared singular values
    Eigen::JacobiSVD<CMat> svd(m);
    double s1 = svd.singularValues()(0);
    double s2 = svd.singularValues()(1);
    CHECK(f == Catch::Approx((s1 * s1 - s2 * s2) / 2.0).margin(1e-10));
  }

  // unitary matrices sit on the zero level
  CMat u = random_unitary(rng, 2);
  CHECK(sl2_cut_function(u) == Catch::Approx(0.0).margin(1e-12));

  CHECK_THROWS_AS(sl2_cut_function(CMat::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("subalgebra sections") {
  // su(2): the zero coefficient vector maps to the identity
  Eigen::VectorXd zero3 = Eigen::VectorXd::Zero(3);
  CHECK((section_s_L(zero3, AlgebraTag::SpecialUnitary) -
         CMat::Identity(2, 2)).norm() < 1e-14);

  // u(2): the coefficients of i*Id map to the identity
  Eigen::VectorXd xi0(4);
  xi0 << std::sqrt(2.0), 0.0, 0.0, 0.0;
  CHECK((section_s_L(xi0, AlgebraTag::Unitary) - CMat::Identity(2, 2)).norm() <
        1e-12);

  auto su2 = su2_basis();
  auto u2 = u2_basis();
  CounterRng rng(kSeed, 109);
  for (int trial = 0; trial < 25; ++trial) {
    // su(2): round trip through the restricted moment map, determinant-one
    // positive slice
    Eigen::VectorXd x(3);
    x << 2.0 * rng.gaussian(), 2.0 * rng.gaussian(), 2.0 * rng.gaussian();
    CMat s = section_s_L(x, AlgebraTag::SpecialUnitary);
    CHECK((restrict_moment(s, su2) - x).norm() <= 1e-7 * (1.0 + x.norm()));
    CHECK((s - s.adjoint()).norm() <= 1e-12 * (1.0 + s.norm()));
    CHECK(std::abs(s.determinant() - Complex(1.0)) <= 1e-10 * (1.0 + s.norm()));
    Eigen::SelfAdjointEigenSolver<CMat> es(s);
    CHECK(es.eigenvalues().minCoeff() > 0.0);

    // u(2): the restriction is the identity, so the section agrees with
    // section_s of the reconstructed algebra element
    CMat a = random_matrix(rng, 2);
    Eigen::VectorXd y = restrict_moment(a, u2);
    CMat t = section_s_L(y, AlgebraTag::Unitary);
    CHECK((restrict_moment(t, u2) - y).norm() <= 1e-7 * (1.0 + y.norm()));
    CHECK((t - polar_decompose(a).positive).norm() <= 1e-8 * (1.0 + a.norm()));
  }

  // u(2) coefficient vectors outside the image cone are rejected
  Eigen::VectorXd bad(4);
  bad << -std::sqrt(2.0), 0.0, 0.0, 0.0;
  CHECK_THROWS_AS(section_s_L(bad, AlgebraTag::Unitary), std::runtime_error);

  // coefficient count is validated
  CHECK_THROWS_AS(section_s_L(zero3, AlgebraTag::Unitary),
                  std::invalid_argument);
  CHECK_THROWS_AS(section_s_L(xi0, AlgebraTag::SpecialUnitary),
                  std::invalid_argument);
}

TEST_CASE("top stratum chart") {
  auto u2 = u2_basis();
  auto su2 = su2_basis();

  // base point: k = I, gamma = 0, xi = 0 gives the zero matrix
  CHECK(t_top(CMat::Identity(2, 2), 0.0, 0.0).norm() < 1e-14);

  CounterRng rng(kSeed, 110);
  for (int trial = 0; trial < 25; ++trial) {
    double gamma = 2.0 * rng.uniform();
    double xi = gamma + 0.1 + 2.0 * rng.uniform();
    CMat k = random_unitary(rng, 2);
    CMat t = t_top(k, gamma, xi);

    // the u(1) level and the dominant su(2)* value are recovered
    double level = algebra_pairing(moment_map_R(t), u2[0]);
    CHECK(level == Catch::Approx(xi).margin(1e-7 * (1.0 + xi)));
    double dominant = restrict_moment(t, su2).norm();
    CHECK(dominant == Catch::Approx(gamma).margin(1e-7 * (1.0 + gamma)));

    // the dominant value is sqrt(2) times the cut function
    CHECK(dominant == Catch::Approx(std::sqrt(2.0) * sl2_cut_function(t))
                          .margin(1e-8 * (1.0 + gamma)));

    // moment values do not depend on k
    CMat t0 = t_top(CMat::Identity(2, 2), gamma, xi);
    CHECK((moment_map_R(t) - moment_map_R(t0)).norm() <=
          1e-10 * (1.0 + xi * xi));

    // the k factor is recovered up to the stabilizer: same positive factor
    CHECK((polar_decompose(t).positive - polar_decompose(t0).positive).norm() <=
          1e-10 * (1.0 + xi));
  }

  // distinct interior parameters give distinct positive factors
  CMat p1 = polar_decompose(t_top(CMat::Identity(2, 2), 0.5, 2.0)).positive;
  CMat p2 = polar_decompose(t_top(CMat::Identity(2, 2), 0.7, 2.0)).positive;
  CHECK((p1 - p2).norm() > 1e-3);

  // outside the image cone (xi < gamma) and bad arguments are rejected
  CHECK_THROWS_AS(t_top(CMat::Identity(2, 2), 2.0, 1.0), std::runtime_error);
  CHECK_THROWS_AS(t_top(CMat::Identity(2, 2), -1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(t_top(2.0 * CMat::Identity(2, 2), 0.5, 1.0),
                  std::invalid_argument);
}

TEST_CASE("counter rng determinism") {
  CounterRng a(7, 1, 2);
  CounterRng b(7, 1, 2);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  // different trial substreams decorrelate immediately
  CounterRng c(7, 1, 3);
  CounterRng d(7, 1, 2);
  bool all_equal = true;
  for (int i = 0; i < 16; ++i) all_equal = all_equal && (c.next_u64() == d.next_u64());
  CHECK_FALSE(all_equal);

  CounterRng g(kSeed, 200);
  double mean = 0.0, second = 0.0;
  const int samples = 4000;
  for (int i = 0; i < samples; ++i) {
    double z = g.gaussian();
    mean += z;
    second += z * z;
  }
  mean /= samples;
  second /= samples;
  CHECK(std::abs(mean) < 0.1);
  CHECK(second == Catch::Approx(1.0).margin(0.1));

  for (int i = 0; i < 100; ++i) {
    double u = g.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
