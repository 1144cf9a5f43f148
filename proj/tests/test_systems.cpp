#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "legwork/lg.hpp"
#include "legwork/systems.hpp"

using namespace legwork;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("dimensions and level ladders") {
  CHECK(system_dim(SystemKind::qubit) == 2);
  CHECK(system_dim(SystemKind::qutrit) == 3);

  const EnergyLevels qubit = system_levels(SystemKind::qubit);
  CHECK(qubit.vec()(0) == 0.0);
  CHECK(qubit.vec()(1) == 1.0);

  const EnergyLevels qutrit = system_levels(SystemKind::qutrit);
  CHECK(qutrit.vec()(0) == 0.0);
  CHECK(qutrit.vec()(1) == 0.5);
  CHECK(qutrit.vec()(2) == 1.0);
}

TEST_CASE("qubit rotation hand values") {
  CHECK(max_abs_diff(qubit_unitary(0.0).mat(), ComplexMatrix::Identity(2, 2)) ==
        0.0);

  // theta = pi maps e0 -> e1 and e1 -> -e0.
  ComplexMatrix flip(2, 2);
  flip << 0.0, -1.0, 1.0, 0.0;
  CHECK(max_abs_diff(qubit_unitary(kPi).mat(), flip) < 1e-15);

  const ComplexMatrix half = qubit_unitary(kPi / 2.0).mat();
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(half(0, 0).real() - r) < 1e-15);
  CHECK(std::abs(half(1, 0).real() - r) < 1e-15);
  CHECK(std::abs(half(0, 1).real() + r) < 1e-15);
}

TEST_CASE("qutrit rotation hand values") {
  CHECK(max_abs_diff(qutrit_unitary(0.0).mat(), ComplexMatrix::Identity(3, 3)) ==
        0.0);

  // theta = pi reverses the ladder up to a sign on the middle level.
  ComplexMatrix rev(3, 3);
  rev << 0.0, 0.0, 1.0,
         0.0, -1.0, 0.0,
         1.0, 0.0, 0.0;
  CHECK(max_abs_diff(qutrit_unitary(kPi).mat(), rev) < 1e-15);
}

TEST_CASE("rotations compose additively") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = angle(eng);
    const double b = angle(eng);
    CHECK(max_abs_diff(qubit_unitary(a).mat() * qubit_unitary(b).mat(),
                       qubit_unitary(a + b).mat()) < 1e-13);
    CHECK(max_abs_diff(qutrit_unitary(a).mat() * qutrit_unitary(b).mat(),
                       qutrit_unitary(a + b).mat()) < 1e-13);
  }
}

TEST_CASE("rotations are unitary and doubly stochastic in modulus") {
  std::mt19937_64 eng(12);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  for (int trial = 0; trial < 200; ++trial) {
    const double theta = angle(eng);
    for (const UnitaryMatrix& u : {qubit_unitary(theta), qutrit_unitary(theta)}) {
      const Eigen::Index d = u.dim();
      CHECK((u.mat().adjoint() * u.mat() - ComplexMatrix::Identity(d, d))
                .cwiseAbs()
                .maxCoeff() < 1e-14);
      const Eigen::MatrixXd t = transition_matrix(u).mat();
      for (Eigen::Index i = 0; i < d; ++i) {
        CHECK(std::abs(t.row(i).sum() - 1.0) < 1e-13);
        CHECK(std::abs(t.col(i).sum() - 1.0) < 1e-13);
      }
    }
  }
}

TEST_CASE("make_protocol wiring") {
  const SystemFamily fam{SystemKind::qubit, 0.3, 1.0};
  const ProtocolSpec spec = make_protocol(fam);
  CHECK(spec.beta == 1.0);
  CHECK(spec.dim() == 2);
  // Same ladder at all three times, same rotation for both segments.
  CHECK((spec.levels0.vec() - spec.levels2.vec()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(max_abs_diff(spec.u10.mat(), spec.u21.mat()) == 0.0);

  const ProbVector p0 = gibbs_distribution(spec.levels0, spec.beta);
  CHECK(p0[0] == doctest::Approx(0.7310585786300049).epsilon(1e-14));
}

TEST_CASE("zero angle carries no signal") {
  for (const SystemKind kind : {SystemKind::qubit, SystemKind::qutrit}) {
    const LGReport rep =
        lg_report(make_protocol({kind, 0.0, 1.0}), EntropicOrder(2.0));
    CHECK(std::abs(rep.c_alpha) < 1e-14);
  }
}

TEST_CASE("system names round-trip") {
  CHECK(to_string(SystemKind::qubit) == "qubit");
  CHECK(to_string(SystemKind::qutrit) == "qutrit");
  CHECK(system_from_string("qubit") == SystemKind::qubit);
  CHECK(system_from_string("qutrit") == SystemKind::qutrit);
  CHECK_FALSE(system_from_string("qudit").has_value());
}
