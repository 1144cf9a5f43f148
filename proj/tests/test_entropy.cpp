#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "legwork/entropy.hpp"
#include "legwork/hidden_variable.hpp"
#include "support/oracles.hpp"

using namespace legwork;

namespace {

ProbVector pv(std::initializer_list<double> vals) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  Eigen::Index i = 0;
  for (double x : vals) v(i++) = x;
  return ProbVector(std::move(v));
}

JointTable jt22(double a, double b, double c, double d) {
  Eigen::MatrixXd m(2, 2);
  m << a, b, c, d;
  return JointTable(std::move(m));
}

}  // namespace

TEST_CASE("entropic order validation") {
  CHECK_THROWS_AS(EntropicOrder(0.0), std::invalid_argument);
  CHECK_THROWS_AS(EntropicOrder(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(EntropicOrder(std::nan("")), std::invalid_argument);
  CHECK(EntropicOrder(1.0).is_shannon());
  CHECK(EntropicOrder(1.0 + 0.5e-9).is_shannon());
  CHECK_FALSE(EntropicOrder(1.0 + 2e-9).is_shannon());
  CHECK_FALSE(EntropicOrder(2.0).is_shannon());
}

TEST_CASE("alpha_log hand values") {
  CHECK(alpha_log(1.0, EntropicOrder(1.0)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(alpha_log(1.0, EntropicOrder(3.7)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(alpha_log(std::exp(1.0), EntropicOrder(1.0)) ==
        doctest::Approx(1.0).epsilon(1e-15));
  // (2^-1 - 1)/(1 - 2) = 0.5
  CHECK(alpha_log(2.0, EntropicOrder(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(alpha_log(0.0, EntropicOrder(2.0)), std::domain_error);
  CHECK_THROWS_AS(alpha_log(-1.0, EntropicOrder(1.0)), std::domain_error);
}

TEST_CASE("probability container validation") {
  CHECK_THROWS_AS(ProbVector(Eigen::VectorXd::Zero(0)), std::invalid_argument);
  CHECK_THROWS_AS(pv({0.5, 0.6}), std::invalid_argument);   // sums to 1.1
  CHECK_THROWS_AS(pv({1.1, -0.1}), std::invalid_argument);  // genuine negative

  // Tiny negative dust is clipped to zero; tiny normalization slack passes.
  ProbVector dusty = pv({1.0 + 5e-13, -5e-13});
  CHECK(dusty[1] == 0.0);
  Eigen::VectorXd off(2);
  off << 0.5, 0.5 + 0.9e-9;
  CHECK_NOTHROW(ProbVector{off});
  off(1) = 0.5 + 2e-9;
  CHECK_THROWS_AS(ProbVector{off}, std::invalid_argument);

  CHECK(ProbVector::uniform(4)[2] == doctest::Approx(0.25).epsilon(1e-16));
  CHECK(ProbVector::point_mass(3, 1)[1] == 1.0);
  CHECK_THROWS_AS(ProbVector::point_mass(3, 3), std::invalid_argument);
}

TEST_CASE("tsallis entropy hand values and limits") {
  for (double alpha : {1.0, 0.5, 2.0, 7.0}) {
    const EntropicOrder order(alpha);
    CHECK(tsallis_entropy(ProbVector::point_mass(5, 2), order) == 0.0);
    CHECK(tsallis_entropy(ProbVector::uniform(4), order) ==
          doctest::Approx(alpha_log(4.0, order)).epsilon(1e-14));
  }
  // (4/16 - 1)/(1 - 2) = 0.75
  CHECK(tsallis_entropy(ProbVector::uniform(4), EntropicOrder(2.0)) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK(tsallis_entropy(pv({0.5, 0.5}), EntropicOrder(1.0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("joint entropy basics") {
  const ProbVector p = pv({0.3, 0.7});
  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
  diag(0, 0) = 0.3;
  diag(1, 1) = 0.7;
  for (double alpha : {1.0, 2.0, 0.7}) {
    const EntropicOrder order(alpha);
    CHECK(joint_entropy(JointTable(diag), order) ==
          doctest::Approx(tsallis_entropy(p, order)).epsilon(1e-15));
  }
  CHECK(joint_entropy(jt22(0.25, 0.25, 0.25, 0.25), EntropicOrder(2.0)) ==
        doctest::Approx(0.75).epsilon(1e-15));

  // Shannon additivity on a product table.
  const ProbVector q = pv({0.2, 0.8});
  const JointTable prod = JointTable::from_product(p, q);
  CHECK(joint_entropy(prod, EntropicOrder(1.0)) ==
        doctest::Approx(tsallis_entropy(p, EntropicOrder(1.0)) +
                        tsallis_entropy(q, EntropicOrder(1.0)))
            .epsilon(1e-14));
}

TEST_CASE("conditional entropy hand values") {
  Eigen::MatrixXd corr = Eigen::MatrixXd::Zero(2, 2);
  corr(0, 0) = 0.4;
  corr(1, 1) = 0.6;
  for (double alpha : {1.0, 2.0, 0.5}) {
    CHECK(conditional_entropy(JointTable(corr), Given::columns,
                              EntropicOrder(alpha)) == 0.0);
    CHECK(conditional_entropy(JointTable(corr), Given::rows,
                              EntropicOrder(alpha)) == 0.0);
  }
  // Product uniform 2x2 at alpha = 2: sum_y q(y)^2 * H_2(uniform_2) = 0.5*0.5.
  CHECK(conditional_entropy(jt22(0.25, 0.25, 0.25, 0.25), Given::columns,
                            EntropicOrder(2.0)) ==
        doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("binary and quaternary entropies") {
  for (double alpha : {1.0, 0.5, 2.0, 4.0}) {
    CHECK(binary_entropy(1.0, EntropicOrder(alpha)) == 0.0);
    CHECK(binary_entropy(0.0, EntropicOrder(alpha)) == 0.0);
    CHECK(quaternary_entropy(1.0, EntropicOrder(alpha)) == 0.0);
  }
  CHECK(binary_entropy(0.5, EntropicOrder(1.0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(binary_entropy(0.5, EntropicOrder(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(quaternary_entropy(0.5, EntropicOrder(2.0)) ==
        doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(binary_entropy(1.2, EntropicOrder(1.0)), std::domain_error);
  CHECK_THROWS_AS(quaternary_entropy(-0.1, EntropicOrder(1.0)),
                  std::domain_error);

  // h_q = 2 h_b at alpha = 1.
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double eta = unit(eng);
    CHECK(quaternary_entropy(eta, EntropicOrder(1.0)) ==
          doctest::Approx(2.0 * binary_entropy(eta, EntropicOrder(1.0)))
              .epsilon(1e-13));
  }
}

TEST_CASE("entropy matches direct definition on random distributions") {
  std::mt19937_64 eng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(eng() % 6);
    const Eigen::VectorXd p = oracles::random_simplex(eng, d);
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      const double mine = tsallis_entropy(ProbVector(p), EntropicOrder(alpha));
      const double ref = oracles::entropy_direct(oracles::to_vector(p), alpha);
      CHECK(mine == doctest::Approx(ref).epsilon(1e-13));
    }
  }
}

TEST_CASE("chain rule on random tables") {
  std::mt19937_64 eng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index rows = 2 + static_cast<Eigen::Index>(eng() % 4);
    const Eigen::Index cols = 2 + static_cast<Eigen::Index>(eng() % 4);
    const JointTable j{oracles::random_joint(eng, rows, cols)};
    for (double alpha : {0.5, 1.0, 1.5, 2.0, 3.0}) {
      const EntropicOrder order(alpha);
      const double joint = joint_entropy(j, order);
      const double via_rows = tsallis_entropy(j.row_marginal(), order) +
                              conditional_entropy(j, Given::rows, order);
      const double via_cols = tsallis_entropy(j.col_marginal(), order) +
                              conditional_entropy(j, Given::columns, order);
      CHECK(std::abs(joint - via_rows) < 1e-12);
      CHECK(std::abs(joint - via_cols) < 1e-12);
    }
  }
}

TEST_CASE("conditioning on more cannot raise entropy for alpha >= 1") {
  std::mt19937_64 eng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(eng() % 2);
    const Eigen::Index states = 1 + static_cast<Eigen::Index>(eng() % 4);
    const HiddenVariableModel model =
        random_model(derive_seed(999, static_cast<std::uint64_t>(trial)), d,
                     states);
    const TripleJoint joint = joint_from_model(model);
    const JointTable x_given_yz = joint.pair_1_23();
    const JointTable x_given_y = joint.pair_12();
    for (double alpha : {1.0, 1.5, 2.0, 3.0, 5.0}) {
      const EntropicOrder order(alpha);
      const double more = conditional_entropy(x_given_yz, Given::columns, order);
      const double less = conditional_entropy(x_given_y, Given::columns, order);
      CHECK(more <= less + 1e-12);
    }
  }
}

TEST_CASE("stored counterexample: monotonicity fails at alpha = 0.5") {
  // A 2x2x2 joint for which conditioning on more RAISES the alpha = 0.5
  // conditional entropy; keeps the alpha >= 1 restriction honest.
  const std::vector<double> p = {
      0.01953572417449163,  0.06843477551921245, 0.4976133228942949,
      0.04440738957988842,  0.054220076611408964, 0.14034420672295603,
      0.1542962344564352,   0.021148270041312395};
  const TripleJoint joint(p, 2);
  const EntropicOrder half(0.5);
  const double more =
      conditional_entropy(joint.pair_1_23(), Given::columns, half);
  const double less = conditional_entropy(joint.pair_12(), Given::columns, half);
  CHECK(more == doctest::Approx(1.3425495535922314).epsilon(1e-12));
  CHECK(less == doctest::Approx(1.0284019049047435).epsilon(1e-12));
  CHECK(more > less + 0.3);
}

TEST_CASE("pseudo-additivity on product tables") {
  std::mt19937_64 eng(45);
  for (int trial = 0; trial < 300; ++trial) {
    const Eigen::Index da = 2 + static_cast<Eigen::Index>(eng() % 4);
    const Eigen::Index db = 2 + static_cast<Eigen::Index>(eng() % 4);
    const ProbVector p{oracles::random_simplex(eng, da)};
    const ProbVector q{oracles::random_simplex(eng, db)};
    const JointTable prod = JointTable::from_product(p, q);
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
      const EntropicOrder order(alpha);
      const double hp = tsallis_entropy(p, order);
      const double hq = tsallis_entropy(q, order);
      const double expected = hp + hq + (1.0 - alpha) * hp * hq;
      CHECK(std::abs(joint_entropy(prod, order) - expected) < 1e-12);
    }
  }
}

TEST_CASE("range bounds") {
  std::mt19937_64 eng(46);
  for (int trial = 0; trial < 500; ++trial) {
    const Eigen::Index rows = 2 + static_cast<Eigen::Index>(eng() % 4);
    const Eigen::Index cols = 2 + static_cast<Eigen::Index>(eng() % 4);
    const JointTable j{oracles::random_joint(eng, rows, cols)};
    for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
      const EntropicOrder order(alpha);
      const double h = tsallis_entropy(j.row_marginal(), order);
      CHECK(h >= 0.0);
      CHECK(h <= alpha_log(static_cast<double>(rows), order) + 1e-12);
      if (alpha >= 1.0) {
        const double hc = conditional_entropy(j, Given::columns, order);
        CHECK(hc >= 0.0);
        CHECK(hc <= alpha_log(static_cast<double>(rows), order) + 1e-12);
      }
    }
  }
}

TEST_CASE("alpha -> 1 continuity") {
  std::mt19937_64 eng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(eng() % 6);
    const ProbVector p{oracles::random_simplex(eng, d)};
    const double shannon = tsallis_entropy(p, EntropicOrder(1.0));
    for (double alpha : {1.0 - 1e-6, 1.0 + 1e-6}) {
      CHECK(std::abs(tsallis_entropy(p, EntropicOrder(alpha)) - shannon) <
            1e-5);
    }
  }
}

TEST_CASE("max_entropy") {
  CHECK(max_entropy(2, EntropicOrder(1.0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(max_entropy(2, EntropicOrder(2.0)) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(max_entropy(0, EntropicOrder(1.0)), std::invalid_argument);
}
