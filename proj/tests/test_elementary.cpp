#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mqs/elementary.hpp"
#include "mqs/operators.hpp"
#include "test_helpers.hpp"

using namespace mqs;
using Catch::Approx;

namespace {

ProductTerm zz_term(const std::vector<int>& idx, int n) {
  ProductTerm t{std::pow(2.0, double(idx.size()) - 1),
                std::vector<SpinFactor>(n, SpinFactor::identity())};
  for (int q : idx) t.factors[q - 1] = SpinFactor::spin(Axis::Z);
  return t;
}

Matrix single_op(int n, int q, Axis a) {
  ProductTerm t{1.0, std::vector<SpinFactor>(n, SpinFactor::identity())};
  t.factors[q - 1] = SpinFactor::spin(a);
  return lower(t, n);
}

}  // namespace

TEST_CASE("multibody zz recursion", "[elementary]") {
  SECTION("single index is one z rotation") {
    const Circuit c = synth_multibody_zz({2}, 0.77, 3);
    REQUIRE(c.gates.size() == 1);
    const auto& g = std::get<SingleSpinGate>(c.gates[0]);
    CHECK(g.qubit == 2);
    CHECK(g.axis == Axis::Z);
    CHECK(g.angle == 0.77);
  }
  SECTION("three and four body cases") {
    for (int m : {3, 4}) {
      std::vector<int> idx(m);
      for (int i = 0; i < m; ++i) idx[i] = i + 1;
      const double th = 1.3;
      const Circuit c = synth_multibody_zz(idx, th, m);
      CHECK(count(c).total() == 6 * (m - 2) + 1);
      CHECK(max_abs_diff(circuit_to_dense(c),
                         expm_hermitian(lower(zz_term(idx, m), m), th)) < 1e-9);
    }
  }
  SECTION("random index subsets up to n=6") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(0, 2 * kPi);
    for (int n = 3; n <= 6; ++n) {
      for (int m = 3; m <= n; ++m) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i + 1;
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> idx(pool.begin(), pool.begin() + m);
        std::sort(idx.begin(), idx.end());
        const double th = ang(rng);
        const Circuit c = synth_multibody_zz(idx, th, n);
        CHECK(max_abs_diff(circuit_to_dense(c),
                           expm_hermitian(lower(zz_term(idx, n), n), th)) <
              1e-9);
      }
    }
  }
  SECTION("duplicate indices rejected") {
    CHECK_THROWS_AS(synth_multibody_zz({1, 1}, 0.1, 2), std::invalid_argument);
  }
}

TEST_CASE("zero quantum swap", "[elementary]") {
  SECTION("zero angle is the empty circuit") {
    CHECK(synth_zero_quantum(1, 2, 0.0, 2).gates.empty());
  }
  SECTION("pi conjugation exchanges z operators, all pairs n <= 5") {
    for (int n = 2; n <= 5; ++n) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          if (k == l) continue;
          const Circuit c = synth_zero_quantum(k, l, kPi, n);
          CHECK(c.gates.size() <= 10);
          const Matrix v = circuit_to_dense(c);
          CHECK(max_abs_diff(Matrix(v * single_op(n, l, Axis::Z) * v.adjoint()),
                             single_op(n, k, Axis::Z)) < 1e-10);
          CHECK(max_abs_diff(Matrix(v * single_op(n, k, Axis::Z) * v.adjoint()),
                             single_op(n, l, Axis::Z)) < 1e-10);
        }
      }
    }
  }
  SECTION("pi conjugation relabels a projector index") {
    // D_0 structure on qubit 3 moves to qubit 1 under V_13(pi)
    const int n = 3;
    ProductTerm d3{1.0, std::vector<SpinFactor>(n, SpinFactor::identity())};
    d3.factors[2] = SpinFactor::projector(+1, Axis::Z);
    ProductTerm d1{1.0, std::vector<SpinFactor>(n, SpinFactor::identity())};
    d1.factors[0] = SpinFactor::projector(+1, Axis::Z);
    const Matrix v = circuit_to_dense(synth_zero_quantum(1, 3, kPi, n));
    CHECK(max_abs_diff(Matrix(v * lower(d3, n) * v.adjoint()), lower(d1, n)) <
          1e-10);
  }
  SECTION("matches the product operator exponential") {
    // V_kl(theta) = exp(-i theta IkxIly) exp(+i theta IkyIlx)
    const int n = 2;
    const double th = 0.83;
    const Matrix gen1 = single_op(n, 1, Axis::X) * single_op(n, 2, Axis::Y);
    const Matrix gen2 = single_op(n, 1, Axis::Y) * single_op(n, 2, Axis::X);
    const Matrix want = expm_hermitian(gen1, th) * expm_hermitian(gen2, -th);
    CHECK(max_abs_diff(circuit_to_dense(synth_zero_quantum(1, 2, th, n)), want) <
          1e-12);
  }
  SECTION("coincident qubits rejected") {
    CHECK_THROWS_AS(synth_zero_quantum(2, 2, 1.0, 3), std::invalid_argument);
  }
}

TEST_CASE("selective normalization", "[elementary]") {
  SECTION("already canonical subsets produce no sandwich") {
    const auto norm = normalize_selective({1, 2}, {0, 0}, 0.7, 3);
    CHECK(norm.pre.gates.empty());
    CHECK(norm.post.gates.empty());
    CHECK(norm.canonical.qubits == std::vector<int>{1, 2});
  }
  SECTION("worked cases") {
    struct Case {
      int n;
      std::vector<int> subset;
      std::vector<int> labels;
    };
    for (const auto& tc : std::vector<Case>{{3, {2, 3}, {0, 0}},
                                            {2, {1, 2}, {1, 0}},
                                            {4, {2, 4}, {1, 1}},
                                            {3, {1, 3}, {0, 1}}}) {
      const double th = 0.7;
      const auto norm = normalize_selective(tc.subset, tc.labels, th, tc.n);
      const Matrix got = circuit_to_dense(norm.as_circuit());
      const Matrix want =
          gate_to_dense(SelectiveGate{tc.subset, tc.labels, th}, tc.n);
      INFO("n=" << tc.n);
      CHECK(max_abs_diff(got, want) < 1e-10);
      // canonical gate applies phase on exactly 2^{n-m} states
      const Matrix canon = gate_to_dense(norm.canonical, tc.n);
      long phased = 0;
      for (Index i = 0; i < canon.rows(); ++i) {
        if (std::abs(canon(i, i) - 1.0) > 1e-9) ++phased;
      }
      CHECK(phased == (Index{1} << (tc.n - tc.subset.size())));
    }
  }
  SECTION("budget: at most m swaps and m pulses") {
    const auto norm = normalize_selective({2, 4}, {1, 1}, 0.3, 5);
    long pulses = 0, couplings = 0;
    for (const auto& g : norm.pre.gates) {
      if (std::holds_alternative<SingleSpinGate>(g)) ++pulses;
      if (std::holds_alternative<CouplingGate>(g)) ++couplings;
    }
    // each zero-quantum swap contributes 2 couplings and 8 rotations
    CHECK(couplings / 2 <= 2);
    CHECK(pulses - 4 * couplings / 2 * 2 <= 2);
  }
}

TEST_CASE("basic unitary synthesis", "[elementary]") {
  SECTION("single Iz term is one gate") {
    ProductTerm t{1.0, {SpinFactor::spin(Axis::Z)}};
    const Circuit c = synth_basic_unitary(t, 0.4, 1);
    CHECK(c.gates.size() == 1);
    CHECK(c.basic_ops == 1);
  }
  SECTION("projector string is one selective rotation") {
    const int n = 4;
    ProductTerm t{1.0, std::vector<SpinFactor>(n, SpinFactor::projector(+1, Axis::Z))};
    const double th = 0.9;
    const Circuit c = synth_basic_unitary(t, th, n);
    REQUIRE(c.gates.size() == 1);
    const Matrix m = circuit_to_dense(c);
    CHECK(std::abs(m(0, 0) - std::exp(Complex(0, -th))) < 1e-14);
    for (Index i = 1; i < 16; ++i) CHECK(std::abs(m(i, i) - 1.0) < 1e-14);
  }
  SECTION("the five qubit mixed-class example") {
    ProductTerm t{2.0,
                  {SpinFactor::spin(Axis::X), SpinFactor::identity(),
                   SpinFactor::projector(+1, Axis::X), SpinFactor::spin(Axis::Z),
                   SpinFactor::projector(-1, Axis::Z)}};
    const double th = 0.913;
    const Circuit c = synth_basic_unitary(t, th, 5);
    CHECK(max_abs_diff(circuit_to_dense(c),
                       expm_hermitian(lower(t, 5), th)) < 1e-10);
  }
  SECTION("random class terms") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(0, 2 * kPi);
    std::uniform_real_distribution<double> coef(0.2, 3.0);
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 5);
      ProductTerm t;
      t.coefficient = coef(rng);
      for (int q = 0; q < n; ++q) {
        const double r = double(rng() % 100) / 100.0;
        const Axis a = static_cast<Axis>(rng() % 3);
        if (r < 0.3) {
          t.factors.push_back(SpinFactor::identity());
        } else if (r < 0.65) {
          t.factors.push_back(SpinFactor::spin(a));
        } else {
          t.factors.push_back(SpinFactor::projector(rng() % 2 ? 1 : -1, a));
        }
      }
      const double th = ang(rng);
      const Circuit c = synth_basic_unitary(t, th, n);
      INFO("trial " << trial << " n " << n);
      CHECK(max_abs_diff(circuit_to_dense(c),
                         expm_hermitian(lower(t, n), th)) < 1e-9);
    }
  }
  SECTION("projector-only spectrum stays a phase pattern") {
    // eigenphases of the synthesized circuit are {0, -theta} only
    ProductTerm t{1.0,
                  {SpinFactor::projector(-1, Axis::Y), SpinFactor::identity(),
                   SpinFactor::projector(+1, Axis::X)}};
    const double th = 1.1;
    const Matrix u = circuit_to_dense(synth_basic_unitary(t, th, 3));
    Eigen::ComplexEigenSolver<Matrix> es(u);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double phase = std::arg(es.eigenvalues()(i));
      const bool near_zero = std::abs(phase) < 1e-9;
      const bool near_theta = std::abs(phase + th) < 1e-9;
      CHECK((near_zero || near_theta));
    }
  }
  SECTION("identity term is a global phase") {
    ProductTerm t{2.5, std::vector<SpinFactor>(2, SpinFactor::identity())};
    const Circuit c = synth_basic_unitary(t, 0.3, 2);
    CHECK(c.gates.empty());
    CHECK(max_abs_diff(circuit_to_dense(c),
                       Matrix(std::exp(Complex(0, -0.75)) *
                              Matrix::Identity(4, 4))) < 1e-14);
  }
  SECTION("complex coefficients rejected") {
    ProductTerm t{Complex(1.0, 0.5), {SpinFactor::spin(Axis::X)}};
    CHECK_THROWS_AS(synth_basic_unitary(t, 1.0, 1), std::invalid_argument);
  }
}
