#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "mqs/operators.hpp"
#include "mqs/subspace.hpp"
#include "test_helpers.hpp"

using namespace mqs;
using Catch::Approx;

TEST_CASE("layout dimensions and offsets", "[subspace]") {
  const SubspaceLayout l4 = build_layout(4);
  CHECK(l4.d == std::vector<Index>{1, 4, 6, 4, 1});
  CHECK(l4.l == std::vector<Index>{0, 1, 5, 11, 15});
  CHECK(l4.L == std::vector<Index>{0, 4, 10, 14, 15});

  const SubspaceLayout l1 = build_layout(1);
  CHECK(l1.d == std::vector<Index>{1, 1});
  CHECK(l1.l == std::vector<Index>{0, 1});

  const SubspaceLayout l3 = build_layout(3);
  CHECK(l3.d == std::vector<Index>{1, 3, 3, 1});
  CHECK(l3.l == std::vector<Index>{0, 1, 4, 7});

  CHECK_THROWS_AS(build_layout(0), std::out_of_range);
  CHECK_THROWS_AS(build_layout(21), std::out_of_range);

  for (int n = 1; n <= 12; ++n) {
    const SubspaceLayout lay = build_layout(n);
    Index total = 0;
    for (int m = 0; m <= n; ++m) {
      total += lay.d[m];
      CHECK(lay.d[m] == lay.d[n - m]);
      CHECK(lay.L[m] == lay.l[m] + lay.d[m] - 1);
    }
    CHECK(total == (Index{1} << n));
    if (n % 2 == 0) {
      CHECK(2 * lay.l[n / 2] + lay.d[n / 2] == (Index{1} << n));
    }
  }
}

TEST_CASE("peak subspaces and their growth", "[subspace]") {
  for (int n : {8, 10, 12}) {
    const SubspaceLayout lay = build_layout(n);
    const double stirling = std::pow(2.0, n) / std::sqrt(kPi * n / 2.0);
    const double ratio = static_cast<double>(lay.d[n / 2]) / stirling;
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.1);
  }
  // even n: unique max at n/2; odd n: equal maxima at (n +- 1)/2
  for (int n = 2; n <= 11; ++n) {
    const SubspaceLayout lay = build_layout(n);
    const Index peak = *std::max_element(lay.d.begin(), lay.d.end());
    if (n % 2 == 0) {
      CHECK(lay.d[n / 2] == peak);
      CHECK(std::count(lay.d.begin(), lay.d.end(), peak) == 1);
    } else {
      CHECK(lay.d[(n - 1) / 2] == peak);
      CHECK(lay.d[(n + 1) / 2] == peak);
      CHECK(std::count(lay.d.begin(), lay.d.end(), peak) == 2);
    }
  }
}

TEST_CASE("weights and ranks", "[subspace]") {
  CHECK(weight_of(0, 5) == 0);
  CHECK(weight_of(7, 3) == 3);
  CHECK(weight_of(4, 3) == 1);
  CHECK_THROWS_AS(weight_of(8, 3), std::out_of_range);

  const SubspaceLayout l3 = build_layout(3);
  CHECK(weight_rank(4, l3) == 3);  // class {1,2,4}, rank 2, l_1 = 1
  CHECK(weight_rank(0, l3) == 0);
  CHECK(weight_rank(7, l3) == 7);

  // rank formula agrees with sorted enumeration
  for (int n = 1; n <= 8; ++n) {
    const SubspaceLayout lay = build_layout(n);
    const BasisPermutation p = build_permutation(lay);
    std::vector<Index> order(Index{1} << n);
    for (Index i = 0; i < static_cast<Index>(order.size()); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
      const int wa = weight_of(a, n), wb = weight_of(b, n);
      return wa != wb ? wa < wb : a < b;
    });
    for (Index pos = 0; pos < static_cast<Index>(order.size()); ++pos) {
      CHECK(p.forward[pos] == order[pos]);
      CHECK(weight_rank(order[pos], lay) == pos);
      CHECK(p.inverse[p.forward[pos]] == pos);
    }
  }
}

TEST_CASE("permutation dense form", "[subspace]") {
  CHECK(max_abs_diff(permutation_dense(build_layout(1)), Matrix::Identity(2, 2)) <
        1e-15);
  CHECK(max_abs_diff(permutation_dense(build_layout(2)), Matrix::Identity(4, 4)) <
        1e-15);

  const BasisPermutation p3 = build_permutation(build_layout(3));
  CHECK(p3.forward == std::vector<Index>{0, 1, 2, 4, 3, 5, 6, 7});

  SECTION("conjugation maps weight projectors to contiguous blocks") {
    for (int n = 2; n <= 6; ++n) {
      const SubspaceLayout lay = build_layout(n);
      const Matrix P = permutation_dense(lay);
      const Index N = Index{1} << n;
      for (int m = 0; m <= n; ++m) {
        Matrix proj = Matrix::Zero(N, N);
        for (Index i = 0; i < N; ++i) {
          if (weight_of(i, n) == m) proj(i, i) = 1.0;
        }
        Matrix want = Matrix::Zero(N, N);
        for (Index i = lay.l[m]; i <= lay.L[m]; ++i) want(i, i) = 1.0;
        CHECK(max_abs_diff(P * proj * P.adjoint(), want) < 1e-15);
      }
    }
  }
  SECTION("the full x string stays anti-diagonal in weight order") {
    for (int n = 2; n <= 6; ++n) {
      const SubspaceLayout lay = build_layout(n);
      const Matrix P = permutation_dense(lay);
      ProductTerm xs{std::pow(2.0, n),
                     std::vector<SpinFactor>(n, SpinFactor::spin(Axis::X))};
      const Matrix J = lower(xs, n);
      const Matrix W = P * J * P.adjoint();
      const Index N = Index{1} << n;
      for (Index i = 0; i < N; ++i) {
        for (Index j = 0; j < N; ++j) {
          CHECK(std::abs(W(i, j) - (i + j == N - 1 ? 1.0 : 0.0)) < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("subspace support", "[subspace]") {
  const SubspaceLayout l2 = build_layout(2);
  Vector ground = Vector::Zero(4);
  ground(0) = 1.0;
  const auto mass0 = subspace_support(ground, l2, BasisOrdering::Binary);
  CHECK(mass0[0] == Approx(1.0));
  CHECK(mass0[1] == Approx(0.0));

  Vector uniform = Vector::Constant(4, Complex(0.5, 0));
  const auto massu = subspace_support(uniform, l2, BasisOrdering::Binary);
  CHECK(massu[0] == Approx(0.25));
  CHECK(massu[1] == Approx(0.5));
  CHECK(massu[2] == Approx(0.25));

  SECTION("masses sum to one in both orderings") {
    for (int n : {3, 5}) {
      const SubspaceLayout lay = build_layout(n);
      const Vector v = test::random_unit_state(Index{1} << n, 99 + n);
      for (auto ord : {BasisOrdering::Binary, BasisOrdering::WeightLex}) {
        const auto mass = subspace_support(v, lay, ord);
        double tot = 0;
        for (double m : mass) tot += m;
        CHECK(tot == Approx(1.0).margin(1e-12));
      }
    }
  }
  SECTION("rejects non normalized input") {
    Vector bad = Vector::Constant(4, Complex(1.0, 0));
    CHECK_THROWS_AS(subspace_support(bad, l2, BasisOrdering::Binary),
                    std::invalid_argument);
  }
}
