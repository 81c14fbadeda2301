// Acceptance suite: runs every gate criterion at its pinned tolerance and
// prints one PASS/FAIL line each. Exit code is the number of failed
// criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "mqs/claims.hpp"
#include "mqs/elementary.hpp"
#include "mqs/generators.hpp"
#include "mqs/operators.hpp"
#include "mqs/subspace.hpp"
#include "mqs/transfer.hpp"

using namespace mqs;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool pass, const std::string& metric) {
  std::printf("[%s] criterion %2d  %s  (%s)\n", pass ? "PASS" : "FAIL", id,
              what.c_str(), metric.c_str());
  if (!pass) ++failures;
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. complete state transfer with the -i phase, all position pairs
void criterion1() {
  const double t0 = now_seconds();
  double worst = 0;
  for (int n = 2; n <= 6; ++n) {
    const Index N = Index{1} << n;
    for (Index s = 0; s < N; ++s) {
      for (Index t = 0; t < N; ++t) {
        if (s == t) continue;
        const Matrix u = expm_hermitian(build_Qpsk(s, t, n), kPi);
        Matrix want = Matrix::Identity(N, N);
        want(s, s) = want(t, t) = 0;
        want(s, t) = want(t, s) = Complex(0, -1);
        worst = std::max(worst, max_abs_diff(u, want));
      }
    }
  }
  const double dt = now_seconds() - t0;
  report(1, "pi rotation moves source to -i target and fixes the rest",
         worst < 1e-10 && dt < 30.0,
         "max dev " + fmt(worst) + ", " + fmt(dt) + " s");
}

// 2. exact subspace transfer of seeded random states
void criterion2() {
  double worst = 0;
  for (int n = 2; n <= 6; ++n) {
    const SubspaceLayout lay = build_layout(n);
    for (int m = 0; m < lay.peak(); ++m) {
      const Index k = choose_k(lay, m).k;
      const QpmOperator q = build_Qpm(lay, m, k);
      const Matrix u = expm_hermitian(q.dense, kPi);
      for (int trial = 0; trial < 10; ++trial) {
        const Vector v = random_subspace_state(lay, m, 4000 + 101 * n + 10 * m + trial);
        const Vector w = u * v;
        Vector want = Vector::Zero(Index{1} << n);
        for (const auto& [src, dst] : q.pairs) want(dst) = Complex(0, -1) * v(src);
        worst = std::max(worst, (w - want).cwiseAbs().maxCoeff());
        const auto mass = subspace_support(w, lay, BasisOrdering::WeightLex);
        worst = std::max(worst, std::abs(mass[q.target_subspace] - 1.0));
      }
    }
  }
  report(2, "subspace transfer: full target mass and -i pairwise map",
         worst < 1e-10, "max dev " + fmt(worst));
}

// 3. closed form vs spectral exponential
void criterion3() {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> ang(0, 2 * kPi);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Index N = Index{1} << n;
    const Index s = static_cast<Index>(rng() % N);
    Index t = static_cast<Index>(rng() % N);
    if (t == s) t = (t + 1) % N;
    const double theta = ang(rng);
    worst = std::max(worst, max_abs_diff(build_Upsk_closed(s, t, theta, n),
                                         expm_hermitian(build_Qpsk(s, t, n), theta)));
  }
  report(3, "closed-form rotation equals the exponential over 100 samples",
         worst < 1e-12, "max dev " + fmt(worst));
}

// 4. anti-diagonal expansions: exactness and term counts
void criterion4() {
  double worst = 0;
  bool counts_ok = true;
  for (int n = 2; n <= 8; ++n) {
    const Index N = Index{1} << n;
    for (Index k = -(N - 2); k <= N - 2; ++k) {
      const OperatorSum sum = expand_b({n, k});
      worst = std::max(worst, max_abs_diff(lower(sum), build_b({n, k})));
      const Index a = std::abs(k);
      const std::size_t got = sum.terms.size();
      if (a == 1 && got != std::size_t(n)) counts_ok = false;
      if (a >= 2 && (a & (a - 1)) == 0) {
        const int l = std::countr_zero(static_cast<std::uint64_t>(a));
        if (got != std::size_t(n - l)) counts_ok = false;
      }
    }
    for (int r = 1; r < n; ++r) {
      for (int m = 0; m < r; ++m) {
        const Index plus = (Index{1} << r) + (Index{1} << m);
        const Index minus = (Index{1} << r) - (Index{1} << m);
        if (plus <= N - 2 &&
            expand_b({n, plus}).terms.size() != std::size_t((r - m + 1) * (n - r) - 1)) {
          counts_ok = false;
        }
        if (minus >= 1 && minus <= N - 2 && (minus & (minus - 1)) != 0 &&
            expand_b({n, minus}).terms.size() != std::size_t((r - m) * (n - r) + 1)) {
          counts_ok = false;
        }
      }
    }
  }
  report(4, "product-operator expansions are exact with the stated term counts",
         worst < 1e-12 && counts_ok,
         "max dev " + fmt(worst) + (counts_ok ? ", counts exact" : ", COUNTS OFF"));
}

// 5. multibody recursion
void criterion5() {
  std::mt19937_64 rng(505);
  std::uniform_real_distribution<double> ang(0, 2 * kPi);
  double worst = 0;
  bool counts_ok = true;
  for (int n = 3; n <= 6; ++n) {
    for (int m = 3; m <= n; ++m) {
      std::vector<int> idx(m);
      for (int i = 0; i < m; ++i) idx[i] = i + 1;
      for (int trial = 0; trial < 5; ++trial) {
        const double th = ang(rng);
        const Circuit c = synth_multibody_zz(idx, th, n);
        if (count(c).total() != 6 * (m - 2) + 1) counts_ok = false;
        ProductTerm t{std::pow(2.0, m - 1),
                      std::vector<SpinFactor>(n, SpinFactor::identity())};
        for (int q : idx) t.factors[q - 1] = SpinFactor::spin(Axis::Z);
        worst = std::max(worst, max_abs_diff(circuit_to_dense(c),
                                             expm_hermitian(lower(t, n), th)));
      }
    }
  }
  report(5, "multibody coupling recursion matches the oracle at 6(m-2)+1 gates",
         worst < 1e-9 && counts_ok, "max dev " + fmt(worst));
}

// 6. block-diagonal reduction
void criterion6() {
  double worst = 0;
  long worst_gates = 0;
  bool bound_ok = true;
  const double th = 1.234;
  for (int n = 1; n <= 6; ++n) {
    const Index N = Index{1} << n;
    for (Index l = 0; l < N; ++l) {
      for (Index L = l; L < N; ++L) {
        const Circuit c = synth_block_diagonal({n, l, L}, th);
        if (count(c).total() >= 2 * n) bound_ok = false;
        worst = std::max(worst, max_abs_diff(circuit_to_dense(c),
                                             expm_hermitian(build_diag({n, l, L}), th)));
      }
    }
  }
  // sampled larger registers: every gate is diagonal, so comparing the
  // phase profile on the uniform state is a full dense comparison
  std::mt19937_64 rng(606);
  for (int n = 7; n <= 10; ++n) {
    const Index N = Index{1} << n;
    for (int trial = 0; trial < 50; ++trial) {
      Index l = static_cast<Index>(rng() % N);
      Index L = static_cast<Index>(rng() % N);
      if (l > L) std::swap(l, L);
      const Circuit c = synth_block_diagonal({n, l, L}, th);
      worst_gates = std::max(worst_gates, count(c).total());
      if (count(c).total() >= 2 * n) bound_ok = false;
      bool all_selective = true;
      for (const auto& g : c.gates) {
        all_selective = all_selective && std::holds_alternative<SelectiveGate>(g);
      }
      if (!all_selective) bound_ok = false;
      Vector u = Vector::Constant(N, Complex(1.0 / std::sqrt(double(N)), 0));
      const Vector w = apply_to_state(c, u);
      for (Index i = 0; i < N; ++i) {
        const Complex want = (i >= l && i <= L) ? std::exp(Complex(0, -th)) : 1.0;
        worst = std::max(worst, std::abs(w(i) * std::sqrt(double(N)) - want));
      }
    }
  }
  report(6, "block-diagonal reduction: dense match, selective count under 2n",
         worst < 1e-10 && bound_ok, "max dev " + fmt(worst));
}

// 7. index windows: brute force vs closed forms, half-index rule
void criterion7() {
  bool ok = true;
  std::string note;
  for (int n = 2; n <= 10; ++n) {
    const SubspaceLayout lay = build_layout(n);
    const int peak = lay.peak();
    const Index N = Index{1} << n;
    for (int m = 0; m < peak; ++m) {
      const IndexWindow w = solve_index_window(lay, m, peak);
      if (w.k_min != N - lay.l[m] - lay.L[peak] - 1) ok = false;
      if (w.k_max != N - lay.L[m] - lay.l[peak] - 1) ok = false;
      if (n % 2 == 0 && w.k_min != lay.l[peak] - lay.l[m]) ok = false;
      if (2 * lay.l[m + 1] <= lay.d[peak]) {
        const ChosenK ck = choose_k(lay, m);
        if (ck.k != (Index{1} << (n - 1)) || !w.contains(ck.k)) ok = false;
      }
    }
  }
  // frozen witnesses
  {
    const SubspaceLayout l4 = build_layout(4);
    const IndexWindow w = solve_index_window(l4, 0, 2);
    if (w.k_min != 5 || w.k_max != 10) ok = false;
    if (2 * l4.l[1] > l4.d[2]) ok = false;  // m_0 = 0 at n = 4
    if (2 * l4.l[2] <= l4.d[2]) ok = false;
    note = "window(4,0)=[" + std::to_string(w.k_min) + "," +
           std::to_string(w.k_max) + "]";
  }
  report(7, "index-window equivalence and the half-index regime rule", ok, note);
}

// 8. the conjugation reduction identity with its counterexample
void criterion8() {
  double worst = 0;
  for (int n = 2; n <= 6; ++n) {
    const SubspaceLayout lay = build_layout(n);
    for (int m = 0; m < lay.peak(); ++m) {
      const IndexWindow w = solve_index_window(lay, m, lay.peak());
      for (Index k = w.k_min; k <= w.k_max; ++k) {
        double dev = 0;
        check_conjugation_reduction(lay, m, k, &dev);
        worst = std::max(worst, dev);
      }
    }
  }
  double counter_dev = 0;
  const bool counter_fails = !check_conjugation_reduction(build_layout(2), 1, 0, &counter_dev);
  report(8, "diagonal conjugation identity holds in-window, fails off-window",
         worst < 1e-10 && counter_fails,
         "max dev " + fmt(worst) + ", counterexample dev " + fmt(counter_dev));
}

// 9. convergence order of the product formula
void criterion9() {
  const double t0 = now_seconds();
  const std::vector<int> Ls{4, 8, 16, 32};
  struct Point { int n; int m; Index k; };
  std::vector<Point> points{{3, 0, 4}, {3, 0, 5}, {3, 0, 6},
                            {4, 0, 8}, {4, 1, 4}, {4, 1, 6}};
  bool all_in_band = true;
  double worst_floor = 0;
  int measured = 0;
  for (const auto& p : points) {
    TransferSpec spec;
    spec.layout = build_layout(p.n);
    spec.m = p.m;
    spec.k = p.k;
    const TrotterFit fit = trotter_convergence(spec, Ls);
    if (fit.exact) {
      all_in_band = false;  // no slope exists: distances sit at the fp floor
      for (double d : fit.distances) worst_floor = std::max(worst_floor, d);
    } else {
      ++measured;
      if (fit.slope < -1.2 || fit.slope > -0.8) all_in_band = false;
    }
  }
  const double dt = now_seconds() - t0;
  report(9,
         "product-formula error order: slope in [-1.2,-0.8] over L=4..32",
         all_in_band && dt < 120.0,
         measured == 0
             ? "no slope: formula closes exactly, max distance " +
                   fmt(worst_floor) + " < 1e-12 floor, " + fmt(dt) + " s"
             : "slopes measured on " + std::to_string(measured) + " points, " +
                   fmt(dt) + " s");
}

// 10. operation-count envelopes at count-only scale
void criterion10() {
  bool ok = true;
  long worst_gm = 0, worst_uk = 0, worst_bk = 0;
  for (int n = 2; n <= 20; ++n) {
    const SubspaceLayout lay = build_layout(n);
    for (int m = 0; m <= n; ++m) {
      const long c = count(synth_block_diagonal({n, lay.l[m], lay.L[m]}, 0.5)).total();
      worst_gm = std::max(worst_gm, c);
      if (c >= 2 * n) ok = false;
    }
    std::mt19937_64 rng(10'000 + n);
    const Index N = Index{1} << n;
    for (int trial = 0; trial < 30; ++trial) {
      const Index k = n <= 3 ? 3 : (static_cast<Index>(rng() % ((N - 4) / 2)) * 2 + 3);
      if (k > N - 2) continue;
      const long ops = synth_Uk(k, n).basic_ops;
      worst_uk = std::max(worst_uk, ops);
      if (ops >= long(n) * n) ok = false;
    }
    const int L = 8;
    for (int trial = 0; trial < 15; ++trial) {
      Index k = static_cast<Index>(rng() % (N - 3)) + 1;
      if (rng() % 2) k = -k;
      const long ops = synth_Bk(k, 0.7, L, n, BkRoute::Conjugation).basic_ops;
      worst_bk = std::max(worst_bk, ops);
      if (ops > 2 * long(n) * n + 6 * long(L) * n) ok = false;
    }
  }
  report(10, "operation counts: G_m < 2n, U_k < n^2, general B_k <= 2n^2+6Ln",
         ok,
         "max G_m " + std::to_string(worst_gm) + ", U_k " + std::to_string(worst_uk) +
             ", B_k " + std::to_string(worst_bk) + " (L=8, n<=20)");
}

// 11. the conjugation claim table: complete, deterministic, matches the
// pre-established expected statuses (the claim holds at every point)
void criterion11() {
  bool ok = true;
  long rows = 0;
  double worst = 0;
  for (int pass = 0; pass < 2; ++pass) {
    long count_rows = 0;
    for (int n = 3; n <= 5; ++n) {
      const Index N = Index{1} << n;
      for (Index k = 3; k <= N - 2; k += 2) {
        const Matrix u = circuit_to_dense(synth_Uk(k, n));
        const Matrix bbar = build_bbar({n, k}).first;
        const double dev = max_abs_diff(Matrix(u * bbar * u.adjoint()),
                                        build_b({n, k}));
        if (pass == 0) {
          worst = std::max(worst, dev);
          if (dev >= 1e-9) ok = false;  // expected status: holds
        }
        ++count_rows;
      }
    }
    if (pass == 0) {
      rows = count_rows;
    } else if (rows != count_rows) {
      ok = false;
    }
  }
  long want = 0;
  for (int n = 3; n <= 5; ++n) want += ((Index{1} << n) - 2 - 3) / 2 + 1;
  if (rows != want) ok = false;
  report(11, "conjugation-claim table: complete coverage, every point holds",
         ok, std::to_string(rows) + " points, max dev " + fmt(worst));
}

// 12. unit spectral norms
void criterion12() {
  double worst = 0;
  for (int n = 2; n <= 6; ++n) {
    const SubspaceLayout lay = build_layout(n);
    for (int m = 0; m < lay.peak(); ++m) {
      const IndexWindow w = solve_index_window(lay, m, lay.peak());
      for (Index k = w.k_min; k <= w.k_max; ++k) {
        const Matrix b = build_b({n, k});
        const Matrix g = build_diag(GmSpec{lay, m}, BasisOrdering::WeightLex);
        const auto norm2 = [](const Matrix& x) {
          Eigen::JacobiSVD<Matrix> svd(x);
          return svd.singularValues()(0);
        };
        worst = std::max(worst, std::abs(norm2(b) - 1.0));
        worst = std::max(worst, std::abs(norm2(g) - 1.0));
        worst = std::max(worst, std::abs(norm2(commutator(b, g)) - 1.0));
      }
    }
  }
  report(12, "spectral norms of b, g, and their commutator equal one",
         worst < 1e-10, "max dev " + fmt(worst));
}

// 13. CLI contract and byte-stable serialization
void criterion13(const char* cli, const char* config) {
  bool ok = true;
  std::string note;
  if (cli && config) {
    const std::string cmd = std::string("\"") + cli + "\" verify --suite \"" +
                            config + "\" > /dev/null";
    const int rc = std::system(cmd.c_str());
    ok = rc == 0;
    note = "verify exit " + std::to_string(rc);
  } else {
    note = "cli path not provided; in-process fallback: ";
    SweepConfig cfg;
    cfg.n_max = 4;
    cfg.count_n_max = 8;
    ok = all_passed(run_claims_suite(cfg));
    note += ok ? "suite clean" : "suite failed";
  }
  // serialization byte identity
  Circuit c = synth_Bk(5, 0.7321, 2, 4);
  const std::string once = serialize(c);
  const std::string twice = serialize(deserialize(once));
  if (once != twice) ok = false;
  report(13, "CLI verify exits clean; serialization is byte-identical", ok, note);
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  const char* config = argc > 2 ? argv[2] : nullptr;
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  criterion13(cli, config);
  std::printf("%d/13 criteria passed\n", 13 - failures);
  return failures;
}
