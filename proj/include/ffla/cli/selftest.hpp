#ifndef FFLA_CLI_SELFTEST_HPP
#define FFLA_CLI_SELFTEST_HPP

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ffla/blackbox/solve.hpp"
#include "ffla/cli/bench.hpp"
#include "ffla/elim/echelon.hpp"
#include "ffla/mm/fgemm.hpp"
#include "ffla/poly/charpoly.hpp"
#include "ffla/tiny/gf3.hpp"
#include "ffla/tiny/redq.hpp"

namespace ffla::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace selftest {

using Clock = std::chrono::steady_clock;

/// Stops a sampled check once its share of the time budget is spent.
struct Budget {
  Clock::time_point deadline;
  bool expired() const { return Clock::now() > deadline; }
};

inline CheckResult gf3_circuits() {
  std::size_t bad = 0, wrong_ops = 0;
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y) {
      BoolOpCounter ca, cs;
      const Gf3Word s = gf3_add(gf3_broadcast(x), gf3_broadcast(y), &ca);
      const Gf3Word d = gf3_sub(gf3_broadcast(x), gf3_broadcast(y), &cs);
      for (unsigned lane : {0U, 31U, 63U}) {
        bad += gf3_lane(s, lane) != (x + y) % 3;
        bad += gf3_lane(d, lane) != (x + 3 - y) % 3;
      }
      bad += !gf3_valid(s) || !gf3_valid(d);
      wrong_ops += (ca.ops != 6) + (cs.ops != 6);
    }
  return {"gf3-circuits", bad == 0 && wrong_ops == 0,
          "9 pairs, " + std::to_string(bad) + " mismatches, " + std::to_string(wrong_ops) + " op-count deviations"};
}

inline CheckResult m4rm(Rng& rng, const Budget& budget) {
  std::size_t runs = 0, bad = 0;
  for (; runs < 100 && !budget.expired(); ++runs) {
    const std::size_t m = 1 + rng.uniform(128), k = 1 + rng.uniform(128), n = 1 + rng.uniform(128);
    const auto a = PackedGF2Matrix::random(m, k, rng);
    const auto b = PackedGF2Matrix::random(k, n, rng);
    M4rmStats st;
    const unsigned w = m4rm_default_k(k);
    const auto c = m4rm_mul(a, b, w, &st);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool v = false;
        for (std::size_t t = 0; t < k; ++t) v ^= a.get(i, t) && b.get(t, j);
        bad += v != c.get(i, j);
      }
    for (std::size_t s = 0; s < st.table_xors.size(); ++s) {
      const std::size_t width = std::min<std::size_t>(w, k - s * w);
      bad += st.table_xors[s] != (std::uint64_t{1} << width) - 1;
    }
  }
  return {"m4rm", bad == 0, std::to_string(runs) + " products, " + std::to_string(bad) + " mismatches"};
}

inline CheckResult redq_stress(Rng& rng) {
  static constexpr std::uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 31, 257, 65521};
  std::size_t bad = 0;
  const std::size_t draws = 10000;
  for (std::size_t t = 0; t < draws; ++t) {
    const std::uint64_t p = primes[rng.uniform(std::size(primes))];
    const std::uint64_t q = std::bit_ceil(p + 1) << rng.uniform(4);
    const std::size_t d = 1 + rng.uniform(6);
    std::vector<std::uint64_t> digits(d);
    for (auto& x : digits) x = rng.uniform(q);
    const auto r = redq_digits(digits, p, q);
    for (std::size_t i = 0; i < d; ++i) bad += r.digits[i] != digits[i] % p;
  }
  return {"redq", bad == 0, std::to_string(draws) + " draws, " + std::to_string(bad) + " digit mismatches"};
}

inline CheckResult fgdp(Rng& rng) {
  static constexpr std::pair<std::uint64_t, unsigned> fields[] = {{2, 8}, {3, 5}, {5, 3}, {7, 4}, {2, 12}, {13, 3}};
  std::size_t runs = 0, bad = 0;
  for (auto [p, k] : fields) {
    const ExtField e(p, k, rng);
    for (int t = 0; t < 20; ++t, ++runs) {
      const std::size_t n = 1 + rng.uniform(64);
      std::vector<ExtField::Element> v1(n), v2(n);
      for (auto& x : v1) x = e.random(rng);
      for (auto& x : v2) x = e.random(rng);
      ExtField::Element direct = e.zero();
      for (std::size_t i = 0; i < n; ++i) direct = e.add(direct, e.mul(v1[i], v2[i]));
      bad += fgdp_dot(e, v1, v2) != direct;
    }
  }
  return {"fgdp", bad == 0, std::to_string(runs) + " dot products, " + std::to_string(bad) + " mismatches"};
}

inline CheckResult multiplication(Rng& rng, const Budget& budget) {
  static constexpr std::uint64_t primes[] = {3, 5, 65521, 2147483647};
  std::size_t runs = 0, bad = 0;
  for (; runs < 1000 && !budget.expired(); ++runs) {
    const PrimeField f(primes[runs % std::size(primes)]);
    const std::size_t m = 1 + rng.uniform(64), k = 1 + rng.uniform(64), n = 1 + rng.uniform(64);
    const DenseMatrix a = DenseMatrix::random(f, m, k, rng);
    const DenseMatrix b = DenseMatrix::random(f, k, n, rng);
    const DenseMatrix ref = gemm_classic(a, b);
    bad += fgemm(a, b) != ref;
    for (unsigned l : {1U, 2U}) {
      MulConfig cfg;
      cfg.algorithm = MulAlgorithm::Strassen;
      cfg.strassen_threshold = 4;
      cfg.max_levels = l;
      bad += gemm_strassen(a, b, cfg) != ref;
    }
  }
  return {"multiplication", bad == 0, std::to_string(runs) + " instances, " + std::to_string(bad) + " mismatches"};
}

inline CheckResult elimination(Rng& rng, const Budget& budget) {
  static constexpr std::uint64_t primes[] = {2, 3, 7, 65521};
  std::size_t runs = 0, bad = 0;
  for (; runs < 1000 && !budget.expired(); ++runs) {
    const PrimeField f(primes[runs % std::size(primes)]);
    const std::size_t m = rng.uniform(40), n = rng.uniform(40);
    const std::size_t r = std::min(m, n) == 0 ? 0 : rng.uniform(std::min(m, n) + 1);
    const DenseMatrix a = random_matrix_with_rank(m, n, r, f, rng);
    const PleFactors pf = ple(a);
    bad += pf.rank != r || pf.reconstruct() != a;
    const EchelonForm e = row_echelon(a);
    bad += gemm_classic(e.X, a) != e.E || naive_rank(e.X) != m;
    const ReducedEchelonForm rr = reduced_row_echelon(a);
    bad += gemm_classic(rr.Y, a) != rr.R;
  }
  return {"elimination", bad == 0, std::to_string(runs) + " matrices, " + std::to_string(bad) + " failures"};
}

inline CheckResult charpoly(Rng& rng, const Budget& budget) {
  static constexpr std::uint64_t primes[] = {2, 3, 7, 65521};
  std::size_t runs = 0, bad = 0;
  for (; runs < 400 && !budget.expired(); ++runs) {
    const PrimeField f(primes[runs % std::size(primes)]);
    const std::size_t n = 1 + rng.uniform(16);
    const DenseMatrix a = DenseMatrix::random(f, n, n, rng);
    const Polynomial c = dense_charpoly(a);
    const Polynomial mp = dense_minpoly(a);
    const Vector v = f.random_vector(n, rng);
    bad += static_cast<std::size_t>(c.degree()) != n || !c.is_monic();
    bad += !mp.divides(c);
    for (auto x : poly_apply(c, a, v)) bad += x != 0;
    for (auto x : poly_apply(mp, a, v)) bad += x != 0;
    bad += (n % 2 ? f.neg(c[0]) : c[0]) != determinant(a);
  }
  return {"charpoly", bad == 0, std::to_string(runs) + " matrices, " + std::to_string(bad) + " failures"};
}

inline CheckResult blackbox(Rng& rng, const Budget& budget) {
  const PrimeField f(2147483647);
  std::size_t runs = 0, bad = 0;
  for (; runs < 100 && !budget.expired(); ++runs) {
    const std::size_t n = 20, r = n - rng.uniform(4);
    const DenseMatrix a = random_matrix_with_rank(n, n, r, f, rng);
    const DenseBlackbox bb(a);
    bad += minpoly_montecarlo(bb, 2, rng.next()).first != dense_minpoly(a);
    bad += blackbox_rank(bb, rng.next()).rank != r;
    const BlackboxDet d = blackbox_det(bb, rng.next());
    bad += !d.certified || d.value != determinant(a);
    const Vector x0 = f.random_vector(n, rng);
    const Vector b = bb.apply(x0);
    const BlackboxSolution s = lanczos_solve(bb, b, rng.next());
    if (s.x) bad += bb.apply(*s.x) != b;
  }
  return {"blackbox", bad == 0, std::to_string(runs) + " operators, " + std::to_string(bad) + " failures"};
}

inline CheckResult sparse(Rng& rng, const Budget& budget) {
  static constexpr std::uint64_t primes[] = {3, 65521};
  std::size_t runs = 0, bad = 0;
  for (; runs < 200 && !budget.expired(); ++runs) {
    const PrimeField f(primes[runs % std::size(primes)]);
    const std::size_t n = 1 + rng.uniform(60);
    const SparseMatrix a = random_sparse(f, n, n, 0.02 + 0.1 * rng.uniform_real(), rng);
    const DenseMatrix d = a.to_dense();
    const std::size_t rk = rank(d);
    const Element det = determinant(d);
    const SparseElimination e = reordered_elimination(a);
    const SparseElimination h = hybrid_elimination(a, 0.2);
    bad += e.rank != rk || h.rank != rk || *e.det != det || *h.det != det;
  }
  return {"sparse", bad == 0, std::to_string(runs) + " matrices, " + std::to_string(bad) + " failures"};
}

}  // namespace selftest

/// Exhaustive tiny-field circuits, REDQ stress, and a time-boxed slice of
/// the randomized oracle checks.
inline std::vector<CheckResult> run_selftest(std::uint64_t seed, double slice_seconds = 30.0) {
  using namespace selftest;
  Rng rng(seed);
  std::vector<CheckResult> out;
  out.push_back(gf3_circuits());
  out.push_back(redq_stress(rng));
  out.push_back(fgdp(rng));
  const auto per_check = std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(slice_seconds / 6));
  auto next_budget = [&] { return Budget{Clock::now() + per_check}; };
  out.push_back(m4rm(rng, next_budget()));
  out.push_back(multiplication(rng, next_budget()));
  out.push_back(elimination(rng, next_budget()));
  out.push_back(charpoly(rng, next_budget()));
  out.push_back(blackbox(rng, next_budget()));
  out.push_back(sparse(rng, next_budget()));
  return out;
}

}  // namespace ffla::cli

#endif  // FFLA_CLI_SELFTEST_HPP
