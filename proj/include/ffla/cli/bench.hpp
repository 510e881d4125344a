#ifndef FFLA_CLI_BENCH_HPP
#define FFLA_CLI_BENCH_HPP

#include <cmath>
#include <sstream>
#include <vector>

#include "ffla/cli/config.hpp"
#include "ffla/cli/json.hpp"
#include "ffla/elim/derived.hpp"
#include "ffla/elim/echelon.hpp"
#include "ffla/field/ext_field.hpp"
#include "ffla/matrix/random.hpp"
#include "ffla/mm/classic.hpp"
#include "ffla/mm/strassen.hpp"
#include "ffla/sparse/elimination.hpp"
#include "ffla/tiny/fgdp.hpp"

namespace ffla::cli {

/// Random n x n upper (or lower) triangle with a nonzero diagonal.
inline DenseMatrix random_triangle(const PrimeField& f, std::size_t n, Uplo uplo, Rng& rng) {
  DenseMatrix t(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        t(i, j) = f.random_nonzero(rng);
      else if ((uplo == Uplo::Upper) == (j > i))
        t(i, j) = f.random(rng);
    }
  return t;
}

/// Each entry nonzero with probability `density`.
inline SparseMatrix random_sparse(const PrimeField& f, std::size_t m, std::size_t n, double density, Rng& rng) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng.uniform_real() < density) t.push_back({i, j, f.random_nonzero(rng)});
  return SparseMatrix::from_triplets(f, m, n, std::move(t));
}

/// Nonzero diagonal plus a full first row and first column.
inline SparseMatrix arrow_matrix(const PrimeField& f, std::size_t n, Rng& rng) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i) {
    t.push_back({i, i, f.random_nonzero(rng)});
    if (i > 0) {
      t.push_back({0, i, f.random_nonzero(rng)});
      t.push_back({i, 0, f.random_nonzero(rng)});
    }
  }
  return SparseMatrix::from_triplets(f, n, n, std::move(t));
}

/// Strassen-Winograd base-case counts per recursion level.
inline Outcome bench_mul(const CliConfig& cfg, std::size_t n) {
  const PrimeField f(cfg.field.p);
  Rng rng(cfg.seed);
  const DenseMatrix a = DenseMatrix::random(f, n, n, rng);
  const DenseMatrix b = DenseMatrix::random(f, n, n, rng);
  const DenseMatrix ref = gemm_classic(a, b);
  std::vector<unsigned> levels = cfg.levels;
  if (levels.empty()) levels = {0, 1, 2};

  Outcome o;
  o.algorithm = "strassen-winograd";
  Json rows = Json::array();
  std::ostringstream text;
  text << "level planned base_products base_multiplications expected ratio_to_classic agrees\n";
  for (unsigned l : levels) {
    OpCounter c;
    MulConfig m = cfg.mul;
    m.algorithm = MulAlgorithm::Strassen;
    m.max_levels = l;
    m.counter = &c;
    const DenseMatrix prod = gemm_strassen(a, b, m);
    const unsigned planned = detail::planned_levels(n, n, n, l, m.strassen_threshold);
    std::uint64_t expected = 1;
    for (unsigned i = 0; i < planned; ++i) expected *= 7;
    const std::uint64_t side = n >> planned;
    expected *= static_cast<std::uint64_t>(side) * side * side;
    const std::uint64_t full = static_cast<std::uint64_t>(n) * n * n;
    const double ratio = static_cast<double>(c.base_multiplications) / static_cast<double>(full);
    rows.push_back(Json{{"level", l},
                        {"planned_levels", planned},
                        {"base_products", c.base_products},
                        {"base_multiplications", c.base_multiplications},
                        {"expected_base_multiplications", expected},
                        {"ratio_to_classic", ratio},
                        {"agrees_with_classic", prod == ref}});
    text << l << ' ' << planned << ' ' << c.base_products << ' ' << c.base_multiplications << ' ' << expected << ' '
         << ratio << ' ' << (prod == ref ? "yes" : "no") << '\n';
    if (prod != ref) o.exit_code = 1;
  }
  o.result = Json{{"kind", "mul"}, {"n", n}, {"strassen_threshold", cfg.mul.strassen_threshold}, {"levels", rows}};
  o.text = text.str();
  return o;
}

/// Leading constants of the elimination kernels: field operations / n^3.
inline Outcome bench_elim(const CliConfig& cfg, std::size_t n) {
  const PrimeField f(cfg.field.p);
  Rng rng(cfg.seed);
  const DenseMatrix a = random_nonsingular(n, f, rng);
  const DenseMatrix b = DenseMatrix::random(f, n, n, rng);
  const DenseMatrix u = random_triangle(f, n, Uplo::Upper, rng);
  const DenseMatrix l = random_triangle(f, n, Uplo::Lower, rng);
  const double n3 = std::pow(static_cast<double>(n), 3);

  Outcome o;
  o.algorithm = "classic";
  Json rows = Json::array();
  std::ostringstream text;
  text << "kernel field_mul field_ops constant target\n";
  auto measure = [&](const char* name, double target, auto&& run) {
    OpCounter c;
    MulConfig m = cfg.mul;
    m.algorithm = MulAlgorithm::Classic;
    m.counter = &c;
    run(m);
    const double k = static_cast<double>(c.field_ops()) / n3;
    rows.push_back(Json{{"kernel", name},
                        {"field_mul", c.field_mul},
                        {"field_ops", c.field_ops()},
                        {"constant", k},
                        {"target", target}});
    text << name << ' ' << c.field_mul << ' ' << c.field_ops() << ' ' << k << ' ' << target << '\n';
  };
  measure("gemm", 2.0, [&](const MulConfig& m) { (void)gemm(a, b, m); });
  measure("trsm", 1.0, [&](const MulConfig& m) { (void)trsm({Side::Left, Uplo::Upper, Diag::NonUnit}, u, b, m); });
  measure("trtri", 1.0 / 3, [&](const MulConfig& m) { (void)trtri(u, Uplo::Upper, Diag::NonUnit, m); });
  measure("trtrm", 2.0 / 3, [&](const MulConfig& m) { (void)trtrm(u, l, Diag::NonUnit, Diag::NonUnit, m); });
  measure("ple", 2.0 / 3, [&](const MulConfig& m) { (void)ple(a, m); });
  measure("row_echelon", 1.0, [&](const MulConfig& m) { (void)row_echelon(a, m); });
  measure("reduced_row_echelon", 2.0, [&](const MulConfig& m) { (void)reduced_row_echelon(a, m); });
  o.result = Json{{"kind", "elim"}, {"n", n}, {"unit", "field_mul + field_add, divided by n^3"}, {"kernels", rows}};
  o.text = text.str();
  return o;
}

/// Fill-in under both pivoting policies, on a random matrix and an arrow.
inline Outcome bench_sparse(const CliConfig& cfg, std::size_t n, double density) {
  const PrimeField f(cfg.field.p);
  Rng rng(cfg.seed);
  const SparseMatrix r = random_sparse(f, n, n, density, rng);
  const SparseMatrix arrow = arrow_matrix(f, n, rng);

  Outcome o;
  o.algorithm = "sparse";
  Json rows = Json::array();
  std::ostringstream text;
  text << "matrix policy rank fill_in created cancellations max_active_nnz switch_step\n";
  auto run = [&](const char* name, const SparseMatrix& a, PivotPolicy pol, std::optional<double> tau) {
    SparseEliminationOptions opt;
    opt.policy = pol;
    opt.dense = cfg.mul;
    const SparseElimination e =
        tau ? hybrid_elimination(a, *tau, cfg.mem_budget, opt) : reordered_elimination(a, opt);
    const std::string policy = tau ? "hybrid" : (pol == PivotPolicy::Reordering ? "reordering" : "first_nonzero");
    Json row{{"matrix", name}, {"policy", policy}, {"rank", e.rank}, {"fill", to_json(e.fill)}};
    if (e.switch_step) row["switch_step"] = *e.switch_step;
    rows.push_back(std::move(row));
    text << name << ' ' << policy << ' ' << e.rank << ' ' << e.fill.fill_in << ' ' << e.fill.created << ' '
         << e.fill.cancellations << ' ' << e.fill.max_active_nnz << ' '
         << (e.switch_step ? std::to_string(*e.switch_step) : "-") << '\n';
  };
  for (const auto& [name, m] : {std::pair<const char*, const SparseMatrix*>{"random", &r}, {"arrow", &arrow}}) {
    run(name, *m, PivotPolicy::Reordering, std::nullopt);
    run(name, *m, PivotPolicy::FirstNonzero, std::nullopt);
    run(name, *m, PivotPolicy::Reordering, cfg.tau);
  }
  o.result = Json{{"kind", "sparse"}, {"n", n}, {"density", density}, {"tau", cfg.tau}, {"runs", rows}};
  o.text = text.str();
  return o;
}

/// Compressed dot products over GF(p^k) against the table arithmetic.
inline Outcome bench_fgdp(const CliConfig& cfg, std::size_t n, std::size_t trials) {
  Rng rng(cfg.seed);
  const ExtField e(cfg.field.p, cfg.field.k, rng);
  const std::uint64_t q = fgdp_required_q(n, e.degree(), e.characteristic());
  std::size_t agree = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<ExtField::Element> v1(n), v2(n);
    for (auto& x : v1) x = e.random(rng);
    for (auto& x : v2) x = e.random(rng);
    ExtField::Element direct = e.zero();
    for (std::size_t i = 0; i < n; ++i) direct = e.add(direct, e.mul(v1[i], v2[i]));
    agree += fgdp_dot(e, v1, v2, q) == direct;
  }
  Outcome o;
  o.algorithm = "fgdp";
  o.result = Json{{"kind", "fgdp"},
                  {"field", cfg.field.to_string()},
                  {"modulus", e.modulus().to_string()},
                  {"n", n},
                  {"q", q},
                  {"accumulator_bits", fgdp_accumulator_bits(e.degree(), q)},
                  {"trials", trials},
                  {"agree", agree}};
  std::ostringstream text;
  text << "modulus " << e.modulus().to_string() << "\nq " << q << "\naccumulator_bits "
       << fgdp_accumulator_bits(e.degree(), q) << "\nagree " << agree << '/' << trials << '\n';
  o.text = text.str();
  if (agree != trials) o.exit_code = 1;
  return o;
}

}  // namespace ffla::cli

#endif  // FFLA_CLI_BENCH_HPP
