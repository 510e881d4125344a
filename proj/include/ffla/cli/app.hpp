#ifndef FFLA_CLI_APP_HPP
#define FFLA_CLI_APP_HPP

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffla/blackbox/solve.hpp"
#include "ffla/cli/bench.hpp"
#include "ffla/cli/config.hpp"
#include "ffla/cli/json.hpp"
#include "ffla/cli/selftest.hpp"
#include "ffla/elim/echelon.hpp"
#include "ffla/poly/charpoly.hpp"

namespace ffla::cli {

namespace detail {

struct LoadedMatrix {
  AnyMatrix matrix;
  MatrixFormat format;

  MatrixStats stats() const {
    if (const auto* s = std::get_if<SparseMatrix>(&matrix)) return {s->rows(), s->cols(), s->nnz()};
    const auto& d = std::get<DenseMatrix>(matrix);
    std::size_t nnz = 0;
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) nnz += d(i, j) != 0;
    return {d.rows(), d.cols(), nnz};
  }
};

/// Reads `path` ("-" for standard input) in the configured format, or the
/// one implied by the extension.
inline LoadedMatrix load_matrix(const std::string& path, const CliConfig& cfg, const PrimeField& f) {
  if (path == "-" && !cfg.format) throw ConfigError("reading standard input needs --format");
  const MatrixFormat fmt = cfg.format ? *cfg.format : format_from_path(path);
  if (path == "-") return {read_matrix(std::cin, fmt, f), fmt};
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return {read_matrix(in, fmt, f), fmt};
}

inline Vector load_vector(const std::string& path, const PrimeField& f) {
  if (path == "-") return read_vector(std::cin, f);
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return read_vector(in, f);
}

inline PrimeField prime_field(const CliConfig& cfg) {
  if (cfg.field.k != 1)
    throw ConfigError("this command works over a prime field; GF(" + cfg.field.to_string() + ") is only for bench fgdp");
  return PrimeField(cfg.field.p);
}

/// Picks the route for a command and logs the decision.
inline Route choose_route(const CliConfig& cfg, const std::string& command, const MatrixStats& s,
                          const std::vector<Route>& supported, std::ostream& log) {
  if (cfg.route != Route::Auto) {
    if (std::find(supported.begin(), supported.end(), cfg.route) == supported.end())
      throw ConfigError(command + " does not support the " + std::string(route_name(cfg.route)) + " route");
    return cfg.route;
  }
  const RouteDecision d = auto_route(s, cfg.mem_budget);
  const Route r = *fallback_route(d.route, supported);
  log << "route: " << route_name(d.route) << " (" << d.reason << ")";
  if (r != d.route) log << "; " << command << " runs " << route_name(r) << " instead";
  log << '\n';
  return r;
}

inline std::string matrix_text(const DenseMatrix& a) {
  std::ostringstream os;
  write_dense_text(a, os);
  return os.str();
}

inline std::string vector_text(std::span<const Element> v) {
  std::ostringstream os;
  write_vector(v, os);
  return os.str();
}

inline std::string pivots_text(const std::vector<std::size_t>& p) {
  std::string s = "pivots";
  for (auto c : p) s += ' ' + std::to_string(c);
  return s + '\n';
}

inline Json pivots_json(const std::vector<std::size_t>& p) {
  Json j = Json::array();
  for (auto c : p) j.push_back(c);
  return j;
}

inline SparseEliminationOptions sparse_options(const CliConfig& cfg) {
  SparseEliminationOptions opt;
  opt.memory_budget = cfg.mem_budget;
  opt.dense = cfg.mul;
  return opt;
}

inline SparseElimination eliminate(const SparseMatrix& a, const CliConfig& cfg, Route r) {
  const SparseEliminationOptions opt = sparse_options(cfg);
  if (r == Route::Hybrid) return hybrid_elimination(a, cfg.tau, cfg.mem_budget, opt);
  return reordered_elimination(a, opt);
}

inline Json elimination_counts(const SparseElimination& e) {
  Json j = to_json(e.fill);
  if (e.switch_step) {
    j["switch_step"] = *e.switch_step;
    j["dense_rows"] = e.dense_rows;
    j["dense_cols"] = e.dense_cols;
    j["dense_rank"] = e.dense_rank;
  }
  return j;
}

inline std::string report_text(const Json& r) {
  std::ostringstream os;
  os << "# probability_report algorithm=" << r["algorithm"].get<std::string>()
     << " bound=" << r["bound"].get<std::string>() << " formula=\"" << r["bound_formula"].get<std::string>()
     << "\" sample_set_size=" << r["sample_set_size"] << " trials=" << r["trials"]
     << " successes=" << r["successes"];
  if (r.contains("certified")) os << " certified=" << r["certified"];
  os << '\n';
  if (r.contains("warning")) os << "# warning: " << r["warning"].get<std::string>() << '\n';
  return os.str();
}

}  // namespace detail

/// Parsed command line plus the per-command extras.
struct Invocation {
  CliConfig cfg;
  std::string command;
  std::vector<std::string> files;
  std::string kernel = "fgemm";
  std::size_t trials = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  double density = 0.05;
  double slice_seconds = 30.0;
};

namespace detail {

inline Outcome cmd_mul(const Invocation& inv, std::ostream&) {
  if (inv.files.size() != 2) throw ConfigError("mul needs two matrix files");
  const PrimeField f = prime_field(inv.cfg);
  const LoadedMatrix a = load_matrix(inv.files[0], inv.cfg, f);
  const LoadedMatrix b = load_matrix(inv.files[1], inv.cfg, f);
  OpCounter c;
  MulConfig m = inv.cfg.mul;
  m.counter = &c;
  if (inv.kernel == "classic")
    m.algorithm = MulAlgorithm::Classic;
  else if (inv.kernel == "fgemm")
    m.algorithm = MulAlgorithm::Fgemm;
  else if (inv.kernel == "strassen")
    m.algorithm = MulAlgorithm::Strassen;
  else
    throw ConfigError("unknown kernel '" + inv.kernel + "'");
  if (inv.cfg.route != Route::Auto && inv.cfg.route != Route::Dense) throw ConfigError("mul only runs dense");
  const DenseMatrix prod = gemm(to_dense(a.matrix), to_dense(b.matrix), m);
  Outcome o;
  o.algorithm = "dense/" + inv.kernel;
  o.result = to_json(prod);
  std::ostringstream os;
  write_matrix(prod, os, a.format);
  o.text = os.str();
  o.op_counts = to_json(c);
  return o;
}

inline Outcome cmd_rank_or_det(const Invocation& inv, std::ostream& log, bool det) {
  if (inv.files.size() != 1) throw ConfigError(inv.command + " needs one matrix file");
  const PrimeField f = prime_field(inv.cfg);
  const LoadedMatrix a = load_matrix(inv.files[0], inv.cfg, f);
  const MatrixStats s = a.stats();
  if (det) ffla::detail::require_dims(s.rows == s.cols, "determinant of a non-square matrix");
  const Route r = choose_route(inv.cfg, inv.command, s, {Route::Dense, Route::Sparse, Route::Hybrid, Route::Blackbox},
                               log);
  Outcome o;
  o.algorithm = std::string(route_name(r));
  switch (r) {
    case Route::Dense: {
      OpCounter c;
      MulConfig m = inv.cfg.mul;
      m.counter = &c;
      const DenseMatrix d = to_dense(a.matrix);
      if (det)
        o.result = determinant(d, m);
      else
        o.result = ple(d, m).rank;
      o.op_counts = to_json(c);
      break;
    }
    case Route::Sparse:
    case Route::Hybrid: {
      const SparseElimination e = eliminate(to_sparse(a.matrix), inv.cfg, r);
      if (det)
        o.result = *e.det;
      else
        o.result = e.rank;
      o.op_counts = elimination_counts(e);
      break;
    }
    default: {
      const SparseMatrix sp = to_sparse(a.matrix);
      const SparseBlackbox bb(sp);
      if (det) {
        const BlackboxDet d = blackbox_det(bb, inv.cfg.seed);
        o.result = d.value;
        Json rep = to_json(d.report);
        rep["certified"] = d.certified;
        o.probability_report = rep;
      } else {
        const BlackboxRank rk = blackbox_rank(bb, inv.cfg.seed, inv.trials == 0 ? 1 : inv.trials);
        o.result = rk.rank;
        o.probability_report = to_json(rk.report);
      }
      o.op_counts = Json{{"applications", bb.applications()}};
      break;
    }
  }
  o.text = o.result.dump() + '\n';
  return o;
}

inline Outcome cmd_solve(const Invocation& inv, std::ostream& log) {
  if (inv.files.size() != 2) throw ConfigError("solve needs a matrix file and a right-hand side file");
  const PrimeField f = prime_field(inv.cfg);
  const LoadedMatrix a = load_matrix(inv.files[0], inv.cfg, f);
  const Vector b = load_vector(inv.files[1], f);
  const MatrixStats s = a.stats();
  ffla::detail::require_dims(b.size() == s.rows, "right-hand side length differs from the row count");
  const Route r = choose_route(inv.cfg, "solve", s, {Route::Dense, Route::Sparse, Route::Blackbox}, log);
  Outcome o;
  o.algorithm = std::string(route_name(r));
  auto inconsistent = [&](std::optional<std::size_t> row) {
    o.result = Json{{"status", "inconsistent"}};
    if (row) o.result["equation"] = *row;
    o.text = "inconsistent system\n";
    o.exit_code = 1;
  };
  auto solved = [&](const Vector& x) {
    o.result = Json{{"status", "solved"}, {"x", to_json(std::span<const Element>(x))}};
    o.text = vector_text(x);
  };
  if (r == Route::Blackbox) {
    const SparseMatrix sp = to_sparse(a.matrix);
    const SparseBlackbox bb(sp);
    BlackboxSolution sol;
    if (f.characteristic() != 2) {
      o.algorithm = "blackbox/lanczos";
      sol = lanczos_solve(bb, b, inv.cfg.seed);
    } else {
      o.algorithm = "blackbox/wiedemann";
      sol = wiedemann_solve(bb, b, inv.cfg.seed);
    }
    if (sol.x) {
      solved(*sol.x);
      o.result["attempts"] = sol.attempts;
    } else {
      o.result = Json{{"status", "failed"}, {"reason", sol.failure}, {"attempts", sol.attempts}};
      o.text = "no verified solution: " + sol.failure + '\n';
      o.exit_code = 1;
    }
    o.op_counts = Json{{"applications", bb.applications()}};
    return o;
  }
  const SolveResult res = r == Route::Dense ? solve(to_dense(a.matrix), b, inv.cfg.mul) : sparse_solve(to_sparse(a.matrix), b);
  if (res.x)
    solved(*res.x);
  else
    inconsistent(res.inconsistent_row);
  o.result["rank"] = res.rank;
  return o;
}

inline Outcome cmd_echelon(const Invocation& inv, std::ostream& log, bool reduced) {
  if (inv.files.size() != 1) throw ConfigError(inv.command + " needs one matrix file");
  const PrimeField f = prime_field(inv.cfg);
  const LoadedMatrix a = load_matrix(inv.files[0], inv.cfg, f);
  choose_route(inv.cfg, inv.command, a.stats(), {Route::Dense}, log);
  OpCounter c;
  MulConfig m = inv.cfg.mul;
  m.counter = &c;
  const DenseMatrix d = to_dense(a.matrix);
  Outcome o;
  o.algorithm = "dense";
  if (reduced) {
    const ReducedEchelonForm e = reduced_row_echelon(d, m);
    o.result = Json{{"rank", e.rank}, {"pivot_cols", pivots_json(e.pivot_cols)}, {"R", to_json(e.R)}, {"Y", to_json(e.Y)}};
    o.text = "rank " + std::to_string(e.rank) + '\n' + pivots_text(e.pivot_cols) + "R\n" + matrix_text(e.R) + "Y\n" +
             matrix_text(e.Y);
  } else {
    const EchelonForm e = row_echelon(d, m);
    o.result = Json{{"rank", e.rank}, {"pivot_cols", pivots_json(e.pivot_cols)}, {"E", to_json(e.E)}, {"X", to_json(e.X)}};
    o.text = "rank " + std::to_string(e.rank) + '\n' + pivots_text(e.pivot_cols) + "E\n" + matrix_text(e.E) + "X\n" +
             matrix_text(e.X);
  }
  o.op_counts = to_json(c);
  return o;
}

inline Outcome cmd_poly(const Invocation& inv, std::ostream& log, bool charpoly) {
  if (inv.files.size() != 1) throw ConfigError(inv.command + " needs one matrix file");
  const PrimeField f = prime_field(inv.cfg);
  const LoadedMatrix a = load_matrix(inv.files[0], inv.cfg, f);
  const MatrixStats s = a.stats();
  ffla::detail::require_dims(s.rows == s.cols, "polynomials of a non-square matrix");
  const std::vector<Route> supported =
      charpoly ? std::vector<Route>{Route::Dense} : std::vector<Route>{Route::Dense, Route::Blackbox};
  const Route r = choose_route(inv.cfg, inv.command, s, supported, log);
  Outcome o;
  o.algorithm = std::string(route_name(r));
  Polynomial p = Polynomial::one(f);
  if (r == Route::Dense) {
    const DenseMatrix d = to_dense(a.matrix);
    p = charpoly ? dense_charpoly(d) : dense_minpoly(d);
  } else {
    const SparseMatrix sp = to_sparse(a.matrix);
    const SparseBlackbox bb(sp);
    auto [mp, rep] = minpoly_montecarlo(bb, inv.trials == 0 ? 2 : inv.trials, inv.cfg.seed);
    p = std::move(mp);
    o.probability_report = to_json(rep);
    o.op_counts = Json{{"applications", bb.applications()}};
  }
  o.result = to_json(p);
  o.text = p.to_string() + '\n';
  return o;
}

inline Outcome cmd_nullspace(const Invocation& inv, std::ostream& log) {
  if (inv.files.size() != 1) throw ConfigError("nullspace needs one matrix file");
  const PrimeField f = prime_field(inv.cfg);
  const LoadedMatrix a = load_matrix(inv.files[0], inv.cfg, f);
  const Route r = choose_route(inv.cfg, "nullspace", a.stats(), {Route::Dense, Route::Blackbox}, log);
  Outcome o;
  o.algorithm = std::string(route_name(r));
  if (r == Route::Dense) {
    const DenseMatrix n = nullspace_basis(to_dense(a.matrix), inv.cfg.mul);
    o.result = Json{{"dimension", n.cols()}, {"basis", to_json(n)}};
    o.text = matrix_text(n);
    return o;
  }
  const SparseMatrix sp = to_sparse(a.matrix);
  const SparseBlackbox bb(sp);
  const BlackboxSolution w = nullspace_vector(bb, inv.cfg.seed);
  if (w.x) {
    o.result = Json{{"status", "found"}, {"vector", to_json(std::span<const Element>(*w.x))}, {"attempts", w.attempts}};
    o.text = vector_text(*w.x);
  } else {
    o.result = Json{{"status", "failed"}, {"reason", w.failure}, {"attempts", w.attempts}};
    o.text = "no kernel vector found: " + w.failure + '\n';
    o.exit_code = 1;
  }
  o.op_counts = Json{{"applications", bb.applications()}};
  return o;
}

inline Outcome cmd_invfactor(const Invocation& inv, std::ostream& log) {
  if (inv.files.size() != 1) throw ConfigError("invfactor needs one matrix file");
  if (inv.k == 0) throw ConfigError("invfactor needs --k");
  const PrimeField f = prime_field(inv.cfg);
  const LoadedMatrix a = load_matrix(inv.files[0], inv.cfg, f);
  choose_route(inv.cfg, "invfactor", a.stats(), {Route::Blackbox}, log);
  const SparseMatrix sp = to_sparse(a.matrix);
  const SparseBlackbox bb(sp);
  const InvariantFactor res = invariant_factor(bb, inv.k, inv.cfg.seed, inv.trials == 0 ? 2 : inv.trials);
  Outcome o;
  o.algorithm = "blackbox";
  o.result = to_json(res.factor);
  o.result["index"] = inv.k + 1;
  o.text = res.factor.to_string() + '\n';
  o.probability_report = to_json(res.report);
  o.op_counts = Json{{"applications", bb.applications()}};
  return o;
}

inline Outcome cmd_bench(const Invocation& inv) {
  if (inv.files.size() != 1) throw ConfigError("bench needs a kind: mul, elim, sparse or fgdp");
  const std::string& kind = inv.files[0];
  if (kind == "fgdp") return bench_fgdp(inv.cfg, inv.n ? inv.n : 64, inv.trials ? inv.trials : 100);
  prime_field(inv.cfg);
  if (kind == "mul") return bench_mul(inv.cfg, inv.n ? inv.n : 256);
  if (kind == "elim") return bench_elim(inv.cfg, inv.n ? inv.n : 128);
  if (kind == "sparse") return bench_sparse(inv.cfg, inv.n ? inv.n : 200, inv.density);
  throw ConfigError("unknown bench kind '" + kind + "'");
}

inline Outcome cmd_selftest(const Invocation& inv) {
  const auto checks = run_selftest(inv.cfg.seed, inv.slice_seconds);
  Outcome o;
  o.algorithm = "selftest";
  o.result = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    o.result.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    o.text += (c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail + '\n';
    all = all && c.passed;
  }
  o.exit_code = all ? 0 : 1;
  return o;
}

inline Outcome dispatch(const Invocation& inv, std::ostream& log) {
  const std::string& c = inv.command;
  if (c == "mul") return cmd_mul(inv, log);
  if (c == "rank") return cmd_rank_or_det(inv, log, false);
  if (c == "det") return cmd_rank_or_det(inv, log, true);
  if (c == "solve") return cmd_solve(inv, log);
  if (c == "echelon") return cmd_echelon(inv, log, false);
  if (c == "rref") return cmd_echelon(inv, log, true);
  if (c == "minpoly") return cmd_poly(inv, log, false);
  if (c == "charpoly") return cmd_poly(inv, log, true);
  if (c == "nullspace") return cmd_nullspace(inv, log);
  if (c == "invfactor") return cmd_invfactor(inv, log);
  if (c == "bench") return cmd_bench(inv);
  if (c == "selftest") return cmd_selftest(inv);
  throw ConfigError("unknown command '" + c + "'");
}

inline void emit_error(std::ostream& out, std::ostream& err, bool json, const std::string& kind,
                       const std::string& message, int code, std::optional<std::size_t> line = std::nullopt) {
  if (json) {
    Json e{{"kind", kind}, {"message", message}};
    if (line) e["line"] = *line;
    out << Json{{"error", e}, {"exit_code", code}}.dump(2) << '\n';
  } else {
    err << "error: " << message << '\n';
  }
}

}  // namespace detail

/// Runs one command; `args` excludes the program name. Returns the exit
/// code: 0 success, 1 verified failure, 2 usage or input error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact linear algebra over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Invocation inv;
  std::string field = "65521", algo = "auto", format, out_format = "text";
  std::vector<unsigned> levels;
  std::optional<unsigned> beta;
  std::optional<std::size_t> threshold;
  std::string mem_budget;

  app.add_option("--field", field, "p, or p^k for bench fgdp");
  app.add_option("--algo", algo, "dense, blackbox, sparse, hybrid or auto");
  app.add_option("--seed", inv.cfg.seed, "random seed");
  app.add_option("--threads", inv.cfg.threads, "threads for dense products");
  app.add_option("--format", format, "input format: sms, mtx or dense");
  app.add_option("--out", out_format, "output: text or json");
  app.add_option("--strassen-threshold", threshold, "Strassen-Winograd cutoff");
  app.add_option("--levels", levels, "Strassen-Winograd levels (comma separated for bench mul)")->delimiter(',');
  app.add_option("--beta", beta, "accumulator bits");
  app.add_option("--tau", inv.cfg.tau, "hybrid density threshold");
  app.add_option("--mem-budget", mem_budget, "dense-equivalent memory budget, e.g. 1GiB");
  app.add_option("--kernel", inv.kernel, "mul kernel: classic, fgemm or strassen");
  app.add_option("--trials", inv.trials, "projections or trials");
  app.add_option("--k", inv.k, "invfactor: rank of the update");
  app.add_option("--n", inv.n, "bench size");
  app.add_option("--density", inv.density, "bench sparse density");
  app.add_option("--slice", inv.slice_seconds, "selftest: seconds for the sampled checks");
  app.add_flag("--timings", inv.cfg.timings, "add wall-clock timings to the output");

  const char* names[][2] = {{"mul", "C = A B"},
                            {"rank", "rank"},
                            {"det", "determinant"},
                            {"solve", "some x with A x = b"},
                            {"echelon", "row echelon form E = X A"},
                            {"rref", "reduced row echelon form R = Y A"},
                            {"minpoly", "minimal polynomial"},
                            {"charpoly", "characteristic polynomial"},
                            {"nullspace", "right nullspace"},
                            {"invfactor", "(k+1)-th invariant factor"},
                            {"bench", "operation-count benchmarks: mul, elim, sparse, fgdp"},
                            {"selftest", "built-in verification"}};
  for (const auto& [name, help] : names) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", inv.files, "inputs");
    sub->callback([&inv, n = std::string(name)] { inv.command = n; });
  }

  const bool json_hint = [&] {
    for (std::size_t i = 0; i < args.size(); ++i)
      if (args[i] == "--out=json" || (args[i] == "--out" && i + 1 < args.size() && args[i + 1] == "json")) return true;
    return false;
  }();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    detail::emit_error(out, err, json_hint, "usage", e.what(), 2);
    return 2;
  }

  const bool json = out_format == "json";
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    if (out_format != "json" && out_format != "text") throw ConfigError("--out must be text or json");
    inv.cfg.out = json ? OutputFormat::Json : OutputFormat::Text;
    inv.cfg.field = parse_field_spec(field);
    inv.cfg.route = parse_route(algo);
    if (!format.empty()) inv.cfg.format = parse_format(format);
    if (beta) inv.cfg.mul.beta = *beta;
    if (threshold) inv.cfg.mul.strassen_threshold = *threshold;
    inv.cfg.mul.threads = inv.cfg.threads;
    inv.cfg.levels = levels;
    if (levels.size() == 1) inv.cfg.mul.max_levels = levels.front();
    if (!mem_budget.empty()) {
      std::uint64_t v = 0;
      CLI::AsSizeValue conv(false);
      std::string s = mem_budget;
      conv(s);
      if (!CLI::detail::lexical_cast(s, v)) throw ConfigError("bad --mem-budget '" + mem_budget + "'");
      inv.cfg.mem_budget = v;
    }
    inv.cfg.validate();
    o = detail::dispatch(inv, err);
  } catch (const ParseError& e) {
    detail::emit_error(out, err, json, "parse", e.what(), 2, e.line());
    return 2;
  } catch (const SingularError& e) {
    detail::emit_error(out, err, json, "singular", e.what(), 1);
    return 1;
  } catch (const DimensionError& e) {
    detail::emit_error(out, err, json, "dimension", e.what(), 2);
    return 2;
  } catch (const DomainError& e) {
    detail::emit_error(out, err, json, "domain", e.what(), 2);
    return 2;
  } catch (const ConfigError& e) {
    detail::emit_error(out, err, json, "config", e.what(), 2);
    return 2;
  } catch (const CLI::ValidationError& e) {
    detail::emit_error(out, err, json, "usage", e.what(), 2);
    return 2;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (json) {
    Json j;
    j["command"] = inv.command;
    j["field"] = inv.cfg.field.to_string();
    j["algorithm"] = o.algorithm;
    j["result"] = o.result;
    if (o.probability_report) j["probability_report"] = *o.probability_report;
    if (o.op_counts) j["op_counts"] = *o.op_counts;
    j["timings"] = inv.cfg.timings ? Json{{"total_seconds", seconds}} : Json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << o.text;
    if (o.probability_report) out << detail::report_text(*o.probability_report);
    if (inv.cfg.timings) out << "# timings total_seconds=" << seconds << '\n';
  }
  return o.exit_code;
}

}  // namespace ffla::cli

#endif  // FFLA_CLI_APP_HPP
