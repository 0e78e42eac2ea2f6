#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "symkdv/field.hpp"
#include "symkdv/format.hpp"
#include "symkdv/lie.hpp"
#include "symkdv/reductions.hpp"
#include "symkdv/solver.hpp"
#include "symkdv/spectral.hpp"

namespace symkdv::cli {

namespace {

// ----------------------------------------------------------------- helpers

void require_format(const std::string& format) {
  if (format != "csv" && format != "json")
    throw std::invalid_argument("unknown format \"" + format + "\" (expected csv or json)");
}

Eigen::Vector3d parse_triple(const std::string& text, const char* flag) {
  std::istringstream in(text);
  Eigen::Vector3d v;
  char sep1 = 0, sep2 = 0;
  in >> v(0) >> sep1 >> v(1) >> sep2 >> v(2);
  if (!in || sep1 != ',' || sep2 != ',' || !(in >> std::ws).eof())
    throw std::invalid_argument(std::string(flag) +
                                " expects three comma-separated numbers, got \"" + text + "\"");
  return v;
}

// Flags win over the SYMKDV_VARIANT environment variable, which wins over
// the printed-discrete default.
Variant resolve_variant(const std::string& flag_value, bool flag_given) {
  if (flag_given) return variant_from_string(flag_value);
  if (const char* env = std::getenv("SYMKDV_VARIANT"); env != nullptr && *env != '\0')
    return variant_from_string(env);
  return Variant::PrintedDiscrete;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file \"" + path + "\" for writing");
  file << text;
  if (!file) throw std::invalid_argument("failed while writing output file \"" + path + "\"");
}

std::string join_csv(const Eigen::VectorXd& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt_shortest(v(i));
  }
  return out;
}

ProblemKind require_problem(int problem) {
  if (problem == 1) return ProblemKind::Problem1;
  if (problem == 2) return ProblemKind::Problem2;
  throw std::invalid_argument("--problem must be 1 or 2, got " + std::to_string(problem));
}

struct NewtonFlags {
  double tol = 1e-7;
  int max_iters = 50;
  double fd_step = 1e-7;

  NewtonConfig config() const {
    NewtonConfig cfg;
    cfg.abs_tol = tol;
    cfg.max_iters = max_iters;
    cfg.fd_step = fd_step;
    return cfg;
  }
  void attach(CLI::App* sub) {
    sub->add_option("--tol", tol, "Newton residual max-norm tolerance")->capture_default_str();
    sub->add_option("--max-iters", max_iters, "Newton iteration cap")->capture_default_str();
    sub->add_option("--fd-step", fd_step, "finite-difference Jacobian step scale")
        ->capture_default_str();
  }
};

nlohmann::json solution_json(const CollocationSolution& sol) {
  nlohmann::json j = nlohmann::json::parse(residual_table_json(sol));
  j["values"] = std::vector<double>(sol.values.data(), sol.values.data() + sol.values.size());
  return j;
}

// ------------------------------------------------------------- subcommands

int run_nodes(int n, const std::string& format, const std::string& out_path, std::ostream& out) {
  require_format(format);
  const ChebyshevGrid grid = cgl_nodes(n);
  std::string text;
  if (format == "csv") {
    text = join_csv(grid.nodes()) + "\n";
  } else {
    nlohmann::json j = std::vector<double>(grid.nodes().data(), grid.nodes().data() + grid.size());
    text = j.dump() + "\n";
  }
  write_output(text, out_path, out);
  return 0;
}

int run_diffmat(int n, int order, bool literal_diagonal, const std::string& format,
                const std::string& out_path, std::ostream& out) {
  require_format(format);
  const ChebyshevGrid grid = cgl_nodes(n);
  DiffMatrix d = diff_matrix(grid, !literal_diagonal);
  if (order != 1) d = diff_matrix_power(d, order);
  std::string text;
  if (format == "csv") {
    for (Eigen::Index i = 0; i < d.entries.rows(); ++i) {
      text += join_csv(d.entries.row(i));
      text += '\n';
    }
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < d.entries.rows(); ++i)
      rows.push_back(std::vector<double>(d.entries.row(i).begin(), d.entries.row(i).end()));
    nlohmann::json j;
    j["n"] = d.n;
    j["order"] = d.order;
    j["negative_sum_diagonal"] = !literal_diagonal;
    j["entries"] = std::move(rows);
    text = j.dump() + "\n";
  }
  write_output(text, out_path, out);
  return 0;
}

int run_solve(int problem, int n, const std::vector<double>& ts, Variant variant,
              const NewtonFlags& newton, const std::string& format, const std::string& out_path,
              std::ostream& out) {
  require_format(format);
  if (format != "json") throw std::invalid_argument("solve emits json only; use `table` for csv");
  const ProblemKind kind = require_problem(problem);

  std::vector<CollocationSolution> sols;
  if (kind == ProblemKind::Problem1) {
    sols.push_back(solve_reduced({kind, n, 1.0, variant}, newton.config()));
  } else {
    for (double t : ts) sols.push_back(solve_reduced({kind, n, t, variant}, newton.config()));
  }

  nlohmann::json doc;
  doc["problem"] = problem;
  nlohmann::json arr = nlohmann::json::array();
  for (const CollocationSolution& sol : sols) arr.push_back(solution_json(sol));
  doc["solutions"] = std::move(arr);
  write_output(doc.dump(2) + "\n", out_path, out);

  const bool all_converged =
      std::all_of(sols.begin(), sols.end(), [](const auto& s) { return s.newton.converged; });
  return all_converged ? 0 : 2;
}

int run_table(int problem, int n, double t, Variant variant, const NewtonFlags& newton,
              const std::string& format, const std::string& out_path, std::ostream& out) {
  require_format(format);
  const ProblemKind kind = require_problem(problem);
  const CollocationSolution sol = solve_reduced({kind, n, t, variant}, newton.config());
  write_output(format == "csv" ? residual_table_csv(sol) : residual_table_json(sol), out_path, out);
  return sol.newton.converged ? 0 : 2;
}

int run_reconstruct(int problem, int n, std::vector<double> ts, Variant variant,
                    const NewtonFlags& newton, std::optional<double> x_min,
                    std::optional<double> x_max, int samples, const std::string& format,
                    const std::string& out_path, std::ostream& out) {
  require_format(format);
  const ProblemKind kind = require_problem(problem);
  if (samples < 1) throw std::invalid_argument("--samples must be >= 1");
  const double lo = x_min.value_or(kind == ProblemKind::Problem1 ? 0.2 : -1.0);
  const double hi = x_max.value_or(1.0);
  if (samples > 1 && !(hi > lo))
    throw std::invalid_argument("--x-max (" + fmt_shortest(hi) + ") must exceed --x-min (" +
                                fmt_shortest(lo) + ")");
  Eigen::VectorXd x_grid = Eigen::VectorXd::Constant(1, lo);
  if (samples > 1) x_grid = Eigen::VectorXd::LinSpaced(samples, lo, hi);

  bool converged = true;
  std::vector<SpaceTimeField> slices;
  if (kind == ProblemKind::Problem1) {
    const CollocationSolution sol = solve_reduced({kind, n, 1.0, variant}, newton.config());
    converged = sol.newton.converged;
    for (double t : ts) slices.push_back(reconstruct_problem1(sol, x_grid, t));
  } else {
    for (double t : ts) {
      const CollocationSolution sol = solve_reduced({kind, n, t, variant}, newton.config());
      converged = converged && sol.newton.converged;
      slices.push_back(reconstruct_problem2(sol, x_grid, t));
    }
  }
  const SpaceTimeField field = merge_time_slices(slices);
  write_output(format == "csv" ? emit_plot_csv(field) : emit_plot_json(field), out_path, out);
  return converged ? 0 : 2;
}

// ------------------------------------------------------------------- lie

int run_lie_commutator(const std::string& a, const std::string& b, const std::string& format,
                       std::ostream& out) {
  require_format(format);
  const AlgebraElement r = commutator(parse_triple(a, "--a"), parse_triple(b, "--b"));
  if (format == "csv")
    out << join_csv(r) << "\n";
  else
    out << nlohmann::json(std::vector<double>{r(0), r(1), r(2)}).dump() << "\n";
  return 0;
}

int run_lie_adjoint(int i, double eps, std::optional<int> j, std::optional<int> terms,
                    const std::string& format, std::ostream& out) {
  require_format(format);
  if (j.has_value() != terms.has_value())
    throw std::invalid_argument("--j and --terms must be given together (Lie-series mode)");
  if (j) {
    const AlgebraElement r = adjoint_lie_series(i, *j, eps, *terms);
    if (format == "csv")
      out << join_csv(r) << "\n";
    else
      out << nlohmann::json(std::vector<double>{r(0), r(1), r(2)}).dump() << "\n";
    return 0;
  }
  const AdjointMatrix m = adjoint_closed_form(i, eps);
  if (format == "csv") {
    for (int row = 0; row < 3; ++row) out << join_csv(m.entries.row(row)) << "\n";
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (int row = 0; row < 3; ++row)
      rows.push_back(std::vector<double>(m.entries.row(row).begin(), m.entries.row(row).end()));
    nlohmann::json doc;
    doc["generator"] = m.generator;
    doc["eps"] = m.eps;
    doc["entries"] = std::move(rows);
    out << doc.dump() << "\n";
  }
  return 0;
}

int run_lie_reduce(const std::string& coeffs, double tol, const std::string& format,
                   std::ostream& out) {
  require_format(format);
  const OptimalReduction red = reduce_to_optimal(parse_triple(coeffs, "--coeffs"), tol);
  if (format == "csv") {
    out << join_csv(red.representative) << "\n";
    return 0;
  }
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& [gen, s] : red.chain) chain.push_back({gen, s});
  nlohmann::json doc;
  doc["input"] = std::vector<double>{red.input(0), red.input(1), red.input(2)};
  doc["representative"] =
      std::vector<double>{red.representative(0), red.representative(1), red.representative(2)};
  doc["chain"] = std::move(chain);
  doc["scale"] = red.scale;
  doc["case"] = red.case_index;
  out << doc.dump() << "\n";
  return 0;
}

int run_lie_flow(int i, double eps, const std::string& point, const std::string& format,
                 std::ostream& out) {
  require_format(format);
  const Eigen::Vector3d p = parse_triple(point, "--point");
  const Point q = flow(i, eps, Point{p(0), p(1), p(2)});
  if (format == "csv") {
    out << fmt_shortest(q.x) << ',' << fmt_shortest(q.t) << ',' << fmt_shortest(q.u) << "\n";
  } else {
    nlohmann::json doc;
    doc["x"] = q.x;
    doc["t"] = q.t;
    doc["u"] = q.u;
    out << doc.dump() << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- verify

class Verifier {
 public:
  explicit Verifier(std::ostream& err) : err_(err) {}

  void check(bool ok, const std::string& name, const std::string& detail) {
    ++count_;
    if (!ok) {
      failed_ = true;
      err_ << "verify: FAIL " << name << " (" << detail << ")\n";
    }
  }
  void check_below(double value, double bound, const std::string& name) {
    check(std::isfinite(value) && value <= bound, name,
          "measured " + fmt_scientific(value, 6) + ", bound " + fmt_scientific(bound, 3));
  }
  bool failed() const { return failed_; }
  int count() const { return count_; }

 private:
  std::ostream& err_;
  int count_ = 0;
  bool failed_ = false;
};

void verify_spectral(Verifier& v) {
  for (int n : {10, 25}) {
    const ChebyshevGrid grid = cgl_nodes(n);
    const DiffMatrix d = diff_matrix(grid);
    v.check_below((d.entries * Eigen::VectorXd::Ones(n + 1)).cwiseAbs().maxCoeff(), 1e-12,
                  "constant annihilation n=" + std::to_string(n));
    bool mirrored = true;
    for (int jj = 0; jj <= n; ++jj) mirrored = mirrored && grid.node(jj) == -grid.node(n - jj);
    v.check(mirrored, "node mirror symmetry n=" + std::to_string(n), "z_j != -z_{N-j}");
  }
  const int n = 20;
  const ChebyshevGrid grid = cgl_nodes(n);
  const DiffMatrix d1 = diff_matrix(grid);
  const DiffMatrix d3 = diff_matrix_power(d1, 3);
  double worst = 0.0;
  for (int m = 0; m <= n; ++m) {
    const Eigen::VectorXd samples = grid.nodes().array().pow(m);
    const Eigen::VectorXd expected =
        m == 0 ? Eigen::VectorXd::Zero(n + 1).eval()
               : (m * grid.nodes().array().pow(m - 1)).matrix().eval();
    worst = std::max(worst, (d1.entries * samples - expected).cwiseAbs().maxCoeff());
  }
  v.check_below(worst, 1e-8, "monomial derivative exactness n=20");
  const Eigen::VectorXd cubic =
      2.0 * grid.nodes().array().pow(3) - grid.nodes().array().square() + 3.0 * grid.nodes().array() - 5.0;
  v.check_below((d3.entries * cubic).array().abs().maxCoeff() == 0.0
                    ? 0.0
                    : ((d3.entries * cubic).array() - 12.0).abs().maxCoeff(),
                1e-7, "third derivative of a cubic n=20");

  const ChebyshevGrid g2 = cgl_nodes(2);
  const NodeValues quad(g2, Eigen::Vector3d(1.0, 0.0, 1.0));
  v.check_below(std::abs(interpolate(quad, 0.5) - 0.25), 1e-12, "quadratic interpolation");
  v.check(interpolate(quad, g2.node(1)) == 0.0, "node delta property", "off-node value returned");
}

void verify_lie(Verifier& v) {
  const StructureConstants& sc = structure_constants();
  v.check(sc.antisymmetric(), "structure-constant antisymmetry", "C[i][j][k] != -C[j][i][k]");
  v.check(sc.jacobi_identity_exact(), "Jacobi identity", "nonzero rational cyclic sum");

  double worst = 0.0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (double s : {-1.0, -0.5, 0.25, 1.0}) {
        AlgebraElement basis = AlgebraElement::Zero();
        basis(j - 1) = 1.0;
        const AlgebraElement closed = adjoint_closed_form(i, s).entries * basis;
        worst = std::max(worst,
                         (adjoint_lie_series(i, j, s, 20) - closed).cwiseAbs().maxCoeff());
      }
  v.check_below(worst, 1e-12, "adjoint series vs closed form (20 terms)");

  std::mt19937 rng(42);
  const auto draw = [&rng]() { return -2.0 + 4.0 * (rng() / 4294967295.0); };
  double worst_red = 0.0;
  bool shapes = true;
  for (int k = 0; k < 200; ++k) {
    AlgebraElement x(draw(), draw(), draw());
    if (k % 5 == 4) x(0) = 0.0;
    const OptimalReduction red = reduce_to_optimal(x);
    Eigen::Vector3d y = red.input;
    for (const auto& [gen, s] : red.chain) y = adjoint_closed_form(gen, s).entries * y;
    y *= red.scale;
    worst_red = std::max(worst_red, (y - red.representative).cwiseAbs().maxCoeff());
    if (red.case_index == 2)
      shapes = shapes && red.representative == AlgebraElement(1.0, 0.0, 0.0);
    else
      shapes = shapes && red.representative(0) == 0.0 &&
               red.representative.cwiseAbs().maxCoeff() == 1.0;
  }
  v.check_below(worst_red, 1e-10, "optimal-system reduction invariant (200 draws)");
  v.check(shapes, "optimal-system canonical shapes", "non-canonical representative");

  const Point p{1.5, 2.0, -0.7};
  double worst_flow = 0.0;
  for (int i = 1; i <= 3; ++i) {
    const Point pa = flow(i, 0.3, flow(i, 0.45, p));
    const Point pb = flow(i, 0.75, p);
    worst_flow = std::max({worst_flow, std::abs(pa.x - pb.x), std::abs(pa.t - pb.t),
                           std::abs(pa.u - pb.u)});
  }
  v.check_below(worst_flow, 1e-12, "flow group law");
}

void verify_reductions(Verifier& v) {
  const CollocationSolution s1 = solve_reduced({ProblemKind::Problem1, 25, 1.0, Variant::PrintedDiscrete});
  v.check(s1.newton.converged, "Problem 1 convergence", "Newton did not converge");
  v.check_below(s1.residuals.maxCoeff(), 1e-4, "Problem 1 max interior residual");
  v.check(s1.values(0) == 1.0 && s1.values(25) == 1.0, "Problem 1 boundary pinning",
          "endpoint not exactly 1");

  const CollocationSolution s2 = solve_reduced({ProblemKind::Problem2, 25, 1.0, Variant::PrintedDiscrete});
  v.check(s2.newton.converged, "Problem 2 convergence", "Newton did not converge");
  v.check_below(s2.residuals.maxCoeff(), 1e-4, "Problem 2 max interior residual");
  v.check_below(std::abs(s2.boundary_derivative - 1.0), 1e-7, "Problem 2 derivative boundary row");

  double worst = 0.0;
  for (int i = 1; i < 25; ++i)
    worst = std::max(worst, std::abs(std::abs(reduced_residual_at(s2, s2.grid.node(i))) -
                                     s2.residuals(i - 1)));
  v.check_below(worst, 1e-14, "node consistency of reduced_residual_at");
}

void verify_field(Verifier& v) {
  const std::vector<double> xs{-2.0, -1.0, 0.0, 1.0, 2.0};
  const std::vector<double> tss{1.0, 2.0, 3.0};

  double worst_family = 0.0;
  for (double b : {0.0, 1.0, -3.0})
    for (double x : xs)
      for (double t : tss)
        worst_family = std::max(worst_family,
                                std::abs(pde_residual(exact_family(b), x, t, 1e-3, 1e-4)));
  v.check_below(worst_family, 1e-6, "exact-family PDE residual");

  double worst_invariance = 0.0;
  for (int i : {1, 2})
    for (double eps : {-1.0, -0.5, 0.5, 1.0})
      for (double b : {0.0, 1.0, -3.0}) {
        const Sampler moved = transform_solution(exact_family(b), {{i, eps}});
        for (double x : xs)
          for (double t : tss)
            worst_invariance = std::max(worst_invariance, std::abs(pde_residual(moved, x, t)));
      }
  v.check_below(worst_invariance, 1e-5, "flow 1/2 invariance of the exact family");

  double worst_defect = 0.0;
  for (double eps : {1.0, -0.5})
    for (double t : tss) {
      const Sampler moved = transform_solution(exact_family(1.0), {{3, eps}});
      worst_defect = std::max(worst_defect, std::abs(pde_residual(moved, 0.5, t) -
                                                     eps / (4.0 * std::sqrt(t))));
    }
  v.check_below(worst_defect, 1e-4, "flow 3 push-forward defect law eps/(4 sqrt t)");

  const Sampler base = exact_family(0.5);
  double worst_round = 0.0;
  for (int i : {1, 2, 3}) {
    const Sampler round = transform_solution(base, {{i, 0.7}, {i, -0.7}});
    for (double x : xs)
      for (double t : tss)
        worst_round = std::max(worst_round, std::abs(round(x, t) - base(x, t)));
  }
  v.check_below(worst_round, 1e-12, "flow round trip");

  const CollocationSolution s2 = solve_reduced({ProblemKind::Problem2, 25, 1.0, Variant::PrintedDiscrete});
  const SpaceTimeField f2 = reconstruct_problem2(s2, s2.grid.nodes().reverse(), 1.0);
  double worst_node = 0.0;
  for (int j = 0; j <= 25; ++j)
    worst_node = std::max(worst_node, std::abs(f2.values(25 - j, 0) - std::log(s2.values(j))));
  v.check_below(worst_node, 1e-14, "Problem 2 reconstruction node consistency");
}

int run_verify(const std::string& suite, std::ostream& out, std::ostream& err) {
  Verifier v(err);
  if (suite == "spectral")
    verify_spectral(v);
  else if (suite == "lie")
    verify_lie(v);
  else if (suite == "reductions")
    verify_reductions(v);
  else if (suite == "field")
    verify_field(v);
  else
    throw std::invalid_argument("unknown suite \"" + suite +
                                "\" (expected spectral, lie, reductions, or field)");
  if (v.failed()) return 1;
  out << "ok " << suite << " (" << v.count() << " checks)\n";
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symkdv: Lie symmetries and Chebyshev collocation for a cylindrical KdV equation"};
  app.require_subcommand(1);

  // nodes ----------------------------------------------------------------
  auto* nodes = app.add_subcommand("nodes", "print the CGL collocation nodes");
  int nodes_n = 0;
  std::string nodes_format = "csv", nodes_out;
  nodes->add_option("--n", nodes_n, "grid degree N")->required();
  nodes->add_option("--format", nodes_format, "csv or json")->capture_default_str();
  nodes->add_option("--out", nodes_out, "output file (default stdout)");

  // diffmat --------------------------------------------------------------
  auto* diffmat = app.add_subcommand("diffmat", "print a spectral differentiation matrix");
  int diffmat_n = 0, diffmat_order = 1;
  bool diffmat_literal = false;
  std::string diffmat_format = "csv", diffmat_out;
  diffmat->add_option("--n", diffmat_n, "grid degree N")->required();
  diffmat->add_option("--order", diffmat_order, "derivative order k >= 1")->capture_default_str();
  diffmat->add_flag("--literal-diagonal", diffmat_literal,
                    "use the textbook diagonal instead of the negative row-sum trick");
  diffmat->add_option("--format", diffmat_format, "csv or json")->capture_default_str();
  diffmat->add_option("--out", diffmat_out, "output file (default stdout)");

  // solve ------------------------------------------------------------------
  auto* solve = app.add_subcommand("solve", "solve a reduced boundary-value problem (json output)");
  int solve_problem = 0, solve_n = 25;
  std::vector<double> solve_ts{1.0};
  std::string solve_variant = "printed-discrete", solve_format = "json", solve_out;
  NewtonFlags solve_newton;
  solve->add_option("--problem", solve_problem, "1 or 2")->required();
  solve->add_option("--n", solve_n, "grid degree N")->capture_default_str();
  solve->add_option("--t", solve_ts, "time parameter(s), Problem 2 only (repeatable)")
      ->capture_default_str();
  solve->add_option("--variant", solve_variant,
                    "printed-discrete | printed-continuous | derived");
  solve->add_option("--format", solve_format, "json")->capture_default_str();
  solve->add_option("--out", solve_out, "output file (default stdout)");
  solve_newton.attach(solve);

  // table ------------------------------------------------------------------
  auto* table = app.add_subcommand("table", "residual table of a reduced problem");
  int table_problem = 0, table_n = 25;
  double table_t = 1.0;
  std::string table_variant = "printed-discrete", table_format = "csv", table_out;
  NewtonFlags table_newton;
  table->add_option("--problem", table_problem, "1 or 2")->required();
  table->add_option("--n", table_n, "grid degree N")->capture_default_str();
  table->add_option("--t", table_t, "time parameter, Problem 2 only")->capture_default_str();
  table->add_option("--variant", table_variant, "printed-discrete | printed-continuous | derived");
  table->add_option("--format", table_format, "csv or json")->capture_default_str();
  table->add_option("--out", table_out, "output file (default stdout)");
  table_newton.attach(table);

  // reconstruct --------------------------------------------------------------
  auto* rec = app.add_subcommand("reconstruct", "sample the reconstructed u(x,t) as plot data");
  int rec_problem = 0, rec_n = 25, rec_samples = 101;
  std::vector<double> rec_ts{1.0};
  double rec_xmin_val = 0.0, rec_xmax_val = 0.0;
  std::string rec_variant = "printed-discrete", rec_format = "csv", rec_out;
  NewtonFlags rec_newton;
  rec->add_option("--problem", rec_problem, "1 or 2")->required();
  rec->add_option("--n", rec_n, "grid degree N")->capture_default_str();
  rec->add_option("--t", rec_ts, "time value(s) (repeatable)")->capture_default_str();
  auto* rec_xmin_opt = rec->add_option("--x-min", rec_xmin_val,
                                       "left end of the x range (default 0.2 / -1 per problem)");
  auto* rec_xmax_opt = rec->add_option("--x-max", rec_xmax_val, "right end of the x range (default 1)");
  rec->add_option("--samples", rec_samples, "number of x samples")->capture_default_str();
  rec->add_option("--variant", rec_variant, "printed-discrete | printed-continuous | derived");
  rec->add_option("--format", rec_format, "csv or json")->capture_default_str();
  rec->add_option("--out", rec_out, "output file (default stdout)");
  rec_newton.attach(rec);

  // lie ----------------------------------------------------------------------
  auto* lie = app.add_subcommand("lie", "symmetry-algebra computations");
  lie->require_subcommand(1);

  auto* lcomm = lie->add_subcommand("commutator", "bracket of two algebra elements");
  std::string lcomm_a, lcomm_b, lcomm_format = "csv";
  lcomm->add_option("--a", lcomm_a, "coefficients a1,a2,a3")->required();
  lcomm->add_option("--b", lcomm_b, "coefficients b1,b2,b3")->required();
  lcomm->add_option("--format", lcomm_format, "csv or json")->capture_default_str();

  auto* ladj = lie->add_subcommand("adjoint", "adjoint action (closed form or Lie series)");
  int ladj_i = 0, ladj_j = 0, ladj_terms = 0;
  double ladj_eps = 0.0;
  std::string ladj_format = "csv";
  ladj->add_option("--i", ladj_i, "generator index")->required();
  ladj->add_option("--eps", ladj_eps, "group parameter (also the series argument s)")->required();
  auto* ladj_j_opt = ladj->add_option("--j", ladj_j, "series mode: act on basis element X_j");
  auto* ladj_terms_opt = ladj->add_option("--terms", ladj_terms, "series mode: number of summands");
  ladj->add_option("--format", ladj_format, "csv or json")->capture_default_str();

  auto* lred = lie->add_subcommand("reduce", "optimal-system representative of an element");
  std::string lred_coeffs, lred_format = "json";
  double lred_tol = 1e-12;
  lred->add_option("--coeffs", lred_coeffs, "coefficients a1,a2,a3")->required();
  lred->add_option("--tol", lred_tol, "threshold for treating a1 as zero")->capture_default_str();
  lred->add_option("--format", lred_format, "json or csv")->capture_default_str();

  auto* lflow = lie->add_subcommand("flow", "closed-form flow of a generator through a point");
  int lflow_i = 0;
  double lflow_eps = 0.0;
  std::string lflow_point, lflow_format = "csv";
  lflow->add_option("--i", lflow_i, "generator index")->required();
  lflow->add_option("--eps", lflow_eps, "flow parameter")->required();
  lflow->add_option("--point", lflow_point, "point x,t,u")->required();
  lflow->add_option("--format", lflow_format, "csv or json")->capture_default_str();

  // verify -----------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "run a module's self-checks");
  std::string verify_suite;
  verify->add_option("--suite", verify_suite, "spectral | lie | reductions | field")->required();

  // ----------------------------------------------------------- parse & run
  std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
  try {
    app.parse(std::move(args));

    if (nodes->parsed()) return run_nodes(nodes_n, nodes_format, nodes_out, out);
    if (diffmat->parsed())
      return run_diffmat(diffmat_n, diffmat_order, diffmat_literal, diffmat_format, diffmat_out, out);
    if (solve->parsed())
      return run_solve(solve_problem, solve_n, solve_ts,
                       resolve_variant(solve_variant, solve->count("--variant") > 0), solve_newton,
                       solve_format, solve_out, out);
    if (table->parsed())
      return run_table(table_problem, table_n, table_t,
                       resolve_variant(table_variant, table->count("--variant") > 0), table_newton,
                       table_format, table_out, out);
    if (rec->parsed())
      return run_reconstruct(rec_problem, rec_n, rec_ts,
                             resolve_variant(rec_variant, rec->count("--variant") > 0), rec_newton,
                             rec_xmin_opt->count() ? std::optional<double>(rec_xmin_val) : std::nullopt,
                             rec_xmax_opt->count() ? std::optional<double>(rec_xmax_val) : std::nullopt,
                             rec_samples, rec_format, rec_out, out);
    if (lie->parsed()) {
      if (lcomm->parsed()) return run_lie_commutator(lcomm_a, lcomm_b, lcomm_format, out);
      if (ladj->parsed())
        return run_lie_adjoint(ladj_i, ladj_eps,
                               ladj_j_opt->count() ? std::optional<int>(ladj_j) : std::nullopt,
                               ladj_terms_opt->count() ? std::optional<int>(ladj_terms) : std::nullopt,
                               ladj_format, out);
      if (lred->parsed()) return run_lie_reduce(lred_coeffs, lred_tol, lred_format, out);
      if (lflow->parsed()) return run_lie_flow(lflow_i, lflow_eps, lflow_point, lflow_format, out);
    }
    if (verify->parsed()) return run_verify(verify_suite, out, err);
    return 64;  // unreachable: require_subcommand enforces one subcommand
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 64;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace symkdv::cli
