// gini-bounds: command-line front end for the bound evaluators, property checks
// and the checkerboard LP oracle.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gini/bounds/bound.hpp"
#include "gini/bounds/classify.hpp"
#include "gini/bounds/pointbound_gamma.hpp"
#include "gini/bounds/theta.hpp"
#include "gini/core/copula.hpp"
#include "gini/core/lattice.hpp"
#include "gini/core/quadrature.hpp"
#include "gini/oracle/checkerboard.hpp"
#include "gini/oracle/lp_extreme.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace gini;

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitUsage = 2;

// Thrown for unwritable or unreadable files.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double r12(double x) { return std::strtod(format12(x).c_str(), nullptr); }

Json opt_json(const std::optional<double>& x) { return x ? Json(r12(*x)) : Json(nullptr); }

Json theta_report_json(const ThetaReport& r) {
  Json theta = Json::array();
  Json active = Json::array();
  for (int i = 0; i < 5; ++i) {
    theta.push_back(opt_json(r.theta[i]));
    active.push_back(r.active[i]);
  }
  Json j;
  j["u"] = r12(r.point.u());
  j["v"] = r12(r.point.v());
  j["t"] = r12(r.t.value());
  j["theta"] = theta;
  j["active"] = active;
  j["inner_max"] = opt_json(r.inner_max);
  j["bound"] = r12(r.bound);
  j["clamped"] = r.clamped;
  return j;
}

struct Report {
  std::string command;
  Json parameters = Json::object();
  Json results = Json::object();
  bool checks_passed = true;
};

struct Globals {
  bool timing = false;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

int emit(const Report& rep, const Globals& g) {
  Json j;
  j["command"] = rep.command;
  j["parameters"] = rep.parameters;
  j["results"] = rep.results;
  j["checks_passed"] = rep.checks_passed;
  long ms = 0;
  if (g.timing) {
    ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - g.start)
             .count();
  }
  j["elapsed_ms"] = ms;
  std::cout << j.dump(2) << '\n';
  return rep.checks_passed ? kExitOk : kExitCheck;
}

template <class Writer>
void write_output(const std::string& path, Writer&& writer) {
  if (path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

void require_side(const std::string& side) {
  if (side != "upper" && side != "lower") throw DomainError("--side must be upper or lower");
}

Bivariate side_fn(const std::string& side, const GammaTarget& t) {
  return side == "upper" ? upper_bound_fn(t) : lower_bound_fn(t);
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
  double t = 0, u = 0, v = 0;
  std::string side = "upper";
};

int run_eval(const EvalArgs& a) {
  require_side(a.side);
  const GammaTarget t(a.t);
  const UnitPoint p(a.u, a.v);
  Json j;
  if (a.side == "upper") {
    j = theta_report_json(upper_bound(p, t));
    j["side"] = "upper";
  } else {
    // The lower bound is read off the upper bound at the reflected point.
    const auto refl = upper_bound(UnitPoint(1.0 - a.u, a.v), t.negated());
    j["u"] = r12(a.u);
    j["v"] = r12(a.v);
    j["t"] = r12(a.t);
    j["side"] = "lower";
    j["bound"] = r12(lower_bound(p, t));
    j["clamped"] = refl.clamped;
    j["reflected"] = theta_report_json(refl);
  }
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

// ---- grid -----------------------------------------------------------------

struct GridArgs {
  double t = 0;
  int n = 200;
  std::string side = "upper";
  std::string out;
  std::string format = "csv";
};

int run_grid(const GridArgs& a, const Globals& g) {
  require_side(a.side);
  if (a.n < 1) throw DomainError("--n must be positive");
  if (a.format != "csv" && a.format != "json") throw DomainError("--format must be csv or json");
  const GammaTarget t(a.t);
  const auto lattice = sample_lattice(side_fn(a.side, t), a.n);
  write_output(a.out, [&](std::ostream& os) {
    if (a.format == "csv") {
      write_lattice_csv(os, lattice);
      return;
    }
    Json rows = Json::array();
    for (int i = 0; i <= a.n; ++i) {
      for (int j = 0; j <= a.n; ++j) {
        rows.push_back({r12(lattice.node(i)), r12(lattice.node(j)), r12(lattice.at(i, j))});
      }
    }
    Json doc;
    doc["t"] = r12(a.t);
    doc["side"] = a.side;
    doc["n"] = a.n;
    doc["columns"] = {"u", "v", "value"};
    doc["rows"] = rows;
    os << doc.dump() << '\n';
  });
  if (a.out.empty()) return kExitOk;
  Report rep{"grid"};
  rep.parameters = {{"t", r12(a.t)}, {"n", a.n}, {"side", a.side}, {"out", a.out}, {"format", a.format}};
  rep.results = {{"rows", (a.n + 1) * (a.n + 1)}};
  return emit(rep, g);
}

// ---- gamma ----------------------------------------------------------------

struct GammaArgs {
  std::vector<std::string> copula;
  int m = 4000;
};

double parse_real(const std::string& s, const char* what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw DomainError(std::string(what) + ": '" + s + "' is not a number");
  return x;
}

int run_gamma(const GammaArgs& a, const Globals& g) {
  if (a.copula.empty()) throw DomainError("--copula needs a value");
  Report rep{"gamma"};
  const std::string& kind = a.copula[0];
  rep.parameters["copula"] = a.copula;
  rep.parameters["m"] = a.m;
  auto expect_args = [&](std::size_t n) {
    if (a.copula.size() != n + 1) {
      throw DomainError("--copula " + kind + " takes " + std::to_string(n) + " argument(s)");
    }
  };

  if (kind == "w" || kind == "m" || kind == "pi") {
    expect_args(0);
    Bivariate f = kind == "w" ? Bivariate(frechet_lower) : kind == "m" ? Bivariate(frechet_upper) : Bivariate(product);
    const double closed = kind == "w" ? -1.0 : kind == "m" ? 1.0 : 0.0;
    const double quad = gamma_quadrature(f, a.m);
    rep.results = {{"closed", closed}, {"quadrature", r12(quad)}};
    rep.checks_passed = std::fabs(closed - quad) <= 1e-8;
  } else if (kind == "pointbound") {
    expect_args(3);
    const PointBoundSpec spec(parse_real(a.copula[1], "a"), parse_real(a.copula[2], "b"),
                              parse_real(a.copula[3], "theta"));
    const auto closed = gamma_lower_pointbound(spec);
    const double i1 = i1_closed(spec);
    const double i2 = i2_closed(spec);
    const double quad = gamma_quadrature(lower_pointbound_fn(spec), a.m);
    rep.results = {{"branch", closed.branch}, {"closed", r12(closed.value)}, {"i1", r12(i1)},
                   {"i2", r12(i2)},           {"i2_case", i2_case(spec)},   {"quadrature", r12(quad)}};
    rep.checks_passed = std::fabs(closed.value - quad) <= 1e-6 &&
                        std::fabs(4.0 * (i1 + i2) - 2.0 - closed.value) <= 1e-12;
  } else if (kind == "checkerboard") {
    expect_args(1);
    std::ifstream in(a.copula[1]);
    if (!in) throw IoError("cannot open '" + a.copula[1] + "'");
    const auto cb = oracle::read_checkerboard_json(in);
    const double exact = oracle::gamma_checkerboard_exact(cb);
    const double quad = gamma_quadrature(oracle::checkerboard_fn(cb), a.m);
    rep.results = {{"n", cb.order()}, {"exact", r12(exact)}, {"quadrature", r12(quad)}};
    rep.checks_passed = std::fabs(exact - quad) <= 1e-6;
  } else {
    throw DomainError("unknown copula '" + kind + "' (expected w, m, pi, pointbound or checkerboard)");
  }
  return emit(rep, g);
}

// ---- classify ---------------------------------------------------------------

int run_classify(double tv, const Globals& g) {
  const GammaTarget t(tv);
  Report rep{"classify"};
  rep.parameters = {{"t", r12(tv)}};
  rep.results = {{"upper", std::string(to_string(classify_upper(t)))},
                 {"lower", std::string(to_string(classify_lower(t)))}};
  return emit(rep, g);
}

// ---- check ------------------------------------------------------------------

constexpr double kCheckTol = 1e-10;

Json side_check(const std::string& side, const GammaTarget& t, int n, bool& passed) {
  const auto cls = side == "upper" ? classify_upper(t) : classify_lower(t);
  const auto lattice = sample_lattice(side_fn(side, t), n);
  const auto r = check_properties(lattice, kCheckTol);
  const bool proper = cls == BoundClassification::ProperQuasiCopula;
  const bool consistent = r.is_quasicopula && (r.is_copula != proper);

  Json j;
  j["classification"] = std::string(to_string(cls));
  j["is_quasicopula"] = r.is_quasicopula;
  j["is_copula"] = r.is_copula;
  j["boundary_max_err"] = r12(r.boundary_max_err);
  j["monotonicity_min_step"] = r12(r.monotonicity_min_step);
  j["lipschitz_max_excess"] = r12(r.lipschitz_max_excess);
  j["min_volume"] = r12(r.min_volume);
  const auto& c = r.min_volume_rect;
  j["min_volume_cell"] = {{"u0", r12(lattice.node(c[0]))}, {"u1", r12(lattice.node(c[1]))},
                          {"v0", r12(lattice.node(c[2]))}, {"v1", r12(lattice.node(c[3]))}};
  if (proper && t.value() >= -0.5 && t.value() <= 0.5) {
    // Distance in cells from the minimizing cell to the nearer arc corner.
    const GammaTarget arc_t = side == "upper" ? t : t.negated();
    const auto [p1, p2] = hyperbolic_corner_points(arc_t);
    const double cu = 0.5 * (lattice.node(c[0]) + lattice.node(c[1]));
    const double cv = 0.5 * (lattice.node(c[2]) + lattice.node(c[3]));
    auto dist = [&](const UnitPoint& p) {
      const double pu = side == "upper" ? p.u() : 1.0 - p.u();
      return std::max(std::fabs(cu - pu), std::fabs(cv - p.v())) * n;
    };
    j["cells_to_corner"] = r12(std::min(dist(p1), dist(p2)));
  }
  j["consistent"] = consistent;
  passed = passed && consistent;
  return j;
}

int run_check(double tv, int n, const Globals& g) {
  if (n < 2) throw DomainError("--grid must be at least 2");
  const GammaTarget t(tv);
  Report rep{"check"};
  rep.parameters = {{"t", r12(tv)}, {"grid", n}, {"tol", kCheckTol}};
  bool passed = true;
  rep.results["upper"] = side_check("upper", t, n, passed);
  rep.results["lower"] = side_check("lower", t, n, passed);
  rep.checks_passed = passed;
  return emit(rep, g);
}

// ---- oracle -----------------------------------------------------------------

int run_oracle(double tv, int n, double u, double v, const Globals& g) {
  const GammaTarget t(tv);
  const UnitPoint p(u, v);
  if (n < 2) throw DomainError("--n must be at least 2");
  Report rep{"oracle"};
  rep.parameters = {{"t", r12(tv)}, {"n", n}, {"u", r12(u)}, {"v", r12(v)}};
  const auto hi = oracle::lp_extreme(n, p, t, oracle::Direction::Max);
  const auto lo = oracle::lp_extreme(n, p, t, oracle::Direction::Min);
  const double up = upper_bound(p, t).bound;
  const double dn = lower_bound(p, t);
  rep.results["status"] = std::string(oracle::to_string(hi.status));
  rep.results["upper_bound"] = r12(up);
  rep.results["lower_bound"] = r12(dn);
  if (hi.status == oracle::LpStatus::Optimal && lo.status == oracle::LpStatus::Optimal) {
    rep.results["lp_max"] = r12(hi.optimum);
    rep.results["lp_min"] = r12(lo.optimum);
    rep.results["gap_upper"] = r12(up - hi.optimum);
    rep.results["gap_lower"] = r12(lo.optimum - dn);
    rep.results["iterations"] = hi.iterations + lo.iterations;
    rep.checks_passed = hi.optimum <= up + 1e-9 && lo.optimum >= dn - 1e-9;
  } else {
    const auto range = oracle::gamma_range(n);
    rep.results["gamma_range"] = {r12(range.first), r12(range.second)};
  }
  return emit(rep, g);
}

// ---- regions ----------------------------------------------------------------

int run_regions(double tv, int n, const std::string& out, const Globals& g) {
  if (n < 1) throw DomainError("--n must be positive");
  const GammaTarget t(tv);
  std::array<long, 5> counts{};
  std::ostringstream csv;
  csv << "u,v,r1,r2,r3,r4,r5\n";
  for (int i = 0; i <= n; ++i) {
    const double u = i == n ? 1.0 : double(i) / n;
    for (int j = 0; j <= n; ++j) {
      const double v = j == n ? 1.0 : double(j) / n;
      csv << format12(u) << ',' << format12(v);
      for (int r = 1; r <= 5; ++r) {
        const bool in = region_contains(r, UnitPoint(u, v), t);
        counts[r - 1] += in;
        csv << ',' << (in ? 1 : 0);
      }
      csv << '\n';
    }
  }
  write_output(out, [&](std::ostream& os) { os << csv.str(); });
  if (out.empty()) return kExitOk;
  Report rep{"regions"};
  rep.parameters = {{"t", r12(tv)}, {"n", n}, {"out", out}};
  rep.results = {{"points", {counts[0], counts[1], counts[2], counts[3], counts[4]}}};
  return emit(rep, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointwise bounds for copulas with a given value of Gini's gamma"};
  app.require_subcommand(1);
  Globals globals;
  app.add_flag("--timing", globals.timing, "Report wall-clock time in elapsed_ms (otherwise 0)");

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate the upper or lower bound at one point");
  eval->add_option("--t", ev.t, "Gini's gamma")->required();
  eval->add_option("--u", ev.u)->required();
  eval->add_option("--v", ev.v)->required();
  eval->add_option("--side", ev.side)->check(CLI::IsMember({"upper", "lower"}));

  GridArgs gr;
  auto* grid = app.add_subcommand("grid", "Sample a bound on the (N+1)^2 lattice");
  grid->add_option("--t", gr.t)->required();
  grid->add_option("--n", gr.n, "Cells per axis")->capture_default_str();
  grid->add_option("--side", gr.side)->check(CLI::IsMember({"upper", "lower"}));
  grid->add_option("--out", gr.out, "Output path (stdout if omitted)");
  grid->add_option("--format", gr.format)->check(CLI::IsMember({"csv", "json"}));

  GammaArgs ga;
  auto* gamma = app.add_subcommand("gamma", "Gini's gamma of a copula");
  gamma->add_option("--copula", ga.copula, "w | m | pi | pointbound A B THETA | checkerboard FILE")
      ->required()
      ->expected(1, 4);
  gamma->add_option("--m", ga.m, "Simpson subdivisions (even)")->capture_default_str();

  double cl_t = 0;
  auto* classify = app.add_subcommand("classify", "Classify both bounds for a given t");
  classify->add_option("--t", cl_t)->required();

  double ck_t = 0;
  int ck_n = 400;
  auto* check = app.add_subcommand("check", "Run the property checks on both bounds");
  check->add_option("--t", ck_t)->required();
  check->add_option("--grid", ck_n)->capture_default_str();

  double or_t = 0, or_u = 0, or_v = 0;
  int or_n = 16;
  auto* orc = app.add_subcommand("oracle", "Certify the bounds at a point with the checkerboard LP");
  orc->add_option("--t", or_t)->required();
  orc->add_option("--n", or_n)->capture_default_str();
  orc->add_option("--u", or_u)->required();
  orc->add_option("--v", or_v)->required();

  double rg_t = 0;
  int rg_n = 100;
  std::string rg_out;
  auto* regions = app.add_subcommand("regions", "Region membership atlas as CSV");
  regions->add_option("--t", rg_t)->required();
  regions->add_option("--n", rg_n)->capture_default_str();
  regions->add_option("--out", rg_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return run_eval(ev);
    if (*grid) return run_grid(gr, globals);
    if (*gamma) return run_gamma(ga, globals);
    if (*classify) return run_classify(cl_t, globals);
    if (*check) return run_check(ck_t, ck_n, globals);
    if (*orc) return run_oracle(or_t, or_n, or_u, or_v, globals);
    if (*regions) return run_regions(rg_t, rg_n, rg_out, globals);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheck;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheck;
  }
  return kExitUsage;
}
