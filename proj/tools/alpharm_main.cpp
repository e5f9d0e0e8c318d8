// alpharm: evaluate sharp bounds for weighted harmonic extensions on the disk,
// run the oracle verification suite, and scan the gradient-bound conjecture.
//
// Exit codes: 0 success, 1 verification/bound failure, 2 domain or usage error.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alpharm/bounds.hpp"
#include "alpharm/errors.hpp"
#include "alpharm/kernel.hpp"
#include "alpharm/oracle.hpp"
#include "alpharm/parallel.hpp"
#include "alpharm/report.hpp"
#include "alpharm/specfun.hpp"
#include "alpharm/verify.hpp"
#include "alpharm/version.hpp"

namespace {

using alpharm::BoundaryFunction;
using alpharm::DiskPoint;
using alpharm::GridSpec;
using alpharm::Params;
using alpharm::QuadratureConfig;
using nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitConfigError = 2;

struct GlobalOpts {
  std::string format = "csv";
  std::string output;  // empty: stdout
  QuadratureConfig quad;
  std::uint64_t seed = 12345;
  bool serial = false;

  alpharm::ExecMode mode() const {
    return serial ? alpharm::ExecMode::Serial : alpharm::ExecMode::OpenMP;
  }
  std::optional<std::string> output_path() const {
    if (output.empty()) return std::nullopt;
    return output;
  }
};

double parse_p(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF")
    return std::numeric_limits<double>::infinity();
  try {
    return std::stod(text);
  } catch (const std::exception&) {
    throw alpharm::DomainError("cannot parse p value '" + text + "'");
  }
}

GridSpec parse_grid(const std::string& text) {
  double lo, hi;
  int n;
  char c1, c2;
  std::istringstream in(text);
  if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':')
    throw alpharm::DomainError("grid must be lo:hi:n, got '" + text + "'");
  return GridSpec(lo, hi, n);
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  if (out.empty()) throw alpharm::DomainError("empty numeric list");
  return out;
}

std::vector<double> radii_from(const std::optional<double>& r,
                               const std::optional<std::string>& rgrid) {
  if (r && rgrid) throw alpharm::DomainError("give either --r or --r-grid, not both");
  if (r) return {*r};
  if (rgrid) {
    const GridSpec g = parse_grid(*rgrid);
    std::vector<double> out;
    for (int i = 0; i < g.n; ++i) out.push_back(g.point(i));
    return out;
  }
  throw alpharm::DomainError("one of --r or --r-grid is required");
}

ordered_json quad_json(const QuadratureConfig& q) {
  return {{"abs_tol", q.abs_tol}, {"rel_tol", q.rel_tol}, {"max_depth", q.max_depth}};
}

void emit(const GlobalOpts& g, const ordered_json& config, const alpharm::Table& table,
          const std::vector<ordered_json>* reports = nullptr) {
  if (g.format == "csv") {
    alpharm::write_output(alpharm::to_csv(table), g.output_path());
    return;
  }
  ordered_json doc;
  doc["config"] = config;
  if (reports) {
    doc["reports"] = ordered_json::array();
    for (const auto& r : *reports) doc["reports"].push_back(r);
  } else {
    doc["rows"] = alpharm::rows_json(table);
  }
  doc["tool_version"] = alpharm::kToolVersion;
  alpharm::write_output(doc.dump(2) + "\n", g.output_path());
}

// ---------------------------------------------------------------- bound ----

int cmd_bound(const GlobalOpts& g, double alpha, const std::string& p_text,
              const std::vector<double>& radii, bool deriv) {
  const Params params = Params::make(alpha, parse_p(p_text));
  if (deriv && !params.q_finite())
    throw alpharm::DomainError(
        "--deriv requires p > 1: the gradient bound has no finite-q closed form at p=1");

  alpharm::Table table;
  const bool p1 = params.p == 1.0;
  table.columns =
      p1 ? std::vector<std::string>{"r", "B1", "pointwise_total"}
         : std::vector<std::string>{"r", "B", "b", "pointwise_total",
                                    "const_pointwise_total"};
  if (deriv)
    for (const char* col :
         {"C", "c", "deriv_total", "const_deriv_total", "df0_bound"})
      table.columns.push_back(col);

  const double b = p1 ? 0.0 : alpharm::b_constant(params);
  const double cc = deriv ? alpharm::c_constant(params, g.quad) : 0.0;
  const double df0 = deriv ? alpharm::df0_bound(params) : 0.0;

  std::vector<std::vector<alpharm::Cell>> rows(radii.size());
  alpharm::parallel_for(static_cast<int>(radii.size()), g.mode(), [&](int i) {
    const double r = radii[i];
    const alpharm::BoundValue bv = alpharm::pointwise_bound(params, r);
    std::vector<alpharm::Cell> row{r, bv.coefficient};
    if (!p1) row.push_back(b);
    row.push_back(bv.total);
    if (!p1) row.push_back(b * bv.prefactor);
    if (deriv) {
      const double c = alpharm::c_function(params, r, g.quad);
      const double inv_p = params.p_finite() ? 1.0 / params.p : 0.0;
      const double deriv_prefactor = std::pow(1.0 - r * r, -1.0 - inv_p);
      row.push_back(c);
      row.push_back(cc);
      row.push_back(c * deriv_prefactor);
      row.push_back(cc * deriv_prefactor);
      row.push_back(df0);
    }
    rows[i] = std::move(row);
  });
  table.rows = std::move(rows);

  ordered_json config{{"command", "bound"},
                      {"alpha", alpha},
                      {"p", p_text},
                      {"deriv", deriv},
                      {"quad", quad_json(g.quad)}};
  emit(g, config, table);
  return 0;
}

// --------------------------------------------------------------- extend ----

BoundaryFunction make_boundary(const std::string& spec, const Params& params,
                               const DiskPoint& z, const QuadratureConfig& quad,
                               const std::string& sample_file) {
  if (!sample_file.empty()) {
    std::ifstream in(sample_file);
    if (!in) throw alpharm::DomainError("cannot open sample file " + sample_file);
    std::vector<std::complex<double>> vals;
    double re, im;
    while (in >> re >> im) vals.emplace_back(re, im);
    return BoundaryFunction::sampled(std::move(vals));
  }
  if (spec.rfind("constant:", 0) == 0) {
    const auto nums = parse_list(spec.substr(9));
    return BoundaryFunction::constant(
        {nums[0], nums.size() > 1 ? nums[1] : 0.0});
  }
  if (spec == "cosine") return BoundaryFunction::cosine();
  if (spec == "sign_of_sine" || spec == "sign-of-sine")
    return BoundaryFunction::sign_of_sine();
  if (spec == "holder") return BoundaryFunction::holder_extremal(params, z, quad);
  if (spec == "deriv-extremal" || spec == "deriv_extremal")
    return BoundaryFunction::deriv_extremal(params);
  throw alpharm::DomainError("unknown boundary function '" + spec + "'");
}

double lp_norm_of(const BoundaryFunction& f, double p, const QuadratureConfig& quad) {
  if (std::isinf(p)) {
    double sup = 0.0;
    for (int i = 0; i < 2048; ++i)
      sup = std::max(sup, std::abs(f(kTwoPi * i / 2048)));
    return sup;
  }
  auto g = [&](double t) { return std::pow(std::abs(f(t)), p); };
  const auto brk = f.breakpoints();
  const double mean =
      (brk.empty() ? alpharm::integrate_periodic(g, quad)
                   : alpharm::integrate(g, 0.0, kTwoPi, quad,
                                        std::vector<double>(brk.begin(), brk.end()))) /
      kTwoPi;
  return std::pow(mean, 1.0 / p);
}

int cmd_extend(const GlobalOpts& g, double alpha, const std::string& p_text,
               const std::string& fspec, const std::string& sample_file,
               const std::vector<std::string>& z_texts) {
  const Params params = Params::make(alpha, parse_p(p_text));
  if (z_texts.empty()) throw alpharm::DomainError("--z r,s is required");

  alpharm::Table table;
  table.columns = {"r", "s", "re", "im", "abs", "df_norm", "bound", "slack"};
  const bool with_deriv_bound = params.q_finite();
  if (with_deriv_bound) {
    table.columns.push_back("deriv_bound");
    table.columns.push_back("deriv_slack");
  }

  double min_slack = 0.0;
  for (const std::string& zt : z_texts) {
    const auto nums = parse_list(zt);
    if (nums.size() != 2)
      throw alpharm::DomainError("--z must be 'r,s' (polar), got '" + zt + "'");
    const DiskPoint z(nums[0], nums[1]);
    const BoundaryFunction f = make_boundary(fspec, params, z, g.quad, sample_file);
    const double norm = lp_norm_of(f, params.p, g.quad);

    const std::complex<double> v = alpharm::extend(alpha, f, z, g.quad);
    const alpharm::DerivMatrix d = alpharm::deriv_matrix(alpha, f, z, g.quad);
    const double bound = alpharm::pointwise_bound(params, z.r).total * norm;
    const double slack = bound - std::abs(v);
    min_slack = std::min(min_slack, slack);

    std::vector<alpharm::Cell> row{z.r,    z.s,         v.real(), v.imag(),
                                   std::abs(v), d.op_norm, bound,    slack};
    if (with_deriv_bound) {
      const double inv_p = params.p_finite() ? 1.0 / params.p : 0.0;
      const double dbound = alpharm::c_function(params, z.r, g.quad) *
                            std::pow(1.0 - z.r * z.r, -1.0 - inv_p) * norm;
      row.push_back(dbound);
      const double dslack = dbound - d.op_norm;
      row.push_back(dslack);
      min_slack = std::min(min_slack, dslack);
    }
    table.rows.push_back(std::move(row));
  }

  ordered_json config{{"command", "extend"}, {"alpha", alpha},   {"p", p_text},
                      {"f", fspec},          {"quad", quad_json(g.quad)}};
  emit(g, config, table);
  if (min_slack < -1e-7) {
    std::cerr << "bound violation: slack " << min_slack << "\n";
    return kExitVerificationFailure;
  }
  return 0;
}

// -------------------------------------------------------------- schwarz ----

int cmd_schwarz(const GlobalOpts& g, double alpha, const std::vector<double>& radii) {
  alpharm::Table table;
  table.columns = {"r", "schwarz_bound", "schwarz_oracle", "abs_diff"};
  std::vector<std::vector<alpharm::Cell>> rows(radii.size());
  alpharm::parallel_for(static_cast<int>(radii.size()), g.mode(), [&](int i) {
    const double r = radii[i];
    const double bound = alpharm::schwarz_bound(alpha, r);
    const double oracle = alpharm::schwarz_oracle(alpha, r, g.quad);
    rows[i] = {r, bound, oracle, std::abs(bound - oracle)};
  });
  table.rows = std::move(rows);

  ordered_json config{{"command", "schwarz"}, {"alpha", alpha}, {"quad", quad_json(g.quad)}};
  emit(g, config, table);
  return 0;
}

// --------------------------------------------------------------- verify ----

int cmd_verify(const GlobalOpts& g, const std::vector<std::string>& only,
               const alpharm::verify::Options& vopts) {
  const auto results = alpharm::verify::run(vopts, only);

  alpharm::Table table;
  table.columns = {"check", "grid", "max_deviation", "tolerance", "pass"};
  bool all_pass = true;
  std::vector<ordered_json> reports;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    table.rows.push_back({r.name, r.grid, r.max_dev, r.tolerance, r.pass});
    ordered_json item{{"name", r.name},
                      {"grid", r.grid},
                      {"max_deviation", r.max_dev},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}};
    if (!r.note.empty()) item["note"] = r.note;
    reports.push_back(std::move(item));
  }

  ordered_json config{{"command", "verify"},
                      {"seed", vopts.seed},
                      {"quad", quad_json(g.quad)},
                      {"threads", alpharm::worker_threads()},
                      {"exec", g.serial ? "serial" : "openmp"}};
  if (g.format == "json")
    emit(g, config, table, &reports);
  else
    emit(g, config, table);
  return all_pass ? 0 : kExitVerificationFailure;
}

// ------------------------------------------------------ scan-conjecture ----

int cmd_scan_conjecture(const GlobalOpts& g, const std::vector<double>& alphas,
                        const GridSpec& rg, const GridSpec& tg) {
  for (double a : alphas)
    if (!(a > 0.0))
      throw alpharm::DomainError("scan-conjecture: alpha must be positive, got " +
                                 std::to_string(a));

  alpharm::Table table;
  table.columns = {"alpha", "r", "argmax_t", "max_phi", "claim_holds"};
  std::vector<ordered_json> reports;
  bool proven_ok = true;
  for (double a : alphas) {
    const auto rep = alpharm::conjecture_scan(a, rg, tg, g.quad, g.mode());
    const bool proven = (a == 2.0 || a == 4.0);
    if (proven && !rep.claim_holds) proven_ok = false;
    for (const auto& row : rep.details)
      table.rows.push_back({a, row[0], row[1], row[2], rep.claim_holds});
    ordered_json jr = alpharm::to_json(rep);
    jr["proven_case"] = proven;
    reports.push_back(std::move(jr));
  }

  ordered_json config{{"command", "scan-conjecture"},
                      {"alpha", alphas},
                      {"r_grid", {{"lo", rg.lo}, {"hi", rg.hi}, {"n", rg.n}}},
                      {"t_grid", {{"lo", tg.lo}, {"hi", tg.hi}, {"n", tg.n}}},
                      {"quad", quad_json(g.quad)}};
  if (g.format == "json")
    emit(g, config, table, &reports);
  else
    emit(g, config, table);
  return proven_ok ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sharp pointwise bounds for weighted harmonic extensions on the unit disk"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", g.output, "write output atomically to this path");
  app.add_option("--quad-abs-tol", g.quad.abs_tol, "quadrature absolute tolerance");
  app.add_option("--quad-rel-tol", g.quad.rel_tol, "quadrature relative tolerance");
  app.add_option("--quad-max-depth", g.quad.max_depth, "quadrature subdivision cap");
  app.add_option("--seed", g.seed, "seed for randomized suites");
  app.add_flag("--serial", g.serial, "run grid scans on the serial reference path");

  // bound
  double alpha = 0.0;
  std::string p_text = "inf";
  std::optional<double> r_single;
  std::optional<std::string> r_grid_text;
  bool deriv = false;
  auto* bound = app.add_subcommand("bound", "tabulate the sharp bound functions");
  bound->add_option("--alpha", alpha, "weight exponent alpha > -1")->required();
  bound->add_option("--p", p_text, "integrability exponent (number or 'inf')")->required();
  bound->add_option("--r", r_single, "single radius");
  bound->add_option("--r-grid", r_grid_text, "radius grid lo:hi:n");
  bound->add_flag("--deriv", deriv, "include the gradient-bound columns");

  // extend
  std::string fspec = "constant:1";
  std::string sample_file;
  std::vector<std::string> z_texts;
  auto* extendc = app.add_subcommand("extend", "evaluate an extension and its bounds");
  extendc->add_option("--alpha", alpha, "weight exponent alpha > -1")->required();
  extendc->add_option("--p", p_text, "norm exponent for the bound column");
  extendc->add_option("--f", fspec,
                      "boundary data: constant:re[,im] | cosine | sign_of_sine | "
                      "holder | deriv-extremal");
  extendc->add_option("--sample-file", sample_file,
                      "file of 're im' lines, uniform grid over [0,2pi)");
  extendc->add_option("--z", z_texts, "evaluation point r,s (polar; repeatable)");

  // schwarz
  auto* schwarz = app.add_subcommand("schwarz", "Schwarz majorant vs its quadrature oracle");
  schwarz->add_option("--alpha", alpha, "weight exponent alpha > -1")->required();
  schwarz->add_option("--r", r_single, "single radius");
  schwarz->add_option("--r-grid", r_grid_text, "radius grid lo:hi:n");

  // verify
  std::vector<std::string> only;
  alpharm::verify::Options vopts;
  double ov_alpha, ov_p, ov_r, ov_m, ov_q;
  bool list_checks = false;
  auto* verifyc = app.add_subcommand("verify", "run the oracle verification suite");
  verifyc->add_option("--only", only, "run only the named checks (comma or space separated)")
      ->delimiter(',');
  verifyc->add_flag("--list", list_checks, "list the available check names and exit");
  auto* oa = verifyc->add_option("--alpha", ov_alpha, "restrict checks to one alpha");
  auto* op = verifyc->add_option("--p", ov_p, "restrict checks to one p");
  auto* orr = verifyc->add_option("--r", ov_r, "restrict checks to one radius");
  auto* om = verifyc->add_option("--m", ov_m, "lemma scans: exponent m");
  auto* oq = verifyc->add_option("--q", ov_q, "lemma scans: exponent q / k");

  // scan-conjecture
  std::string alpha_list = "2";
  std::string rg_text = "0.05:0.95:19";
  std::string tg_text;
  auto* scanc = app.add_subcommand("scan-conjecture",
                                   "locate the maximizer of the gradient kernel");
  scanc->add_option("--alpha", alpha_list, "comma-separated alpha values (> 0)");
  scanc->add_option("--r-grid", rg_text, "radius grid lo:hi:n");
  scanc->add_option("--t-grid", tg_text, "angle grid lo:hi:n (default 0:pi/2:61)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound->parsed())
      return cmd_bound(g, alpha, p_text, radii_from(r_single, r_grid_text), deriv);
    if (extendc->parsed())
      return cmd_extend(g, alpha, p_text, fspec, sample_file, z_texts);
    if (schwarz->parsed())
      return cmd_schwarz(g, alpha, radii_from(r_single, r_grid_text));
    if (verifyc->parsed()) {
      if (list_checks) {
        for (const auto& [name, fn] : alpharm::verify::registry()) {
          (void)fn;
          std::cout << name << "\n";
        }
        return 0;
      }
      vopts.seed = g.seed;
      vopts.quad = g.quad;
      vopts.mode = g.mode();
      if (*oa) vopts.alpha = ov_alpha;
      if (*op) vopts.p = ov_p;
      if (*orr) vopts.r = ov_r;
      if (*om) vopts.m = ov_m;
      if (*oq) vopts.q = ov_q;
      return cmd_verify(g, only, vopts);
    }
    if (scanc->parsed()) {
      const GridSpec rg = parse_grid(rg_text);
      const GridSpec tg =
          tg_text.empty() ? GridSpec(0.0, 0.5 * kPi, 61) : parse_grid(tg_text);
      return cmd_scan_conjecture(g, parse_list(alpha_list), rg, tg);
    }
  } catch (const alpharm::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const alpharm::NonConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const alpharm::QuadratureError& e) {
    std::cerr << "quadrature failure: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
