#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "sinegap/determinant_routes.hpp"

using json = nlohmann::ordered_json;
using namespace sinegap;

namespace {

enum Exit { ok = 0, usage = 2, accuracy = 3, domain = 4 };

struct Flags {
  std::optional<double> alpha;
  std::string route;
  std::optional<int> n;
  std::optional<long> N;
  std::optional<int> m;
  std::optional<double> beta_min, beta_max;
  std::optional<int> points, order;
  std::string which;
  std::string symbol;
  std::optional<double> tol;
  bool csv = false;
  std::string precision = "double";
};

std::string digits17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// CSV cells; doubles at full round-trip precision
std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return digits17(v.get<double>());
  return v.dump();
}

void print_csv(const json& rows) {
  if (!rows.is_array() || rows.empty()) return;
  std::vector<std::string> cols;
  for (auto it = rows[0].begin(); it != rows[0].end(); ++it) cols.push_back(it.key());
  for (size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "," : "") << cols[i];
  std::cout << "\n";
  for (const auto& r : rows) {
    for (size_t i = 0; i < cols.size(); ++i) std::cout << (i ? "," : "") << cell(r.contains(cols[i]) ? r[cols[i]] : json());
    std::cout << "\n";
  }
}

RouteParams route_params(const Flags& f) {
  RouteParams rp;
  if (f.n) rp.n = *f.n;
  if (f.N) rp.N = *f.N;
  if (f.m) rp.m = *f.m;
  rp.precision = parse_precision(f.precision);
  return rp;
}

json inputs_of(const Flags& f) {
  json in = json::object();
  if (f.alpha) in["alpha"] = *f.alpha;
  if (!f.route.empty()) in["route"] = f.route;
  if (f.n) in["n"] = *f.n;
  if (f.N) in["N"] = *f.N;
  if (f.m) in["m"] = *f.m;
  if (f.beta_min) in["beta_min"] = *f.beta_min;
  if (f.beta_max) in["beta_max"] = *f.beta_max;
  if (f.points) in["points"] = *f.points;
  if (f.order) in["order"] = *f.order;
  if (!f.which.empty()) in["which"] = f.which;
  if (!f.symbol.empty()) in["symbol"] = f.symbol;
  if (f.tol) in["tol"] = *f.tol;
  in["precision"] = f.precision;
  return in;
}

json estimate_row(const GapEstimate& g) {
  json r;
  r["alpha"] = g.alpha;
  r["route"] = std::string(to_string(g.route));
  r["logdet"] = g.logdet.log_abs;
  r["det"] = std::exp(g.logdet.log_abs) * g.logdet.phase.real();
  r["error_estimate"] = std::isfinite(g.error_estimate) ? json(g.error_estimate) : json();
  return r;
}

// Each command fills "results" and returns the tabular section (or null).
json cmd_constants(json& results) {
  json rows = json::array();
  json values = json::object();
  for (ConstantName c : all_constants) {
    const NamedConstant nc = named_constant(c);
    const std::string name(to_string(c));
    values[name] = nc.value;
    rows.push_back({{"name", name}, {"value", nc.value}, {"decimal", digits17(nc.value)},
                    {"method", std::string(nc.method)}});
  }
  results["constants"] = values;
  json rel = json::object();
  for (const auto& r : constant_relations()) rel[std::string(r.name)] = r.residual;
  results["relation_residuals"] = rel;
  return rows;
}

json cmd_gap(const Flags& f, json& results) {
  const GapEstimate g = gap_logdet(*f.alpha, parse_route(f.route), route_params(f));
  json r = estimate_row(g);
  json p = json::object();
  for (const auto& [k, v] : g.params) p[k] = v;
  r["params"] = p;
  results["estimate"] = r;
  json row = estimate_row(g);
  return json::array({row});
}

json cmd_compare(const Flags& f, json& results) {
  const double alpha = f.alpha.value_or(1.0);
  const RouteParams base = route_params(f);
  json rows = json::array();
  double reference = NAN;
  for (Route r : all_routes) {
    json row;
    row["alpha"] = alpha;
    row["route"] = std::string(to_string(r));
    try {
      RouteParams rp = base;
      if (base.precision == Precision::extended && r != Route::nystrom && r != Route::toeplitz && r != Route::hankel)
        rp.precision = Precision::binary64;
      const GapEstimate g = gap_logdet(alpha, r, rp);
      row = estimate_row(g);
      if (r == Route::nystrom) reference = g.logdet.log_abs;
      row["delta_vs_nystrom"] = std::isfinite(reference) ? json(g.logdet.log_abs - reference) : json();
      row["status"] = "ok";
    } catch (const UsageError& e) {
      row["status"] = std::string("usage: ") + e.what();
    } catch (const AccuracyError& e) {
      row["status"] = std::string("accuracy: ") + e.what();
    } catch (const DomainError& e) {
      row["status"] = std::string("domain: ") + e.what();
    }
    rows.push_back(row);
  }
  results["routes"] = rows;
  return rows;
}

json cmd_fit(const Flags& f, json& results) {
  const Route route = f.route.empty() ? Route::nystrom : parse_route(f.route);
  RouteParams rp = route_params(f);
  if (route == Route::nystrom && !f.m) rp.m = 128;
  const auto grid = beta_grid(*f.beta_min, *f.beta_max, *f.points);
  const FitReport rep = extract_constant(grid, route, *f.order, rp);
  const double C = constant(ConstantName::dyson_constant);
  results["route"] = std::string(to_string(rep.route));
  results["model_order"] = rep.model_order;
  results["C_est"] = rep.C_est;
  results["C_reference"] = C;
  results["C_error"] = rep.C_est - C;
  results["correction_coeffs"] = rep.correction_coeffs;
  results["max_residual"] = rep.max_residual;
  json rows = json::array();
  for (size_t i = 0; i < grid.size(); ++i) {
    const double b = grid[i];
    rows.push_back({{"beta", b},
                    {"alpha", 2 * b},
                    {"logdet", rep.logdets[i]},
                    {"reduced", rep.logdets[i] + b * b / 2 + std::log(b) / 4}});
  }
  results["grid"] = rows;
  return rows;
}

int cmd_identities(const Flags& f, json& results, json& table) {
  const Identity which = parse_identity(f.which);
  IdentityParams p;
  p.n = *f.n;
  if (f.alpha) p.alpha = *f.alpha;
  if (f.N) p.N = *f.N;
  else if (which == Identity::block_tab) p.N = 64;
  else if (which == Identity::f64) p.N = 2048;
  p.precision = parse_precision(f.precision);
  if (which == Identity::block_tab) p.degree = p.n;
  if (!f.symbol.empty()) p.symbol = parse_test_symbol(f.symbol);
  else if (which == Identity::prop32) p.symbol = TestSymbol::even_polynomial;
  const double tol = f.tol.value_or(1e-8);
  const IdentityResult r = identity_residual(which, p);
  json row;
  row["which"] = std::string(to_string(which));
  row["n"] = p.n;
  row["residual"] = r.residual;
  row["lhs"] = r.lhs;
  row["rhs"] = r.rhs;
  row["tol"] = tol;
  row["pass"] = r.residual <= tol;
  results["identity"] = row;
  table = json::array({row});
  return r.residual <= tol ? ok : accuracy;
}

json cmd_diagnostics(const Flags& f, json& results) {
  const double alpha = f.alpha.value_or(1.0);
  const int n = f.n.value_or(8);
  const long N = f.N.value_or(1024);
  const DiagnosticsRecord d = operator_diagnostics(alpha, n, N);
  results["min_sv_plus"] = d.min_sv_plus;
  results["min_sv_minus"] = d.min_sv_minus;
  results["min_sv_psi"] = d.min_sv_psi;
  results["projection_defect"] = d.projection_defect;
  results["leading_sv_psi1"] = d.leading_sv_psi1;
  results["leading_sv_u"] = d.leading_sv_u;
  json rows = json::array();
  for (const auto& s : d.trace_norm_sweep)
    rows.push_back({{"mu", s.mu},
                    {"forward_product", s.forward_product},
                    {"backward_product", s.backward_product},
                    {"product_symbol", s.product_symbol}});
  results["trace_norm_sweep"] = rows;
  return rows;
}

json error_estimates(const std::string& command, const json& results) {
  json e = json::object();
  if (command == "constants") {
    e = results["relation_residuals"];
  } else if (command == "gap") {
    e["logdet"] = results["estimate"]["error_estimate"];
  } else if (command == "compare") {
    for (const auto& r : results["routes"])
      e[r["route"].get<std::string>()] = r.contains("error_estimate") ? r["error_estimate"] : json();
  } else if (command == "fit-constant") {
    e["max_residual"] = results["max_residual"];
  } else if (command == "identities") {
    e["residual"] = results["identity"]["residual"];
  } else if (command == "diagnostics") {
    e["projection_defect"] = results["projection_defect"];
  }
  return e;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sine-kernel gap probabilities det(I - K_alpha) by several independent routes"};
  app.require_subcommand(1, 1);
  Flags f;

  auto add_common = [&f](CLI::App* s) {
    s->add_flag("--csv", f.csv, "Print the tabular section as CSV instead of JSON");
    s->add_option("--precision", f.precision, "double or extended")->check(CLI::IsMember({"double", "extended"}));
  };

  auto* constants = app.add_subcommand("constants", "Print the special constants");
  add_common(constants);

  auto* gap = app.add_subcommand("gap", "log det(I - K_alpha) by one route");
  gap->add_option("--alpha", f.alpha, "Interval length")->required();
  gap->add_option("--route", f.route, "nystrom, toeplitz, hankel, resolvent, split or asymptotic")->required();
  gap->add_option("--n", f.n, "Matrix order (toeplitz, hankel, resolvent)");
  gap->add_option("--N", f.N, "Truncation (resolvent, split)");
  gap->add_option("--m", f.m, "Quadrature nodes (nystrom)");
  add_common(gap);

  auto* compare = app.add_subcommand("compare", "All routes at one alpha");
  compare->add_option("--alpha", f.alpha, "Interval length (default 1)");
  compare->add_option("--n", f.n, "Matrix order override");
  compare->add_option("--N", f.N, "Truncation override");
  compare->add_option("--m", f.m, "Quadrature nodes (nystrom)");
  add_common(compare);

  auto* fit = app.add_subcommand("fit-constant", "Fit the constant term of the large-gap expansion");
  fit->add_option("--beta-min", f.beta_min, "Smallest beta (gap 2 beta)")->required();
  fit->add_option("--beta-max", f.beta_max, "Largest beta")->required();
  fit->add_option("--points", f.points, "Number of grid points")->required();
  fit->add_option("--order", f.order, "Number of beta^-2 correction terms")->required();
  fit->add_option("--route", f.route, "Route for the log-determinants (default nystrom)");
  fit->add_option("--n", f.n, "Matrix order override");
  fit->add_option("--N", f.N, "Truncation override");
  fit->add_option("--m", f.m, "Quadrature nodes (default 128)");
  add_common(fit);

  auto* ids = app.add_subcommand("identities", "Residual of one exact identity");
  ids->add_option("--which", f.which, "prop21_BO, prop23, prop32, prop33, f64 or block_tab")->required();
  ids->add_option("--n", f.n, "Matrix order (polynomial degree for block_tab)")->required();
  ids->add_option("--alpha", f.alpha, "Interval length (prop32 arc, prop33, f64)");
  ids->add_option("--N", f.N, "Truncation (prop21_BO, f64) or block size (block_tab)");
  ids->add_option("--symbol", f.symbol, "Test symbol: smooth_cosine, rational_even, constant_one, even_polynomial, arc");
  ids->add_option("--tol", f.tol, "Residual tolerance (default 1e-8); exit 3 above it");
  add_common(ids);

  auto* diag = app.add_subcommand("diagnostics", "Singular values and trace-norm surrogates");
  diag->add_option("--alpha", f.alpha, "Interval length (default 1)");
  diag->add_option("--n", f.n, "Order for psi (default 8)");
  diag->add_option("--N", f.N, "Truncation (default 1024)");
  add_common(diag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  const auto start = std::chrono::steady_clock::now();
  json doc;
  doc["command"] = app.get_subcommands().front()->get_name();
  doc["inputs"] = inputs_of(f);
  json results = json::object();
  json table;
  int code = ok;
  try {
    parse_precision(f.precision);
    if (constants->parsed()) table = cmd_constants(results);
    else if (gap->parsed()) table = cmd_gap(f, results);
    else if (compare->parsed()) table = cmd_compare(f, results);
    else if (fit->parsed()) table = cmd_fit(f, results);
    else if (ids->parsed()) code = cmd_identities(f, results, table);
    else if (diag->parsed()) table = cmd_diagnostics(f, results);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const AccuracyError& e) {
    std::cerr << "accuracy error: " << e.what() << "\n";
    return accuracy;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return domain;
  }
  doc["results"] = results;
  doc["error_estimates"] = error_estimates(doc["command"].get<std::string>(), results);
  doc["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (f.csv) print_csv(table);
  else std::cout << doc.dump(2) << "\n";
  if (code == accuracy) std::cerr << "residual above tolerance\n";
  return code;
}
