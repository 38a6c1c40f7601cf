// gft: command-line front end for the generalized Fermat-Torricelli library.
//
// Subcommands: solve, check, oracle, intervals, torricelli.  Reports go to
// standard output as single JSON objects (indented behind --pretty); errors
// go to standard error.  Exit codes: 0 ok, 1 parse/validation error,
// 2 unsupported pair or ambiguous membership, 3 divergence.

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gft/gft.hpp"

namespace {

using nlohmann::json;

// Shortest round-trip decimal formatting.
std::string fmt_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw gft::ParseError(what + ": cannot parse number \"" + item + "\"");
    }
  }
  if (out.empty()) throw gft::ParseError(what + ": empty list");
  return out;
}

gft::Vec parse_point(const std::string& text, std::size_t dim, const std::string& what) {
  auto xs = parse_number_list(text, what);
  if (xs.size() != dim)
    throw gft::ParseError(what + ": expected " + std::to_string(dim) +
                          " coordinates, got " + std::to_string(xs.size()));
  return gft::Vec(std::move(xs));
}

gft::StepSchedule parse_schedule(const std::string& spec) {
  if (spec == "harmonic") return gft::StepSchedule::harmonic();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string head = spec.substr(0, colon);
    if (head == "harmonic" || head == "scaled") {
      try {
        return gft::StepSchedule::scaled_harmonic(std::stod(spec.substr(colon + 1)));
      } catch (const gft::Error&) {
        throw;
      } catch (const std::exception&) {
        // fall through to the parse error below
      }
    }
  }
  throw gft::ParseError("--steps: expected \"harmonic\" or \"harmonic:<c>\", got \"" +
                        spec + "\"");
}

json to_json(const gft::Vec& v) { return json(v.coords()); }

const char* stop_reason_name(gft::StopReason r) {
  switch (r) {
    case gft::StopReason::max_iters: return "max_iters";
    case gft::StopReason::residual_tol: return "residual_tol";
    case gft::StopReason::value_plateau: return "value_plateau";
  }
  return "?";
}

const char* mode_name(gft::CertificateMode m) {
  return m == gft::CertificateMode::sufficient ? "sufficient" : "necessary_only";
}

void emit(const json& report, bool pretty) {
  std::cout << (pretty ? report.dump(2) : report.dump()) << "\n";
}

void write_trace_csv(const std::string& path, const gft::SolveResult& res,
                     std::size_t dim) {
  std::ofstream out(path);
  if (!out) throw gft::Error("cannot open trace file for writing: " + path);
  out << "k";
  for (std::size_t i = 1; i <= dim; ++i) out << ",x" << i;
  out << ",value,best_value\n";
  for (const gft::TraceRow& row : res.trace) {
    out << row.k;
    for (std::size_t i = 0; i < dim; ++i) out << "," << fmt_double(row.x[i]);
    out << "," << fmt_double(row.value) << "," << fmt_double(row.best_value) << "\n";
  }
}

int run_solve(const std::string& problem_path, const std::string& start_text,
              const std::string& steps, std::size_t max_iters,
              const std::string& trace_path, std::size_t trace_every,
              std::optional<double> tol, bool with_bound, bool pretty) {
  const gft::Problem p = gft::load_problem_file(problem_path);
  const gft::Vec start = parse_point(start_text, p.dim(), "--start");
  const gft::StepSchedule schedule = parse_schedule(steps);
  gft::SolveOptions opt;
  opt.max_iters = max_iters;
  opt.trace_every = trace_path.empty() ? 0 : trace_every;
  opt.residual_tol = tol;

  const auto t0 = std::chrono::steady_clock::now();
  const gft::SolveResult res = gft::solve(p, start, schedule, opt);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;

  if (!trace_path.empty()) write_trace_csv(trace_path, res, p.dim());
  for (const std::string& w : res.warnings) std::cerr << "warning: " << w << "\n";

  json report{{"best_point", to_json(res.best_point)},
              {"best_value", res.best_value},
              {"iterations", res.iterations_run},
              {"stop_reason", stop_reason_name(res.stop_reason)},
              {"final_point", to_json(res.final_point)},
              {"guarantee", mode_name(res.guarantee)},
              {"seconds", elapsed.count()}};
  if (with_bound && res.iterations_run > 0) {
    // Distance to the solution set is estimated from the oracle minimizer.
    const gft::OracleResult o = gft::grid_minimize(p, gft::default_bbox(p), 200, 4);
    const double d = gft::distance(start, o.argmin);
    report["error_bound"] = gft::error_bound(schedule, res.iterations_run, d,
                                             gft::lipschitz_constant(p));
    report["oracle_min_value"] = o.min_value;
  }
  emit(report, pretty);
  return 0;
}

int run_check(const std::string& problem_path, const std::string& point_text,
              double tol, bool pretty) {
  const gft::Problem p = gft::load_problem_file(problem_path);
  const gft::Vec x = parse_point(point_text, p.dim(), "--point");
  const gft::Certificate cert = gft::certificate_check(p, x, tol);

  json report{{"holds", cert.holds},
              {"residual", cert.residual},
              {"mode", mode_name(cert.mode)},
              {"total_value", gft::total_value(p, x)}};
  if (cert.active_target)
    report["active_target"] = *cert.active_target;
  else
    report["active_target"] = nullptr;

  if (p.size() == 3 && p.dynamics() == gft::Dynamics::euclidean_ball) {
    const gft::ThreeSetReport ts = gft::three_set_check(p, x, tol);
    report["three_set"] = {{"case", ts.which_case == 1 ? "i" : "ii"},
                           {"inner_products", ts.inner_products},
                           {"satisfied", ts.satisfied}};
  }
  emit(report, pretty);
  return 0;
}

int run_oracle(const std::string& problem_path, const std::string& bbox_text,
               std::size_t coarse_n, std::size_t refinements, bool pretty) {
  const gft::Problem p = gft::load_problem_file(problem_path);
  gft::BBox box{gft::Vec(1), gft::Vec(1)};
  if (bbox_text.empty()) {
    box = gft::default_bbox(p);
  } else {
    auto xs = parse_number_list(bbox_text, "--bbox");
    if (xs.size() != 2 * p.dim())
      throw gft::ParseError("--bbox: expected " + std::to_string(2 * p.dim()) +
                            " numbers (lo..., hi...)");
    std::vector<double> lo(xs.begin(), xs.begin() + static_cast<long>(p.dim()));
    std::vector<double> hi(xs.begin() + static_cast<long>(p.dim()), xs.end());
    box = gft::BBox{gft::Vec(std::move(lo)), gft::Vec(std::move(hi))};
  }
  const gft::OracleResult res = gft::grid_minimize(p, box, coarse_n, refinements);
  json report{{"argmin", to_json(res.argmin)},
              {"min_value", res.min_value},
              {"cell_size", res.cell_size},
              {"bbox", {{"lo", to_json(res.bbox.lo)}, {"hi", to_json(res.bbox.hi)}}}};
  emit(report, pretty);
  return 0;
}

int run_intervals(const std::vector<std::string>& items, bool pretty) {
  std::vector<gft::Interval> intervals;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto xs = parse_number_list(items[i], "interval " + std::to_string(i));
    if (xs.size() != 2)
      throw gft::ParseError("interval " + std::to_string(i) +
                            ": expected \"a,b\", got \"" + items[i] + "\"");
    if (xs[0] > xs[1])
      throw gft::NotSortedDisjointError("interval " + std::to_string(i) +
                                        ": requires a <= b");
    intervals.push_back(gft::Interval{xs[0], xs[1]});
  }
  const gft::Interval best = gft::solve_intervals(intervals);
  std::vector<gft::Target> targets;
  for (const gft::Interval& iv : intervals) targets.emplace_back(iv);
  const gft::Problem p(gft::Dynamics::euclidean_ball, std::move(targets));
  const double value =
      gft::total_value(p, gft::Vec{0.5 * (best.lower + best.upper)});
  json report{{"interval", {best.lower, best.upper}}, {"value", value}};
  emit(report, pretty);
  return 0;
}

int run_torricelli(const std::vector<std::string>& items, bool pretty) {
  if (items.size() != 3)
    throw gft::ParseError("torricelli: expected exactly three points \"x,y\"");
  std::vector<gft::Vec> pts;
  for (std::size_t i = 0; i < 3; ++i)
    pts.push_back(parse_point(items[i], 2, "point " + std::to_string(i)));
  const gft::Vec q = gft::torricelli_point(pts[0], pts[1], pts[2]);
  double value = 0.0;
  for (const gft::Vec& pt : pts) value += gft::distance(q, pt);
  json report{{"point", to_json(q)}, {"value", value}};
  emit(report, pretty);
  return 0;
}

int classify_error(const std::exception& e) {
  if (dynamic_cast<const gft::UnsupportedPairError*>(&e) ||
      dynamic_cast<const gft::MultipleActiveTargetsError*>(&e) ||
      dynamic_cast<const gft::WrongArityError*>(&e) ||
      dynamic_cast<const gft::AmbiguousCaseError*>(&e))
    return 2;
  if (dynamic_cast<const gft::NonFiniteIterateError*>(&e)) return 3;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Fermat-Torricelli solver"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "Indent the JSON report");

  auto* solve = app.add_subcommand("solve", "Run the subgradient algorithm");
  std::string s_problem, s_start, s_steps = "harmonic", s_trace;
  std::size_t s_max_iters = 100000, s_trace_every = 100;
  std::optional<double> s_tol;
  bool s_bound = false;
  solve->add_option("--problem", s_problem, "Problem file (JSON)")->required();
  solve->add_option("--start", s_start, "Start point, comma separated")->required();
  solve->add_option("--steps", s_steps, "Step schedule: harmonic or harmonic:<c>");
  solve->add_option("--max-iters", s_max_iters, "Iteration budget");
  solve->add_option("--trace", s_trace, "Write an iterate trace CSV here");
  solve->add_option("--trace-every", s_trace_every, "Trace row cadence");
  solve->add_option("--tol", s_tol,
                    "Stop early once the certificate residual is within tol");
  solve->add_flag("--bound", s_bound,
                  "Report the a-priori error bound, estimating the distance to "
                  "the solution set from the oracle minimizer");

  auto* check = app.add_subcommand("check", "Check the optimality certificate at a point");
  std::string c_problem, c_point;
  double c_tol = 1e-6;
  check->add_option("--problem", c_problem, "Problem file (JSON)")->required();
  check->add_option("--point", c_point, "Point to certify, comma separated")->required();
  check->add_option("--tol", c_tol, "Certificate tolerance");

  auto* oracle = app.add_subcommand("oracle", "Brute-force grid search");
  std::string o_problem, o_bbox;
  std::size_t o_coarse_n = 200, o_refinements = 4;
  oracle->add_option("--problem", o_problem, "Problem file (JSON)")->required();
  oracle->add_option("--bbox", o_bbox,
                     "Search bounds lo1,..,lod,hi1,..,hid (default: derived from targets)");
  oracle->add_option("--coarse-n", o_coarse_n, "Grid nodes per axis");
  oracle->add_option("--refinements", o_refinements, "Refinement passes");

  auto* intervals = app.add_subcommand("intervals", "Solve the sorted-disjoint interval problem");
  std::vector<std::string> i_items;
  intervals->add_option("intervals", i_items, "Intervals as a,b pairs")->required();

  auto* torricelli = app.add_subcommand("torricelli", "Classical Fermat-Torricelli point");
  std::vector<std::string> t_items;
  torricelli->add_option("points", t_items, "Three points as x,y")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed())
      return run_solve(s_problem, s_start, s_steps, s_max_iters, s_trace,
                       s_trace_every, s_tol, s_bound, pretty);
    if (check->parsed()) return run_check(c_problem, c_point, c_tol, pretty);
    if (oracle->parsed())
      return run_oracle(o_problem, o_bbox, o_coarse_n, o_refinements, pretty);
    if (intervals->parsed()) return run_intervals(i_items, pretty);
    if (torricelli->parsed()) return run_torricelli(t_items, pretty);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return classify_error(e);
  }
  return 1;
}
