#include "core/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "core/descriptors.hpp"
#include "core/errors.hpp"
#include "core/util.hpp"
#include "core/version.hpp"

namespace minsph {

using ordered_json = nlohmann::ordered_json;

namespace {

// JSON spells non-finite doubles as strings so the documents stay valid.
ordered_json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

ordered_json surface_json(const Hypersurface& M) {
  ordered_json j;
  j["descriptor"] = M.descriptor();
  j["kind"] = M.kind() == SurfaceKind::Equator ? "equator" : "clifford";
  j["n"] = M.n();
  if (M.kind() == SurfaceKind::Clifford) {
    j["p"] = M.p();
    j["q"] = M.q();
    j["r1"] = M.r1();
    j["r2"] = M.r2();
  }
  j["S_const"] = *M.S_const();
  j["volume"] = M.closed_form_volume();
  j["csc"] = M.csc();
  j["radially_symmetric"] = M.radially_symmetric();
  j["totally_geodesic"] = M.totally_geodesic();
  j["lambda1"] = M.lambda1();
  if (M.isoparametric_meta()) j["g"] = M.isoparametric_meta()->g;
  return j;
}

ordered_json constants_to_json(const ConstantsReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["s"] = rep.s;
  j["csc_assumed"] = rep.csc_assumed;
  if (!rep.surface.empty()) j["surface"] = rep.surface;
  j["theta1"] = rep.theta1;
  j["theta2"] = rep.theta2;
  j["C1"] = rep.C1;
  j["C2"] = rep.C2;
  j["argmin_r"] = rep.argmin_r;
  j["u0_at_min"] = rep.u0_at_min;
  j["C_main"] = rep.C_main;
  j["branch"] = branch_name(rep.branch);
  j["C0"] = rep.C0;
  j["C_csc_s0"] = rep.C_csc_s0;  // Cor-1.2 C(n,0) = 1/(4 C2); distinct from C0 by convention
  j["tildeC"] = rep.tildeC;
  j["log_tildeB"] = rep.log_tildeB;
  j["volume_gap_factor"] = rep.volume_gap_factor;
  j["epsilon_lower"] = rep.epsilon_lower;
  j["cheeger_embedded_lower"] = rep.cheeger_embedded_lower;
  j["delta"] = rep.delta;
  if (rep.muto_bound) j["isoparametric_lower"] = *rep.muto_bound;
  return j;
}

ordered_json report_to_json(const InequalityReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["name"] = r.name;
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["lhs_error"] = num(r.lhs_error);
  j["rhs_error"] = num(r.rhs_error);
  j["margin"] = num(r.margin);
  j["tolerance"] = num(r.tolerance);
  j["verdict"] = verdict_name(r.verdict);
  j["params"] = ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["notes"] = r.notes;
  return j;
}

ordered_json header_json(const RunConfig& cfg) {
  ordered_json j;
  j["toolkit"] = "minsph";
  j["version"] = kVersion;
  j["config_hash"] = to_hex(cfg.hash());
  j["seed"] = cfg.seed;
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string format_double(double v, int prec = 12) {
  std::ostringstream os;
  os.precision(prec);
  os << v;
  return os.str();
}

std::string csv_header_block(const RunConfig& cfg) {
  std::ostringstream os;
  os << "# minsph " << kVersion << "\n";
  os << "# config_hash=" << to_hex(cfg.hash()) << "\n";
  os << "# seed=" << cfg.seed << "\n";
  return os.str();
}

// ---- SVG ------------------------------------------------------------------

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct Mark {
  double x = 0.0, y = 0.0;
  std::string label;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string svg_line_chart(const std::string& title, const std::string& xlabel,
                           const std::string& ylabel, const std::vector<Series>& series,
                           const std::vector<Mark>& marks, const std::string& comment) {
  const double W = 720, H = 460, L = 70, R = 20, T = 40, B = 50;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Series& s : series)
    for (const auto& [x, y] : s.points) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
  for (const Mark& m : marks) {
    xmin = std::min(xmin, m.x);
    xmax = std::max(xmax, m.x);
    ymin = std::min(ymin, m.y);
    ymax = std::max(ymax, m.y);
  }
  if (!std::isfinite(xmin)) { xmin = 0; xmax = 1; ymin = 0; ymax = 1; }
  if (xmax - xmin < 1e-12) { xmax += 0.5; xmin -= 0.5; }
  if (ymax - ymin < 1e-12) { ymax += 0.5; ymin -= 0.5; }
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  std::ostringstream os;
  os.precision(8);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<!-- " << comment << " -->\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << title
     << "</text>\n";
  // axes
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
     << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double x = xmin + (xmax - xmin) * i / 5.0;
    const double y = ymin + (ymax - ymin) * i / 5.0;
    os << "<line x1=\"" << px(x) << "\" y1=\"" << H - B << "\" x2=\"" << px(x) << "\" y2=\""
       << H - B + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(x) << "\" y=\"" << H - B + 18
       << "\" text-anchor=\"middle\" font-size=\"11\">" << format_double(x, 4) << "</text>\n";
    os << "<line x1=\"" << L - 5 << "\" y1=\"" << py(y) << "\" x2=\"" << L << "\" y2=\"" << py(y)
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << L - 8 << "\" y=\"" << py(y) + 4
       << "\" text-anchor=\"end\" font-size=\"11\">" << format_double(y, 4) << "</text>\n";
  }
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12
     << "\" text-anchor=\"middle\" font-size=\"12\">" << xlabel << "</text>\n";
  os << "<text x=\"16\" y=\"" << (T + H - B) / 2
     << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
     << (T + H - B) / 2 << ")\">" << ylabel << "</text>\n";
  // zero line when the y-range crosses it
  if (ymin < 0.0 && ymax > 0.0)
    os << "<line x1=\"" << L << "\" y1=\"" << py(0.0) << "\" x2=\"" << W - R << "\" y2=\""
       << py(0.0) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4,3\"/>\n";
  int ci = 0;
  for (const Series& s : series) {
    const char* color = kPalette[ci % 8];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : s.points) os << px(x) << "," << py(y) << " ";
    os << "\"/>\n";
    os << "<text x=\"" << W - R - 6 << "\" y=\"" << T + 16 + 16 * ci
       << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">" << s.label
       << "</text>\n";
    ++ci;
  }
  for (const Mark& m : marks) {
    os << "<circle cx=\"" << px(m.x) << "\" cy=\"" << py(m.y)
       << "\" r=\"4\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
    if (!m.label.empty())
      os << "<text x=\"" << px(m.x) + 6 << "\" y=\"" << py(m.y) - 6 << "\" font-size=\"11\">"
         << m.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// verify driver
// ---------------------------------------------------------------------------

VerifyRunResult run_verify(const RunConfig& cfg) {
  ResolvedRun run = resolve_run(cfg);
  VerifyRunResult res;
  res.config = cfg;
  res.surface_desc = run.surface.descriptor();
  if (!run.surface.totally_geodesic())
    res.constants = compute_constants(run.surface.n(), run.ctx.s_grid.empty() ? 0.0 : run.ctx.s_grid.front(),
                                      &run.surface);
  res.outcome = run_checks(run.ctx, run.checks, /*strict=*/!run.checks_all);
  res.exit_code = res.outcome.fail > 0 ? 2 : 0;

  ordered_json j = header_json(cfg);
  {
    ordered_json c;
    const std::string text = cfg.to_text();
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      const std::size_t eq = line.find('=');
      if (eq != std::string::npos) c[line.substr(0, eq)] = line.substr(eq + 1);
    }
    j["config"] = c;
  }
  j["surface"] = surface_json(run.surface);
  if (res.constants) j["constants"] = constants_to_json(*res.constants);
  j["reports"] = ordered_json::array();
  for (const InequalityReport& r : res.outcome.reports) j["reports"].push_back(report_to_json(r));
  j["skipped"] = res.outcome.skipped;
  j["summary"] = {{"pass", res.outcome.pass},
                  {"fail", res.outcome.fail},
                  {"inconclusive", res.outcome.inconclusive},
                  {"total", static_cast<int>(res.outcome.reports.size())}};
  res.json = j.dump(2) + "\n";

  {
    std::ostringstream os;
    os << csv_header_block(cfg);
    os << "check,name,axis,s,t,lhs,rhs,lhs_error,rhs_error,margin,tolerance,verdict\n";
    for (const InequalityReport& r : res.outcome.reports) {
      auto param = [&](const char* k) {
        auto it = r.params.find(k);
        return it == r.params.end() ? std::string() : it->second;
      };
      os << r.check << "," << csv_escape(r.name) << "," << csv_escape(param("axis")) << ","
         << param("s") << "," << param("t") << "," << format_double(r.lhs) << ","
         << format_double(r.rhs) << "," << format_double(r.lhs_error) << ","
         << format_double(r.rhs_error) << "," << format_double(r.margin) << ","
         << format_double(r.tolerance) << "," << verdict_name(r.verdict) << "\n";
    }
    res.csv = os.str();
  }

  {
    std::ostringstream os;
    os << "minsph " << kVersion << "  surface=" << res.surface_desc
       << "  config=" << to_hex(cfg.hash()) << "  seed=" << cfg.seed << "\n";
    os << std::left << std::setw(44) << "check" << std::right << std::setw(14) << "margin"
       << std::setw(15) << "verdict" << "\n";
    os << std::string(73, '-') << "\n";
    for (const InequalityReport& r : res.outcome.reports) {
      std::ostringstream m;
      m.precision(6);
      m << r.margin;
      os << std::left << std::setw(44) << r.name.substr(0, 43) << std::right << std::setw(14)
         << m.str() << std::setw(15) << verdict_name(r.verdict) << "\n";
    }
    for (const std::string& s : res.outcome.skipped) os << "skipped: " << s << "\n";
    os << "summary: pass=" << res.outcome.pass << " fail=" << res.outcome.fail
       << " inconclusive=" << res.outcome.inconclusive << "\n";
    res.table = os.str();
  }
  return res;
}

// ---------------------------------------------------------------------------
// sweep driver
// ---------------------------------------------------------------------------

SweepRunResult run_sweep(const RunConfig& cfg) {
  ResolvedRun run = resolve_run(cfg);
  SweepRunResult res;
  res.config = cfg;

  // s-dependent checks the surface is eligible for.
  std::vector<std::string> checks;
  if (!run.surface.totally_geodesic()) {
    checks.push_back("thm_main_i");
    if (run.surface.csc()) checks.push_back("cor_csc");
    IeResult ie = check_ie(run.ctx);
    if (ie.is_ie && ie.moment_ok && run.surface.csc()) checks.push_back("cor_ie");
  }
  if (checks.empty())
    throw HypothesisError("sweep: no s-dependent checks are applicable to " +
                          run.surface.descriptor());

  const RunOutcome outcome = run_checks(run.ctx, checks, /*strict=*/false);

  std::ostringstream csv;
  csv << csv_header_block(cfg);
  csv << "s,axis";
  for (const std::string& c : checks) csv << ",margin_" << c << ",verdict_" << c;
  csv << "\n";
  // rows keyed by (s, axis) in grid/axis declaration order
  std::map<std::pair<std::string, std::string>, std::map<std::string, const InequalityReport*>>
      cell;
  for (const InequalityReport& r : outcome.reports) {
    auto sit = r.params.find("s");
    auto ait = r.params.find("axis");
    if (sit == r.params.end() || ait == r.params.end()) continue;
    cell[{sit->second, ait->second}][r.check] = &r;
  }
  std::vector<Series> series(checks.size());
  std::vector<Mark> marks;
  for (std::size_t i = 0; i < checks.size(); ++i) series[i].label = "min margin " + checks[i];
  for (double s : run.ctx.s_grid) {
    std::ostringstream skey;
    skey.precision(12);
    skey << s;
    std::vector<double> min_margin(checks.size(), std::numeric_limits<double>::infinity());
    std::vector<bool> any_flag(checks.size(), false);
    for (const LabeledAxis& la : run.ctx.axes) {
      auto it = cell.find({skey.str(), la.label});
      if (it == cell.end()) continue;
      csv << format_double(s) << "," << csv_escape(la.label);
      for (std::size_t i = 0; i < checks.size(); ++i) {
        auto rit = it->second.find(checks[i]);
        if (rit == it->second.end()) {
          csv << ",,";
          continue;
        }
        csv << "," << format_double(rit->second->margin) << ","
            << verdict_name(rit->second->verdict);
        min_margin[i] = std::min(min_margin[i], rit->second->margin);
        if (rit->second->verdict == Verdict::Inconclusive) any_flag[i] = true;
      }
      csv << "\n";
    }
    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (std::isfinite(min_margin[i])) {
        series[i].points.emplace_back(s, min_margin[i]);
        if (any_flag[i]) marks.push_back({s, min_margin[i], "flagged"});
      }
    }
  }
  res.csv = csv.str();
  res.svg = svg_line_chart("margin vs s on " + run.surface.descriptor(), "s", "margin", series,
                           marks,
                           "minsph " + std::string(kVersion) + " config=" + to_hex(cfg.hash()) +
                               " seed=" + cfg.seed);

  ordered_json j = header_json(cfg);
  j["surface"] = surface_json(run.surface);
  j["checks"] = checks;
  j["reports"] = ordered_json::array();
  for (const InequalityReport& r : outcome.reports) j["reports"].push_back(report_to_json(r));
  res.json = j.dump(2) + "\n";
  int fails = 0;
  for (const InequalityReport& r : outcome.reports)
    if (r.verdict == Verdict::Fail) ++fails;
  res.exit_code = fails > 0 ? 2 : 0;
  return res;
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

namespace {

std::vector<Hypersurface> catalog_members() {
  std::vector<Hypersurface> out;
  out.push_back(Hypersurface::equator(2));
  out.push_back(Hypersurface::equator(3));
  out.push_back(Hypersurface::equator(4));
  out.push_back(Hypersurface::clifford(1, 1));
  out.push_back(Hypersurface::clifford(1, 2));
  out.push_back(Hypersurface::clifford(1, 3));
  out.push_back(Hypersurface::clifford(2, 2));
  out.push_back(Hypersurface::clifford(2, 3));
  return out;
}

}  // namespace

std::string catalog_json() {
  ordered_json j;
  j["toolkit"] = "minsph";
  j["version"] = kVersion;
  j["catalog"] = ordered_json::array();
  for (const Hypersurface& M : catalog_members()) j["catalog"].push_back(surface_json(M));
  return j.dump(2) + "\n";
}

std::string catalog_table() {
  std::ostringstream os;
  os << std::left << std::setw(16) << "descriptor" << std::right << std::setw(4) << "n"
     << std::setw(6) << "S" << std::setw(14) << "Vol" << std::setw(8) << "l1"
     << "  flags\n";
  os << std::string(60, '-') << "\n";
  for (const Hypersurface& M : catalog_members()) {
    std::ostringstream vol;
    vol.precision(8);
    vol << M.closed_form_volume();
    os << std::left << std::setw(16) << M.descriptor() << std::right << std::setw(4) << M.n()
       << std::setw(6) << *M.S_const() << std::setw(14) << vol.str() << std::setw(8)
       << M.lambda1() << "  " << (M.csc() ? "csc " : "") << (M.radially_symmetric() ? "radial " : "")
       << (M.totally_geodesic() ? "totally-geodesic" : "") << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// constants rendering
// ---------------------------------------------------------------------------

std::string constants_json(const ConstantsReport& rep) {
  ordered_json j;
  j["toolkit"] = "minsph";
  j["version"] = kVersion;
  j["constants"] = constants_to_json(rep);
  return j.dump(2) + "\n";
}

std::string constants_table(const ConstantsReport& rep) {
  std::ostringstream os;
  os << "minsph " << kVersion << "  constants for n=" << rep.n << " s=" << rep.s;
  if (!rep.surface.empty()) os << " surface=" << rep.surface;
  if (rep.csc_assumed) os << " (CSC normalization)";
  os << "\n" << std::string(64, '-') << "\n";
  auto row = [&os](const char* k, double v) {
    os << std::left << std::setw(26) << k;
    std::ostringstream val;
    val.precision(12);
    val << v;
    os << val.str() << "\n";
  };
  row("theta1", rep.theta1);
  row("theta2", rep.theta2);
  row("C1", rep.C1);
  row("C2", rep.C2);
  row("argmin_r", rep.argmin_r);
  row("u0_at_min", rep.u0_at_min);
  row("C_main", rep.C_main);
  os << std::left << std::setw(26) << "branch" << branch_name(rep.branch) << "\n";
  row("C0", rep.C0);
  row("C_csc_s0", rep.C_csc_s0);
  row("tildeC", rep.tildeC);
  row("log_tildeB", rep.log_tildeB);
  row("volume_gap_factor", rep.volume_gap_factor);
  row("epsilon_lower", rep.epsilon_lower);
  row("cheeger_embedded_lower", rep.cheeger_embedded_lower);
  row("delta", rep.delta);
  if (rep.muto_bound) row("isoparametric_lower", *rep.muto_bound);
  return os.str();
}

std::string constants_sweep_csv(int n, const std::vector<double>& s_values) {
  std::ostringstream os;
  os << "# minsph " << kVersion << "\n";
  os << "s,C2,argmin_r,u0,C_main,branch\n";
  for (double s : s_values) {
    const C2Result c2 = c2_constant(n, s);
    const CMainResult cm = c_main(n, s, 1.0 / (2.0 * n), c2.value);
    os << format_double(s) << "," << format_double(c2.value) << "," << format_double(c2.argmin_r)
       << "," << format_double(c2.u0) << "," << format_double(cm.value) << ","
       << branch_name(cm.branch) << "\n";
  }
  return os.str();
}

std::string c2_profile_svg(int n, double s) {
  const C2Result c2 = c2_constant(n, s);
  Series prof;
  prof.label = "f(r), n=" + std::to_string(n) + ", s=" + format_double(s, 4);
  const int kPoints = 400;
  for (int i = 0; i <= kPoints; ++i) {
    const double r = s + (1.0 - s) * i / kPoints;
    prof.points.emplace_back(r, c2_objective(n, s, r));
  }
  Mark m{c2.argmin_r, c2.value, "argmin r=" + format_double(c2.argmin_r, 6)};
  return svg_line_chart("C2 objective", "r", "f(r)", {prof}, {m},
                        "minsph " + std::string(kVersion));
}

}  // namespace minsph
