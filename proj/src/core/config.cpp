#include "core/config.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "core/descriptors.hpp"
#include "core/errors.hpp"
#include "core/util.hpp"

namespace minsph {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::string RunConfig::to_text() const {
  std::map<std::string, std::string> kv = {
      {"axes", axes},       {"band", band},           {"band_samples", band_samples},
      {"checks", checks},   {"format", format},       {"method", method},
      {"out", out},         {"quad", quad},           {"s_grid", s_grid},
      {"seed", seed},       {"surface", surface},     {"t_list", t_list},
      {"tolerance", tolerance},
  };
  std::ostringstream os;
  for (const auto& [k, v] : kv) os << k << "=" << v << "\n";
  return os.str();
}

void RunConfig::set(const std::string& key, const std::string& value) {
  if (key == "surface") surface = value;
  else if (key == "axes") axes = value;
  else if (key == "quad") quad = value;
  else if (key == "s_grid") s_grid = value;
  else if (key == "t_list") t_list = value;
  else if (key == "checks") checks = value;
  else if (key == "band") band = value;
  else if (key == "band_samples") band_samples = value;
  else if (key == "method") method = value;
  else if (key == "format") format = value;
  else if (key == "out") out = value;
  else if (key == "seed") seed = value;
  else if (key == "tolerance") tolerance = value;
  else throw ParseError("unknown config key: '" + key + "'");
}

RunConfig RunConfig::from_text(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("config line is not key=value: '" + t + "'");
    cfg.set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

uint64_t RunConfig::hash() const { return fnv1a(to_text()); }

ResolvedRun resolve_run(const RunConfig& cfg) {
  ResolvedRun run{parse_surface(cfg.surface), {}, {}, false, 42};
  try {
    run.seed = static_cast<uint64_t>(std::stoull(cfg.seed));
  } catch (...) {
    throw ParseError("invalid seed: '" + cfg.seed + "'");
  }
  CheckContext& ctx = run.ctx;
  ctx.M = &run.surface;
  ctx.axes = parse_axes(cfg.axes, run.surface, run.seed);
  // Probe axes for per-axis parameter grids: one aligned axis (analytic fast
  // paths) and one seeded random axis (generic estimators).
  ctx.probe_axes = {parse_axis("e1", run.surface.ambient_dim()),
                    parse_axis("random:" + std::to_string(run.seed + 7),
                               run.surface.ambient_dim())};
  ctx.quad = parse_quad(cfg.quad, run.surface);
  ctx.method = parse_method(cfg.method);
  ctx.band.half_widths = parse_band(cfg.band);
  try {
    ctx.band.samples = std::stoll(cfg.band_samples);
  } catch (...) {
    throw ParseError("invalid band_samples: '" + cfg.band_samples + "'");
  }
  if (ctx.band.samples < 100) throw ParseError("band_samples must be >= 100");
  ctx.band.seed = run.seed;
  ctx.s_grid = parse_grid(cfg.s_grid);
  for (double s : ctx.s_grid)
    if (!(s >= 0.0 && s < 1.0)) throw ParseError("s_grid values must be in [0,1)");
  ctx.t_list = parse_grid(cfg.t_list);
  for (double t : ctx.t_list)
    if (!(t >= 0.0 && t < 1.0)) throw ParseError("t_list values must be in [0,1)");
  ctx.sr_grid = default_sr_grid();
  try {
    ctx.tolerance = std::stod(cfg.tolerance);
  } catch (...) {
    throw ParseError("invalid tolerance: '" + cfg.tolerance + "'");
  }
  if (!(ctx.tolerance > 0.0)) throw ParseError("tolerance must be positive");
  run.checks_all = trim(cfg.checks).empty() || trim(cfg.checks) == "all";
  run.checks = parse_checks(cfg.checks);
  return run;
}

}  // namespace minsph
