#include "core/descriptors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace minsph {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

long long parse_ll(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string("invalid integer for ") + what + ": '" + s + "'");
  }
}

double parse_real(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("");
    return v;
  } catch (...) {
    throw ParseError(std::string("invalid real for ") + what + ": '" + s + "'");
  }
}

}  // namespace

Hypersurface parse_surface(const std::string& desc) {
  const std::string d = trim(desc);
  if (d.rfind("equator:", 0) == 0) {
    const long long n = parse_ll(d.substr(8), "equator dimension");
    if (n < 2 || n > 60) throw ParseError("equator: n must be in [2, 60]");
    return Hypersurface::equator(static_cast<int>(n));
  }
  if (d.rfind("clifford:", 0) == 0) {
    const std::vector<std::string> parts = split(d.substr(9), ',');
    if (parts.size() != 2) throw ParseError("clifford descriptor needs p,q");
    const long long p = parse_ll(trim(parts[0]), "clifford p");
    const long long q = parse_ll(trim(parts[1]), "clifford q");
    if (p < 1 || q < 1 || p + q > 60) throw ParseError("clifford: need p,q >= 1 and p+q <= 60");
    return Hypersurface::clifford(static_cast<int>(p), static_cast<int>(q));
  }
  throw ParseError("unknown surface descriptor: '" + d + "' (expected equator:<n> or clifford:<p>,<q>)");
}

LabeledAxis parse_axis(const std::string& desc, int ambient_dim) {
  const std::string d = trim(desc);
  if (d.empty()) throw ParseError("empty axis descriptor");
  double sign = 1.0;
  std::string body = d;
  if (body[0] == '-' && body.size() > 1 && body[1] == 'e') {
    sign = -1.0;
    body = body.substr(1);
  }
  if (body.size() > 1 && body[0] == 'e' &&
      std::isdigit(static_cast<unsigned char>(body[1]))) {
    const long long k = parse_ll(body.substr(1), "axis index");
    if (k < 1 || k > ambient_dim)
      throw ParseError("axis index out of range for ambient dimension " +
                       std::to_string(ambient_dim));
    return {Axis::basis(ambient_dim, static_cast<int>(k), sign), d};
  }
  if (d.rfind("random:", 0) == 0) {
    const long long seed = parse_ll(d.substr(7), "axis seed");
    return {Axis::random(ambient_dim, static_cast<uint64_t>(seed)), d};
  }
  // explicit components
  const std::vector<std::string> parts = split(d, ',');
  if (parts.size() < 2) throw ParseError("unknown axis descriptor: '" + d + "'");
  if (static_cast<int>(parts.size()) != ambient_dim)
    throw ParseError("axis has " + std::to_string(parts.size()) + " components, ambient needs " +
                     std::to_string(ambient_dim));
  std::vector<double> comps;
  comps.reserve(parts.size());
  for (const std::string& p : parts) comps.push_back(parse_real(trim(p), "axis component"));
  return {Axis::normalized(std::move(comps)), d};
}

std::vector<LabeledAxis> parse_axes(const std::string& spec, const Hypersurface& M,
                                    uint64_t seed) {
  const std::string d = trim(spec);
  const int adim = M.ambient_dim();
  std::vector<LabeledAxis> out;
  auto add_basis = [&] {
    for (int k = 1; k <= adim; ++k) {
      out.push_back({Axis::basis(adim, k, +1.0), "e" + std::to_string(k)});
      out.push_back({Axis::basis(adim, k, -1.0), "-e" + std::to_string(k)});
    }
  };
  if (d == "basis") {
    add_basis();
    return out;
  }
  if (d.rfind("random:", 0) == 0) {
    const std::vector<std::string> parts = split(d, ':');
    if (parts.size() != 3) throw ParseError("random axis set needs random:<k>:<seed>");
    const long long k = parse_ll(parts[1], "axis count");
    const long long sd = parse_ll(parts[2], "axis seed");
    if (k < 1) throw ParseError("axis count must be >= 1");
    for (long long i = 0; i < k; ++i) {
      const uint64_t s = static_cast<uint64_t>(sd) + static_cast<uint64_t>(i);
      out.push_back({Axis::random(adim, s), "random:" + std::to_string(s)});
    }
    return out;
  }
  if (d == "default" || d.rfind("default:", 0) == 0) {
    long long count = 64;
    if (d.rfind("default:", 0) == 0) count = parse_ll(d.substr(8), "axis count");
    if (count < 1) throw ParseError("axis count must be >= 1");
    add_basis();
    if (static_cast<long long>(out.size()) > count) out.resize(static_cast<std::size_t>(count));
    long long i = 0;
    while (static_cast<long long>(out.size()) < count) {
      const uint64_t s = seed + static_cast<uint64_t>(i++);
      out.push_back({Axis::random(adim, s), "random:" + std::to_string(s)});
    }
    return out;
  }
  for (const std::string& part : split(d, ';')) {
    if (!trim(part).empty()) out.push_back(parse_axis(trim(part), adim));
  }
  if (out.empty()) throw ParseError("empty axis list");
  return out;
}

QuadratureSpec parse_quad(const std::string& spec, const Hypersurface& M) {
  const std::string d = trim(spec);
  if (d.empty() || d == "default") return QuadratureSpec::default_for(M);
  if (d.rfind("gauss:", 0) == 0) {
    const long long order = parse_ll(d.substr(6), "gauss order");
    if (order < 2 || order > 512) throw ParseError("gauss order must be in [2, 512]");
    return QuadratureSpec::gauss(static_cast<int>(order));
  }
  if (d.rfind("mc:", 0) == 0) {
    const std::vector<std::string> parts = split(d, ':');
    if (parts.size() != 3) throw ParseError("monte carlo spec needs mc:<samples>:<seed>");
    const long long samples = parse_ll(parts[1], "mc samples");
    const long long sd = parse_ll(parts[2], "mc seed");
    if (samples < 100) throw ParseError("mc samples must be >= 100");
    return QuadratureSpec::monte_carlo(samples, static_cast<uint64_t>(sd));
  }
  throw ParseError("unknown quadrature spec: '" + d + "'");
}

std::vector<double> parse_grid(const std::string& spec) {
  const std::string d = trim(spec);
  if (d.empty()) throw ParseError("empty grid spec");
  std::vector<double> out;
  if (d.find(':') != std::string::npos) {
    const std::vector<std::string> parts = split(d, ':');
    if (parts.size() != 3) throw ParseError("grid spec needs a:b:step");
    const double a = parse_real(parts[0], "grid start");
    const double b = parse_real(parts[1], "grid stop");
    const double step = parse_real(parts[2], "grid step");
    if (!(step > 0.0) || b < a) throw ParseError("grid spec needs b >= a and step > 0");
    for (double v = a; v <= b + 1e-12; v += step) out.push_back(std::min(v, b));
    return out;
  }
  for (const std::string& p : split(d, ',')) out.push_back(parse_real(trim(p), "grid value"));
  return out;
}

std::vector<double> parse_band(const std::string& spec) {
  std::vector<double> out;
  for (const std::string& p : split(trim(spec), ','))
    out.push_back(parse_real(trim(p), "band half-width"));
  for (double e : out)
    if (!(e > 0.0 && e < 0.5)) throw ParseError("band half-widths must be in (0, 0.5)");
  return out;
}

LevelMethod parse_method(const std::string& spec) {
  const std::string d = trim(spec);
  if (d.empty() || d == "auto") return LevelMethod::Auto;
  if (d == "analytic") return LevelMethod::AnalyticSlice;
  if (d == "band") return LevelMethod::CoareaBand;
  throw ParseError("unknown level method: '" + d + "' (expected analytic|band|auto)");
}

const char* method_name(LevelMethod m) {
  switch (m) {
    case LevelMethod::Auto: return "auto";
    case LevelMethod::AnalyticSlice: return "analytic";
    case LevelMethod::CoareaBand: return "band";
  }
  return "?";
}

std::vector<std::string> parse_checks(const std::string& spec) {
  const std::string d = trim(spec);
  if (d.empty() || d == "all") {
    std::vector<std::string> all;
    for (const CheckInfo& c : check_registry()) all.push_back(c.name);
    return all;
  }
  std::vector<std::string> out;
  for (const std::string& p : split(d, ',')) {
    const std::string name = trim(p);
    if (name.empty()) continue;
    if (!is_known_check(name)) throw ParseError("unknown check: '" + name + "'");
    out.push_back(name);
  }
  if (out.empty()) throw ParseError("empty check list");
  return out;
}

}  // namespace minsph
