// minsph command-line front end. Talks to the core exclusively through the
// C API in minsph.h; output formatting of returned JSON happens here.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minsph.h"

namespace {

namespace fs = std::filesystem;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  minsph_string_free(s);
  return out;
}

[[noreturn]] void die_status(minsph_status st) {
  std::cerr << "error: " << minsph_last_error() << "\n";
  (void)st;
  std::exit(1);
}

std::string out_dir() {
  const char* env = std::getenv("MINSPH_OUT_DIR");
  return env && env[0] ? env : ".";
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ':' || c == ',' || c == ';' || c == '/') c = '-';
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream os(p, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(1);
  }
  os << content;
}

// Config text assembled as file content plus flag overrides; later lines win.
struct ConfigBuilder {
  std::string text;

  void load_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) {
      std::cerr << "error: cannot read config file " << path << "\n";
      std::exit(1);
    }
    std::stringstream ss;
    ss << is.rdbuf();
    text += ss.str();
    if (!text.empty() && text.back() != '\n') text += '\n';
  }

  void set(const std::string& key, const std::string& value) {
    if (!value.empty()) text += key + "=" + value + "\n";
  }
};

int cmd_catalog(bool as_json) {
  char* json = nullptr;
  if (minsph_status st = minsph_catalog_json(&json)) die_status(st);
  const std::string doc = take_string(json);
  if (as_json) {
    std::cout << doc;
    return 0;
  }
  const auto j = nlohmann::json::parse(doc);
  std::printf("%-16s %3s %6s %14s %6s  %s\n", "descriptor", "n", "S", "Vol", "l1", "flags");
  std::printf("%s\n", std::string(64, '-').c_str());
  for (const auto& m : j["catalog"]) {
    std::string flags;
    if (m["csc"].get<bool>()) flags += "csc ";
    if (m["radially_symmetric"].get<bool>()) flags += "radial ";
    if (m["totally_geodesic"].get<bool>()) flags += "totally-geodesic";
    std::printf("%-16s %3d %6.2f %14.8f %6.0f  %s\n",
                m["descriptor"].get<std::string>().c_str(), m["n"].get<int>(),
                m["S_const"].get<double>(), m["volume"].get<double>(),
                m["lambda1"].get<double>(), flags.c_str());
  }
  return 0;
}

int cmd_constants(int n, double s, const std::string& surface, int g, const std::string& sweep,
                  const std::string& format, const std::string& out, const std::string& svg) {
  if (!sweep.empty()) {
    char* csv = nullptr;
    if (minsph_status st = minsph_constants_sweep_csv(n, sweep.c_str(), &csv)) die_status(st);
    const std::string doc = take_string(csv);
    if (out.empty())
      std::cout << doc;
    else
      write_file(out, doc);
    if (!svg.empty()) {
      char* profile = nullptr;
      if (minsph_status st = minsph_constants_profile_svg(n, 0.0, &profile)) die_status(st);
      write_file(svg, take_string(profile));
    }
    return 0;
  }
  char* json = nullptr;
  if (minsph_status st =
          minsph_constants_json(n, s, surface.empty() ? nullptr : surface.c_str(), g, &json))
    die_status(st);
  const std::string doc = take_string(json);
  if (!svg.empty()) {
    char* profile = nullptr;
    if (minsph_status st = minsph_constants_profile_svg(n, s, &profile)) die_status(st);
    write_file(svg, take_string(profile));
  }
  if (format == "json") {
    if (out.empty())
      std::cout << doc;
    else
      write_file(out, doc);
    return 0;
  }
  // aligned table from the JSON payload
  const auto j = nlohmann::json::parse(doc)["constants"];
  std::ostringstream os;
  os << "constants for n=" << j["n"].get<int>() << " s=" << j["s"].get<double>();
  if (j.contains("surface")) os << " surface=" << j["surface"].get<std::string>();
  if (j["csc_assumed"].get<bool>()) os << " (CSC normalization)";
  os << "\n" << std::string(44, '-') << "\n";
  for (const auto& [key, value] : j.items()) {
    if (key == "n" || key == "s" || key == "csc_assumed" || key == "surface") continue;
    os << "  " << key << std::string(key.size() < 24 ? 24 - key.size() : 1, ' ');
    if (value.is_string())
      os << value.get<std::string>();
    else
      os << value.dump();
    os << "\n";
  }
  if (out.empty())
    std::cout << os.str();
  else
    write_file(out, os.str());
  return 0;
}

int cmd_verify(const ConfigBuilder& cb, const std::string& format_flag) {
  minsph_run* run = nullptr;
  if (minsph_status st = minsph_verify_run(cb.text.c_str(), &run)) die_status(st);
  char* table = nullptr;
  minsph_run_table(run, &table);
  std::cout << take_string(table);

  // report file in the requested format
  std::string format = format_flag.empty() ? "json" : format_flag;
  char* json = nullptr;
  minsph_run_json(run, &json);
  const std::string doc = take_string(json);
  const auto j = nlohmann::json::parse(doc);
  std::string out = j["config"]["out"].get<std::string>();
  const std::string surface = j["config"]["surface"].get<std::string>();
  if (out.empty())
    out = out_dir() + "/minsph_verify_" + sanitize(surface) + "." + (format == "table" ? "txt" : format);
  std::string payload;
  if (format == "json") {
    payload = doc;
  } else if (format == "csv") {
    char* csv = nullptr;
    minsph_run_csv(run, &csv);
    payload = take_string(csv);
  } else if (format == "table") {
    char* t = nullptr;
    minsph_run_table(run, &t);
    payload = take_string(t);
  } else {
    std::cerr << "error: unknown format '" << format << "' (json|csv|table)\n";
    minsph_run_free(run);
    return 1;
  }
  write_file(out, payload);
  std::cout << "report written to " << out << "\n";
  const int code = minsph_run_exit_code(run);
  minsph_run_free(run);
  return code;
}

int cmd_sweep(const ConfigBuilder& cb, const std::string& out, const std::string& svg_path) {
  char* csv = nullptr;
  char* svg = nullptr;
  int code = 0;
  if (minsph_status st = minsph_sweep_run(cb.text.c_str(), &csv, &svg, &code)) die_status(st);
  const std::string csv_doc = take_string(csv);
  const std::string svg_doc = take_string(svg);
  std::string csv_out = out;
  if (csv_out.empty()) csv_out = out_dir() + "/minsph_sweep.csv";
  write_file(csv_out, csv_doc);
  std::string svg_out = svg_path;
  if (svg_out.empty()) svg_out = out_dir() + "/minsph_sweep.svg";
  write_file(svg_out, svg_doc);
  std::cout << "sweep written to " << csv_out << " and " << svg_out << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minsph: isoperimetric inequalities of minimal hypersurfaces in the unit sphere"};
  app.require_subcommand(1);

  // catalog
  auto* catalog = app.add_subcommand("catalog", "list catalog surfaces");
  bool catalog_json_flag = false;
  catalog->add_flag("--json", catalog_json_flag, "machine-readable output");

  // constants
  auto* constants = app.add_subcommand("constants", "paper constants for (n, s)");
  int n = 2, g = 0;
  double s = 0.0;
  std::string surface, sweep, format = "table", out, svg;
  constants->add_option("--n", n, "intrinsic dimension")->required();
  constants->add_option("--s", s, "level in [0,1)");
  constants->add_option("--surface", surface, "surface descriptor for theta integrals");
  constants->add_option("--g", g, "isoparametric curvature count (2..6)");
  constants->add_option("--sweep", sweep, "s-grid a:b:step for a CSV sweep");
  constants->add_option("--format", format, "json|table");
  constants->add_option("--out", out, "output path (default stdout)");
  constants->add_option("--svg", svg, "write the C2 objective profile SVG here");

  // verify
  auto* verify = app.add_subcommand("verify", "run inequality checks");
  std::string v_surface, v_axes, v_checks, v_quad, v_sgrid, v_tgrid, v_band, v_band_samples,
      v_method, v_format, v_out, v_seed, v_tol, v_config;
  verify->add_option("--surface", v_surface, "surface descriptor");
  verify->add_option("--axes", v_axes, "basis|random:<k>:<seed>|default[:<count>]|list");
  verify->add_option("--checks", v_checks, "all or comma-separated check names");
  verify->add_option("--quad", v_quad, "gauss:<order>|mc:<samples>:<seed>");
  verify->add_option("--s-grid", v_sgrid, "s grid a:b:step or comma list");
  verify->add_option("--t-grid", v_tgrid, "divergence levels t");
  verify->add_option("--band", v_band, "band half-widths eps1,eps2,...");
  verify->add_option("--band-samples", v_band_samples, "Monte Carlo samples per band sweep");
  verify->add_option("--method", v_method, "analytic|band|auto");
  verify->add_option("--format", v_format, "json|csv|table report file format");
  verify->add_option("--out", v_out, "report file path");
  verify->add_option("--seed", v_seed, "run seed");
  verify->add_option("--tolerance", v_tol, "constants-check tolerance");
  verify->add_option("--config", v_config, "key=value config file (flags override)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "margin-vs-s sweep");
  std::string w_surface, w_axes, w_quad, w_s, w_band, w_method, w_seed, w_out, w_svg, w_config;
  sweep_cmd->add_option("--surface", w_surface, "surface descriptor");
  sweep_cmd->add_option("--s", w_s, "s grid a:b:step");
  sweep_cmd->add_option("--axes", w_axes, "axis set");
  sweep_cmd->add_option("--quad", w_quad, "quadrature spec");
  sweep_cmd->add_option("--band", w_band, "band half-widths");
  sweep_cmd->add_option("--method", w_method, "analytic|band|auto");
  sweep_cmd->add_option("--seed", w_seed, "run seed");
  sweep_cmd->add_option("--out", w_out, "CSV output path");
  sweep_cmd->add_option("--svg", w_svg, "SVG output path");
  sweep_cmd->add_option("--config", w_config, "key=value config file (flags override)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(catalog_json_flag);
    if (constants->parsed()) return cmd_constants(n, s, surface, g, sweep, format, out, svg);
    if (verify->parsed()) {
      ConfigBuilder cb;
      if (!v_config.empty()) cb.load_file(v_config);
      cb.set("surface", v_surface);
      cb.set("axes", v_axes);
      cb.set("checks", v_checks);
      cb.set("quad", v_quad);
      cb.set("s_grid", v_sgrid);
      cb.set("t_list", v_tgrid);
      cb.set("band", v_band);
      cb.set("band_samples", v_band_samples);
      cb.set("method", v_method);
      cb.set("format", v_format);
      cb.set("out", v_out);
      cb.set("seed", v_seed);
      cb.set("tolerance", v_tol);
      return cmd_verify(cb, v_format);
    }
    if (sweep_cmd->parsed()) {
      ConfigBuilder cb;
      if (!w_config.empty()) cb.load_file(w_config);
      cb.set("surface", w_surface);
      cb.set("axes", w_axes);
      cb.set("quad", w_quad);
      cb.set("s_grid", w_s);
      cb.set("band", w_band);
      cb.set("method", w_method);
      cb.set("seed", w_seed);
      return cmd_sweep(cb, w_out, w_svg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
