#include "minsph.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/config.hpp"
#include "core/constants.hpp"
#include "core/descriptors.hpp"
#include "core/errors.hpp"
#include "core/geometry.hpp"
#include "core/integrate.hpp"
#include "core/levelset.hpp"
#include "core/report.hpp"
#include "core/util.hpp"
#include "core/version.hpp"

using namespace minsph;

struct minsph_surface {
  Hypersurface M;
};

struct minsph_run {
  VerifyRunResult result;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Exceptions from the core map onto status codes at this boundary.
template <class F>
minsph_status guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    set_error(e.what());
    return MINSPH_ERR_INVALID_ARG;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return MINSPH_ERR_INVALID_ARG;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return MINSPH_ERR_DOMAIN;
  } catch (const HypothesisError& e) {
    set_error(e.what());
    return MINSPH_ERR_HYPOTHESIS;
  } catch (const NumericError& e) {
    set_error(e.what());
    return MINSPH_ERR_NUMERIC;
  } catch (const std::exception& e) {
    set_error(e.what());
    return MINSPH_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return MINSPH_ERR_INTERNAL;
  }
}

minsph_status require(bool ok, const char* msg) {
  if (!ok) {
    set_error(msg);
    return MINSPH_ERR_INVALID_ARG;
  }
  return MINSPH_OK;
}

minsph_status emit(char** out, const std::string& s) {
  *out = dup_string(s);
  if (!*out) {
    set_error("allocation failure");
    return MINSPH_ERR_INTERNAL;
  }
  return MINSPH_OK;
}

RunConfig config_from_text(const char* config_text) {
  return RunConfig::from_text(config_text ? config_text : "");
}

}  // namespace

extern "C" {

const char* minsph_version(void) { return kVersion; }

const char* minsph_last_error(void) { return g_last_error.c_str(); }

void minsph_string_free(char* s) { delete[] s; }

minsph_status minsph_surface_create(const char* descriptor, minsph_surface** out) {
  if (minsph_status st = require(descriptor && out, "descriptor and out must be non-null"))
    return st;
  return guarded([&] {
    *out = new minsph_surface{parse_surface(descriptor)};
    return MINSPH_OK;
  });
}

void minsph_surface_free(minsph_surface* s) { delete s; }

minsph_status minsph_surface_info_json(const minsph_surface* s, char** out_json) {
  if (minsph_status st = require(s && out_json, "surface and out must be non-null")) return st;
  return guarded([&] {
    const Hypersurface& M = s->M;
    nlohmann::ordered_json j;
    j["descriptor"] = M.descriptor();
    j["n"] = M.n();
    j["ambient_dim"] = M.ambient_dim();
    j["S_const"] = *M.S_const();
    j["volume"] = M.closed_form_volume();
    j["csc"] = M.csc();
    j["radially_symmetric"] = M.radially_symmetric();
    j["totally_geodesic"] = M.totally_geodesic();
    j["lambda1"] = M.lambda1();
    j["chart_dims"] = M.charts()[0].dim();
    return emit(out_json, j.dump(2) + "\n");
  });
}

minsph_status minsph_surface_frame_json(const minsph_surface* s, const double* coords,
                                        size_t n_coords, const char* axis, char** out_json) {
  if (minsph_status st = require(s && coords && out_json, "surface, coords, out must be non-null"))
    return st;
  return guarded([&] {
    ChartPoint pt;
    pt.chart_id = 0;
    pt.coords.assign(coords, coords + n_coords);
    const PointFrame f = s->M.frame_at(pt);
    nlohmann::ordered_json j;
    j["position"] = f.position;
    j["normal"] = f.normal;
    nlohmann::ordered_json pcs = nlohmann::ordered_json::array();
    for (const CurvaturePair& cp : f.principal)
      pcs.push_back({{"value", cp.value}, {"multiplicity", cp.multiplicity}});
    j["principal_curvatures"] = pcs;
    j["S"] = f.S;
    j["H"] = f.H;
    j["metric_jacobian"] = f.metric_jacobian;
    if (axis && axis[0]) {
      const LabeledAxis la = parse_axis(axis, s->M.ambient_dim());
      j["axis"] = la.label;
      j["phi"] = height(f, la.axis);
      j["psi"] = normal_height(f, la.axis);
      j["tangent_norm_sq"] = tangent_norm_sq(f, la.axis);
      j["laplacian_phi"] = laplacian_height(s->M, f, la.axis);
      j["laplacian_psi"] = laplacian_normal_height(s->M, f, la.axis);
      j["ricci_quadratic"] = ricci_quadratic(s->M, f, la.axis);
    }
    return emit(out_json, j.dump(2) + "\n");
  });
}

minsph_status minsph_surface_volume(const minsph_surface* s, const char* quad, double* value,
                                    double* error) {
  if (minsph_status st = require(s && value, "surface and value must be non-null")) return st;
  return guarded([&] {
    const IntegralEstimate est = volume(s->M, parse_quad(quad ? quad : "", s->M));
    *value = est.value;
    if (error) *error = est.error;
    return MINSPH_OK;
  });
}

minsph_status minsph_surface_moment2(const minsph_surface* s, const char* axis, const char* quad,
                                     double* value, double* error) {
  if (minsph_status st = require(s && axis && value, "surface, axis, value must be non-null"))
    return st;
  return guarded([&] {
    const LabeledAxis la = parse_axis(axis, s->M.ambient_dim());
    const IntegralEstimate est = moment2(s->M, la.axis, parse_quad(quad ? quad : "", s->M));
    *value = est.value;
    if (error) *error = est.error;
    return MINSPH_OK;
  });
}

minsph_status minsph_surface_moment_abs(const minsph_surface* s, const char* axis,
                                        const char* quad, double* value, double* error) {
  if (minsph_status st = require(s && axis && value, "surface, axis, value must be non-null"))
    return st;
  return guarded([&] {
    const LabeledAxis la = parse_axis(axis, s->M.ambient_dim());
    const IntegralEstimate est = moment_abs(s->M, la.axis, parse_quad(quad ? quad : "", s->M));
    *value = est.value;
    if (error) *error = est.error;
    return MINSPH_OK;
  });
}

minsph_status minsph_surface_superlevel_volume(const minsph_surface* s, const char* axis,
                                               double level, const char* quad, double* value,
                                               double* error) {
  if (minsph_status st = require(s && axis && value, "surface, axis, value must be non-null"))
    return st;
  return guarded([&] {
    LevelQuery q;
    q.surface = &s->M;
    q.axis = parse_axis(axis, s->M.ambient_dim()).axis;
    q.s = level;
    q.quad = parse_quad(quad ? quad : "", s->M);
    const LevelEstimate est = superlevel_volume(q);
    *value = est.est.value;
    if (error) *error = est.est.error;
    return MINSPH_OK;
  });
}

minsph_status minsph_surface_level_volume(const minsph_surface* s, const char* axis, double level,
                                          const char* method, const char* quad, double* value,
                                          double* error, int* near_critical) {
  if (minsph_status st = require(s && axis && value, "surface, axis, value must be non-null"))
    return st;
  return guarded([&] {
    LevelQuery q;
    q.surface = &s->M;
    q.axis = parse_axis(axis, s->M.ambient_dim()).axis;
    q.s = level;
    q.method = parse_method(method ? method : "auto");
    q.quad = parse_quad(quad ? quad : "", s->M);
    const LevelEstimate est = level_volume(q);
    *value = est.est.value;
    if (error) *error = est.est.error;
    if (near_critical) *near_critical = est.near_critical ? 1 : 0;
    return MINSPH_OK;
  });
}

minsph_status minsph_surface_cheeger_upper(const minsph_surface* s, const char* axes,
                                           const char* quad, double* value) {
  if (minsph_status st = require(s && value, "surface and value must be non-null")) return st;
  return guarded([&] {
    const std::vector<LabeledAxis> labeled =
        parse_axes(axes && axes[0] ? axes : "basis", s->M, 42);
    std::vector<Axis> plain;
    plain.reserve(labeled.size());
    for (const LabeledAxis& la : labeled) plain.push_back(la.axis);
    const CheegerUpperResult res =
        cheeger_upper_estimate(s->M, plain, parse_quad(quad ? quad : "", s->M));
    *value = res.value;
    return MINSPH_OK;
  });
}

minsph_status minsph_constants_json(int n, double s, const char* surface, int g,
                                    char** out_json) {
  if (minsph_status st = require(out_json != nullptr, "out must be non-null")) return st;
  return guarded([&] {
    std::optional<Hypersurface> M;
    if (surface && surface[0]) M = parse_surface(surface);
    std::optional<int> gg;
    if (g != 0) gg = g;
    const ConstantsReport rep =
        compute_constants(n, s, M ? &*M : nullptr, gg);
    return emit(out_json, constants_json(rep));
  });
}

minsph_status minsph_constants_sweep_csv(int n, const char* s_grid, char** out_csv) {
  if (minsph_status st = require(s_grid && out_csv, "s_grid and out must be non-null")) return st;
  return guarded([&] {
    const std::vector<double> grid = parse_grid(s_grid);
    for (double s : grid)
      if (!(s >= 0.0 && s < 1.0)) throw std::domain_error("sweep s values must be in [0,1)");
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    return emit(out_csv, constants_sweep_csv(n, grid));
  });
}

minsph_status minsph_constants_profile_svg(int n, double s, char** out_svg) {
  if (minsph_status st = require(out_svg != nullptr, "out must be non-null")) return st;
  return guarded([&] { return emit(out_svg, c2_profile_svg(n, s)); });
}

minsph_status minsph_catalog_json(char** out_json) {
  if (minsph_status st = require(out_json != nullptr, "out must be non-null")) return st;
  return guarded([&] { return emit(out_json, catalog_json()); });
}

minsph_status minsph_verify_run(const char* config_text, minsph_run** out) {
  if (minsph_status st = require(out != nullptr, "out must be non-null")) return st;
  return guarded([&] {
    *out = new minsph_run{run_verify(config_from_text(config_text))};
    return MINSPH_OK;
  });
}

void minsph_run_free(minsph_run* r) { delete r; }

minsph_status minsph_run_json(const minsph_run* r, char** out_json) {
  if (minsph_status st = require(r && out_json, "run and out must be non-null")) return st;
  return emit(out_json, r->result.json);
}

minsph_status minsph_run_csv(const minsph_run* r, char** out_csv) {
  if (minsph_status st = require(r && out_csv, "run and out must be non-null")) return st;
  return emit(out_csv, r->result.csv);
}

minsph_status minsph_run_table(const minsph_run* r, char** out_table) {
  if (minsph_status st = require(r && out_table, "run and out must be non-null")) return st;
  return emit(out_table, r->result.table);
}

int minsph_run_exit_code(const minsph_run* r) { return r ? r->result.exit_code : 1; }

minsph_status minsph_sweep_run(const char* config_text, char** out_csv, char** out_svg,
                               int* exit_code) {
  return guarded([&] {
    const SweepRunResult res = run_sweep(config_from_text(config_text));
    if (exit_code) *exit_code = res.exit_code;
    if (out_csv) {
      if (minsph_status st = emit(out_csv, res.csv)) return st;
    }
    if (out_svg) {
      if (minsph_status st = emit(out_svg, res.svg)) return st;
    }
    return MINSPH_OK;
  });
}

}  // extern "C"
