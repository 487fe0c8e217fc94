#pragma once

#include <string>
#include <vector>

#include "core/geometry.hpp"
#include "core/integrate.hpp"
#include "core/levelset.hpp"
#include "core/verify.hpp"

namespace minsph {

// Surface descriptor grammar: `equator:<n>`, `clifford:<p>,<q>`.
Hypersurface parse_surface(const std::string& desc);

// Axis descriptor: `e<k>` / `-e<k>` (ambient basis), `random:<seed>`, or
// explicit comma-separated components (normalized on parse).
LabeledAxis parse_axis(const std::string& desc, int ambient_dim);

// Axis set spec: `basis` (all signed basis vectors), `random:<k>:<seed>`,
// `default[:<count>]` (signed basis then seeded random axes, 64 total by
// default), or a semicolon-separated list of axis descriptors.
std::vector<LabeledAxis> parse_axes(const std::string& spec, const Hypersurface& M,
                                    uint64_t seed);

// Quadrature spec: `gauss:<order>` or `mc:<samples>:<seed>`; empty string
// yields the surface default.
QuadratureSpec parse_quad(const std::string& spec, const Hypersurface& M);

// Grid: `a:b:step` (inclusive of b up to rounding) or a comma list.
std::vector<double> parse_grid(const std::string& spec);

// Band half-width list: comma-separated positive reals.
std::vector<double> parse_band(const std::string& spec);

LevelMethod parse_method(const std::string& spec);
const char* method_name(LevelMethod m);

// Check list: `all` or comma-separated names in registry order.
std::vector<std::string> parse_checks(const std::string& spec);

}  // namespace minsph
