#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace minsph {

// Volume of the unit m-sphere, Vol(S^m) = 2 pi^{(m+1)/2} / Gamma((m+1)/2).
double sphere_volume(int m);

// Ambient unit vector defining the height functions phi_a = <x,a> and
// psi_a = <nu,a>.
struct Axis {
  std::vector<double> c;  // ambient components, unit norm

  int dim() const { return static_cast<int>(c.size()); }

  static Axis basis(int ambient_dim, int k, double sign = 1.0);  // k is 1-based
  static Axis random(int ambient_dim, uint64_t seed);
  static Axis normalized(std::vector<double> v);  // rejects near-zero input
};

struct ChartPoint {
  int chart_id = 0;
  std::vector<double> coords;  // intrinsic angles, radians
};

struct CurvaturePair {
  double value = 0.0;
  int multiplicity = 0;
};

// Full analytic frame at a point: position, unit normal, shape operator
// spectrum, S = ||A||^2, H, and the chart volume density.
struct PointFrame {
  std::vector<double> position;
  std::vector<double> normal;
  std::vector<CurvaturePair> principal;
  double S = 0.0;
  double H = 0.0;
  double metric_jacobian = 0.0;
};

struct ChartBox {
  std::vector<double> lo, hi;

  int dim() const { return static_cast<int>(lo.size()); }
  double measure() const;
};

enum class SurfaceKind { Equator, Clifford };

// Classification of an axis equal to +-e_k for some ambient coordinate k.
// Such axes admit exact one-dimensional reductions of every level-set and
// moment integral used by the checks.
struct AxisAlignment {
  int ambient_index = 0;  // 0-based
  double sign = 1.0;
  bool pole = false;      // equator pole axis: phi_a vanishes identically
  int factor = 0;         // 0 = first factor (or the equator sphere), 1 = second
  int factor_dim = 0;     // m for the factor S^m
  double factor_radius = 1.0;
  int coord_in_factor = 0;  // 0-based index within the factor block
};

// Minimal isoparametric metadata: g distinct principal curvatures implies
// S = (g-1) n; only the closed-form Cheeger bound is derived from it.
struct IsoparametricMeta {
  int n = 0;
  int g = 2;
  double S() const { return static_cast<double>((g - 1) * n); }
};

// Catalog member: the equator S^n or the minimal Clifford torus
// S^p(sqrt(p/n)) x S^q(sqrt(q/n)) inside S^{n+1}. Charts are hyperspherical
// angle boxes per factor; overlaps are measure zero.
class Hypersurface {
 public:
  static Hypersurface equator(int n);
  static Hypersurface clifford(int p, int q);

  SurfaceKind kind() const { return kind_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  double r1() const { return r1_; }
  double r2() const { return r2_; }
  int ambient_dim() const { return n_ + 2; }
  bool radially_symmetric() const { return true; }  // all catalog members
  bool csc() const { return true; }                 // S is constant on the catalog
  bool totally_geodesic() const { return kind_ == SurfaceKind::Equator; }
  std::optional<double> S_const() const { return S_const_; }
  double s_max() const { return *S_const_; }
  double lambda1() const { return static_cast<double>(n_); }  // Tang-Yan metadata
  int distinct_curvatures() const { return kind_ == SurfaceKind::Equator ? 1 : 2; }
  std::optional<IsoparametricMeta> isoparametric_meta() const;

  const std::vector<ChartBox>& charts() const { return charts_; }

  void eval_frame(const ChartPoint& p, PointFrame& out) const;
  PointFrame frame_at(const ChartPoint& p) const;

  // Chart point mapping to the given ambient position (up to measure-zero
  // angle degeneracies); used by the antipodal-symmetry property.
  ChartPoint invert_point(const std::vector<double>& x) const;

  // Chart point with coordinates uniform in the chart box; pure function of
  // (seed, index).
  ChartPoint sample_point(uint64_t seed, uint64_t index) const;

  double closed_form_volume() const;
  std::string descriptor() const;

  std::optional<AxisAlignment> alignment(const Axis& a) const;

 private:
  Hypersurface() = default;

  SurfaceKind kind_ = SurfaceKind::Equator;
  int n_ = 0, p_ = 0, q_ = 0;
  double r1_ = 0.0, r2_ = 0.0;
  std::optional<double> S_const_;
  std::vector<ChartBox> charts_;
};

// Pointwise height operations (Prop. of the frame: phi, psi live in [-1,1]).
double height(const PointFrame& f, const Axis& a);
double normal_height(const PointFrame& f, const Axis& a);

// |a^T|^2 = 1 - phi^2 - psi^2, clamped to [0,1]; equals |grad phi_a|^2.
double tangent_norm_sq(const PointFrame& f, const Axis& a);

// Closed-form Laplacians; on catalog members H = 0 and grad H = 0, so these
// reduce to -n phi and -S psi.
double laplacian_height(const Hypersurface& M, const PointFrame& f, const Axis& a);
double laplacian_normal_height(const Hypersurface& M, const PointFrame& f, const Axis& a);

// Squared norms of the projections of a^T onto the principal subspaces,
// ordered like PointFrame::principal.
std::vector<double> principal_components_sq(const Hypersurface& M, const PointFrame& f,
                                            const Axis& a);

// (Ric - (R/n) g)(a^T, a^T) with R = n(n-1) - S for minimal hypersurfaces.
double ricci_quadratic(const Hypersurface& M, const PointFrame& f, const Axis& a);

}  // namespace minsph
