#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "linkhom/string_link.hpp"

namespace linkhom {

// Basepoints on the x-axis of the unit disk: a_i = (-1 + 2i/(n+1), 0).
std::vector<Eigen::Vector2d> standard_basepoints(int components);

struct RealizeParams {
  int samples_per_letter = 12;    // polyline vertices per crossing slab
  double separation = 0.05;       // required pairwise distance at shared samples
  double vertical_margin = 0.05;  // height of the straight first/last segments
};

// Piecewise-linear strands in the cylinder D^2 x I over one shared strictly
// increasing time grid from 0 to 1. Strand i starts and ends at basepoint
// a_i, every vertex stays strictly inside the open disk, and strands are
// pairwise separated at every shared sample. Because all strands use the
// same grid, sample-level disjointness is equal-time disjointness.
class GeomStringLink {
 public:
  GeomStringLink(std::vector<Eigen::Vector2d> basepoints,
                 std::vector<double> times,
                 std::vector<std::vector<Eigen::Vector2d>> strands,
                 double separation);

  int components() const { return static_cast<int>(basepoints_.size()); }
  const std::vector<Eigen::Vector2d>& basepoints() const { return basepoints_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<Eigen::Vector2d>& strand(int i) const;  // 1-based
  double min_separation() const { return min_separation_; }

  // Piecewise-linear position of strand i at time t in [0,1]. Exact vertex
  // values at grid times.
  Eigen::Vector2d position(int strand, double t) const;
  Eigen::Vector3d point(int strand, double t) const;  // (x, y, t)

 private:
  std::vector<Eigen::Vector2d> basepoints_;
  std::vector<double> times_;
  std::vector<std::vector<Eigen::Vector2d>> strands_;
  double min_separation_;
};

// Canonical geometric representative of a string link: straight vertical
// lead-in/lead-out segments and, per braid letter, one time slab in which
// the two crossing strands trade places along antipodal half-circle arcs
// around their midpoint (all other strands stand still). Which half-plane
// the left strand of a positive letter sweeps through fixes the crossing
// sign convention; it is pinned so that positive letters give positive
// linking in the closure.
GeomStringLink realize(const StringLink& s, const RealizeParams& params = {});

// Multi-time samples of the configuration-space map of g: a grid with
// resolution+1 nodes per axis; node (j_1 .. j_n) stores, for component i,
// the cylinder point of strand i at time j_i/resolution.
class GridMap {
 public:
  GridMap(int components, int resolution,
          std::vector<Eigen::Vector2d> basepoints,
          std::vector<Eigen::Vector3d> values);

  int components() const { return components_; }
  int resolution() const { return resolution_; }
  const std::vector<Eigen::Vector2d>& basepoints() const { return basepoints_; }
  std::size_t npoints() const { return npoints_; }

  const Eigen::Vector3d& value(std::size_t node, int component) const;
  void set_value(std::size_t node, int component, const Eigen::Vector3d& v);

  std::vector<int> node_coords(std::size_t node) const;
  std::size_t node_index(std::span<const int> coords) const;

  // Multilinear interpolation. Node-time queries return stored samples
  // bitwise; axes on which the data is constant are interpolated exactly.
  std::vector<Eigen::Vector3d> evaluate(std::span<const double> t) const;

 private:
  int components_;
  int resolution_;
  std::size_t npoints_;
  std::vector<Eigen::Vector2d> basepoints_;
  std::vector<Eigen::Vector3d> values_;  // npoints * components, component-major last
};

// Samples the strand-evaluation map of g on the full grid. Rejects
// configurations where two components collide at some node
// (degenerate_configuration_error); sample-level disjointness of g makes
// that impossible for realized links.
GridMap kappa_sample(const GeomStringLink& g, int resolution);

enum class MapCondition { endpoints, support, periodicity };

struct ConditionViolation {
  MapCondition condition;
  std::vector<int> node;  // grid coordinates
  int component;          // 1-based
  double deviation;
};

struct ConditionReport {
  std::size_t checked = 0;
  std::vector<ConditionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the defining conditions of a sampled cylinder map:
//   endpoints:   on faces j_i = 0 / j_i = r, component i equals (a_i, 0) / (a_i, 1)
//   support:     at nodes interior on every axis, values lie in the open cylinder
//   periodicity: components k != i agree on the two faces of axis i
// Equality checks use the tolerance; the support condition is strict.
ConditionReport verify_conditions(const GridMap& f, double tolerance = 1e-9);

std::string describe(const ConditionViolation& v);

// Cylinder-to-solid-torus bend:
//   (x, y, t) -> ((R + x) cos a, (R + x) sin a, y), a = 2*pi*(t - floor(t)),
// so t = 0 and t = 1 land on the same point exactly.
Eigen::Vector3d bend_point(const Eigen::Vector3d& p, double R);

struct ClosedLink {
  double R = 2.0;
  // Closed polygons: last vertex connects back to the first.
  std::vector<std::vector<Eigen::Vector3d>> components;
  double min_separation = 0.0;  // between distinct components
};

// Closure of a geometric string link in the solid torus of radius R > 1:
// bends every strand and identifies its two ends. Vertex counts drop by one
// per strand (the identified endpoint pair becomes a single vertex).
ClosedLink closure_b(const GeomStringLink& g, double R = 2.0);

// Applies the bend to every stored sample. Requires the periodicity faces
// to agree (quotient_undefined_error otherwise); on the output, the two
// faces of every axis agree exactly, so the torus quotient is well defined.
GridMap torus_map(const GridMap& f, double R = 2.0);

// max over nodes and components of the deviation between
// torus_map(kappa_sample(g)) and the directly bent strand evaluations.
double commuting_square_deviation(const GeomStringLink& g, int resolution,
                                  double R = 2.0);

struct LinkingResult {
  double value = 0.0;
  long long rounded = 0;
  double min_distance = 0.0;  // between the two component polygons
  bool ill_conditioned = false;
};

// Gauss linking number of two closed components: the sum over segment
// pairs of the signed solid angle swept by the normalized difference,
// each quadrilateral patch evaluated exactly as two spherical triangles.
LinkingResult gauss_linking(const ClosedLink& link, int ci, int cj,
                            double warn_distance = 1e-3);

double segment_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& q1,
                        const Eigen::Vector3d& p2, const Eigen::Vector3d& q2);

// Line-oriented text exports.
void write_geometry(std::ostream& os, const GeomStringLink& g);
void write_geometry(std::ostream& os, const ClosedLink& link);

}  // namespace linkhom
