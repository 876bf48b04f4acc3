#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linkhom/geometry.hpp"

namespace linkhom {

// A tuple of subintervals of [0,1] with pairwise disjoint interiors, kept
// in slot order (not necessarily sorted). Endpoints may touch; degenerate
// intervals are rejected.
class Intervals {
 public:
  explicit Intervals(std::vector<std::pair<double, double>> intervals);

  int count() const { return static_cast<int>(intervals_.size()); }
  double lo(int slot) const;  // 1-based
  double hi(int slot) const;

  // Affine slot charts, exact at the ends: map(slot, 0) == lo bitwise and
  // map(slot, 1) == hi, likewise for unmap.
  double map(int slot, double t) const;
  double unmap(int slot, double t) const;

  static Intervals stacking();  // {[0,1/2], [1/2,1]}

  friend bool operator==(const Intervals&, const Intervals&) = default;

 private:
  std::vector<std::pair<double, double>> intervals_;
};

// "k=<count>: [lo,hi] [lo,hi] ..."; bounds are decimals or fractions p/q,
// "#" starts a comment to end of line.
Intervals parse_intervals(std::string_view text);
std::string format_intervals(const Intervals& c);

// Operadic substitution: rescales each inner tuple into its outer slot and
// concatenates in outer slot order. Exact on the stored endpoints.
Intervals compose_intervals(const Intervals& outer,
                            const std::vector<Intervals>& inners);

// Slot-wise action on geometric string links: operand j's vertices are
// copied with times rescaled into slot j; outside the slots every strand
// sits at its basepoint. Vertex positions are copied bitwise, so acting by
// the single interval [0,1] is the identity on the nose.
GeomStringLink act_on_links(const Intervals& c,
                            const std::vector<GeomStringLink>& links);

// A cylinder map presented by an evaluator, closed under the operad action.
class EvaluableMap {
 public:
  using Fn = std::function<std::vector<Eigen::Vector3d>(std::span<const double>)>;

  EvaluableMap(std::vector<Eigen::Vector2d> basepoints, Fn fn);

  int components() const { return static_cast<int>(basepoints_.size()); }
  const std::vector<Eigen::Vector2d>& basepoints() const { return basepoints_; }

  std::vector<Eigen::Vector3d> evaluate(std::span<const double> t) const;

  static EvaluableMap from_grid(GridMap grid);          // multilinear samples
  static EvaluableMap from_geom(GeomStringLink g);      // exact strand evaluation
  GridMap sample(int resolution) const;

 private:
  std::vector<Eigen::Vector2d> basepoints_;
  Fn fn_;
};

// Slot-wise action on maps. Stage by stage, the running tuple is pulled
// through the slot chart, operand j is substituted on the components whose
// rescaled time lies in [0,1], and everything is pushed back; components
// outside the slot are left untouched. Rescaled coordinates outside [0,1]
// are clamped when they only serve as arguments; this is exact for maps
// whose component i reads coordinate i alone, which covers every map built
// here. A stage input whose rescaled time sits on the boundary of [0,1]
// must carry its basepoint in the disk (tolerance 1e-9); otherwise the
// action rejects the input (ill_formed_input_error).
EvaluableMap act_on_maps(const Intervals& c,
                         const std::vector<EvaluableMap>& maps);

// Binary product of cylinder maps: coordinates are pulled back through the
// half of [0,1] they lie in, f supplies the components with t_i <= 1/2 and
// g the rest, rescaled into the matching half. Agrees with acting by
// {[0,1/2],[1/2,1]} on maps with per-component coordinate dependence.
EvaluableMap map_product(const EvaluableMap& f, const EvaluableMap& g);

}  // namespace linkhom
