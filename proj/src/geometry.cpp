#include "linkhom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

namespace linkhom {

namespace {

// Which half-plane the left strand of a positive crossing sweeps through.
// Free binary convention; pinned by the requirement that the closure of
// A_{12} links positively.
constexpr double kPositiveSweepY = -1.0;

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool same_point(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() == b.x() && a.y() == b.y();
}

}  // namespace

std::vector<Eigen::Vector2d> standard_basepoints(int components) {
  if (components < 1) throw argument_error("component count must be positive");
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(components);
  for (int i = 1; i <= components; ++i)
    pts.emplace_back(-1.0 + 2.0 * i / (components + 1), 0.0);
  return pts;
}

GeomStringLink::GeomStringLink(std::vector<Eigen::Vector2d> basepoints,
                               std::vector<double> times,
                               std::vector<std::vector<Eigen::Vector2d>> strands,
                               double separation)
    : basepoints_(std::move(basepoints)),
      times_(std::move(times)),
      strands_(std::move(strands)) {
  int n = components();
  if (n < 1) throw argument_error("need at least one strand");
  if (strands_.size() != static_cast<std::size_t>(n))
    throw argument_error("strand count disagrees with basepoint count");
  std::size_t m = times_.size();
  if (m < 2) throw argument_error("need at least two time samples");
  if (times_.front() != 0.0 || times_.back() != 1.0)
    throw argument_error("time grid must run from 0 to 1");
  for (std::size_t q = 1; q < m; ++q)
    if (!(times_[q] > times_[q - 1]))
      throw argument_error("time grid must be strictly increasing");
  for (int i = 0; i < n; ++i) {
    if (strands_[i].size() != m)
      throw argument_error("every strand needs one vertex per time sample");
    if (!same_point(strands_[i].front(), basepoints_[i]) ||
        !same_point(strands_[i].back(), basepoints_[i]))
      throw argument_error("strand " + std::to_string(i + 1) +
                           " must start and end at its basepoint");
    for (const auto& p : strands_[i])
      if (p.norm() >= 1.0)
        throw argument_error("strand " + std::to_string(i + 1) +
                             " leaves the open disk");
  }
  min_separation_ = n == 1 ? 2.0 : std::numeric_limits<double>::infinity();
  for (std::size_t q = 0; q < m; ++q)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        min_separation_ =
            std::min(min_separation_, (strands_[i][q] - strands_[j][q]).norm());
  if (min_separation_ < separation)
    throw refinement_error(
        "strand separation " + fmt_double(min_separation_) +
        " below the required " + fmt_double(separation) +
        "; refine the sampling or relax the requirement");
}

const std::vector<Eigen::Vector2d>& GeomStringLink::strand(int i) const {
  if (i < 1 || i > components())
    throw argument_error("strand " + std::to_string(i) + " out of range");
  return strands_[i - 1];
}

Eigen::Vector2d GeomStringLink::position(int strand, double t) const {
  if (strand < 1 || strand > components())
    throw argument_error("strand " + std::to_string(strand) + " out of range");
  if (!(t >= 0.0 && t <= 1.0))
    throw argument_error("time " + fmt_double(t) + " outside [0,1]");
  const auto& verts = strands_[strand - 1];
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t hi = static_cast<std::size_t>(it - times_.begin());
  if (hi == times_.size()) return verts.back();  // t == 1
  std::size_t lo = hi - 1;
  if (t == times_[lo]) return verts[lo];
  double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
  return verts[lo] + w * (verts[hi] - verts[lo]);
}

Eigen::Vector3d GeomStringLink::point(int strand, double t) const {
  Eigen::Vector2d p = position(strand, t);
  return {p.x(), p.y(), t};
}

GeomStringLink realize(const StringLink& s, const RealizeParams& params) {
  int n = s.components();
  int K = params.samples_per_letter;
  if (K < 4) throw argument_error("need at least 4 samples per letter");
  double dv = params.vertical_margin;
  if (!(dv > 0.0 && dv < 0.5))
    throw argument_error("vertical margin must lie in (0, 1/2)");

  std::vector<Eigen::Vector2d> base = standard_basepoints(n);
  const auto& letters = s.rep().letters();
  std::size_t L = letters.size();

  double head = dv, tail = 1.0 - dv;
  std::vector<double> times;
  times.push_back(0.0);
  times.push_back(head);
  std::size_t m = L * static_cast<std::size_t>(K);
  if (L == 0) {
    times.push_back(tail);
  } else {
    for (std::size_t g = 1; g <= m; ++g)
      times.push_back(g == m ? tail
                             : head + (tail - head) * static_cast<double>(g) /
                                          static_cast<double>(m));
  }
  times.push_back(1.0);

  std::size_t nt = times.size();
  std::vector<std::vector<Eigen::Vector2d>> strands(
      n, std::vector<Eigen::Vector2d>(nt));

  // at[p] = strand currently at slot p (1-based)
  std::vector<int> at(n + 1);
  for (int p = 0; p <= n; ++p) at[p] = p;

  auto slot = [&](int p) { return base[p - 1]; };

  // verticals at t = 0, head
  for (int i = 0; i < n; ++i) strands[i][0] = strands[i][1] = base[i];

  std::size_t idx = 2;  // next time index to fill
  if (L == 0) {
    for (int i = 0; i < n; ++i) strands[i][2] = base[i];
    idx = 3;
  }
  for (std::size_t letter_idx = 0; letter_idx < L; ++letter_idx) {
    BLetter l = letters[letter_idx];
    int k = std::abs(l);
    double sweep = (l > 0 ? kPositiveSweepY : -kPositiveSweepY);
    int sa = at[k], sb = at[k + 1];
    Eigen::Vector2d ca = slot(k), cb = slot(k + 1);
    Eigen::Vector2d mid = 0.5 * (ca + cb);
    double h = 0.5 * (cb - ca).norm();
    for (int q = 1; q <= K; ++q, ++idx) {
      if (q == K) {
        // land exactly on the traded slots
        strands[sa - 1][idx] = cb;
        strands[sb - 1][idx] = ca;
      } else {
        double th = std::numbers::pi * q / K;
        Eigen::Vector2d off(-h * std::cos(th), sweep * h * std::sin(th));
        strands[sa - 1][idx] = mid + off;
        strands[sb - 1][idx] = mid - off;
      }
      for (int p = 1; p <= n; ++p) {
        int st = at[p];
        if (st != sa && st != sb) strands[st - 1][idx] = slot(p);
      }
    }
    std::swap(at[k], at[k + 1]);
  }
  // final vertical; purity puts every strand back on its own slot
  for (int i = 0; i < n; ++i) strands[i][nt - 1] = base[i];

  return GeomStringLink(std::move(base), std::move(times), std::move(strands),
                        params.separation);
}

GridMap::GridMap(int components, int resolution,
                 std::vector<Eigen::Vector2d> basepoints,
                 std::vector<Eigen::Vector3d> values)
    : components_(components),
      resolution_(resolution),
      basepoints_(std::move(basepoints)),
      values_(std::move(values)) {
  if (components_ < 1) throw argument_error("component count must be positive");
  if (components_ > 6)
    throw argument_error("sampled maps support at most 6 components");
  if (resolution_ < 1) throw argument_error("resolution must be positive");
  if (basepoints_.size() != static_cast<std::size_t>(components_))
    throw argument_error("basepoint count disagrees with component count");
  npoints_ = 1;
  for (int i = 0; i < components_; ++i) {
    npoints_ *= static_cast<std::size_t>(resolution_) + 1;
    if (npoints_ > 1000000)
      throw argument_error("grid exceeds the 10^6 node cap");
  }
  if (values_.size() != npoints_ * static_cast<std::size_t>(components_))
    throw argument_error("value array size disagrees with grid shape");
}

const Eigen::Vector3d& GridMap::value(std::size_t node, int component) const {
  if (node >= npoints_ || component < 1 || component > components_)
    throw argument_error("grid access out of range");
  return values_[node * components_ + (component - 1)];
}

void GridMap::set_value(std::size_t node, int component,
                        const Eigen::Vector3d& v) {
  if (node >= npoints_ || component < 1 || component > components_)
    throw argument_error("grid access out of range");
  values_[node * components_ + (component - 1)] = v;
}

std::vector<int> GridMap::node_coords(std::size_t node) const {
  std::vector<int> coords(components_);
  std::size_t base = static_cast<std::size_t>(resolution_) + 1;
  for (int i = components_ - 1; i >= 0; --i) {
    coords[i] = static_cast<int>(node % base);
    node /= base;
  }
  return coords;
}

std::size_t GridMap::node_index(std::span<const int> coords) const {
  if (coords.size() != static_cast<std::size_t>(components_))
    throw argument_error("coordinate count disagrees with component count");
  std::size_t base = static_cast<std::size_t>(resolution_) + 1;
  std::size_t node = 0;
  for (int i = 0; i < components_; ++i) {
    if (coords[i] < 0 || coords[i] > resolution_)
      throw argument_error("grid coordinate out of range");
    node = node * base + static_cast<std::size_t>(coords[i]);
  }
  return node;
}

std::vector<Eigen::Vector3d> GridMap::evaluate(std::span<const double> t) const {
  int n = components_;
  if (t.size() != static_cast<std::size_t>(n))
    throw argument_error("time tuple size disagrees with component count");
  int r = resolution_;
  std::vector<int> lo(n);
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    double ti = t[i];
    if (!(ti >= 0.0 && ti <= 1.0))
      throw argument_error("time " + fmt_double(ti) + " outside [0,1]");
    double u = ti * r;
    int j = std::min(static_cast<int>(u), r - 1);
    // bitwise node hits stay exact regardless of the rounding of ti * r
    if (ti == static_cast<double>(j) / r) {
      lo[i] = j;
      w[i] = 0.0;
    } else if (ti == static_cast<double>(j + 1) / r) {
      lo[i] = j + 1;
      w[i] = 0.0;
    } else {
      lo[i] = j;
      w[i] = u - j;
    }
  }
  std::vector<int> coords(n);
  std::vector<Eigen::Vector3d> corners(std::size_t{1} << n);
  std::vector<Eigen::Vector3d> out(n);
  for (int c = 1; c <= n; ++c) {
    std::size_t ncorners = std::size_t{1} << n;
    for (std::size_t mask = 0; mask < ncorners; ++mask) {
      for (int i = 0; i < n; ++i) {
        int up = static_cast<int>((mask >> i) & 1);
        coords[i] = std::min(lo[i] + up, r);  // w == 0 leaves the upper corner unused
      }
      corners[mask] = value(node_index(coords), c);
    }
    // fold axis by axis with a + w*(b-a); equal pairs collapse exactly
    std::size_t size = ncorners;
    for (int i = 0; i < n; ++i) {
      std::size_t half = size >> 1;
      for (std::size_t m2 = 0; m2 < half; ++m2)
        corners[m2] =
            corners[2 * m2] + w[i] * (corners[2 * m2 + 1] - corners[2 * m2]);
      size = half;
    }
    out[c - 1] = corners[0];
  }
  return out;
}

GridMap kappa_sample(const GeomStringLink& g, int resolution) {
  int n = g.components();
  int r = resolution;
  if (r < 1) throw argument_error("resolution must be positive");
  std::size_t np = 1;
  for (int i = 0; i < n; ++i) np *= static_cast<std::size_t>(r) + 1;
  GridMap grid(n, r, g.basepoints(),
               std::vector<Eigen::Vector3d>(np * static_cast<std::size_t>(n),
                                            Eigen::Vector3d::Zero()));
  // per-axis tables: component i only depends on coordinate i
  std::vector<std::vector<Eigen::Vector3d>> table(n);
  for (int i = 0; i < n; ++i) {
    table[i].reserve(r + 1);
    for (int j = 0; j <= r; ++j)
      table[i].push_back(g.point(i + 1, static_cast<double>(j) / r));
  }
  for (std::size_t node = 0; node < np; ++node) {
    std::vector<int> coords = grid.node_coords(node);
    for (int i = 0; i < n; ++i) {
      const Eigen::Vector3d& vi = table[i][coords[i]];
      for (int j = i + 1; j < n; ++j) {
        const Eigen::Vector3d& vj = table[j][coords[j]];
        // distinctness in the cylinder: equal-time samples must be apart in
        // the disk, samples at different times never coincide
        if ((vi - vj).norm() < 1e-12) {
          std::string msg = "components " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1) + " collide at node (";
          for (std::size_t q = 0; q < coords.size(); ++q)
            msg += (q ? "," : "") + std::to_string(coords[q]);
          msg += ")";
          throw degenerate_configuration_error(msg);
        }
      }
      grid.set_value(node, i + 1, vi);
    }
  }
  return grid;
}

ConditionReport verify_conditions(const GridMap& f, double tolerance) {
  int n = f.components();
  int r = f.resolution();
  ConditionReport report;
  std::size_t np = f.npoints();
  for (std::size_t node = 0; node < np; ++node) {
    std::vector<int> coords = f.node_coords(node);
    bool interior = true;
    for (int i = 0; i < n; ++i)
      if (coords[i] == 0 || coords[i] == r) interior = false;
    for (int c = 1; c <= n; ++c) {
      const Eigen::Vector3d& v = f.value(node, c);
      int jc = coords[c - 1];
      if (jc == 0 || jc == r) {
        ++report.checked;
        Eigen::Vector3d want(f.basepoints()[c - 1].x(),
                             f.basepoints()[c - 1].y(), jc == 0 ? 0.0 : 1.0);
        double dev = (v - want).lpNorm<Eigen::Infinity>();
        if (dev > tolerance)
          report.violations.push_back(
              {MapCondition::endpoints, coords, c, dev});
      }
      if (interior) {
        ++report.checked;
        double excess = std::max({v.head<2>().norm() - 1.0, -v.z(), v.z() - 1.0});
        if (excess >= 0.0)
          report.violations.push_back({MapCondition::support, coords, c, excess});
      }
    }
    // periodicity: compare the face j_i = 0 against j_i = r once per axis
    for (int i = 0; i < n; ++i) {
      if (coords[i] != 0) continue;
      std::vector<int> partner = coords;
      partner[i] = r;
      std::size_t pnode = f.node_index(partner);
      for (int c = 1; c <= n; ++c) {
        if (c == i + 1) continue;
        ++report.checked;
        double dev = (f.value(node, c) - f.value(pnode, c))
                         .lpNorm<Eigen::Infinity>();
        if (dev > tolerance)
          report.violations.push_back(
              {MapCondition::periodicity, coords, c, dev});
      }
    }
  }
  return report;
}

std::string describe(const ConditionViolation& v) {
  const char* name = v.condition == MapCondition::endpoints  ? "endpoints"
                     : v.condition == MapCondition::support  ? "support"
                                                             : "periodicity";
  std::string out = std::string(name) + " violated at node (";
  for (std::size_t q = 0; q < v.node.size(); ++q)
    out += (q ? "," : "") + std::to_string(v.node[q]);
  out += ") component " + std::to_string(v.component) +
         " (deviation " + fmt_double(v.deviation) + ")";
  return out;
}

Eigen::Vector3d bend_point(const Eigen::Vector3d& p, double R) {
  double frac = p.z() - std::floor(p.z());
  double a = 2.0 * std::numbers::pi * frac;
  return {(R + p.x()) * std::cos(a), (R + p.x()) * std::sin(a), p.y()};
}

ClosedLink closure_b(const GeomStringLink& g, double R) {
  if (!(R > 1.0))
    throw invalid_torus_error("solid torus radius must exceed 1; got " +
                              fmt_double(R));
  ClosedLink link;
  link.R = R;
  int n = g.components();
  std::size_t m = g.times().size();
  link.components.resize(n);
  for (int i = 0; i < n; ++i) {
    link.components[i].reserve(m - 1);
    // drop the final vertex: t = 1 bends onto the t = 0 point
    for (std::size_t q = 0; q + 1 < m; ++q) {
      const Eigen::Vector2d& p = g.strand(i + 1)[q];
      link.components[i].push_back(
          bend_point({p.x(), p.y(), g.times()[q]}, R));
    }
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto& A = link.components[i];
      const auto& B = link.components[j];
      for (std::size_t a = 0; a < A.size(); ++a)
        for (std::size_t b = 0; b < B.size(); ++b)
          best = std::min(
              best, segment_distance(A[a], A[(a + 1) % A.size()], B[b],
                                     B[(b + 1) % B.size()]));
    }
  link.min_separation = n > 1 ? best : 2.0 * (R + 1.0);
  return link;
}

GridMap torus_map(const GridMap& f, double R) {
  if (!(R > 1.0))
    throw invalid_torus_error("solid torus radius must exceed 1; got " +
                              fmt_double(R));
  ConditionReport rep = verify_conditions(f);
  std::size_t bad = 0;
  for (const auto& v : rep.violations)
    if (v.condition == MapCondition::periodicity) ++bad;
  if (bad > 0)
    throw quotient_undefined_error(
        "torus quotient undefined: " + std::to_string(bad) +
        " periodicity face mismatches, first: " +
        describe(rep.violations.front()));
  GridMap out = f;
  std::size_t np = f.npoints();
  for (std::size_t node = 0; node < np; ++node)
    for (int c = 1; c <= f.components(); ++c)
      out.set_value(node, c, bend_point(f.value(node, c), R));
  return out;
}

double commuting_square_deviation(const GeomStringLink& g, int resolution,
                                  double R) {
  GridMap bent = torus_map(kappa_sample(g, resolution), R);
  int n = g.components();
  int r = resolution;
  std::vector<std::vector<Eigen::Vector3d>> table(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= r; ++j)
      table[i].push_back(bend_point(g.point(i + 1, static_cast<double>(j) / r), R));
  double worst = 0.0;
  std::size_t np = bent.npoints();
  for (std::size_t node = 0; node < np; ++node) {
    std::vector<int> coords = bent.node_coords(node);
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, (bent.value(node, i + 1) - table[i][coords[i]])
                                  .lpNorm<Eigen::Infinity>());
  }
  return worst;
}

double segment_distance(const Eigen::Vector3d& p1, const Eigen::Vector3d& q1,
                        const Eigen::Vector3d& p2, const Eigen::Vector3d& q2) {
  Eigen::Vector3d d1 = q1 - p1, d2 = q2 - p2, r = p1 - p2;
  double a = d1.dot(d1), e = d2.dot(d2), f = d2.dot(r);
  constexpr double kTiny = 1e-30;
  double s = 0.0, t = 0.0;
  if (a <= kTiny && e <= kTiny) {
    // both degenerate
  } else if (a <= kTiny) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    double c = d1.dot(r);
    if (e <= kTiny) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      double b = d1.dot(d2), denom = a * e - b * b;
      s = denom > kTiny ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  return (p1 + s * d1 - (p2 + t * d2)).norm();
}

namespace {

// Signed solid angle of the spherical triangle with unit-vector corners.
double spherical_triangle(const Eigen::Vector3d& A, const Eigen::Vector3d& B,
                          const Eigen::Vector3d& C) {
  double num = A.dot(B.cross(C));
  // a triangle lying on a great circle bounds no area; without this guard
  // atan2(+-0, negative) would report a spurious hemisphere
  if (num == 0.0) return 0.0;
  double den = 1.0 + A.dot(B) + B.dot(C) + C.dot(A);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

LinkingResult gauss_linking(const ClosedLink& link, int ci, int cj,
                            double warn_distance) {
  int n = static_cast<int>(link.components.size());
  if (ci < 1 || ci > n || cj < 1 || cj > n)
    throw argument_error("component index out of range");
  if (ci == cj) throw argument_error("linking number needs two components");
  const auto& A = link.components[ci - 1];
  const auto& B = link.components[cj - 1];
  LinkingResult res;
  res.min_distance = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t a = 0; a < A.size(); ++a) {
    const Eigen::Vector3d& p1 = A[a];
    const Eigen::Vector3d& p2 = A[(a + 1) % A.size()];
    for (std::size_t b = 0; b < B.size(); ++b) {
      const Eigen::Vector3d& q1 = B[b];
      const Eigen::Vector3d& q2 = B[(b + 1) % B.size()];
      res.min_distance =
          std::min(res.min_distance, segment_distance(p1, p2, q1, q2));
      Eigen::Vector3d e00 = p1 - q1, e10 = p2 - q1, e11 = p2 - q2,
                      e01 = p1 - q2;
      double n00 = e00.norm(), n10 = e10.norm(), n11 = e11.norm(),
             n01 = e01.norm();
      if (n00 < 1e-300 || n10 < 1e-300 || n11 < 1e-300 || n01 < 1e-300) {
        res.ill_conditioned = true;
        continue;
      }
      e00 /= n00;
      e10 /= n10;
      e11 /= n11;
      e01 /= n01;
      total += spherical_triangle(e00, e10, e11) +
               spherical_triangle(e00, e11, e01);
    }
  }
  res.value = total / (4.0 * std::numbers::pi);
  res.rounded = std::llround(res.value);
  if (res.min_distance < warn_distance) res.ill_conditioned = true;
  return res;
}

void write_geometry(std::ostream& os, const GeomStringLink& g) {
  os << "geom-stringlink v1\n";
  os << "n " << g.components() << "\n";
  os << "samples " << g.times().size() << "\n";
  for (int i = 1; i <= g.components(); ++i)
    os << "basepoint " << i << " " << fmt_double(g.basepoints()[i - 1].x())
       << " " << fmt_double(g.basepoints()[i - 1].y()) << "\n";
  for (int i = 1; i <= g.components(); ++i) {
    os << "strand " << i << "\n";
    const auto& verts = g.strand(i);
    for (std::size_t q = 0; q < verts.size(); ++q)
      os << fmt_double(verts[q].x()) << " " << fmt_double(verts[q].y()) << " "
         << fmt_double(g.times()[q]) << "\n";
  }
}

void write_geometry(std::ostream& os, const ClosedLink& link) {
  os << "geom-closedlink v1\n";
  os << "n " << link.components.size() << "\n";
  os << "R " << fmt_double(link.R) << "\n";
  for (std::size_t i = 0; i < link.components.size(); ++i) {
    const auto& verts = link.components[i];
    os << "component " << (i + 1) << " " << verts.size() << "\n";
    for (const auto& v : verts)
      os << fmt_double(v.x()) << " " << fmt_double(v.y()) << " "
         << fmt_double(v.z()) << "\n";
  }
}

}  // namespace linkhom
