#include "linkhom/operad.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

namespace linkhom {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

constexpr double kBasepointTol = 1e-9;

}  // namespace

Intervals::Intervals(std::vector<std::pair<double, double>> intervals)
    : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw argument_error("need at least one interval");
  for (const auto& [lo, hi] : intervals_) {
    if (!(lo >= 0.0 && hi <= 1.0))
      throw argument_error("interval [" + fmt_double(lo) + "," +
                           fmt_double(hi) + "] leaves [0,1]");
    if (!(lo < hi))
      throw argument_error("interval [" + fmt_double(lo) + "," +
                           fmt_double(hi) + "] is degenerate or reversed");
  }
  std::vector<std::pair<double, double>> sorted = intervals_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t q = 1; q < sorted.size(); ++q)
    if (sorted[q].first < sorted[q - 1].second)
      throw argument_error("intervals [" + fmt_double(sorted[q - 1].first) +
                           "," + fmt_double(sorted[q - 1].second) + "] and [" +
                           fmt_double(sorted[q].first) + "," +
                           fmt_double(sorted[q].second) +
                           "] have overlapping interiors");
}

double Intervals::lo(int slot) const {
  if (slot < 1 || slot > count()) throw argument_error("slot out of range");
  return intervals_[slot - 1].first;
}

double Intervals::hi(int slot) const {
  if (slot < 1 || slot > count()) throw argument_error("slot out of range");
  return intervals_[slot - 1].second;
}

double Intervals::map(int slot, double t) const {
  double a = lo(slot), b = hi(slot);
  if (t == 0.0) return a;
  if (t == 1.0) return b;
  return a + (b - a) * t;
}

double Intervals::unmap(int slot, double t) const {
  double a = lo(slot), b = hi(slot);
  if (t == a) return 0.0;
  if (t == b) return 1.0;
  return (t - a) / (b - a);
}

Intervals Intervals::stacking() { return Intervals({{0.0, 0.5}, {0.5, 1.0}}); }

namespace {

struct IntervalScanner {
  std::string_view text;
  std::size_t pos = 0;

  bool at_end() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    skip_space();
    if (at_end() || peek() != c)
      throw parse_error(std::string("expected '") + c + "' " + what, pos);
    ++pos;
  }

  int read_uint(const char* what) {
    skip_space();
    std::size_t start = pos;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) throw parse_error(std::string("expected ") + what, start);
    if (pos - start > 7) throw parse_error("number too large", start);
    int v = 0;
    for (std::size_t q = start; q < pos; ++q) v = v * 10 + (text[q] - '0');
    return v;
  }

  // decimal ("0.5") or fraction ("1/2")
  double read_bound() {
    skip_space();
    std::size_t start = pos;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                         peek() == '.'))
      ++pos;
    if (pos == start) throw parse_error("expected an interval bound", start);
    std::string head(text.substr(start, pos - start));
    double value;
    try {
      std::size_t used = 0;
      value = std::stod(head, &used);
      if (used != head.size()) throw std::invalid_argument(head);
    } catch (const std::exception&) {
      throw parse_error("bad number \"" + head + "\"", start);
    }
    if (!at_end() && peek() == '/') {
      ++pos;
      std::size_t dstart = pos;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
      if (pos == dstart) throw parse_error("expected a denominator", dstart);
      double den = std::stod(std::string(text.substr(dstart, pos - dstart)));
      if (den == 0.0) throw parse_error("zero denominator", dstart);
      value /= den;
    }
    return value;
  }
};

}  // namespace

Intervals parse_intervals(std::string_view text) {
  IntervalScanner sc{text};
  sc.skip_space();
  sc.expect('k', "to start the interval-count header");
  sc.expect('=', "after 'k'");
  int k = sc.read_uint("interval count");
  sc.expect(':', "after the interval count");
  if (k < 1) throw parse_error("interval count must be positive", 0);
  std::vector<std::pair<double, double>> ivs;
  ivs.reserve(k);
  for (int q = 0; q < k; ++q) {
    sc.expect('[', "to open an interval");
    double a = sc.read_bound();
    sc.expect(',', "between interval bounds");
    double b = sc.read_bound();
    sc.expect(']', "to close an interval");
    ivs.emplace_back(a, b);
  }
  sc.skip_space();
  if (!sc.at_end())
    throw parse_error("trailing input after the declared intervals", sc.pos);
  return Intervals(std::move(ivs));
}

std::string format_intervals(const Intervals& c) {
  std::string out = "k=" + std::to_string(c.count()) + ":";
  for (int j = 1; j <= c.count(); ++j)
    out += " [" + fmt_double(c.lo(j)) + "," + fmt_double(c.hi(j)) + "]";
  return out;
}

Intervals compose_intervals(const Intervals& outer,
                            const std::vector<Intervals>& inners) {
  if (inners.size() != static_cast<std::size_t>(outer.count()))
    throw argument_error("need one inner tuple per outer slot");
  std::vector<std::pair<double, double>> out;
  for (int j = 1; j <= outer.count(); ++j) {
    const Intervals& inner = inners[j - 1];
    for (int q = 1; q <= inner.count(); ++q)
      out.emplace_back(outer.map(j, inner.lo(q)), outer.map(j, inner.hi(q)));
  }
  return Intervals(std::move(out));
}

namespace {

void check_same_shape(const std::vector<Eigen::Vector2d>& a,
                      const std::vector<Eigen::Vector2d>& b) {
  if (a.size() != b.size())
    throw mismatch_error("operands have different component counts");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].x() != b[i].x() || a[i].y() != b[i].y())
      throw argument_error("operands disagree on basepoint " +
                           std::to_string(i + 1));
}

}  // namespace

GeomStringLink act_on_links(const Intervals& c,
                            const std::vector<GeomStringLink>& links) {
  if (links.size() != static_cast<std::size_t>(c.count()))
    throw argument_error("need one link per slot");
  const auto& base = links.front().basepoints();
  for (const auto& g : links) check_same_shape(base, g.basepoints());
  int n = static_cast<int>(base.size());
  int k = c.count();

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return c.lo(a) < c.lo(b); });

  std::vector<double> times;
  std::vector<std::vector<Eigen::Vector2d>> strands(n);
  auto push_column = [&](double t, auto&& column) {
    if (!times.empty() && t == times.back()) return;  // shared boundary
    times.push_back(t);
    for (int i = 0; i < n; ++i) strands[i].push_back(column(i));
  };

  push_column(0.0, [&](int i) { return base[i]; });
  for (int slot : order) {
    const GeomStringLink& g = links[slot - 1];
    const auto& ts = g.times();
    for (std::size_t q = 0; q < ts.size(); ++q)
      push_column(c.map(slot, ts[q]),
                  [&](int i) { return g.strand(i + 1)[q]; });
  }
  push_column(1.0, [&](int i) { return base[i]; });

  double req = std::numeric_limits<double>::infinity();
  for (const auto& g : links) req = std::min(req, g.min_separation());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      req = std::min(req, (base[i] - base[j]).norm());

  return GeomStringLink(base, std::move(times), std::move(strands), req);
}

EvaluableMap::EvaluableMap(std::vector<Eigen::Vector2d> basepoints, Fn fn)
    : basepoints_(std::move(basepoints)), fn_(std::move(fn)) {
  if (basepoints_.empty()) throw argument_error("need at least one component");
  if (!fn_) throw argument_error("missing evaluator");
}

std::vector<Eigen::Vector3d> EvaluableMap::evaluate(
    std::span<const double> t) const {
  if (t.size() != basepoints_.size())
    throw argument_error("time tuple size disagrees with component count");
  return fn_(t);
}

EvaluableMap EvaluableMap::from_grid(GridMap grid) {
  std::vector<Eigen::Vector2d> base = grid.basepoints();
  auto shared = std::make_shared<GridMap>(std::move(grid));
  return EvaluableMap(std::move(base), [shared](std::span<const double> t) {
    return shared->evaluate(t);
  });
}

EvaluableMap EvaluableMap::from_geom(GeomStringLink g) {
  std::vector<Eigen::Vector2d> base = g.basepoints();
  auto shared = std::make_shared<GeomStringLink>(std::move(g));
  return EvaluableMap(std::move(base), [shared](std::span<const double> t) {
    std::vector<Eigen::Vector3d> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
      out[i] = shared->point(static_cast<int>(i) + 1, t[i]);
    return out;
  });
}

GridMap EvaluableMap::sample(int resolution) const {
  int n = components();
  int r = resolution;
  if (r < 1) throw argument_error("resolution must be positive");
  std::size_t np = 1;
  for (int i = 0; i < n; ++i) np *= static_cast<std::size_t>(r) + 1;
  GridMap grid(n, r, basepoints_,
               std::vector<Eigen::Vector3d>(np * static_cast<std::size_t>(n),
                                            Eigen::Vector3d::Zero()));
  std::vector<double> t(n);
  for (std::size_t node = 0; node < np; ++node) {
    std::vector<int> coords = grid.node_coords(node);
    for (int i = 0; i < n; ++i)
      t[i] = static_cast<double>(coords[i]) / r;
    std::vector<Eigen::Vector3d> vals = evaluate(t);
    for (int i = 0; i < n; ++i) grid.set_value(node, i + 1, vals[i]);
  }
  return grid;
}

EvaluableMap act_on_maps(const Intervals& c,
                         const std::vector<EvaluableMap>& maps) {
  if (maps.size() != static_cast<std::size_t>(c.count()))
    throw argument_error("need one map per slot");
  const auto base = maps.front().basepoints();
  for (const auto& f : maps) check_same_shape(base, f.basepoints());
  int n = static_cast<int>(base.size());
  int k = c.count();

  Intervals slots = c;
  std::vector<EvaluableMap> ops = maps;
  return EvaluableMap(base, [slots, ops, base, n, k](std::span<const double> t) {
    std::vector<Eigen::Vector3d> pts(n);
    for (int m = 0; m < n; ++m) {
      if (!(t[m] >= 0.0 && t[m] <= 1.0))
        throw argument_error("time " + fmt_double(t[m]) + " outside [0,1]");
      pts[m] = {base[m].x(), base[m].y(), t[m]};
    }
    std::vector<double> tau(n), clamped(n);
    for (int j = 1; j <= k; ++j) {
      for (int m = 0; m < n; ++m) {
        tau[m] = slots.unmap(j, pts[m].z());
        if ((tau[m] == 0.0 || tau[m] == 1.0) &&
            (pts[m].head<2>() - Eigen::Vector2d(base[m])).norm() >
                kBasepointTol)
          throw ill_formed_input_error(
              "component " + std::to_string(m + 1) +
              " reaches a slot boundary away from its basepoint");
        clamped[m] = std::clamp(tau[m], 0.0, 1.0);
      }
      std::vector<Eigen::Vector3d> vals = ops[j - 1].evaluate(clamped);
      for (int m = 0; m < n; ++m) {
        if (tau[m] >= 0.0 && tau[m] <= 1.0)
          pts[m] = {vals[m].x(), vals[m].y(), slots.map(j, vals[m].z())};
        // otherwise the slot chart and its inverse cancel: leave the point be
      }
    }
    return pts;
  });
}

EvaluableMap map_product(const EvaluableMap& f, const EvaluableMap& g) {
  check_same_shape(f.basepoints(), g.basepoints());
  const auto base = f.basepoints();
  int n = static_cast<int>(base.size());
  EvaluableMap fc = f, gc = g;
  return EvaluableMap(base, [fc, gc, n](std::span<const double> t) {
    std::vector<double> s(n);
    for (int m = 0; m < n; ++m) {
      if (!(t[m] >= 0.0 && t[m] <= 1.0))
        throw argument_error("time " + fmt_double(t[m]) + " outside [0,1]");
      s[m] = t[m] <= 0.5 ? 2.0 * t[m] : 2.0 * t[m] - 1.0;
    }
    std::vector<Eigen::Vector3d> fv = fc.evaluate(s);
    std::vector<Eigen::Vector3d> gv = gc.evaluate(s);
    std::vector<Eigen::Vector3d> out(n);
    for (int m = 0; m < n; ++m)
      out[m] = t[m] <= 0.5
                   ? Eigen::Vector3d(fv[m].x(), fv[m].y(), 0.5 * fv[m].z())
                   : Eigen::Vector3d(gv[m].x(), gv[m].y(),
                                     0.5 * gv[m].z() + 0.5);
    return out;
  });
}

}  // namespace linkhom
