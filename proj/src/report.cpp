#include "linkhom/report.hpp"

#include <sstream>

namespace linkhom {

namespace {

std::string int_str(const Int& v) { return v.str(); }

nlohmann::json monomial_json(const Monomial& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i : m) arr.push_back(i);
  return arr;
}

}  // namespace

nlohmann::json to_json(const ReducedPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"monomial", monomial_json(m)}, {"coefficient", int_str(c)}});
  return {{"rank", p.rank()}, {"terms", terms}};
}

nlohmann::json to_json(const InvariantVector& v) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 1; i <= v.components(); ++i) {
    nlohmann::json e = to_json(v.entry(i));
    e["strand"] = i;
    entries.push_back(std::move(e));
  }
  return entries;
}

nlohmann::json invariant_report_json(const StringLink& s,
                                     const std::string& braid_text,
                                     const std::vector<Monomial>& mu_requests) {
  int n = s.components();
  InvariantVector v = invariants(s);
  nlohmann::json out{{"schema_version", kSchemaVersion},
                     {"kind", "invariant-report"},
                     {"components", n},
                     {"braid", braid_text}};
  nlohmann::json longs = nlohmann::json::array();
  for (int i = 1; i <= n; ++i) longs.push_back(format(longitude(s, i)));
  out["longitudes"] = std::move(longs);
  out["entries"] = to_json(v);

  nlohmann::json linking = nlohmann::json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      linking.push_back({{"i", i},
                         {"j", j},
                         {"lk", int_str(mu(s, Monomial{i, j}))}});
  out["linking"] = std::move(linking);

  nlohmann::json mus = nlohmann::json::array();
  for (const Monomial& idx : mu_requests)
    mus.push_back(
        {{"indices", monomial_json(idx)}, {"value", int_str(mu(s, idx))}});
  out["mu"] = std::move(mus);

  bool borr = is_borromean(s);
  out["borromean"] = borr;
  if (borr) {
    nlohmann::json coords = nlohmann::json::array();
    nlohmann::json basis = nlohmann::json::array();
    std::vector<Int> cs = borromean_coordinates(s);
    std::vector<Monomial> bs = borromean_basis(n);
    for (std::size_t q = 0; q < cs.size(); ++q) {
      coords.push_back(int_str(cs[q]));
      basis.push_back(monomial_json(bs[q]));
    }
    out["coordinates"] = std::move(coords);
    out["coordinate_basis"] = std::move(basis);
  }
  return out;
}

std::string invariant_report_text(const StringLink& s,
                                  const std::string& braid_text,
                                  const std::vector<Monomial>& mu_requests) {
  int n = s.components();
  InvariantVector v = invariants(s);
  std::ostringstream os;
  os << "components: " << n << "\n";
  os << "braid: " << braid_text << "\n";
  for (int i = 1; i <= n; ++i) {
    os << "strand " << i << ": longitude " << format(longitude(s, i))
       << "; invariant " << format(v.entry(i)) << "\n";
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      os << "lk(" << i << "," << j << ") = " << mu(s, Monomial{i, j}).str()
         << "\n";
  for (const Monomial& idx : mu_requests) {
    os << "mu(";
    for (std::size_t q = 0; q < idx.size(); ++q)
      os << (q ? "," : "") << idx[q];
    os << ") = " << mu(s, idx).str() << "\n";
  }
  bool borr = is_borromean(s);
  os << "borromean: " << (borr ? "yes" : "no") << "\n";
  if (borr) {
    std::vector<Int> cs = borromean_coordinates(s);
    std::vector<Monomial> bs = borromean_basis(n);
    os << "coordinates:";
    if (cs.empty()) os << " (none)";
    for (std::size_t q = 0; q < cs.size(); ++q)
      os << " " << format(bs[q]) << "=" << cs[q].str();
    os << "\n";
  }
  return os.str();
}

std::string describe(const InvariantDifference& d) {
  std::string out = "mu(";
  for (int i : d.monomial) out += std::to_string(i) + ",";
  out += std::to_string(d.strand);
  out += "): " + d.left.str() + " != " + d.right.str();
  return out;
}

nlohmann::json equality_report_json(
    bool equal, const std::optional<InvariantDifference>& witness) {
  nlohmann::json out{{"schema_version", kSchemaVersion},
                     {"kind", "equality-report"},
                     {"equal", equal}};
  if (witness) {
    out["witness"] = {{"strand", witness->strand},
                      {"monomial", monomial_json(witness->monomial)},
                      {"left", witness->left.str()},
                      {"right", witness->right.str()},
                      {"display", describe(*witness)}};
  }
  return out;
}

nlohmann::json to_json(const GeomStringLink& g) {
  nlohmann::json out{{"schema_version", kSchemaVersion},
                     {"kind", "geom-stringlink"},
                     {"components", g.components()},
                     {"min_separation", g.min_separation()}};
  nlohmann::json base = nlohmann::json::array();
  for (const auto& b : g.basepoints()) base.push_back({b.x(), b.y()});
  out["basepoints"] = std::move(base);
  out["times"] = g.times();
  nlohmann::json strands = nlohmann::json::array();
  for (int i = 1; i <= g.components(); ++i) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& p : g.strand(i)) verts.push_back({p.x(), p.y()});
    strands.push_back(std::move(verts));
  }
  out["strands"] = std::move(strands);
  return out;
}

nlohmann::json to_json(const ClosedLink& link) {
  nlohmann::json out{{"schema_version", kSchemaVersion},
                     {"kind", "geom-closedlink"},
                     {"components", link.components.size()},
                     {"R", link.R},
                     {"min_separation", link.min_separation}};
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& comp : link.components) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& p : comp) verts.push_back({p.x(), p.y(), p.z()});
    comps.push_back(std::move(verts));
  }
  out["polygons"] = std::move(comps);
  return out;
}

nlohmann::json to_json(const ConditionReport& report) {
  nlohmann::json out{{"schema_version", kSchemaVersion},
                     {"kind", "condition-report"},
                     {"checked", report.checked},
                     {"ok", report.ok()}};
  nlohmann::json viols = nlohmann::json::array();
  for (const auto& v : report.violations) {
    const char* name = v.condition == MapCondition::endpoints  ? "endpoints"
                       : v.condition == MapCondition::support  ? "support"
                                                               : "periodicity";
    viols.push_back({{"condition", name},
                     {"node", v.node},
                     {"component", v.component},
                     {"deviation", v.deviation}});
  }
  out["violations"] = std::move(viols);
  return out;
}

}  // namespace linkhom
