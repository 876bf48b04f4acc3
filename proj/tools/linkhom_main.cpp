// Command-line front end: string-link invariants, equality decisions, strand
// deletion, Borromean coordinates, geometric realization, torus closure,
// Gauss linking and interval-operad actions.
//
// Exit codes: 0 success (or "equal"), 1 distinct / verification failed,
// 2 input parse error, 3 non-pure braid, 4 component-count mismatch,
// 5 linking cross-check disagreement, 64 other domain errors, 66 unreadable
// input file.

#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linkhom/operad.hpp"
#include "linkhom/report.hpp"

namespace {

using namespace linkhom;

struct Options {
  std::string format = "text";
  std::string export_path;
  int resolution = 8;
  bool deterministic = false;
  std::vector<std::string> mu_texts;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

StringLink load_link(const std::string& path) {
  return StringLink(parse_braid(read_input(path)));
}

Monomial parse_mu_indices(const std::string& text) {
  Monomial idx;
  std::size_t q = 0;
  while (q < text.size()) {
    std::size_t start = q;
    while (q < text.size() && std::isdigit(static_cast<unsigned char>(text[q])))
      ++q;
    if (q == start)
      throw argument_error("bad mu index list \"" + text +
                           "\"; expected comma-separated indices like 1,2,3");
    idx.push_back(std::stoi(text.substr(start, q - start)));
    if (q < text.size()) {
      if (text[q] != ',')
        throw argument_error("bad mu index list \"" + text + "\"");
      ++q;
    }
  }
  if (idx.size() < 2)
    throw argument_error("mu needs at least two indices");
  return idx;
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.export_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(opt.export_path, std::ios::binary);
    if (!out)
      throw std::ios_base::failure("cannot write output file: " +
                                   opt.export_path);
    out << payload;
  }
}

int run_guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const not_pure_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const mismatch_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const linkhom::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 66;
  }
}

std::string geometry_payload(const Options& opt, const GeomStringLink& g) {
  if (opt.format == "structured") return to_json(g).dump(2) + "\n";
  std::ostringstream os;
  write_geometry(os, g);
  return os.str();
}

std::string geometry_payload(const Options& opt, const ClosedLink& link) {
  if (opt.format == "structured") return to_json(link).dump(2) + "\n";
  std::ostringstream os;
  write_geometry(os, link);
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"string links up to link-homotopy"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--deterministic", opt.deterministic,
               "fix evaluation order (all commands are deterministic already; "
               "accepted for pipeline symmetry)");

  auto add_common = [&](CLI::App* cmd, bool with_resolution = false) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--export", opt.export_path,
                    "write the payload to this file instead of stdout");
    if (with_resolution)
      cmd->add_option("--resolution", opt.resolution,
                      "grid nodes per axis (r+1 samples)")
          ->check(CLI::PositiveNumber);
  };

  std::string file_a, file_b, intervals_path;
  int strand = 1, comp_i = 1, comp_j = 2;
  std::vector<std::string> braid_paths;

  auto* c_inv = app.add_subcommand("invariants",
                                   "longitude invariants of a pure braid");
  c_inv->add_option("file", file_a, "braid word file, or - for stdin")
      ->required();
  c_inv->add_option("--mu", opt.mu_texts,
                    "extra mu values to report, e.g. --mu 1,2,3");
  add_common(c_inv);

  auto* c_eq = app.add_subcommand("equal",
                                  "decide link-homotopy of two pure braids");
  c_eq->add_option("a", file_a)->required();
  c_eq->add_option("b", file_b)->required();
  add_common(c_eq);

  auto* c_del = app.add_subcommand("delete", "remove one strand");
  c_del->add_option("file", file_a)->required();
  c_del->add_option("--strand", strand, "strand to remove")->required();
  add_common(c_del);

  auto* c_stack = app.add_subcommand("stack", "stack two string links");
  c_stack->add_option("a", file_a)->required();
  c_stack->add_option("b", file_b)->required();
  add_common(c_stack);

  auto* c_invr = app.add_subcommand("invert", "inverse string link");
  c_invr->add_option("file", file_a)->required();
  add_common(c_invr);

  auto* c_borr = app.add_subcommand("borromean",
                                    "is every strand deletion trivial?");
  c_borr->add_option("file", file_a)->required();
  add_common(c_borr);

  auto* c_coords = app.add_subcommand("coords",
                                      "coordinates of a Borromean link");
  c_coords->add_option("file", file_a)->required();
  add_common(c_coords);

  auto* c_lk = app.add_subcommand(
      "lk", "linking number three ways: combinatorial, invariant, geometric");
  c_lk->add_option("file", file_a)->required();
  c_lk->add_option("--i", comp_i)->required();
  c_lk->add_option("--j", comp_j)->required();
  add_common(c_lk);

  auto* c_real = app.add_subcommand("realize",
                                    "piecewise-linear strands in the cylinder");
  c_real->add_option("file", file_a)->required();
  add_common(c_real);

  auto* c_clo = app.add_subcommand("closure",
                                   "closed link in the solid torus");
  c_clo->add_option("file", file_a)->required();
  add_common(c_clo);

  auto* c_ver = app.add_subcommand(
      "verify-map", "sample the realized link and check the map conditions");
  c_ver->add_option("file", file_a)->required();
  add_common(c_ver, true);

  auto* c_act = app.add_subcommand(
      "operad-act", "act on realized links by an interval configuration");
  c_act->add_option("--intervals", intervals_path, "interval tuple file")
      ->required();
  c_act->add_option("links", braid_paths, "one braid file per slot")
      ->required();
  add_common(c_act);

  CLI11_PARSE(app, argc, argv);

  if (c_inv->parsed()) {
    return run_guarded([&] {
      std::string text = read_input(file_a);
      StringLink s(parse_braid(text));
      std::vector<Monomial> mus;
      for (const auto& mt : opt.mu_texts) mus.push_back(parse_mu_indices(mt));
      std::string braid_line = format(s.rep());
      emit(opt, opt.format == "structured"
                    ? invariant_report_json(s, braid_line, mus).dump(2) + "\n"
                    : invariant_report_text(s, braid_line, mus));
      return 0;
    });
  }

  if (c_eq->parsed()) {
    return run_guarded([&] {
      StringLink a = load_link(file_a);
      StringLink b = load_link(file_b);
      if (a.components() != b.components())
        throw mismatch_error("cannot compare links with " +
                             std::to_string(a.components()) + " and " +
                             std::to_string(b.components()) + " components");
      InvariantVector va = invariants(a), vb = invariants(b);
      auto witness = first_difference(va, vb);
      bool equal = !witness.has_value();
      if (opt.format == "structured") {
        emit(opt, equality_report_json(equal, witness).dump(2) + "\n");
      } else if (equal) {
        emit(opt, "equal\n");
      } else {
        emit(opt, "distinct: " + describe(*witness) + "\n");
      }
      return equal ? 0 : 1;
    });
  }

  auto braid_out = [&](const BraidWord& w) {
    if (opt.format == "structured") {
      nlohmann::json j{{"schema_version", kSchemaVersion},
                       {"kind", "braid"},
                       {"components", w.strands()},
                       {"word", format(w)}};
      emit(opt, j.dump(2) + "\n");
    } else {
      emit(opt, format(w) + "\n");
    }
    return 0;
  };

  if (c_del->parsed())
    return run_guarded(
        [&] { return braid_out(delta_i(load_link(file_a), strand).rep()); });

  if (c_stack->parsed())
    return run_guarded([&] {
      return braid_out(stack(load_link(file_a), load_link(file_b)).rep());
    });

  if (c_invr->parsed())
    return run_guarded([&] { return braid_out(inverse(load_link(file_a)).rep()); });

  if (c_borr->parsed()) {
    return run_guarded([&] {
      bool borr = is_borromean(load_link(file_a));
      if (opt.format == "structured") {
        nlohmann::json j{{"schema_version", kSchemaVersion},
                         {"kind", "borromean"},
                         {"borromean", borr}};
        emit(opt, j.dump(2) + "\n");
      } else {
        emit(opt, borr ? "yes\n" : "no\n");
      }
      return 0;
    });
  }

  if (c_coords->parsed()) {
    return run_guarded([&] {
      StringLink s = load_link(file_a);
      std::vector<Int> cs = borromean_coordinates(s);
      std::vector<Monomial> bs = borromean_basis(s.components());
      if (opt.format == "structured") {
        nlohmann::json coords = nlohmann::json::array();
        nlohmann::json basis = nlohmann::json::array();
        for (std::size_t q = 0; q < cs.size(); ++q) {
          coords.push_back(cs[q].str());
          nlohmann::json m = nlohmann::json::array();
          for (int i : bs[q]) m.push_back(i);
          basis.push_back(std::move(m));
        }
        nlohmann::json j{{"schema_version", kSchemaVersion},
                         {"kind", "borromean-coordinates"},
                         {"coordinates", std::move(coords)},
                         {"coordinate_basis", std::move(basis)}};
        emit(opt, j.dump(2) + "\n");
      } else {
        std::string line;
        if (cs.empty()) line = "(none)";
        for (std::size_t q = 0; q < cs.size(); ++q)
          line += (q ? " " : "") + format(bs[q]) + "=" + cs[q].str();
        emit(opt, line + "\n");
      }
      return 0;
    });
  }

  if (c_lk->parsed()) {
    return run_guarded([&] {
      StringLink s = load_link(file_a);
      long long comb = crossing_linking(s.rep(), comp_i, comp_j);
      Int alg = mu(s, Monomial{comp_i, comp_j});
      ClosedLink closed = closure_b(realize(s));
      LinkingResult geo = gauss_linking(closed, comp_i, comp_j);
      std::ostringstream os;
      os << "crossing: " << comb << "\n";
      os << "mu: " << alg.str() << "\n";
      os << "gauss: " << geo.value << " (rounded " << geo.rounded << ")\n";
      if (geo.ill_conditioned)
        os << "warning: components pass within " << geo.min_distance << "\n";
      bool agree = (Int(comb) == alg) && (geo.rounded == comb) &&
                   std::abs(geo.value - static_cast<double>(geo.rounded)) <= 0.05;
      if (opt.format == "structured") {
        nlohmann::json j{{"schema_version", kSchemaVersion},
                         {"kind", "linking-report"},
                         {"i", comp_i},
                         {"j", comp_j},
                         {"crossing", comb},
                         {"mu", alg.str()},
                         {"gauss", geo.value},
                         {"gauss_rounded", geo.rounded},
                         {"ill_conditioned", geo.ill_conditioned},
                         {"agree", agree}};
        emit(opt, j.dump(2) + "\n");
      } else {
        emit(opt, os.str());
      }
      if (!agree) {
        std::cerr << "error: linking cross-check disagreement\n";
        return 5;
      }
      return 0;
    });
  }

  if (c_real->parsed())
    return run_guarded([&] {
      emit(opt, geometry_payload(opt, realize(load_link(file_a))));
      return 0;
    });

  if (c_clo->parsed())
    return run_guarded([&] {
      emit(opt, geometry_payload(opt, closure_b(realize(load_link(file_a)))));
      return 0;
    });

  if (c_ver->parsed()) {
    return run_guarded([&] {
      GeomStringLink g = realize(load_link(file_a));
      GridMap grid = kappa_sample(g, opt.resolution);
      ConditionReport rep = verify_conditions(grid);
      double square = commuting_square_deviation(g, opt.resolution);
      if (opt.format == "structured") {
        nlohmann::json j = to_json(rep);
        j["commuting_square_deviation"] = square;
        emit(opt, j.dump(2) + "\n");
      } else {
        std::ostringstream os;
        os << "checked: " << rep.checked << "\n";
        os << "violations: " << rep.violations.size() << "\n";
        for (std::size_t q = 0; q < rep.violations.size() && q < 10; ++q)
          os << "  " << describe(rep.violations[q]) << "\n";
        os << "commuting-square deviation: " << square << "\n";
        emit(opt, os.str());
      }
      return rep.ok() && square <= 1e-12 ? 0 : 1;
    });
  }

  if (c_act->parsed()) {
    return run_guarded([&] {
      Intervals c = [&] {
        try {
          return parse_intervals(read_input(intervals_path));
        } catch (const argument_error& e) {
          throw parse_error(e.what(), 0);
        }
      }();
      std::vector<GeomStringLink> links;
      for (const auto& p : braid_paths) links.push_back(realize(load_link(p)));
      emit(opt, geometry_payload(opt, act_on_links(c, links)));
      return 0;
    });
  }

  return 0;
}
