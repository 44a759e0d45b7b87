#include "edgepoly/cli.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "edgepoly/analysis.hpp"
#include "edgepoly/errors.hpp"
#include "edgepoly/graph.hpp"
#include "edgepoly/oracle.hpp"
#include "edgepoly/series.hpp"

namespace edgepoly {
namespace {

using nlohmann::json;

struct Flags {
  std::string input;
  std::string order = "lex";
  std::string format = "text";
  bool edge_ring = false;
  bool groebner = false;
  long max_dilation = 3;
  std::size_t walk_cap = kDefaultWalkCap;
  std::size_t spair_cap = kDefaultSPairCap;
  std::size_t moebius_cap = kDefaultMoebiusCap;
  std::size_t oracle_cap = kDefaultOracleCap;
};

PipelineOptions pipeline_options(const Flags& f) {
  PipelineOptions opts;
  opts.order = f.order == "grevlex" ? TermOrder::Kind::Grevlex : TermOrder::Kind::Lex;
  opts.groebner.max_spairs = f.spair_cap;
  opts.walk_cap = f.walk_cap;
  opts.moebius_cap = f.moebius_cap;
  return opts;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read graph file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x + 0.0);  // normalize -0
  return buf;
}

std::string sci3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string complex_str(const std::complex<double>& z) {
  return fixed6(z.real()) + (z.imag() < 0 ? " - " : " + ") + fixed6(std::abs(z.imag())) + "i";
}

void emit(std::ostream& out, const std::string& format, const json& j,
          const std::string& text) {
  if (format == "json")
    out << j.dump(2) << "\n";
  else
    out << text;
}

json series_json(const RationalSeries& s) {
  json j;
  j["series"] = s.str();
  json num = json::array();
  for (const auto& c : s.numerator.coeffs()) num.push_back(c.get_str());
  j["numerator"] = num;
  j["denominator_power"] = s.denominator_power;
  return j;
}

int cmd_series(const Flags& f, std::ostream& out) {
  Graph g = load_graph(f.input);
  PipelineOptions opts = pipeline_options(f);
  RationalSeries s = f.edge_ring ? edge_ring_series(g, opts) : ehrhart_series(g, opts);
  json j = series_json(s);
  j["order"] = f.order;
  j["kind"] = f.edge_ring ? "edge-ring" : "ehrhart";
  emit(out, f.format, j, s.str() + "\n");
  return 0;
}

int cmd_poly(const Flags& f, std::ostream& out) {
  Graph g = load_graph(f.input);
  RationalSeries s = ehrhart_series(g, pipeline_options(f));
  QPoly p = ehrhart_polynomial(s);
  json j;
  j["degree"] = p.degree();
  json coeffs = json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k).get_str());
  j["coefficients"] = coeffs;
  j["polynomial"] = p.str("m");
  emit(out, f.format, j, p.str("m") + "\n");
  return 0;
}

int cmd_ideal(const Flags& f, std::ostream& out) {
  Graph g = load_graph(f.input);
  PipelineOptions opts = pipeline_options(f);
  auto cycles = enumerate_simple_cycles(g, opts.walk_cap);
  auto pairs = find_exceptional_pairs(g, cycles);
  auto walks = enumerate_primitive_even_walks(g, cycles, opts.walk_cap);
  VariableSet vs = build_variables(g, cycles, pairs);
  auto generators = build_hyperedge_generators(g, vs, cycles, walks, pairs);

  json j;
  json names = json::array();
  for (int v = 0; v < vs.size(); ++v) names.push_back(vs.var(v).name);
  j["variables"] = names;
  j["order"] = f.order;
  std::string text;
  json gens = json::array();
  for (const auto& b : generators) {
    std::string line = format_binomial(vs, b);
    gens.push_back(line);
    if (!f.groebner) text += line + "\n";
  }
  j["generators"] = gens;
  if (f.groebner) {
    TermOrder order = TermOrder::make(opts.order, vs);
    GroebnerBasis gb = groebner_basis(vs, generators, order, opts.groebner);
    json basis = json::array();
    for (const auto& b : gb.elements) {
      std::string line = format_binomial(vs, b);
      basis.push_back(line);
      text += line + "\n";
    }
    j["groebner"] = basis;
  }
  emit(out, f.format, j, text);
  return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  Graph g = load_graph(f.input);
  RationalSeries s = ehrhart_series(g, pipeline_options(f));
  QPoly p = ehrhart_polynomial(s);

  std::vector<std::array<std::string, 4>> rows;
  bool all_match = true;
  json jrows = json::array();
  for (long m = 0; m <= f.max_dilation; ++m) {
    mpz_class from_pipeline = ehrhart_evaluate(p, m);
    mpz_class from_lp = count_lattice_points_lp(g, m, f.oracle_cap);
    mpz_class from_monoid = count_lattice_points_monoid(g, m, f.oracle_cap);
    bool match = from_pipeline == from_lp && from_lp == from_monoid;
    all_match = all_match && match;
    rows.push_back({std::to_string(m), from_pipeline.get_str(), from_lp.get_str(),
                    from_monoid.get_str()});
    json r;
    r["m"] = m;
    r["pipeline"] = from_pipeline.get_str();
    r["lp"] = from_lp.get_str();
    r["monoid"] = from_monoid.get_str();
    r["match"] = match;
    jrows.push_back(r);
  }
  json j;
  j["max_dilation"] = f.max_dilation;
  j["rows"] = jrows;
  j["all_match"] = all_match;

  std::array<std::string, 4> head{"m", "pipeline", "lp", "monoid"};
  std::array<std::size_t, 4> width{};
  for (int c = 0; c < 4; ++c) {
    width[c] = head[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream text;
  auto put_row = [&](const std::array<std::string, 4>& row, const std::string& last) {
    for (int c = 0; c < 4; ++c)
      text << std::setw(static_cast<int>(width[c])) << row[c] << "  ";
    text << last << "\n";
  };
  put_row(head, "match");
  for (std::size_t i = 0; i < rows.size(); ++i)
    put_row(rows[i], jrows[i]["match"].get<bool>() ? "yes" : "NO");
  text << (all_match ? "all dilations match\n" : "MISMATCH FOUND\n");
  emit(out, f.format, j, text.str());
  return all_match ? 0 : 3;
}

int cmd_factor(const Flags& f, std::ostream& out) {
  Graph g = load_graph(f.input);
  PipelineOptions opts = pipeline_options(f);
  FirstFactoringReport first = verify_first_factoring(g, opts);

  std::ostringstream text;
  text << "whole graph: " << first.whole.str() << "\n";
  text << "block factoring (" << first.parts.size() << " part"
       << (first.parts.size() == 1 ? "" : "s") << "):\n";
  json jparts = json::array();
  std::size_t part_index = 0;
  if (first.decomposition.oddment) {
    text << "  hull of odd blocks: " << first.parts[part_index].str() << "\n";
    jparts.push_back(first.parts[part_index].str());
    ++part_index;
  }
  for (; part_index < first.parts.size(); ++part_index) {
    text << "  bipartite block: " << first.parts[part_index].str() << "\n";
    jparts.push_back(first.parts[part_index].str());
  }
  text << "product: " << first.product.str() << "\n";
  text << "equal: " << (first.equal ? "yes" : "NO") << "\n";

  json j;
  j["whole"] = first.whole.str();
  json jfirst;
  jfirst["parts"] = jparts;
  jfirst["product"] = first.product.str();
  jfirst["equal"] = first.equal;
  jfirst["has_odd_hull"] = first.decomposition.oddment.has_value();
  j["block_factoring"] = jfirst;

  json jsecond = json::array();
  bool all_equal = first.equal;
  std::set<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> seen;
  std::vector<SeparatingFaceSplit> oriented;
  for (const auto& split : find_separating_faces(g)) {
    auto sides = std::minmax(split.side_one, split.side_two);
    if (!seen.insert({sides.first, sides.second}).second) continue;
    if (split.side_two_bipartite) {
      oriented.push_back(split);
    } else if (is_bipartite(g.edge_subgraph(split.side_one))) {
      oriented.push_back({split.shared_edge, split.side_two, split.side_one, true});
    }
  }
  for (const auto& split : oriented) {
    SecondFactoringReport second;
    try {
      second = verify_second_factoring(g, split, opts);
    } catch (const HypothesisViolated&) {
      continue;  // shared edge on no cycle of the bipartite side
    }
    text << "shared-edge factoring at e_" << split.shared_edge << ":\n";
    text << "  side one: " << second.side_one.str() << "\n";
    text << "  side two: " << second.side_two.str() << "\n";
    text << "  factored: " << second.factored.str() << "\n";
    text << "  equal: " << (second.equal ? "yes" : "NO") << "\n";
    json r;
    r["shared_edge"] = split.shared_edge;
    r["side_one"] = second.side_one.str();
    r["side_two"] = second.side_two.str();
    r["factored"] = second.factored.str();
    r["equal"] = second.equal;
    jsecond.push_back(r);
    all_equal = all_equal && second.equal;
  }
  j["shared_edge_factorings"] = jsecond;
  emit(out, f.format, j, text.str());
  return all_equal ? 0 : 3;
}

int cmd_roots(const Flags& f, std::ostream& out) {
  Graph g = load_graph(f.input);
  RationalSeries s = ehrhart_series(g, pipeline_options(f));
  QPoly p = ehrhart_polynomial(s);
  std::optional<PolygonTreeProfile> profile;
  if (is_bipartite(g)) profile = polygon_tree_profile(g);
  RootReport report = root_report(p, profile);

  std::ostringstream text;
  text << "polynomial: " << p.str("m") << "\n";
  text << "integer roots:";
  for (long r : report.integer_roots) text << " " << r;
  if (report.integer_roots.empty()) text << " none";
  text << "\n";
  text << "other roots:";
  for (const auto& z : report.residual_roots) text << " " << complex_str(z);
  if (report.residual_roots.empty()) text << " none";
  text << "\n";
  if (report.critical_line) {
    text << "critical line: Re = " << fixed6(*report.critical_line) << "\n";
    text << "max deviation from line: " << sci3(report.max_deviation) << "\n";
  } else {
    text << "critical line: not applicable (no bipartite polygon-tree shape)\n";
  }
  text << "strip: " << fixed6(report.strip_low) << " <= Re <= " << fixed6(report.strip_high)
       << (report.in_strip ? " holds" : " VIOLATED") << "\n";

  json j;
  j["polynomial"] = p.str("m");
  j["integer_roots"] = report.integer_roots;
  json others = json::array();
  for (const auto& z : report.residual_roots) {
    json r;
    r["re"] = z.real();
    r["im"] = z.imag();
    others.push_back(r);
  }
  j["residual_roots"] = others;
  if (report.critical_line)
    j["critical_line"] = *report.critical_line;
  else
    j["critical_line"] = nullptr;
  j["max_deviation"] = report.max_deviation;
  j["strip_low"] = report.strip_low;
  j["strip_high"] = report.strip_high;
  j["in_strip"] = report.in_strip;
  emit(out, f.format, j, text.str());
  return 0;
}

int cmd_check_occ(const Flags& f, std::ostream& out) {
  Graph g = load_graph(f.input);
  auto cycles = enumerate_simple_cycles(g, f.walk_cap);
  auto pairs = find_exceptional_pairs(g, cycles);

  std::ostringstream text;
  if (pairs.empty()) {
    text << "odd cycle condition: satisfied\n";
  } else {
    text << "odd cycle condition: NOT satisfied; " << pairs.size() << " exceptional pair"
         << (pairs.size() == 1 ? "" : "s") << "\n";
  }
  json j;
  j["satisfied"] = pairs.empty();
  json jpairs = json::array();
  for (const auto& pr : pairs) jpairs.push_back(json::array({pr.i, pr.j}));
  j["exceptional_pairs"] = jpairs;
  emit(out, f.format, j, text.str());
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart series and polynomials of edge polytopes"};
  app.require_subcommand(1);

  Flags f;
  std::string active;
  auto add_common = [&](CLI::App* sub, bool with_oracle) {
    sub->add_option("input", f.input, "graph file")->required();
    sub->add_option("--order", f.order, "term order")
        ->check(CLI::IsMember({"lex", "grevlex"}))
        ->capture_default_str();
    sub->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--walk-cap", f.walk_cap, "cycle/walk enumeration cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--spair-cap", f.spair_cap, "Groebner S-pair cap")
        ->check(CLI::PositiveNumber);
    sub->add_option("--moebius-cap", f.moebius_cap, "Moebius sum term cap")
        ->check(CLI::PositiveNumber);
    if (with_oracle)
      sub->add_option("--oracle-cap", f.oracle_cap, "oracle candidate cap")
          ->check(CLI::PositiveNumber);
    sub->callback([&, sub] { active = sub->get_name(); });
    return sub;
  };

  auto* series = add_common(app.add_subcommand("series", "Ehrhart series"), false);
  series->add_flag("--edge-ring", f.edge_ring, "Hilbert series of the edge ring instead");
  add_common(app.add_subcommand("poly", "Ehrhart polynomial"), false);
  auto* ideal =
      add_common(app.add_subcommand("ideal", "generators of the hyperedge ideal"), false);
  ideal->add_flag("--groebner", f.groebner, "print the reduced Groebner basis instead");
  auto* verify =
      add_common(app.add_subcommand("verify", "cross-check counts against oracles"), true);
  verify->add_option("--max-dilation", f.max_dilation, "largest dilation factor checked")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_common(app.add_subcommand("factor", "factoring checks on the series"), false);
  add_common(app.add_subcommand("roots", "root distribution of the Ehrhart polynomial"),
             false);
  add_common(app.add_subcommand("check-occ", "test the odd cycle condition"), false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (active == "series") return cmd_series(f, out);
    if (active == "poly") return cmd_poly(f, out);
    if (active == "ideal") return cmd_ideal(f, out);
    if (active == "verify") return cmd_verify(f, out);
    if (active == "factor") return cmd_factor(f, out);
    if (active == "roots") return cmd_roots(f, out);
    if (active == "check-occ") return cmd_check_occ(f, out);
    err << "edgepoly: unknown subcommand\n";
    return 1;
  } catch (const ResourceLimit& e) {
    err << "edgepoly " << active << ": " << e.what() << "\n";
    return 2;
  } catch (const GraphError& e) {
    err << "edgepoly " << active << ": " << e.what() << "\n";
    return 1;
  } catch (const InvalidParameter& e) {
    err << "edgepoly " << active << ": " << e.what() << "\n";
    return 1;
  } catch (const HypothesisViolated& e) {
    err << "edgepoly " << active << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "edgepoly " << active << ": " << e.what() << "\n";
    return 3;
  }
}

}  // namespace edgepoly
