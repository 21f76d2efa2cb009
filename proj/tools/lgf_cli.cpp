#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lgf/census.hpp"
#include "lgf/front.hpp"
#include "lgf/gamma.hpp"
#include "lgf/morse.hpp"
#include "lgf/notation.hpp"
#include "lgf/rational.hpp"
#include "lgf/svg.hpp"

namespace {

// 0 success, 1 bad input, 2 the oracle could not count, 3 broken invariant.
int exit_code_for(lgf::Errc c) {
  switch (c) {
    case lgf::Errc::Syntax:
    case lgf::Errc::Validation:
    case lgf::Errc::Size:
      return 1;
    case lgf::Errc::Inconclusive:
      return 2;
    default:
      return 3;
  }
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) lgf::fail(lgf::Errc::Validation, "cannot open output file: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void print_gammas(const lgf::GammaPair& g, bool json) {
  if (json)
    std::cout << "{\"gamma_minus\":" << g.minus.json_text()
              << ",\"gamma_plus\":" << g.plus.json_text() << "}\n";
  else
    std::cout << "Γ⁻ = " << g.minus.text() << "\nΓ⁺ = " << g.plus.text() << "\n";
}

std::string pair_csv(const std::vector<lgf::CriticalPair>& pairs) {
  std::string out = "q,value,sign,graph_index,shifted_index\n";
  char line[96];
  for (const auto& p : pairs) {
    std::snprintf(line, sizeof line, "%.12g,%.12g,%d,%d,%d\n", p.q, p.value, p.sign,
                  p.graph_index, p.shifted_index);
    out += line;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generating-function polynomials of legendrian solid-torus links"};
  app.require_subcommand(1);

  std::string expr_text, vec_text, out_path, pairs_path, svg_path, dump_path;
  bool as_json = false, with_flypes = false, with_swaps = false, as_csv = false,
       mark_pairs = false;
  int grid = lgf::OracleOptions{}.grid_per_unit, width = 800, max_weight = 6;
  double tol = lgf::OracleOptions{}.value_tol;

  auto* gamma = app.add_subcommand("gamma", "closed-form polynomial pair of a link expression");
  gamma->add_option("expr", expr_text, "e.g. \"(2,1,2^1)\" or \"~(2,1,0)#(2)\"")->required();
  gamma->add_flag("--json", as_json, "machine form instead of the two Γ lines");

  auto* oracle = app.add_subcommand("oracle", "recompute the pair from front-diagram geometry");
  oracle->add_option("expr", expr_text)->required();
  oracle->add_option("--grid", grid, "slope samples per unit of q");
  oracle->add_option("--tol", tol, "critical-value clustering width");
  oracle->add_option("--pairs", pairs_path, "write the critical-pair table to a CSV file");
  oracle->add_flag("--json", as_json);

  auto* ordered = app.add_subcommand("ordered", "can the two strands be told apart?");
  ordered->add_option("expr", expr_text)->required();

  auto* rational = app.add_subcommand("rational", "underlying rational number of a link vector");
  rational->add_option("vector", vec_text)->required();

  auto* census = app.add_subcommand("census", "tabulate all links up to a weight bound");
  census->add_option("--max-weight", max_weight, "entry-sum bound")->required();
  census->add_flag("--flypes", with_flypes, "include every horizontal flype assignment");
  census->add_flag("--swaps", with_swaps, "include swapped mirrors");
  census->add_option("--out", out_path, "output file")->required();
  census->add_flag("--csv", as_csv, "CSV instead of JSON");

  auto* open_pairs =
      app.add_subcommand("open-pairs", "same-invariant pairs a flyped census cannot identify");
  open_pairs->add_option("--max-weight", max_weight)->required();

  auto* render = app.add_subcommand("render", "draw the built front as SVG");
  render->add_option("expr", expr_text)->required();
  render->add_option("--svg", svg_path, "output file")->required();
  render->add_option("--width", width, "pixel width");
  render->add_flag("--mark-pairs", mark_pairs, "overlay critical-pair ties");
  render->add_option("--dump", dump_path, "also write the raw diagram as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*gamma) {
      print_gammas(lgf::gamma_expr(lgf::parse_link_expr(expr_text)), as_json);
    } else if (*oracle) {
      const lgf::LinkExpr e = lgf::parse_link_expr(expr_text);
      lgf::OracleOptions opt;
      opt.grid_per_unit = grid;
      opt.value_tol = tol;
      print_gammas(lgf::oracle_gamma(e, opt), as_json);
      if (!pairs_path.empty())
        write_file(pairs_path, pair_csv(lgf::critical_pairs(lgf::build_front(e), opt)));
    } else if (*ordered) {
      const lgf::OrderVerdict v = lgf::orderedness(lgf::parse_link_expr(expr_text));
      std::cout << lgf::to_string(v.status) << " (" << v.reason << ")\n";
    } else if (*rational) {
      const lgf::LinkExpr e = lgf::parse_link_expr(vec_text);
      lgf::Rational r(0);
      for (const auto& c : e.components) r = r + lgf::rational_value(c);
      std::cout << r.str() << "\n";
    } else if (*census) {
      lgf::CensusOptions opt;
      opt.max_weight = max_weight;
      opt.with_flypes = with_flypes;
      opt.with_swaps = with_swaps;
      opt.oracle = [](const lgf::LinkExpr& e) { return lgf::oracle_gamma(e, {}); };
      const auto records = lgf::build_census(opt);
      write_file(out_path, as_csv ? lgf::census_csv(records) : lgf::census_json(records));
      std::cout << records.size() << " records, " << lgf::polynomial_classes(records).size()
                << " polynomial classes -> " << out_path << "\n";
    } else if (*open_pairs) {
      lgf::CensusOptions opt;
      opt.max_weight = max_weight;
      opt.with_flypes = true;
      const auto pairs = lgf::open_pairs(lgf::build_census(opt));
      for (const auto& [a, b] : pairs)
        std::cout << lgf::format_link_expr(a) << "  <->  " << lgf::format_link_expr(b) << "\n";
      std::cout << pairs.size() << " open pair(s)\n";
    } else if (*render) {
      const lgf::FrontDiagram d = lgf::build_front(lgf::parse_link_expr(expr_text));
      const auto marks = mark_pairs ? lgf::critical_pairs(d, {}) : std::vector<lgf::CriticalPair>{};
      write_file(svg_path, lgf::render_svg(d, width, marks));
      if (!dump_path.empty()) write_file(dump_path, lgf::diagram_json(d));
      std::cout << "wrote " << svg_path << "\n";
    }
  } catch (const lgf::Error& err) {
    std::cerr << err.what() << "\n";
    return exit_code_for(err.code());
  }
  return 0;
}
