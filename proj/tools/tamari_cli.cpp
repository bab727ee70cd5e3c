// Command-line front end: codecs and verification-suite orchestration.  All
// mathematics lives in the library; this file only parses arguments, calls
// suites and formats output.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tamari/bialg.hpp"
#include "tamari/colored.hpp"
#include "tamari/errors.hpp"
#include "tamari/intrel.hpp"
#include "tamari/jsonio.hpp"
#include "tamari/order.hpp"
#include "tamari/report.hpp"
#include "tamari/tree.hpp"

using namespace tamari;

namespace {

Tree parse_tree_arg(const std::string& s) {
  if (s.find_first_not_of("01") == std::string::npos && !s.empty())
    return Tree::from_dyck(s);
  return Tree::parse(s);
}

int emit_reports(const std::vector<Report>& reports, bool as_json) {
  bool ok = true;
  if (as_json) {
    nlohmann::json out = nlohmann::json::array();
    for (const Report& r : reports) {
      out.push_back(r.to_json());
      ok = ok && r.pass();
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Report& r : reports) {
      r.print_text(std::cout);
      ok = ok && r.pass();
    }
    std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of planar binary trees, Tamari order and "
               "integer relations"};
  app.require_subcommand(1);
  bool as_json = false;
  bool serial = false;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_flag("--serial", serial, "disable the parallel sweeps");

  // enum-trees N
  int enum_n = 1;
  auto* c_enum = app.add_subcommand("enum-trees", "list all trees with N leaves");
  c_enum->add_option("N", enum_n)->required()->check(CLI::PositiveNumber);

  // hasse N [--dot]
  int hasse_n = 1;
  bool hasse_dot = false;
  auto* c_hasse = app.add_subcommand("hasse", "Tamari cover edges for degree N");
  c_hasse->add_option("N", hasse_n)->required()->check(CLI::PositiveNumber);
  c_hasse->add_flag("--dot", hasse_dot, "DOT digraph output");

  // moebius-matrix N
  int mm_n = 1;
  auto* c_mm = app.add_subcommand("moebius-matrix", "Moebius function of the Tamari order");
  c_mm->add_option("N", mm_n)->required()->check(CLI::PositiveNumber);

  // mtree TREE
  std::string mtree_arg;
  auto* c_mtree = app.add_subcommand("mtree", "Moebius element of a tree");
  c_mtree->add_option("TREE", mtree_arg, "parenthesized or Dyck form")->required();

  // verify-as --max-n N
  int as_n = 8;
  auto* c_as = app.add_subcommand("verify-as", "coproduct formula for Moebius elements");
  c_as->add_option("--max-n", as_n)->check(CLI::PositiveNumber);

  // prim-dims --max-n N [--colors K]
  int pd_n = 6, pd_colors = 1;
  auto* c_pd = app.add_subcommand("prim-dims", "primitive dimensions by integer kernel");
  c_pd->alias("colored-prim");
  c_pd->add_option("--max-n", pd_n)->check(CLI::PositiveNumber);
  c_pd->add_option("--colors", pd_colors)->check(CLI::PositiveNumber);

  // verify-colored --max-n N --colors K [--basepoint B]
  int vc_n = 5, vc_colors = 2, vc_bp = -1;
  auto* c_vc = app.add_subcommand("verify-colored", "colored structure and laws");
  c_vc->add_option("--max-n", vc_n)->check(CLI::PositiveNumber);
  c_vc->add_option("--colors", vc_colors)->check(CLI::PositiveNumber);
  c_vc->add_option("--basepoint", vc_bp, "basepoint color index (default: last)");

  // intrel-verify --max-n N [--xi-sample M] [--full-kernel-4]
  int ir_n = 4, ir_sample = 100;
  bool ir_full4 = false;
  auto* c_ir = app.add_subcommand("intrel-verify", "integer-relations coalgebra suite");
  c_ir->add_option("--max-n", ir_n)->check(CLI::PositiveNumber);
  c_ir->add_option("--xi-sample", ir_sample, "sampled size-4 xi checks");
  c_ir->add_flag("--full-kernel-4", ir_full4, "exact size-4 kernel (slow)");

  // xi --rel JSON
  std::string xi_rel;
  auto* c_xi = app.add_subcommand("xi", "primitive element of an irreducible relation");
  c_xi->add_option("--rel", xi_rel, "relation as JSON {\"n\":..,\"arcs\":[[i,j],..]}")
      ->required();

  // verify-all [--profile quick|full] [--full-kernel-4]
  std::string profile = "quick";
  bool va_full4 = false;
  auto* c_all = app.add_subcommand("verify-all", "every verification suite");
  c_all->add_option("--profile", profile)->check(CLI::IsMember({"quick", "full"}));
  c_all->add_flag("--full-kernel-4", va_full4, "exact size-4 relation kernel (slow)");

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();
  CLI11_PARSE(app, argc, argv);
  const Exec exec = serial ? Exec::serial : Exec::parallel;

  try {
    if (*c_enum) {
      const std::vector<Tree> trees = enumerate_trees(enum_n);
      if (as_json) {
        nlohmann::json out = nlohmann::json::array();
        for (const Tree& t : trees) out.push_back(tree_json(t));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const Tree& t : trees) std::cout << t.paren() << "\n";
      }
      return 0;
    }

    if (*c_hasse) {
      const TreePoset& tp = tamari_poset(hasse_n);
      if (hasse_dot) {
        std::cout << "digraph tamari" << hasse_n << " {\n";
        for (auto [a, b] : tp.poset.cover_edges())
          std::cout << "  \"" << tp.elements[a].paren() << "\" -> \""
                    << tp.elements[b].paren() << "\";\n";
        std::cout << "}\n";
      } else if (as_json) {
        nlohmann::json elems = nlohmann::json::array();
        for (const Tree& t : tp.elements) elems.push_back(t.dyck());
        nlohmann::json edges = nlohmann::json::array();
        for (auto [a, b] : tp.poset.cover_edges())
          edges.push_back(nlohmann::json::array({a, b}));
        std::cout << nlohmann::json{{"n", hasse_n}, {"elements", elems}, {"edges", edges}}
                         .dump(2)
                  << "\n";
      } else {
        for (auto [a, b] : tp.poset.cover_edges())
          std::cout << tp.elements[a].paren() << " -> " << tp.elements[b].paren() << "\n";
      }
      return 0;
    }

    if (*c_mm) {
      const TreePoset& tp = tamari_poset(mm_n);
      nlohmann::json triples = nlohmann::json::array();
      for (int y = 0; y < tp.poset.size(); ++y) {
        const std::vector<Int>& mu = tp.poset.moebius_to(y);
        for (int x = 0; x < tp.poset.size(); ++x)
          if (mu[x] != 0 && tp.poset.leq(x, y))
            triples.push_back(nlohmann::json::array({x, y, mu[x].str()}));
      }
      if (as_json) {
        nlohmann::json elems = nlohmann::json::array();
        for (const Tree& t : tp.elements) elems.push_back(t.dyck());
        std::cout << nlohmann::json{{"n", mm_n}, {"elements", elems}, {"mu", triples}}.dump(2)
                  << "\n";
      } else {
        for (const auto& t : triples)
          std::cout << tp.elements[t.at(0).get<int>()].paren() << " , "
                    << tp.elements[t.at(1).get<int>()].paren() << " : "
                    << t.at(2).get<std::string>() << "\n";
      }
      return 0;
    }

    if (*c_mtree) {
      Tree t = parse_tree_arg(mtree_arg);
      TreeElem m = moebius_elem(t);
      if (as_json) {
        std::cout << lincomb_json(m, tou_json).dump(2) << "\n";
      } else {
        for (const auto& [b, c] : m.terms())
          std::cout << c.str() << " * " << show(b) << "\n";
      }
      return 0;
    }

    if (*c_as) return emit_reports({verify_as(as_n, exec)}, as_json);

    if (*c_pd) {
      nlohmann::json dims = nlohmann::json::array();
      for (int n = 1; n <= pd_n; ++n) {
        int d = pd_colors == 1 ? prim_dim(n) : colored_prim_dim(n, pd_colors);
        dims.push_back(d);
        if (!as_json) std::cout << (n > 1 ? "," : "") << d;
      }
      if (as_json)
        std::cout << nlohmann::json{{"max_n", pd_n}, {"colors", pd_colors}, {"dims", dims}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "\n";
      return 0;
    }

    if (*c_vc) {
      int bp = vc_bp >= 0 ? vc_bp : vc_colors - 1;
      return emit_reports({verify_colored_laws(std::min(vc_n, 4), vc_colors, exec),
                           verify_colored(vc_n, vc_colors, bp, exec),
                           verify_operators(vc_colors, bp, exec)},
                          as_json);
    }

    if (*c_ir)
      return emit_reports({verify_intrel(ir_n, exec), verify_xi(ir_sample, ir_full4, exec),
                           verify_rel_operators(500, exec)},
                          as_json);

    if (*c_xi) {
      IntRel r = rel_from_json(nlohmann::json::parse(xi_rel));
      RelElem x = xi(r);
      if (as_json)
        std::cout << lincomb_json(x, rel_json).dump(2) << "\n";
      else
        for (const auto& [b, c] : x.terms()) std::cout << c.str() << " * " << b.str() << "\n";
      return 0;
    }

    if (*c_all) {
      const bool full = profile == "full";
      std::vector<Report> reports;
      reports.push_back(verify_moebius(full ? 8 : 6, exec));
      reports.push_back(verify_as(full ? 8 : 6, exec));
      reports.push_back(verify_coalgebra(full ? 7 : 6, 4, exec));
      reports.push_back(verify_prim_dims(6, full ? 8 : 6));
      reports.push_back(verify_order(full ? 7 : 6, full ? 7 : 6, exec));
      reports.push_back(verify_colored_laws(full ? 5 : 4, 2, exec));
      reports.push_back(verify_colored(full ? 5 : 4, 2, 1, exec));
      reports.push_back(verify_operators(2, 1, exec));
      reports.push_back(verify_intrel(full ? 4 : 3, exec));
      reports.push_back(verify_xi(full ? 100 : 10, va_full4, exec));
      reports.push_back(verify_rel_operators(full ? 1000 : 200, exec));
      return emit_reports(reports, as_json);
    }
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
