#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "csf/closed_forms.hpp"
#include "csf/enumerate.hpp"
#include "csf/errors.hpp"
#include "csf/families.hpp"
#include "csf/graph_io.hpp"
#include "csf/inference.hpp"
#include "csf/json_io.hpp"
#include "csf/lambda_words.hpp"
#include "csf/psum_oracle.hpp"
#include "csf/star_engine.hpp"
#include "csf/unicyclic.hpp"

namespace csf::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDataFailure = 1;
constexpr int kUsage = 2;

/// A check ran and failed; maps to exit code 1.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

struct GraphSource {
  std::string file;
  std::string graph6;
  std::string family;
  int n = 0;
  int c = 0;
  int t = 0;
  int s = 0;
  int ell = 1;
  std::string type = "typeI";

  void attach(CLI::App* cmd) {
    cmd->add_option("--file", file, "Edge-list or graph6 file ('-' for stdin)");
    cmd->add_option("--graph6", graph6, "Graph6 string");
    cmd->add_option("--family", family, "path|cycle|pan|paw|star|complete|cuttlefish|bicyclic");
    cmd->add_option("--n", n, "Vertex count for path, cycle, pan, star, complete");
    cmd->add_option("--c", c, "Cycle length for cuttlefish");
    cmd->add_option("--t", t, "Leaves (cuttlefish) or second cycle length (bicyclic)");
    cmd->add_option("--s", s, "First cycle length (bicyclic)");
    cmd->add_option("--ell", ell, "Joining path vertices (typeI) or shared edges (typeII)");
    cmd->add_option("--type", type, "typeI|typeII");
  }

  Graph load(std::istream& in) const {
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!family.empty()) return from_family();
    std::string text;
    if (file.empty() || file == "-") {
      text.assign(std::istreambuf_iterator<char>(in), {});
    } else {
      std::ifstream f(file);
      if (!f) throw ParseError("cannot open '" + file + "'");
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return parse_graph(text);
  }

  Graph from_family() const {
    if (family == "path") return families::path(n);
    if (family == "cycle") return families::cycle(n);
    if (family == "pan") return families::pan(n);
    if (family == "paw") return families::paw();
    if (family == "star") return families::star(n);
    if (family == "complete") return families::complete(n);
    if (family == "cuttlefish") return families::cuttlefish(c, t);
    if (family == "bicyclic") {
      if (type == "typeI") return families::bicyclic_type_one(s, t, ell);
      if (type == "typeII") return families::bicyclic_type_two(s, t, ell);
      throw ParseError("--type must be typeI or typeII");
    }
    throw ParseError("unknown family '" + family + "'");
  }
};

std::string read_text(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(file);
  if (!f) throw ParseError("cannot open '" + file + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + token + "' in list '" + text + "'");
    }
  }
  return out;
}

void print_table(std::ostream& out, const StarExpansion& x) {
  std::size_t width = 9;
  for (const auto& [p, c] : x.coeffs()) width = std::max(width, to_string(p).size());
  out << std::left << std::setw(static_cast<int>(width)) << "partition" << "  coefficient\n";
  for (const auto& [p, c] : x.coeffs()) {
    out << std::left << std::setw(static_cast<int>(width)) << to_string(p) << "  " << std::right << std::setw(11)
        << c.get_str() << '\n';
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star-basis expansions of chromatic symmetric functions", "csf"};
  app.require_subcommand(1, 1);
  bool pretty = false;
  int jobs = 1;
  app.add_flag("--pretty", pretty, "Human-readable tables instead of JSON");
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  GraphSource expand_src;
  bool no_memo = false;
  auto* expand = app.add_subcommand("expand", "Star expansion of a graph as JSON");
  expand_src.attach(expand);
  expand->add_flag("--no-memo", no_memo, "Walk the DNC tree without memoization");

  GraphSource leading_src;
  auto* leading = app.add_subcommand("leading", "Leading partition and coefficient");
  leading_src.attach(leading);

  std::string formula_name;
  int f_n = 0, f_c = 0, f_k = 0, f_r = 0, f_m1 = 0, f_t = 0, f_s = 0, f_ell = 1;
  std::string f_type = "typeI", f_degrees, f_sprouts, f_family = "path", f_partition;
  bool f_root_sprout = false;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed form");
  formula->add_option("name", formula_name,
                      "tree-hook|unicyclic-hook|longest-hook|path|cycle|pan|cuttlefish-leading|bicyclic-cn|"
                      "lead-tree|lead-r1|lead-rge2|lambda-words")
      ->required();
  formula->add_option("--n", f_n);
  formula->add_option("--c", f_c);
  formula->add_option("--k", f_k);
  formula->add_option("--r", f_r);
  formula->add_option("--m1", f_m1);
  formula->add_option("--t", f_t);
  formula->add_option("--s", f_s);
  formula->add_option("--ell", f_ell);
  formula->add_option("--type", f_type);
  formula->add_option("--degrees", f_degrees, "Comma-separated deep-vertex degrees");
  formula->add_option("--sprouts", f_sprouts, "Comma-separated sprout degrees");
  formula->add_flag("--root-sprout", f_root_sprout);
  formula->add_option("--family", f_family, "path|cycle|pan (lambda-words)");
  formula->add_option("--partition", f_partition, "e.g. 3+2+1+1 (lambda-words)");

  std::string infer_file;
  auto* infer_cmd = app.add_subcommand("infer", "Structural report from an expansion JSON");
  infer_cmd->add_option("--file", infer_file, "Expansion JSON ('-' or omitted: stdin)");

  GraphSource oracle_src;
  auto* oracle = app.add_subcommand("oracle-check", "Compare the engine with the power-sum oracle");
  oracle_src.attach(oracle);

  int e_n = 0, e_cycle = 0;
  bool e_count = false;
  auto* enumerate = app.add_subcommand("enumerate", "Connected unicyclic graphs as graph6");
  enumerate->add_option("--n", e_n)->required();
  enumerate->add_option("--cycle", e_cycle, "Cycle length (default: all)");
  enumerate->add_flag("--count", e_count, "Print only the number of graphs");

  int k_n = 0, k_cycle = 0;
  std::string k_out, k_cache;
  auto* collisions = app.add_subcommand("collisions", "Equal-CSF classes among unicyclic graphs");
  collisions->add_option("--n", k_n)->required();
  collisions->add_option("--cycle", k_cycle)->required();
  collisions->add_option("--out", k_out, "Write the report here instead of stdout");
  collisions->add_option("--cache-dir", k_cache, "Fingerprint cache (default: $CSF_CACHE_DIR)");

  int v_nmax = 8;
  auto* verify = app.add_subcommand("verify", "Check the structural theorems exhaustively");
  verify->add_option("--n-max", v_nmax);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "csf: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (expand->parsed()) {
      StarOptions opts;
      opts.memoize = !no_memo;
      if (no_memo) opts.policy = EdgePolicy::LowestIndex;
      auto x = star_expand(expand_src.load(in), opts);
      if (pretty) {
        print_table(out, x);
      } else {
        emit(out, expansion_to_json(x));
      }
    } else if (leading->parsed()) {
      auto lead = leading_term(star_expand(leading_src.load(in)));
      if (pretty) {
        out << to_string(lead.partition) << "  " << lead.coefficient.get_str() << '\n';
      } else {
        emit(out, Json{{"partition", partition_to_json(lead.partition)}, {"c", integer_to_json(lead.coefficient)}});
      }
    } else if (formula->parsed()) {
      Json result;
      const std::string& name = formula_name;
      if (name == "tree-hook") {
        result = Json{{"value", integer_to_json(tree_hook_coeff(f_k, f_m1))}};
      } else if (name == "unicyclic-hook") {
        result = Json{{"value", integer_to_json(unicyclic_hook_coeff({f_n, f_c, f_k, f_r, f_m1}))}};
      } else if (name == "longest-hook") {
        auto lh = longest_hook({f_n, f_c, f_k, f_r, 0});
        result = Json{{"m1", lh.m1}, {"value", integer_to_json(lh.coefficient)}};
      } else if (name == "path" || name == "cycle" || name == "pan") {
        auto x = name == "path" ? path_csf(f_n) : name == "cycle" ? cycle_csf(f_n) : pan_csf(f_n);
        if (pretty) {
          print_table(out, x);
          return kOk;
        }
        result = expansion_to_json(x);
      } else if (name == "cuttlefish-leading") {
        result = Json{{"partition", partition_to_json(cuttlefish_leading(f_c, f_t))}};
      } else if (name == "bicyclic-cn") {
        BicyclicShape shape;
        if (f_type == "typeI") {
          shape = BicyclicShape::TypeOne;
        } else if (f_type == "typeII") {
          shape = BicyclicShape::TypeTwo;
        } else {
          throw ParseError("--type must be typeI or typeII");
        }
        result = Json{{"value", integer_to_json(bicyclic_cn(shape, f_s, f_t, f_ell))}};
      } else if (name == "lead-tree") {
        result = Json{{"value", integer_to_json(lead_coeff_tree(parse_int_list(f_degrees)))}};
      } else if (name == "lead-r1") {
        result = Json{{"value", integer_to_json(lead_coeff_unicyclic_r1(f_c, parse_int_list(f_degrees), f_root_sprout))}};
      } else if (name == "lead-rge2") {
        DeepVertexProfile prof{parse_int_list(f_sprouts), parse_int_list(f_degrees)};
        result = Json{{"value", integer_to_json(lead_coeff_unicyclic_rge2(prof, f_r))}};
      } else if (name == "lambda-words") {
        auto fam = parse_word_family(f_family);
        auto words = lambda_words_for(fam, f_n, parse_partition(f_partition));
        result = Json{{"count", words.size()}, {"words", words}};
      } else {
        throw ParseError("unknown formula '" + name + "'");
      }
      emit(out, result);
    } else if (infer_cmd->parsed()) {
      auto rep = infer(parse_expansion(read_text(infer_file, in)));
      emit(out, report_to_json(rep));
    } else if (oracle->parsed()) {
      Graph g = oracle_src.load(in);
      auto engine = star_expand(g);
      bool brute = g.edge_count() <= kPowerSumEdgeGuard;
      auto psum = brute ? csf_power_sum(g) : csf_power_sum_blocks(g);
      auto oracle_x = to_star_basis(psum);
      bool equal = oracle_x == engine;
      emit(out, Json{{"n", g.vertex_count()},
                     {"edges", g.edge_count()},
                     {"oracle", brute ? "edge-subsets" : "vertex-blocks"},
                     {"equal", equal}});
      if (!equal) throw CheckFailed("engine and power-sum oracle disagree");
    } else if (enumerate->parsed()) {
      std::optional<int> c;
      if (e_cycle) c = e_cycle;
      long count = 0;
      for_each_unicyclic(e_n, c, [&](const Graph& g) {
        ++count;
        if (!e_count) out << to_graph6(g) << '\n';
      });
      if (e_count) out << count << '\n';
    } else if (collisions->parsed()) {
      SearchOptions opts;
      opts.jobs = jobs;
      if (!k_cache.empty()) opts.cache_dir = k_cache;
      auto report = collision_search(k_n, k_cycle, opts);
      Json j = collision_report_to_json(report);
      if (!k_out.empty()) {
        std::ofstream f(k_out);
        if (!f) throw ParseError("cannot write '" + k_out + "'");
        f << j.dump(2) << '\n';
      } else if (pretty) {
        out << "n=" << report.n << " c=" << report.c << " graphs=" << report.graph_count
            << " pairs=" << report.pair_count << '\n';
        for (const auto& k : report.classes) {
          for (const auto& g : k.graphs) out << "  " << to_graph6(g);
          out << '\n';
        }
      } else {
        emit(out, j);
      }
    } else if (verify->parsed()) {
      VerifyOptions opts;
      opts.jobs = jobs;
      auto report = verify_theorems(v_nmax, opts);
      if (pretty) {
        for (const auto& c : report.checks) {
          out << std::left << std::setw(28) << c.name << std::right << std::setw(8) << c.passed << std::setw(6)
              << c.failed;
          if (c.counterexample) out << "  " << *c.counterexample << "  " << c.detail;
          out << '\n';
        }
      } else {
        emit(out, verify_report_to_json(report));
      }
      if (!report.all_passed()) throw CheckFailed("theorem verification found counterexamples");
    }
  } catch (const CheckFailed& e) {
    err << "csf: " << e.what() << '\n';
    return kDataFailure;
  } catch (const InconsistentReportError& e) {
    err << "csf: " << e.what() << '\n';
    return kDataFailure;
  } catch (const NonIntegralError& e) {
    err << "csf: " << e.what() << '\n';
    return kDataFailure;
  } catch (const Error& e) {
    err << "csf: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace csf::cli
