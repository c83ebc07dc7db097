// numsgps: command-line front end for the numsg library.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "numsg/ed1.hpp"
#include "numsg/fibers.hpp"
#include "numsg/format.hpp"
#include "numsg/monoids.hpp"
#include "numsg/multiples.hpp"
#include "numsg/oracle.hpp"
#include "numsg/rank.hpp"

namespace {

using namespace numsg;

enum ExitCode { kOk = 0, kInvalid = 2, kCeiling = 3, kBug = 4 };

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
};

struct BoundOptions {
  std::optional<Int> max_frobenius;
  std::optional<Int> max_genus;
  std::optional<std::size_t> max_depth;
  std::optional<std::size_t> max_nodes;

  TruncationBounds bounds() const { return {max_frobenius, max_genus, max_depth, max_nodes}; }
};

void add_output(CLI::App* cmd, OutputOptions& o, std::vector<std::string> formats = {"text", "json"}) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
}

void add_bounds(CLI::App* cmd, BoundOptions& b) {
  cmd->add_option("--max-frobenius", b.max_frobenius, "Keep nodes with F(T) at most this");
  cmd->add_option("--max-genus", b.max_genus, "Keep nodes with g(T) at most this");
  cmd->add_option("--max-depth", b.max_depth, "Keep nodes at most this deep");
  cmd->add_option("--max-nodes", b.max_nodes, "Stop after this many nodes per tree");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json nullable_list(const std::optional<std::vector<Int>>& v) { return v ? Json(*v) : Json(nullptr); }

// ---------------------------------------------------------------- commands

std::string cmd_info(const NumericalSemigroup& s, const std::string& format) {
  const bool whole = s.is_whole();
  std::optional<std::vector<Int>> pf;
  std::optional<std::vector<Int>> ap;
  if (!whole) {
    pf = pseudo_frobenius(s);
    ap = apery(s, s.multiplicity());
  }
  if (format == "json") {
    Json j;
    j["semigroup"] = to_json(s);
    j["multiplicity"] = s.multiplicity();
    j["embedding_dimension"] = s.embedding_dimension();
    j["pseudo_frobenius"] = nullable_list(pf);
    j["apery_multiplicity"] = nullable_list(ap);
    j["type"] = whole ? Json(nullptr) : Json(type(s));
    j["irreducible"] = whole ? Json(nullptr) : Json(is_irreducible(s));
    j["symmetric"] = whole ? Json(nullptr) : Json(is_symmetric(s));
    j["pseudo_symmetric"] = whole ? Json(nullptr) : Json(is_pseudo_symmetric(s));
    return j.dump() + "\n";
  }
  std::ostringstream o;
  o << "semigroup: " << (whole ? "ℕ" : to_text(s)) << "\n"
    << "frobenius: " << s.frobenius() << "\n"
    << "genus: " << s.genus() << "\n"
    << "multiplicity: " << s.multiplicity() << "\n"
    << "embedding dimension: " << s.embedding_dimension() << "\n"
    << "gaps: " << to_text(s.gaps()) << "\n";
  if (!whole) {
    o << "pseudo-Frobenius: " << to_text(*pf) << "\n"
      << "type: " << type(s) << "\n"
      << "Apéry set of m: " << to_text(*ap) << "\n"
      << "irreducible: " << yes_no(is_irreducible(s)) << "\n"
      << "symmetric: " << yes_no(is_symmetric(s)) << "\n"
      << "pseudo-symmetric: " << yes_no(is_pseudo_symmetric(s)) << "\n";
  }
  return o.str();
}

std::string semigroup_out(const NumericalSemigroup& s, const std::string& format) {
  return (format == "json" ? to_json(s).dump() : to_text(s)) + "\n";
}

std::string cmd_max_multiples(const MultipleContext& ctx, const MaxMultiplesOptions& options, const std::string& format) {
  const auto result = max_multiples(ctx, options);
  if (format == "json") {
    Json list = Json::array();
    for (const auto& t : result.maximals) list.push_back(to_json(t));
    Json j;
    j["S"] = to_json(ctx.base());
    j["d"] = ctx.d();
    j["maximals"] = list;
    return j.dump() + "\n";
  }
  std::string out;
  for (const auto& t : result.maximals) out += to_text(t) + "\n";
  return out;
}

std::string node_label(const NumericalSemigroup& t) {
  return to_text(t) + " F=" + std::to_string(t.frobenius()) + " g=" + std::to_string(t.genus());
}

std::string cmd_fiber_tree(const MultipleContext& ctx, const std::string& root_spec, const TruncationBounds& bounds,
                           const std::string& format, std::string* dot_out) {
  FiberExplorer explorer(ctx);
  std::vector<NumericalSemigroup> roots;
  if (root_spec == "auto") {
    roots = max_multiples(ctx).maximals;
  } else {
    roots.push_back(parse_semigroup(root_spec));
  }
  std::vector<FiberTree> trees;
  for (const auto& r : roots) trees.push_back(explorer.enumerate_fiber(r, bounds));

  std::ostringstream dot;
  dot << "digraph fiber {\n";
  std::size_t offset = 0;
  for (const auto& tree : trees) {
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const auto& n = tree.nodes[i];
      dot << "  n" << offset + i << " [label=\"" << node_label(n.semigroup) << "\"];\n";
      if (n.parent) {
        dot << "  n" << offset + *n.parent << " -> n" << offset + i << " [label=\"" << *n.removed_generator
            << "\"];\n";
      }
    }
    offset += tree.nodes.size();
  }
  dot << "}\n";
  if (dot_out) *dot_out = dot.str();
  if (format == "dot") return dot.str();

  if (format == "json") {
    Json list = Json::array();
    for (const auto& tree : trees) {
      Json nodes = Json::array();
      for (const auto& n : tree.nodes) {
        Json jn;
        jn["semigroup"] = to_json(n.semigroup);
        jn["depth"] = n.depth;
        jn["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
        jn["removed"] = n.removed_generator ? Json(*n.removed_generator) : Json(nullptr);
        nodes.push_back(jn);
      }
      Json jt;
      jt["root"] = to_json(tree.root);
      jt["nodes"] = nodes;
      jt["truncated_by_node_limit"] = tree.truncated_by_node_limit;
      list.push_back(jt);
    }
    Json j;
    j["S"] = to_json(ctx.base());
    j["d"] = ctx.d();
    j["trees"] = list;
    return j.dump() + "\n";
  }
  std::ostringstream o;
  for (const auto& tree : trees) {
    for (const auto& n : tree.nodes) {
      o << std::string(2 * n.depth, ' ') << node_label(n.semigroup);
      if (n.removed_generator) o << " (removed " << *n.removed_generator << ")";
      o << "\n";
    }
    if (tree.truncated_by_node_limit) o << "(truncated by node limit)\n";
  }
  return o.str();
}

std::string cmd_md_monoid(const MultipleContext& ctx, const std::vector<Int>& x, const std::string& format) {
  const auto m = build_monoid(ctx, x);
  if (format == "json") {
    Json j;
    j["S"] = to_json(ctx.base());
    j["d"] = ctx.d();
    j["x"] = m.x_set();
    j["minimal_system"] = m.minimal_system();
    j["md_embedding_dimension"] = md_embedding_dimension(m);
    j["scale"] = m.scale();
    j["is_semigroup"] = m.is_semigroup();
    j["msg"] = m.msg();
    j["semigroup"] = m.is_semigroup() ? to_json(m.as_semigroup()) : Json(nullptr);
    return j.dump() + "\n";
  }
  std::ostringstream o;
  o << "minimal system: " << to_text(m.minimal_system()) << "\n"
    << "M_d(S)-embedding dimension: " << md_embedding_dimension(m) << "\n"
    << "minimal generators: " << to_text(m.msg()) << "\n"
    << "numerical semigroup: " << (m.is_semigroup() ? to_text(m.as_semigroup()) : "no (gcd " + std::to_string(m.scale()) + ")")
    << "\n";
  return o.str();
}

std::string cmd_ed1(const MultipleContext& ctx, Int x, const std::string& format) {
  const auto m = construct_ed1(ctx, x);
  const auto& t = m.semigroup();
  const bool whole = ctx.base().is_whole();
  std::optional<std::vector<Int>> pf;
  if (!whole) pf = ed1_pseudo_frobenius(m);
  std::optional<NumericalSemigroup> closure;
  if (ctx.d() >= 2) closure = ed1_theta_closure(m);
  if (format == "json") {
    Json j;
    j["semigroup"] = to_json(t);
    j["frobenius"] = ed1_frobenius(m);
    j["genus"] = ed1_genus(m);
    j["pf"] = nullable_list(pf);
    j["type"] = pf ? Json(pf->size()) : Json(nullptr);
    j["gluing"] = is_gluing_of_N_and_S(m);
    j["theta_closure"] = closure ? to_json(*closure) : Json(nullptr);
    j["symmetric"] = whole ? Json(nullptr) : Json(ed1_symmetry_transfer(m).multiple_symmetric);
    return j.dump() + "\n";
  }
  std::ostringstream o;
  o << "semigroup: " << to_text(t) << "\n"
    << "frobenius: " << ed1_frobenius(m) << "\n"
    << "genus: " << ed1_genus(m) << "\n";
  if (pf) o << "pseudo-Frobenius: " << to_text(*pf) << "\n" << "type: " << pf->size() << "\n";
  o << "gluing of N and S: " << yes_no(is_gluing_of_N_and_S(m)) << "\n";
  if (closure) o << "T with theta adjoined: " << to_text(*closure) << "\n";
  if (!whole) o << "symmetric: " << yes_no(ed1_symmetry_transfer(m).multiple_symmetric) << "\n";
  return o.str();
}

Json report_json(const RankReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) {
    Json jw;
    jw["index"] = x.index;
    jw["generator"] = x.generator;
    jw["sum_of_others"] = x.sum_of_others;
    jw["in_apery"] = x.in_apery;
    w.push_back(jw);
  }
  Json j;
  j["semigroup"] = to_json(r.semigroup);
  j["condition_holds"] = r.condition_holds;
  j["multiplicity_bound_ok"] = r.multiplicity_bound_ok;
  j["witnesses"] = w;
  return j;
}

std::string report_text(const RankReport& r) {
  std::ostringstream o;
  o << "semigroup: " << to_text(r.semigroup) << "\n";
  for (const auto& x : r.witnesses) {
    o << "a=" << x.generator << " sum of others=" << x.sum_of_others << " in Ap(S,a): " << yes_no(x.in_apery) << "\n";
  }
  o << "condition holds: " << yes_no(r.condition_holds) << "\n"
    << "m >= 2^(e-1): " << yes_no(r.multiplicity_bound_ok) << "\n";
  return o.str();
}

std::string cmd_full_rank(const NumericalSemigroup& s, const std::string& format) {
  const auto r = full_rank_condition(s);
  const auto obstruction = j_subset_obstruction(s);
  if (format == "json") {
    Json j = report_json(r);
    if (obstruction) {
      Json jo;
      jo["subset"] = obstruction->subset;
      jo["coefficients"] = obstruction->coefficients;
      jo["sum"] = obstruction->sum;
      j["j_subset_obstruction"] = jo;
    } else {
      j["j_subset_obstruction"] = nullptr;
    }
    return j.dump() + "\n";
  }
  std::string out = report_text(r);
  if (obstruction) {
    std::vector<Int> subset_gens;
    for (auto i : obstruction->subset) subset_gens.push_back(s.msg()[i]);
    out += "J-subset obstruction: sum of " + to_text(subset_gens) + " = " + std::to_string(obstruction->sum) +
           " with coefficients " + to_text(obstruction->coefficients) + "\n";
  } else {
    out += "J-subset obstruction: none found\n";
  }
  return out;
}

std::string cmd_unique_betti(const std::vector<Int>& c, const std::string& format) {
  const auto spec = UniqueBettiSpec::create(c);
  const auto s = unique_betti(spec);
  const auto r = full_rank_condition(s);
  std::vector<std::vector<Int>> aps;
  for (std::size_t i = 0; i < c.size(); ++i) aps.push_back(unique_betti_apery(spec, i));
  if (format == "json") {
    Json j;
    j["c"] = spec.c();
    j["msg_out"] = spec.msg_out();
    j["semigroup"] = to_json(s);
    j["condition_holds"] = r.condition_holds;
    j["multiplicity_bound_ok"] = r.multiplicity_bound_ok;
    j["apery"] = aps;
    return j.dump() + "\n";
  }
  std::ostringstream o;
  o << "semigroup: " << to_text(s) << "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    o << "Ap(S," << spec.msg_out()[i] << "): " << aps[i].size() << " elements\n";
  }
  o << "condition holds: " << yes_no(r.condition_holds) << "\n"
    << "m >= 2^(e-1): " << yes_no(r.multiplicity_bound_ok) << "\n";
  return o.str();
}

std::string cmd_search_low_e(const NumericalSemigroup& s, Int d_max, const TruncationBounds& bounds,
                             const std::string& format) {
  const auto hit = bounded_low_e_multiple_search(s, d_max, bounds);
  if (format == "json") {
    Json j;
    j["semigroup"] = to_json(s);
    j["d_max"] = d_max;
    if (hit) {
      j["d"] = hit->d;
      j["multiple"] = to_json(hit->multiple);
    } else {
      j["d"] = nullptr;
      j["multiple"] = nullptr;
    }
    return j.dump() + "\n";
  }
  if (!hit) return "none found within bounds\n";
  return "d=" + std::to_string(hit->d) + " " + to_text(hit->multiple) + " e=" +
         std::to_string(hit->multiple.embedding_dimension()) + "\n";
}

std::string cmd_census(Int f, const std::string& format) {
  const auto all = oracle::all_with_frobenius(f);
  if (format == "json") {
    Json list = Json::array();
    for (const auto& s : all) list.push_back(to_json(s));
    return list.dump() + "\n";
  }
  std::string out;
  for (const auto& s : all) out += to_text(s) + "\n";
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::invalid_input, "cannot write " + path);
  f << text;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ceiling_exceeded:
      return kCeiling;
    case Errc::invariant_violation:
      return kBug;
    default:
      return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroups, their quotients and their multiples"};
  app.require_subcommand(1);

  OutputOptions out;
  BoundOptions bounds;
  std::string sgp;
  std::string base;
  std::string root = "auto";
  std::string dot_path;
  std::string strategy = "kunz";
  std::size_t node_limit = MaxMultiplesOptions{}.node_limit;
  std::string x_list;
  std::string c_list;
  std::string csv_path;
  Int d = 1;
  Int x = 0;
  Int d_max = 1;
  Int f = 0;
  std::size_t count = 100;
  std::uint64_t seed = 1;
  std::function<std::string()> action;

  auto sgp_option = [&](CLI::App* cmd) {
    cmd->add_option("--sgp", sgp, "Semigroup: generators a,b,c or gaps:g1,g2,...")->required();
  };
  auto d_option = [&](CLI::App* cmd) { cmd->add_option("--d", d, "Multiplier d >= 1")->required(); };

  auto* info = app.add_subcommand("info", "Invariants of a numerical semigroup");
  sgp_option(info);
  add_output(info, out);
  info->callback([&] { action = [&] { return cmd_info(parse_semigroup(sgp), out.format); }; });

  auto* quot = app.add_subcommand("quotient", "The quotient T/d");
  sgp_option(quot);
  d_option(quot);
  add_output(quot, out);
  quot->callback([&] {
    action = [&] {
      if (d < 1) fail(Errc::invalid_input, "d must be positive");
      return semigroup_out(quotient(parse_semigroup(sgp), d), out.format);
    };
  });

  auto* is_mult = app.add_subcommand("is-multiple", "Whether T is a d-multiple of S");
  sgp_option(is_mult);
  is_mult->add_option("--base", base, "The semigroup S")->required();
  d_option(is_mult);
  add_output(is_mult, out);
  is_mult->callback([&] {
    action = [&] {
      const bool r = is_d_multiple(MultipleContext(parse_semigroup(base), d), parse_semigroup(sgp));
      return out.format == "json" ? Json(r).dump() + "\n" : std::string(r ? "true\n" : "false\n");
    };
  });

  auto* maxm = app.add_subcommand("max-multiples", "Maximal d-multiples of S");
  sgp_option(maxm);
  d_option(maxm);
  maxm->add_option("--strategy", strategy, "Search strategy")->check(CLI::IsMember({"kunz", "saturation"}));
  maxm->add_option("--node-limit", node_limit, "Search nodes before giving up (exit 3)")->capture_default_str();
  add_output(maxm, out);
  maxm->callback([&] {
    action = [&] {
      const auto st = strategy == "kunz" ? MaxMultiplesStrategy::kunz : MaxMultiplesStrategy::saturation;
      return cmd_max_multiples(MultipleContext(parse_semigroup(sgp), d), {st, node_limit}, out.format);
    };
  });

  auto* fiber = app.add_subcommand("fiber-tree", "Truncated fiber trees of the saturation map");
  sgp_option(fiber);
  d_option(fiber);
  fiber->add_option("--root", root, "auto (every maximal multiple) or generators of one root");
  fiber->add_option("--dot", dot_path, "Also write the DOT graph to this file");
  add_bounds(fiber, bounds);
  add_output(fiber, out, {"text", "json", "dot"});
  fiber->callback([&] {
    action = [&] {
      std::string dot;
      auto text = cmd_fiber_tree(MultipleContext(parse_semigroup(sgp), d), root, bounds.bounds(), out.format, &dot);
      if (!dot_path.empty()) emit(dot, dot_path);
      return text;
    };
  });

  auto* md = app.add_subcommand("md-monoid", "The monoid <X> + dS");
  sgp_option(md);
  d_option(md);
  md->add_option("--x", x_list, "Comma-separated X")->required();
  add_output(md, out);
  md->callback([&] {
    action = [&] { return cmd_md_monoid(MultipleContext(parse_semigroup(sgp), d), parse_int_list(x_list), out.format); };
  });

  auto* ed1 = app.add_subcommand("ed1", "The multiple <x> + dS");
  sgp_option(ed1);
  d_option(ed1);
  ed1->add_option("--x", x, "x in S with gcd(x, d) = 1")->required();
  add_output(ed1, out);
  ed1->callback([&] { action = [&] { return cmd_ed1(MultipleContext(parse_semigroup(sgp), d), x, out.format); }; });

  auto* fr = app.add_subcommand("full-rank", "Sufficient condition for full quotient rank");
  sgp_option(fr);
  add_output(fr, out);
  fr->callback([&] { action = [&] { return cmd_full_rank(parse_semigroup(sgp), out.format); }; });

  auto* ub = app.add_subcommand("unique-betti", "Semigroup generated by the products of all but one c_j");
  ub->add_option("--c", c_list, "Pairwise coprime factors, each at least 2")->required();
  add_output(ub, out);
  ub->callback([&] { action = [&] { return cmd_unique_betti(parse_int_list(c_list), out.format); }; });

  auto* low = app.add_subcommand("search-low-e", "Bounded search for a multiple of smaller embedding dimension");
  sgp_option(low);
  low->add_option("--dmax", d_max, "Largest d to try")->required();
  add_bounds(low, bounds);
  add_output(low, out);
  low->callback([&] {
    action = [&] { return cmd_search_low_e(parse_semigroup(sgp), d_max, bounds.bounds(), out.format); };
  });

  Int sweep_genus = 8;
  Int sweep_dmax = 2;
  Int search_genus = 0;
  std::size_t search_nodes = 2000;
  auto* sweep = app.add_subcommand("rank-sweep", "Random semigroups: full-rank condition against bounded searches");
  sweep->add_option("--count", count, "Number of samples");
  sweep->add_option("--max-genus", sweep_genus, "Largest genus sampled");
  sweep->add_option("--seed", seed, "Random seed");
  sweep->add_option("--dmax", sweep_dmax, "Largest d for the low-e search");
  sweep->add_option("--search-max-genus", search_genus, "Genus bound for the low-e search (default 4 * max-genus)");
  sweep->add_option("--search-max-nodes", search_nodes, "Node bound per fiber for the low-e search");
  sweep->add_option("--csv", csv_path, "CSV destination (default stdout)");
  sweep->callback([&] {
    action = [&] {
      RankSweepOptions opt;
      opt.count = count;
      opt.max_genus = sweep_genus;
      opt.seed = seed;
      opt.d_max = sweep_dmax;
      opt.search_bounds.max_genus = search_genus > 0 ? search_genus : 4 * sweep_genus;
      opt.search_bounds.max_nodes = search_nodes;
      std::ostringstream o;
      write_sweep_csv(o, rank_sweep(opt));
      if (!csv_path.empty()) {
        emit(o.str(), csv_path);
        return std::string();
      }
      return o.str();
    };
  });

  auto* orc = app.add_subcommand("oracle", "Brute-force enumerators");
  orc->require_subcommand(1);
  auto* census = orc->add_subcommand("frobenius-census", "Every numerical semigroup with Frobenius number f");
  census->add_option("--f", f, "Frobenius number")->required();
  add_output(census, out);
  census->callback([&] { action = [&] { return cmd_census(f, out.format); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    emit(action(), out.out_path);
    return kOk;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kBug;
  }
}
