// Command-line front end. Subcommands cover the whole pipeline: facet
// enumeration, f/h-vectors and triangles, shelling construction and
// verification, generating facets, sphere machinery, skeleton and cycle
// shellings, tree decompositions, homotopy profiles, Betti numbers, and
// a per-input report. Exit codes: 0 ok, 1 domain error, 2 bad input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dtc/dtc.hpp"

namespace {

using nlohmann::json;

struct Options {
  bool json_mode = false;
  bool lift_double = false;
  std::string input;

  std::string strategy = "auto";
  std::string source_label;
  std::string rsource_csv;
  bool cover = false;
  int census_n = 0;
  int prime = 2;
  int skeleton_k = -3;  // sentinel: use m_G
  bool do_shell = false;
  int cycle_n = 0;
};

struct LoadedInput {
  std::optional<dtc::Digraph> dg;
  std::optional<dtc::SimpleGraph> ug;
};

LoadedInput load_input(const std::string& path) {
  auto ends_with = [&path](const char* suffix) {
    std::string s = suffix;
    return path.size() >= s.size() &&
           path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  std::ifstream in(path);
  if (!in) throw dtc::input_error("cannot open input file: " + path);
  LoadedInput li;
  if (ends_with(".dg"))
    li.dg = dtc::parse_digraph(in);
  else if (ends_with(".ug"))
    li.ug = dtc::parse_simple_graph(in);
  else
    throw dtc::input_error("input file must end in .dg or .ug");
  return li;
}

dtc::Digraph need_digraph(const LoadedInput& li, const Options& opt) {
  if (li.dg) return *li.dg;
  if (li.ug && opt.lift_double) return dtc::double_directed(*li.ug);
  throw dtc::input_error("undirected input needs --double for this command");
}

const dtc::SimpleGraph& need_graph(const LoadedInput& li) {
  if (li.ug) return *li.ug;
  throw dtc::input_error("this command needs an undirected input (.ug)");
}

int find_vertex(const dtc::Digraph& d, const std::string& label) {
  for (int v = 0; v < d.n(); ++v)
    if (d.label(v) == label) return v;
  throw dtc::input_error("unknown vertex label: " + label);
}

int find_vertex(const dtc::SimpleGraph& g, const std::string& label) {
  for (int v = 0; v < g.n(); ++v)
    if (g.label(v) == label) return v;
  throw dtc::input_error("unknown vertex label: " + label);
}

std::vector<int> parse_rsource(const dtc::SimpleGraph& g,
                               const std::string& csv) {
  std::vector<int> out;
  std::string tok;
  std::istringstream iss(csv);
  while (std::getline(iss, tok, ','))
    if (!tok.empty()) out.push_back(find_vertex(g, tok));
  if (out.empty()) throw dtc::input_error("empty --rsource list");
  std::sort(out.begin(), out.end());
  return out;
}

void emit_facets(const dtc::Complex& c, const Options& opt) {
  if (!opt.json_mode) {
    dtc::print_facets(std::cout, c);
    return;
  }
  for (const auto& line : dtc::facet_lines(c))
    std::cout << json{{"facet", line}} << "\n";
}

void emit_order(const dtc::Complex& c, const dtc::ShellingOrder& order,
                const Options& opt) {
  if (!opt.json_mode) {
    dtc::print_order(std::cout, c, order);
    return;
  }
  for (std::size_t i = 0; i < order.facets.size(); ++i)
    std::cout << json{{"facet", dtc::serialize_face(c, order.facets[i])},
                      {"restriction",
                       dtc::serialize_face(c, order.restrictions[i])},
                      {"type", order.types[i]}}
              << "\n";
}

void emit_triangle(const dtc::Triangle& t, const char* value_name,
                   const Options& opt) {
  if (!opt.json_mode) {
    dtc::print_triangle(std::cout, t, value_name);
    return;
  }
  for (const auto& [ij, v] : t.cells)
    std::cout << json{{"i", ij.first}, {"j", ij.second}, {value_name, v}}
              << "\n";
}

template <typename T>
void emit_vector(const std::vector<T>& v, const char* name,
                 const Options& opt) {
  if (!opt.json_mode) {
    dtc::print_vector(std::cout, v);
    return;
  }
  std::cout << json{{name, v}} << "\n";
}

json profile_json(const dtc::WedgeProfile& w) {
  json out = json::object();
  for (const auto& [dim, count] : w) out[std::to_string(dim)] = count;
  return out;
}

// Picks the construction for `shell` and `generators` when not forced.
std::string pick_strategy(const LoadedInput& li, const Options& opt) {
  if (opt.strategy != "auto") return opt.strategy;
  if (li.ug && !opt.lift_double) return "skeleton";
  dtc::Digraph d = need_digraph(li, opt);
  if (dtc::is_essentially_tree(d) && d.m() > 0) return "tree";
  if (!dtc::complete_sources(d).empty()) return "source";
  return "brute";
}

int pick_source(const dtc::Digraph& d, const Options& opt) {
  if (!opt.source_label.empty()) return find_vertex(d, opt.source_label);
  auto cs = dtc::complete_sources(d);
  if (cs.empty()) throw dtc::domain_error("input has no complete source");
  return cs.front();
}

std::vector<int> pick_rsource(const dtc::SimpleGraph& g, const Options& opt) {
  if (!opt.rsource_csv.empty()) return parse_rsource(g, opt.rsource_csv);
  auto all = dtc::complete_r_sources(g);
  if (all.empty()) throw dtc::domain_error("input has no complete r-source");
  return all.front();
}

int cmd_shell(const LoadedInput& li, const Options& opt) {
  std::string strategy = pick_strategy(li, opt);
  if (strategy == "skeleton") {
    const auto& g = need_graph(li);
    auto rs = dtc::r_source_skeleton_shelling(g, pick_rsource(g, opt));
    emit_order(rs.skel, rs.order, opt);
    return 0;
  }
  dtc::Digraph d = need_digraph(li, opt);
  dtc::Complex c = dtc::directed_tree_complex(d);
  if (strategy == "source") {
    auto ss = dtc::complete_source_shelling(d, pick_source(d, opt));
    emit_order(c, ss.order, opt);
    return 0;
  }
  if (strategy == "tree") {
    auto order = dtc::recursive_shelling(d);
    auto res = dtc::verify_shelling(c, order.facets);
    if (!dtc::is_valid(res))
      throw dtc::domain_error("recursive order failed verification");
    emit_order(c, std::get<dtc::ShellingOrder>(res), opt);
    return 0;
  }
  if (strategy == "brute") {
    auto order = dtc::find_shelling(c);
    if (!order) throw dtc::domain_error("complex has no shelling");
    emit_order(c, *order, opt);
    return 0;
  }
  throw dtc::input_error("unknown strategy: " + strategy);
}

int cmd_verify(const Options& opt) {
  std::ifstream in(opt.input);
  if (!in) throw dtc::input_error("cannot open input file: " + opt.input);
  dtc::ParsedOrder po = dtc::parse_order(in);
  auto res = dtc::verify_shelling(po.complex, po.order);
  if (auto* bad = std::get_if<dtc::ShellingViolation>(&res)) {
    if (opt.json_mode)
      std::cout << json{{"valid", false},
                        {"facet_index", bad->j},
                        {"reason", bad->reason}}
                << "\n";
    else
      std::cout << "invalid: facet " << bad->j + 1 << ": " << bad->reason
                << "\n";
    return 1;
  }
  const auto& order = std::get<dtc::ShellingOrder>(res);
  if (po.has_restrictions && po.restrictions != order.restrictions)
    throw dtc::domain_error("restriction column disagrees with the verifier");
  if (po.has_types && po.types != order.types)
    throw dtc::domain_error("types row disagrees with the verifier");
  if (opt.json_mode)
    std::cout << json{{"valid", true},
                      {"facets", order.facets.size()}}
              << "\n";
  else
    std::cout << "valid shelling of " << order.facets.size() << " facets\n";
  return 0;
}

int cmd_generators(const LoadedInput& li, const Options& opt) {
  std::string strategy = pick_strategy(li, opt);
  dtc::Complex c;
  std::vector<dtc::Face> gens;
  if (strategy == "skeleton") {
    const auto& g = need_graph(li);
    auto rs = dtc::r_source_skeleton_shelling(g, pick_rsource(g, opt));
    gens = dtc::generating_facets_from_order(rs.order);
    c = std::move(rs.skel);
  } else if (strategy == "source") {
    dtc::Digraph d = need_digraph(li, opt);
    c = dtc::directed_tree_complex(d);
    gens = dtc::generating_facets_source(d, pick_source(d, opt));
  } else if (strategy == "tree") {
    dtc::Digraph d = need_digraph(li, opt);
    c = dtc::directed_tree_complex(d);
    gens = dtc::generating_facets_tree(d);
  } else {
    c = dtc::directed_tree_complex(need_digraph(li, opt));
    auto order = dtc::find_shelling(c);
    if (!order) throw dtc::domain_error("complex has no shelling");
    gens = dtc::generating_facets_from_order(*order);
  }
  if (gens.empty() && !opt.json_mode) {
    std::cout << "none\n";
    return 0;
  }
  for (const auto& g : gens) {
    if (opt.json_mode)
      std::cout << json{{"generating_facet", dtc::serialize_face(c, g)}}
                << "\n";
    else
      std::cout << dtc::serialize_face(c, g) << "\n";
  }
  return 0;
}

int cmd_spheres(const LoadedInput& li, const Options& opt) {
  if (opt.census_n > 0) {
    auto rows = dtc::gn_sphere_census(opt.census_n);
    if (opt.json_mode) {
      for (const auto& r : rows)
        std::cout << json{{"k", r.k},
                          {"count", r.count},
                          {"folds", r.folds},
                          {"base_dim", r.base_dim}}
                  << "\n";
    } else {
      dtc::print_census(std::cout, rows);
    }
    return 0;
  }
  dtc::Digraph d = need_digraph(li, opt);
  if (opt.cover) {
    auto rep = dtc::union_cover_check(d);
    dtc::Complex c = dtc::directed_tree_complex(d);
    for (const auto& row : rep.rows) {
      if (opt.json_mode)
        std::cout << json{{"facet", dtc::serialize_face(c, row.facet)},
                          {"generating", dtc::serialize_face(c, row.generating)},
                          {"covered", row.covered}}
                  << "\n";
      else
        std::cout << dtc::serialize_face(c, row.facet) << " | "
                  << dtc::serialize_face(c, row.generating) << " | "
                  << (row.covered ? "covered" : "NOT COVERED") << "\n";
    }
    if (!rep.all_covered) throw dtc::domain_error("cover check failed");
    return 0;
  }
  int c0 = pick_source(d, opt);
  dtc::Complex c = dtc::directed_tree_complex(d);
  for (const auto& t : dtc::generating_facets_source(d, c0)) {
    auto s = dtc::sphere_S_T(d, c0, t);
    if (opt.json_mode) {
      std::cout << json{{"tree", dtc::serialize_face(c, t)},
                        {"k", s.k},
                        {"sigma", dtc::serialize_face(c, s.sigma)},
                        {"pairs", s.pairs.size()},
                        {"sphere_facets", s.sphere.facets().size()},
                        {"dim", s.sphere.dim()}}
                << "\n";
    } else {
      std::cout << dtc::serialize_face(c, t) << " | k=" << s.k << " | sigma "
                << dtc::serialize_face(c, s.sigma) << " | pairs "
                << s.pairs.size() << " | facets "
                << s.sphere.facets().size() << " | dim " << s.sphere.dim()
                << "\n";
    }
  }
  return 0;
}

int cmd_skeleton(const LoadedInput& li, const Options& opt) {
  const auto& g = need_graph(li);
  if (opt.do_shell) {
    auto rs = dtc::r_source_skeleton_shelling(g, pick_rsource(g, opt));
    emit_order(rs.skel, rs.order, opt);
    return 0;
  }
  auto ms = dtc::max_pure_skeleton(g);
  dtc::Complex out =
      opt.skeleton_k == -3 ? ms.skel
                           : dtc::skeleton(dtc::directed_tree_complex(
                                               dtc::double_directed(g)),
                                           opt.skeleton_k);
  if (opt.json_mode)
    std::cout << json{{"m", ms.m},
                      {"k", opt.skeleton_k == -3 ? ms.m : opt.skeleton_k},
                      {"pure", dtc::is_pure(out)},
                      {"facets", out.facets().size()}}
              << "\n";
  else
    std::cout << "m " << ms.m << "\npure "
              << (dtc::is_pure(out) ? "yes" : "no") << "\nfacets "
              << out.facets().size() << "\n";
  emit_facets(out, opt);
  return 0;
}

int cmd_cycle(const Options& opt) {
  auto res = dtc::cycle_skeleton_shelling(opt.cycle_n);
  if (opt.json_mode) {
    json rec{{"n", res.n},
             {"m", res.m},
             {"shellable", res.shellable},
             {"doubled", res.doubled}};
    if (res.shellable && res.residue == 0) {
      std::vector<std::string> src;
      for (int v : res.source) src.push_back(std::to_string(v + 1));
      rec["rsource"] = src;
    }
    if (!res.shellable) {
      json cert = json::array();
      for (auto [dim, rank] : res.certificate)
        cert.push_back({{"dim", dim}, {"rank", rank}});
      rec["certificate"] = cert;
    }
    std::cout << rec << "\n";
    if (res.shellable) emit_order(res.complex, res.order, opt);
    return 0;
  }
  std::cout << "n " << res.n << "\nskeleton_dim " << res.m << "\n";
  if (res.shellable) {
    std::cout << "shellable yes\n";
    dtc::print_order(std::cout, res.complex, res.order);
  } else {
    std::cout << "shellable no\n";
    std::cout << "dim\trank\n";
    for (auto [dim, rank] : res.certificate)
      std::cout << dim << "\t" << rank << "\n";
  }
  return 0;
}

int cmd_decompose(const LoadedInput& li, const Options& opt) {
  const auto& g = need_graph(li);
  auto res = dtc::enumerate_basic_decompositions(g);
  dtc::Complex c = dtc::directed_tree_complex(res.doubled);
  for (const auto& dec : res.decompositions) {
    std::string pieces;
    for (const auto& piece : dec.pieces) {
      pieces += pieces.empty() ? "" : " ";
      pieces += "{";
      for (std::size_t i = 0; i < piece.size(); ++i)
        pieces += (i ? "," : "") + g.label(piece[i]);
      pieces += "}";
    }
    if (opt.json_mode)
      std::cout << json{{"pieces", pieces},
                        {"generating_facet",
                         dtc::serialize_face(c, dec.generating)}}
                << "\n";
    else
      std::cout << pieces << " | " << dtc::serialize_face(c, dec.generating)
                << "\n";
  }
  if (opt.json_mode) {
    json mu = json::object();
    for (const auto& [m, count] : res.mu) mu[std::to_string(m)] = count;
    std::cout << json{{"mu", mu}} << "\n";
  } else {
    for (const auto& [m, count] : res.mu)
      std::cout << "mu_" << m << "\t" << count << "\n";
    if (res.decompositions.empty()) std::cout << "contractible\n";
  }
  return 0;
}

int cmd_homotopy(const LoadedInput& li, const Options& opt) {
  if (li.ug) {
    if (!opt.lift_double)
      throw dtc::input_error("undirected input needs --double for this command");
    const auto& g = need_graph(li);
    auto res = dtc::enumerate_basic_decompositions(g);
    dtc::WedgeProfile w = dtc::tree_homotopy(g);
    dtc::Complex c = dtc::directed_tree_complex(res.doubled);
    if (!dtc::wedge_check(c, w, opt.prime))
      throw dtc::domain_error("wedge profile disagrees with homology");
    if (opt.json_mode)
      std::cout << json{{"profile", profile_json(w)},
                        {"betti_checked", true}}
                << "\n";
    else
      dtc::print_wedge_profile(std::cout, w, res.mu);
    return 0;
  }
  dtc::Digraph d = need_digraph(li, opt);
  dtc::WedgeProfile w = dtc::dag_homotopy(d);
  if (opt.json_mode)
    std::cout << json{{"profile", profile_json(w)}} << "\n";
  else
    dtc::print_wedge_profile(std::cout, w, {});
  return 0;
}

int cmd_betti(const LoadedInput& li, const Options& opt) {
  dtc::Digraph d = need_digraph(li, opt);
  dtc::Complex c = dtc::directed_tree_complex(d);
  dtc::BettiVector b = dtc::betti(c, opt.prime);
  if (opt.json_mode) {
    for (int k = -1; k <= b.dim; ++k)
      std::cout << json{{"dim", k}, {"rank", b.at(k)}, {"p", opt.prime}}
                << "\n";
  } else {
    dtc::print_betti(std::cout, b, opt.prime);
  }
  return 0;
}

int cmd_report(const LoadedInput& li, const Options& opt) {
  int failures = 0;
  auto line = [&failures, &opt](const std::string& name, bool ok,
                                const std::string& detail = "") {
    if (!ok) ++failures;
    if (opt.json_mode) {
      std::cout << json{{"check", name}, {"pass", ok}, {"detail", detail}}
                << "\n";
      return;
    }
    std::cout << (ok ? "PASS" : "FAIL") << " " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
  };

  dtc::Digraph d = need_digraph(li, opt);
  dtc::Complex c = dtc::directed_tree_complex(d);
  line("complex built", true,
       std::to_string(c.facets().size()) + " facets, dim " +
           std::to_string(c.dim()));

  dtc::FTriangle ft = dtc::f_triangle(c);
  dtc::HTriangle ht = dtc::h_triangle(c);
  line("triangle transform consistent", dtc::h_from_f_triangle(ft) == ht);

  std::optional<dtc::ShellingOrder> order;
  std::string how;
  if (dtc::is_essentially_tree(d) && d.m() > 0) {
    auto rec = dtc::recursive_shelling(d);
    auto res = dtc::verify_shelling(c, rec.facets);
    if (dtc::is_valid(res)) {
      order = std::get<dtc::ShellingOrder>(res);
      how = "tree recursion";
    }
    line("tree recursion order verified", order.has_value());
    line("h-triangle recursion matches",
         dtc::h_triangle_via_recursion(d) == ht);
  } else {
    auto cs = dtc::complete_sources(d);
    if (!cs.empty()) {
      auto ss = dtc::complete_source_shelling(d, cs.front());
      auto res = dtc::verify_shelling(c, ss.order.facets);
      bool ok = dtc::is_valid(res);
      if (ok) {
        order = std::get<dtc::ShellingOrder>(res);
        how = "complete source " + d.label(cs.front());
        ok = order->restrictions == ss.order.restrictions;
      }
      line("complete-source order verified", ok);
    } else if (c.facets().size() <= 18) {
      order = dtc::find_shelling(c);
      how = "backtracking";
      line("backtracking shelling search", order.has_value(),
           order ? "found" : "none exists");
    }
  }

  if (order) {
    line("shelling h-triangle matches", dtc::shelling_h_triangle(*order) == ht,
         how);
    auto gens = dtc::generating_facets_from_order(*order);
    dtc::Complex removed = dtc::remove_facet_interiors(c, gens);
    bool zeroed = removed.is_void() || dtc::betti(removed).all_zero();
    line("generating-facet removal kills homology", zeroed,
         std::to_string(gens.size()) + " generating");
  }

  dtc::BettiVector b2 = dtc::betti(c, 2);
  dtc::BettiVector b3 = dtc::betti(c, 3);
  line("Betti numbers agree at p=2 and p=3", b2.b == b3.b);

  // The conflict graph forbids pairs only; longer directed cycles shrink
  // the tree complex below its independency complex, except on trees.
  dtc::Complex viaconflict =
      dtc::independency_complex(dtc::conflict_graph(d));
  bool contained = true;
  for (const auto& f : c.facets()) {
    dtc::Face g;
    for (const auto& lab : dtc::face_labels(c, f)) {
      int v = viaconflict.vertex_index(lab);
      if (v < 0) contained = false;
      else g.push_back(v);
    }
    std::sort(g.begin(), g.end());
    contained = contained && viaconflict.contains(g);
  }
  if (dtc::is_essentially_tree(d))
    line("conflict-graph route agrees", viaconflict == c);
  else
    line("conflict-graph route contains the complex", contained);

  if (failures && !opt.json_mode) std::cout << failures << " failures\n";
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"complexes of directed trees"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --json / --double appear after the subcommand
  Options opt;
  app.add_flag("--json", opt.json_mode, "one JSON record per output line");
  app.add_flag("--double", opt.lift_double,
               "lift an undirected input to its double directed graph");

  auto add_input = [&opt](CLI::App* sub) {
    sub->add_option("input", opt.input, "input graph file (.dg or .ug)")
        ->required();
  };

  auto* c_facets = app.add_subcommand("facets", "facets of the tree complex");
  add_input(c_facets);
  auto* c_fvec = app.add_subcommand("fvec", "f-vector (pure complexes)");
  add_input(c_fvec);
  auto* c_hvec = app.add_subcommand("hvec", "h-vector (pure complexes)");
  add_input(c_hvec);
  auto* c_ftri = app.add_subcommand("ftri", "f-triangle");
  add_input(c_ftri);
  auto* c_htri = app.add_subcommand("htri", "h-triangle");
  add_input(c_htri);

  auto* c_shell = app.add_subcommand("shell", "build a shelling order");
  add_input(c_shell);
  c_shell->add_option("--strategy", opt.strategy,
                      "source, skeleton, tree, brute, or auto")
      ->check(CLI::IsMember({"auto", "source", "skeleton", "tree", "brute"}));
  c_shell->add_option("--source", opt.source_label, "complete source label");
  c_shell->add_option("--rsource", opt.rsource_csv,
                      "comma-separated complete r-source labels");

  auto* c_verify = app.add_subcommand("verify", "verify a shelling order file");
  c_verify->add_option("input", opt.input, "order file from the shell subcommand")
      ->required();

  auto* c_gen = app.add_subcommand("generators", "generating facets");
  add_input(c_gen);
  c_gen->add_option("--strategy", opt.strategy,
                    "source, skeleton, tree, brute, or auto")
      ->check(CLI::IsMember({"auto", "source", "skeleton", "tree", "brute"}));
  c_gen->add_option("--source", opt.source_label, "complete source label");

  auto* c_spheres =
      app.add_subcommand("spheres", "spheres attached to generating facets");
  c_spheres->add_option("input", opt.input, "input graph file (.dg or .ug)");
  c_spheres->add_option("--source", opt.source_label, "complete source label");
  c_spheres->add_flag("--cover", opt.cover,
                      "check every facet lies in some sphere");
  c_spheres->add_option("--census", opt.census_n,
                        "closed-form census for the complete digraph on N");

  auto* c_skel = app.add_subcommand("skeleton", "largest pure skeleton");
  add_input(c_skel);
  c_skel->add_option("-k", opt.skeleton_k, "skeleton dimension override");
  c_skel->add_flag("--shell", opt.do_shell, "shell it via a complete r-source");
  c_skel->add_option("--rsource", opt.rsource_csv,
                     "comma-separated complete r-source labels");

  auto* c_cycle = app.add_subcommand("cycle", "cycle skeleton trichotomy");
  c_cycle->add_option("n", opt.cycle_n, "cycle length")
      ->required()
      ->check(CLI::Range(3, 64));

  auto* c_dec = app.add_subcommand("decompose", "basic-tree decompositions");
  add_input(c_dec);

  auto* c_hom = app.add_subcommand("homotopy", "wedge-of-spheres profile");
  add_input(c_hom);
  c_hom->add_option("-p,--prime", opt.prime, "field characteristic for the check");

  auto* c_betti = app.add_subcommand("betti", "reduced Betti numbers");
  add_input(c_betti);
  c_betti->add_option("-p,--prime", opt.prime, "field characteristic");

  auto* c_report = app.add_subcommand("report", "run all checks on one input");
  add_input(c_report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_verify)) return cmd_verify(opt);
    if (app.got_subcommand(c_cycle)) return cmd_cycle(opt);
    if (app.got_subcommand(c_spheres)) {
      if (opt.census_n == 0 && opt.input.empty())
        throw dtc::input_error("spheres needs an input file or --census N");
      LoadedInput li =
          opt.census_n > 0 && opt.input.empty() ? LoadedInput{} : load_input(opt.input);
      return cmd_spheres(li, opt);
    }

    LoadedInput li = load_input(opt.input);
    if (app.got_subcommand(c_facets)) {
      emit_facets(dtc::directed_tree_complex(need_digraph(li, opt)), opt);
      return 0;
    }
    if (app.got_subcommand(c_fvec)) {
      emit_vector(dtc::f_vector(dtc::directed_tree_complex(need_digraph(li, opt))),
                  "f", opt);
      return 0;
    }
    if (app.got_subcommand(c_hvec)) {
      emit_vector(dtc::h_vector(dtc::directed_tree_complex(need_digraph(li, opt))),
                  "h", opt);
      return 0;
    }
    if (app.got_subcommand(c_ftri)) {
      emit_triangle(dtc::f_triangle(dtc::directed_tree_complex(need_digraph(li, opt))),
                    "f", opt);
      return 0;
    }
    if (app.got_subcommand(c_htri)) {
      emit_triangle(dtc::h_triangle(dtc::directed_tree_complex(need_digraph(li, opt))),
                    "h", opt);
      return 0;
    }
    if (app.got_subcommand(c_shell)) return cmd_shell(li, opt);
    if (app.got_subcommand(c_gen)) return cmd_generators(li, opt);
    if (app.got_subcommand(c_skel)) return cmd_skeleton(li, opt);
    if (app.got_subcommand(c_dec)) return cmd_decompose(li, opt);
    if (app.got_subcommand(c_hom)) return cmd_homotopy(li, opt);
    if (app.got_subcommand(c_betti)) return cmd_betti(li, opt);
    if (app.got_subcommand(c_report)) return cmd_report(li, opt);
  } catch (const dtc::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dtc::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
