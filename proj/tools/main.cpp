// Command line front end.  Every subcommand reads a poset file (except
// census/random, which synthesize their own posets), runs one library
// operation and prints either a small text report or JSON.
//
// Exit codes: 0 success, 1 bad input or a legitimate domain refusal
// (cycles, invalid duplication, not a complete intersection, limits),
// 2 internal inconsistency (method disagreement, broken invariants).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ppart/ppart.hpp>

using nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ppart::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ppart::Poset load_poset(const std::string& path) {
  try {
    return ppart::parse_poset(read_file(path));
  } catch (const ppart::ParseError& e) {
    throw ppart::ParseError(path + ": " + e.what());
  }
}

ordered_json members_json(ppart::Subset s) { return ordered_json(ppart::to_vector(s)); }

ordered_json certificate_json(const ppart::Certificate& c) {
  using Kind = ppart::Certificate::Kind;
  ordered_json nodes = ordered_json::array();
  for (const auto& nd : c.nodes) {
    ordered_json j;
    switch (nd.kind) {
      case Kind::Single:
        j["op"] = "single";
        j["label"] = nd.label;
        break;
      case Kind::Union:
        j["op"] = "union";
        j["left"] = nd.left;
        j["right"] = nd.right;
        break;
      case Kind::Hang:
        j["op"] = "hang";
        j["a"] = nd.label;
        j["base"] = nd.left;
        j["below"] = nd.right;
        break;
      case Kind::Dup:
        j["op"] = "dup";
        j["a"] = nd.label;
        j["a_prime"] = nd.label2;
        j["base"] = nd.left;
        break;
    }
    nodes.push_back(std::move(j));
  }
  ordered_json out;
  out["root"] = c.root;
  out["nodes"] = std::move(nodes);
  return out;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---- ideals ----------------------------------------------------------

struct IdealsOpts {
  std::string path;
  bool all = false;
  bool json = false;
};

void run_ideals(const IdealsOpts& o) {
  ppart::Poset p = load_poset(o.path);
  std::vector<ppart::Ideal> ideals =
      o.all ? ppart::order_ideals(p) : ppart::connected_order_ideals(p);
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const ppart::Ideal& j : ideals)
      arr.push_back({{"members", members_json(j.members)}, {"connected", j.connected}});
    ordered_json out;
    out["n"] = p.size();
    out["count"] = ideals.size();
    out["ideals"] = std::move(arr);
    emit(out);
    return;
  }
  for (const ppart::Ideal& j : ideals) {
    std::cout << ppart::to_string(j.members);
    if (o.all) std::cout << (j.connected ? " connected" : " disconnected");
    std::cout << "\n";
  }
}

// ---- gamma -----------------------------------------------------------

struct GammaOpts {
  std::string path;
  bool dot = false;
  bool json = false;
};

void run_gamma(const GammaOpts& o) {
  ppart::Poset p = load_poset(o.path);
  ppart::GammaGraph g = ppart::build_gamma(p);
  if (o.dot) {
    std::cout << ppart::to_dot(g);
    return;
  }
  if (o.json) {
    ordered_json verts = ordered_json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      verts.push_back({{"members", members_json(g.vertices[i].members)},
                       {"degree", g.degrees[i]}});
    ordered_json edges = ordered_json::array();
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    ordered_json out;
    out["n"] = p.size();
    out["vertices"] = std::move(verts);
    out["edges"] = std::move(edges);
    out["matching_union"] = ppart::is_matching_union(g);
    emit(out);
    return;
  }
  int max_degree = 0;
  for (int d : g.degrees) max_degree = std::max(max_degree, d);
  std::cout << "vertices: " << g.vertices.size() << "\n";
  std::cout << "edges: " << g.edges.size() << "\n";
  std::cout << "max_degree: " << max_degree << "\n";
  std::cout << "matching_union: " << (ppart::is_matching_union(g) ? "yes" : "no") << "\n";
  for (auto [a, b] : g.edges)
    std::cout << ppart::to_string(g.vertices[static_cast<std::size_t>(a)].members) << " -- "
              << ppart::to_string(g.vertices[static_cast<std::size_t>(b)].members) << "\n";
}

// ---- present ---------------------------------------------------------

struct PresentOpts {
  std::string path;
  bool json = false;
};

void run_present(const PresentOpts& o) {
  ppart::Poset p = load_poset(o.path);
  std::vector<ppart::Ideal> ideals = ppart::connected_order_ideals(p);
  std::vector<ppart::Binomial> gens = ppart::binomial_generators(p);
  bool homogeneous = true;
  for (const ppart::Binomial& b : gens)
    if (!ppart::check_homogeneity(p, b)) homogeneous = false;
  auto term = [&](int idx) {
    return "U" + ppart::to_string(ideals[static_cast<std::size_t>(idx)].members);
  };
  if (o.json) {
    ordered_json idealarr = ordered_json::array();
    for (const ppart::Ideal& j : ideals) idealarr.push_back(members_json(j.members));
    ordered_json genarr = ordered_json::array();
    for (const ppart::Binomial& b : gens) {
      ordered_json right = ordered_json::array();
      right.push_back(b.union_index);
      for (int c : b.component_indices) right.push_back(c);
      genarr.push_back({{"left", {b.left1, b.left2}},
                        {"right", std::move(right)},
                        {"degree", b.degree}});
    }
    ordered_json out;
    out["n"] = p.size();
    out["ideals"] = std::move(idealarr);
    out["generators"] = std::move(genarr);
    out["homogeneous"] = homogeneous;
    emit(out);
    return;
  }
  std::cout << "generators: " << gens.size() << "\n";
  for (const ppart::Binomial& b : gens) {
    std::cout << term(b.left1) << "*" << term(b.left2) << " - " << term(b.union_index);
    for (int c : b.component_indices) std::cout << "*" << term(c);
    std::cout << "\n";
  }
  std::cout << "homogeneous: " << (homogeneous ? "yes" : "no") << "\n";
}

// ---- check-ci --------------------------------------------------------

struct CheckCiOpts {
  std::string path;
  bool json = false;
};

void run_check_ci(const CheckCiOpts& o) {
  ppart::Poset p = load_poset(o.path);
  ppart::CiReport rep = ppart::check_ci(p);
  if (o.json) {
    ordered_json out;
    out["is_ci"] = rep.is_ci;
    out["graph"] = {{"is_ci", rep.graph.is_ci}, {"max_degree", rep.graph.max_degree}};
    out["count"] = {{"is_ci", rep.count.is_ci},
                    {"ideals", rep.count.ideal_count},
                    {"edges", rep.count.edge_count},
                    {"rank", rep.count.rank}};
    out["recognizer"] = {{"is_ci", rep.recognizer.is_ci}};
    out["certificate"] =
        rep.certificate ? certificate_json(*rep.certificate) : ordered_json(nullptr);
    emit(out);
    return;
  }
  auto verdict = [](bool b) { return b ? "ci" : "not-ci"; };
  std::cout << "graph: " << verdict(rep.graph.is_ci)
            << " (max_degree=" << rep.graph.max_degree << ")\n";
  std::cout << "count: " << verdict(rep.count.is_ci) << " (ideals=" << rep.count.ideal_count
            << " edges=" << rep.count.edge_count << " rank=" << rep.count.rank << ")\n";
  std::cout << "recognizer: " << verdict(rep.recognizer.is_ci) << "\n";
  std::cout << "result: " << (rep.is_ci ? "complete intersection" : "not a complete intersection")
            << "\n";
}

// ---- recognize -------------------------------------------------------

struct RecognizeOpts {
  std::string path;
  bool json = false;
};

void run_recognize(const RecognizeOpts& o) {
  ppart::Poset p = load_poset(o.path);
  std::optional<ppart::Certificate> cert = ppart::recognize(p);
  if (o.json) {
    ordered_json out;
    out["is_fwd"] = cert.has_value();
    out["certificate"] = cert ? certificate_json(*cert) : ordered_json(nullptr);
    emit(out);
    return;
  }
  if (cert)
    std::cout << ppart::to_text(*cert);
  else
    std::cout << "not a forest with duplication\n";
}

// ---- hilbert ---------------------------------------------------------

struct HilbertOpts {
  std::string path;
  int degree = 8;
  std::string method = "brute";
  bool json = false;
};

void run_hilbert(const HilbertOpts& o) {
  ppart::Poset p = load_poset(o.path);
  ppart::HilbertTruncation h;
  if (o.method == "brute") {
    h = ppart::hilbert_brute(p, o.degree);
  } else if (o.method == "ci") {
    h = ppart::hilbert_ci(p, o.degree);
  } else {
    h = ppart::hilbert_brute(p, o.degree);
    if (ppart::HilbertTruncation c = ppart::hilbert_ci(p, o.degree); c != h)
      throw ppart::MethodDisagreement("hilbert series: brute and closed form differ");
  }
  if (o.json) {
    ordered_json out;
    out["degree"] = h.degree;
    out["method"] = o.method;
    out["coefficients"] = h.coefficients;
    emit(out);
    return;
  }
  for (std::size_t i = 0; i < h.coefficients.size(); ++i)
    std::cout << (i ? " " : "") << h.coefficients[i];
  std::cout << "\n";
}

// ---- extensions ------------------------------------------------------

struct ExtensionsOpts {
  std::string path;
  std::string method = "brute";
  bool json = false;
};

void run_extensions(const ExtensionsOpts& o) {
  ppart::Poset p = load_poset(o.path);
  std::uint64_t e = 0;
  if (o.method == "brute") {
    e = ppart::linear_extensions_brute(p);
  } else if (o.method == "ci") {
    e = ppart::linear_extensions_ci(p);
  } else {
    e = ppart::linear_extensions_brute(p);
    if (std::uint64_t c = ppart::linear_extensions_ci(p); c != e)
      throw ppart::MethodDisagreement("linear extensions: brute and closed form differ");
  }
  if (o.json) {
    ordered_json out;
    out["method"] = o.method;
    out["extensions"] = e;
    emit(out);
    return;
  }
  std::cout << e << "\n";
}

// ---- census ----------------------------------------------------------

struct CensusOpts {
  int n = 0;
  std::string csv_path;
  bool up_to_iso = false;
  bool json = false;
};

void write_census_csv(std::ostream& out, const std::vector<ppart::CensusRow>& rows) {
  out << "n,id,m_ideals,s_edges,ci,extensions\n";
  for (const ppart::CensusRow& r : rows)
    out << r.n << "," << r.id << "," << r.m_ideals << "," << r.s_edges << ","
        << (r.ci_graph ? 1 : 0) << "," << r.extensions << "\n";
}

void run_census(const CensusOpts& o) {
  std::vector<ppart::CensusRow> rows = ppart::census(o.n, o.up_to_iso);
  std::size_t ci = 0;
  for (const ppart::CensusRow& r : rows) ci += r.ci_graph ? 1 : 0;
  if (!o.csv_path.empty()) {
    if (o.csv_path == "-") {
      write_census_csv(std::cout, rows);
    } else {
      std::ofstream out(o.csv_path, std::ios::binary);
      if (!out) throw ppart::Error("cannot open " + o.csv_path);
      write_census_csv(out, rows);
    }
    return;
  }
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const ppart::CensusRow& r : rows)
      arr.push_back({{"id", r.id},
                     {"m_ideals", r.m_ideals},
                     {"s_edges", r.s_edges},
                     {"ci", r.ci_graph},
                     {"extensions", r.extensions}});
    ordered_json out;
    out["n"] = o.n;
    out["up_to_iso"] = o.up_to_iso;
    out["posets"] = rows.size();
    out["ci"] = ci;
    out["rows"] = std::move(arr);
    emit(out);
    return;
  }
  std::cout << "n: " << o.n << "\n";
  std::cout << "posets: " << rows.size() << "\n";
  std::cout << "ci: " << ci << "\n";
  std::cout << "non_ci: " << (rows.size() - ci) << "\n";
}

// ---- random ----------------------------------------------------------

struct RandomOpts {
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  int count = 1;
  bool json = false;
};

void run_random(const RandomOpts& o) {
  ppart::SplitMix64 rng(o.seed);
  std::vector<ppart::Poset> posets;
  posets.reserve(static_cast<std::size_t>(o.count));
  for (int t = 0; t < o.count; ++t) posets.push_back(ppart::random_poset(o.n, o.p, rng));
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (int t = 0; t < o.count; ++t) {
      ordered_json covers = ordered_json::array();
      for (auto [i, j] : posets[static_cast<std::size_t>(t)].covers()) covers.push_back({i, j});
      arr.push_back({{"index", t}, {"n", o.n}, {"covers", std::move(covers)}});
    }
    ordered_json out;
    out["n"] = o.n;
    out["p"] = o.p;
    out["seed"] = o.seed;
    out["count"] = o.count;
    out["posets"] = std::move(arr);
    emit(out);
    return;
  }
  for (int t = 0; t < o.count; ++t) {
    std::cout << "# poset " << t << "\n";
    std::cout << ppart::to_poset_file(posets[static_cast<std::size_t>(t)]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analyze finite posets through their rings of weak P-partitions"};
  app.require_subcommand(1);

  auto add_poset = [](CLI::App* sub, std::string& path) {
    sub->add_option("--poset", path, "poset file (\"n <count>\" header, \"<i> <j>\" relations)")
        ->required();
  };

  auto io = std::make_shared<IdealsOpts>();
  {
    CLI::App* sub = app.add_subcommand("ideals", "list connected order ideals");
    add_poset(sub, io->path);
    sub->add_flag("--all", io->all, "list every order ideal, tagged by connectivity");
    sub->add_flag("--json", io->json, "JSON output");
    sub->callback([io] { run_ideals(*io); });
  }

  auto go = std::make_shared<GammaOpts>();
  {
    CLI::App* sub = app.add_subcommand("gamma", "intersection graph of connected order ideals");
    add_poset(sub, go->path);
    CLI::Option* dot = sub->add_flag("--dot", go->dot, "emit Graphviz DOT");
    sub->add_flag("--json", go->json, "JSON output")->excludes(dot);
    sub->callback([go] { run_gamma(*go); });
  }

  auto po = std::make_shared<PresentOpts>();
  {
    CLI::App* sub = app.add_subcommand("present", "binomial presentation of the toric ring");
    add_poset(sub, po->path);
    sub->add_flag("--json", po->json, "JSON output");
    sub->callback([po] { run_present(*po); });
  }

  auto co = std::make_shared<CheckCiOpts>();
  {
    CLI::App* sub =
        app.add_subcommand("check-ci", "decide complete intersection by three methods");
    add_poset(sub, co->path);
    sub->add_flag("--json", co->json, "JSON output");
    sub->callback([co] { run_check_ci(*co); });
  }

  auto ro = std::make_shared<RecognizeOpts>();
  {
    CLI::App* sub =
        app.add_subcommand("recognize", "forest-with-duplication construction certificate");
    add_poset(sub, ro->path);
    sub->add_flag("--json", ro->json, "JSON output");
    sub->callback([ro] { run_recognize(*ro); });
  }

  auto ho = std::make_shared<HilbertOpts>();
  {
    CLI::App* sub = app.add_subcommand("hilbert", "Hilbert series truncation");
    add_poset(sub, ho->path);
    sub->add_option("--degree", ho->degree, "truncation degree")
        ->check(CLI::Range(0, 1000000))
        ->capture_default_str();
    sub->add_option("--method", ho->method, "brute, ci, or both")
        ->check(CLI::IsMember({"brute", "ci", "both"}))
        ->capture_default_str();
    sub->add_flag("--json", ho->json, "JSON output");
    sub->callback([ho] { run_hilbert(*ho); });
  }

  auto eo = std::make_shared<ExtensionsOpts>();
  {
    CLI::App* sub = app.add_subcommand("extensions", "count linear extensions");
    add_poset(sub, eo->path);
    sub->add_option("--method", eo->method, "brute, ci, or both")
        ->check(CLI::IsMember({"brute", "ci", "both"}))
        ->capture_default_str();
    sub->add_flag("--json", eo->json, "JSON output");
    sub->callback([eo] { run_extensions(*eo); });
  }

  auto no = std::make_shared<CensusOpts>();
  {
    CLI::App* sub = app.add_subcommand("census", "sweep every labeled poset of a given size");
    sub->add_option("--n", no->n, "element count")->required()->check(CLI::Range(1, 6));
    sub->add_option("--csv", no->csv_path, "write rows as CSV to this path (\"-\" = stdout)");
    sub->add_flag("--up-to-iso", no->up_to_iso, "keep one poset per isomorphism class");
    sub->add_flag("--json", no->json, "JSON output");
    sub->callback([no] { run_census(*no); });
  }

  auto ao = std::make_shared<RandomOpts>();
  {
    CLI::App* sub = app.add_subcommand("random", "sample random posets reproducibly");
    sub->add_option("--n", ao->n, "element count")->required()->check(CLI::Range(0, 64));
    sub->add_option("--p", ao->p, "pair relation probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--seed", ao->seed, "PRNG seed")->required();
    sub->add_option("--count", ao->count, "number of posets from one stream")
        ->check(CLI::Range(1, 1000000))
        ->capture_default_str();
    sub->add_flag("--json", ao->json, "JSON output");
    sub->callback([ao] { run_random(*ao); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const ppart::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
