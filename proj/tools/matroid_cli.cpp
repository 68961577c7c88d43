// Command-line front end: construct matroids from catalog expressions or
// JSON files, query derived data, decompose into 2-sum trees, test minor
// connectivity, and run the verification suites.
//
// Exit codes: 0 = ran and answered, 1 = verified property violated,
// 2 = usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "matroid/catalog.hpp"
#include "matroid/connectivity.hpp"
#include "matroid/errors.hpp"
#include "matroid/iso.hpp"
#include "matroid/json_io.hpp"
#include "matroid/matroid.hpp"
#include "matroid/treedecomp.hpp"
#include "matroid/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using matroid::Matroid;
using matroid::Subset;

// A file path if one exists, otherwise a catalog name or composition
// expression.
Matroid load_input(const std::string& input) {
  if (std::filesystem::exists(std::filesystem::path(input))) {
    std::ifstream in(input);
    if (!in) matroid::fail(matroid::Errc::parse_error, "cannot read " + input);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return matroid::matroid_from_json(buffer.str());
  }
  return matroid::named(input);
}

json labels_json(const Matroid& m, const std::vector<Subset>& family) {
  json out = json::array();
  for (Subset s : family) out.push_back(m.ground().labels_of(s));
  return out;
}

void print_family(const std::string& title, const Matroid& m,
                  const std::vector<Subset>& family) {
  std::cout << title << " (" << family.size() << "):\n";
  for (Subset s : family) std::cout << "  " << m.ground().render(s) << "\n";
}

struct ShowQueries {
  bool rank = false;
  bool circuits = false;
  bool cocircuits = false;
  bool flats = false;
  bool cyclic_flats = false;
  bool clones = false;
  bool components = false;
  bool fans = false;
  bool binary = false;
  bool uniform = false;
};

int cmd_show(const std::string& input, const ShowQueries& q, bool as_json) {
  Matroid m = load_input(input);
  if (as_json) {
    json out;
    out["name"] = input;
    out["ground"] = m.ground().labels();
    out["size"] = m.size();
    out["rank"] = m.rank();
    if (q.circuits) out["circuits"] = labels_json(m, m.circuits());
    if (q.cocircuits) out["cocircuits"] = labels_json(m, m.cocircuits());
    if (q.flats) out["flats"] = labels_json(m, m.flats());
    if (q.cyclic_flats) out["cyclic_flats"] = labels_json(m, m.cyclic_flats());
    if (q.clones) out["clones"] = labels_json(m, m.clonal_classes());
    if (q.components) out["components"] = labels_json(m, m.components());
    if (q.fans) {
      json fans = json::array();
      for (const matroid::Fan& fan : find_fans(m)) {
        json f;
        f["ordering"] = json::array();
        for (int e : fan.ordering) f["ordering"].push_back(m.ground().label(e));
        f["steps"] = fan.step_types;
        fans.push_back(f);
      }
      out["fans"] = fans;
    }
    if (q.binary) out["binary"] = matroid::is_binary(m);
    if (q.uniform) out["uniform"] = m.is_uniform();
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "name: " << input << "\n";
  std::cout << "ground: " << m.ground().render(m.ground_mask()) << "\n";
  std::cout << "size: " << m.size() << "\n";
  std::cout << "rank: " << m.rank() << "\n";
  if (q.circuits) print_family("circuits", m, m.circuits());
  if (q.cocircuits) print_family("cocircuits", m, m.cocircuits());
  if (q.flats) print_family("flats", m, m.flats());
  if (q.cyclic_flats) print_family("cyclic flats", m, m.cyclic_flats());
  if (q.clones) print_family("clonal classes", m, m.clonal_classes());
  if (q.components) print_family("components", m, m.components());
  if (q.fans) {
    std::vector<matroid::Fan> fans = find_fans(m);
    std::cout << "fans (" << fans.size() << "):\n";
    for (const matroid::Fan& fan : fans) {
      std::cout << "  ";
      for (std::size_t i = 0; i < fan.ordering.size(); ++i)
        std::cout << (i ? "," : "") << m.ground().label(fan.ordering[i]);
      std::cout << "  steps " << fan.step_types << "\n";
    }
  }
  if (q.binary)
    std::cout << "binary: " << (matroid::is_binary(m) ? "yes" : "no") << "\n";
  if (q.uniform)
    std::cout << "uniform: " << (m.is_uniform() ? "yes" : "no") << "\n";
  return 0;
}

int cmd_nconn(const std::string& m_input, const std::string& n_input,
              const std::string& pair, bool relation, int jobs, bool as_json) {
  Matroid m = load_input(m_input);
  Matroid n = load_input(n_input);

  if (!pair.empty()) {
    auto comma = pair.find(',');
    if (comma == std::string::npos)
      matroid::fail(matroid::Errc::parse_error,
                    "--pair wants two comma-separated labels");
    int e = m.ground().require(pair.substr(0, comma));
    int f = m.ground().require(pair.substr(comma + 1));
    if (e == f)
      matroid::fail(matroid::Errc::parse_error, "--pair wants two distinct labels");
    Subset z = matroid::with(matroid::with(Subset{0}, e), f);
    auto witness = matroid::has_minor_using(m, n, z);
    if (as_json) {
      json out;
      out["pair"] = m.ground().labels_of(z);
      out["witness"] = witness ? json::parse(matroid::witness_to_json(m, n, *witness))
                               : json(nullptr);
      std::cout << out.dump() << "\n";
      return 0;
    }
    std::cout << "pair: " << m.ground().render(z) << "\n";
    if (witness) {
      std::cout << "witness: contract " << m.ground().render(witness->contract)
                << ", delete " << m.ground().render(witness->remove) << "\n";
      std::cout << "  " << matroid::witness_to_json(m, n, *witness) << "\n";
    } else {
      std::cout << "witness: none (no minor keeps this pair)\n";
    }
    return 0;
  }

  matroid::PairRelation rel = matroid::pair_relation(m, n, jobs);
  int total = 0, present = 0;
  int miss_e = -1, miss_f = -1;
  for (int e = 0; e < rel.n; ++e) {
    for (int f = e + 1; f < rel.n; ++f) {
      ++total;
      if (rel.adjacent(e, f)) {
        ++present;
      } else if (miss_e < 0) {
        miss_e = e;
        miss_f = f;
      }
    }
  }
  bool verdict = rel.complete();

  if (as_json) {
    json out;
    out["m"] = json::parse(matroid::matroid_to_json(m));
    out["n"] = json::parse(matroid::matroid_to_json(n));
    out["connected"] = m.is_connected();
    out["pairs_total"] = total;
    out["pairs_present"] = present;
    out["verdict"] = verdict;
    if (miss_e >= 0) {
      out["missing_pair"] = {m.ground().label(miss_e), m.ground().label(miss_f)};
      out["kappa"] = matroid::kappa(m, matroid::with(Subset{0}, miss_e),
                                    matroid::with(Subset{0}, miss_f));
    } else {
      out["missing_pair"] = nullptr;
      out["kappa"] = nullptr;
    }
    if (relation) {
      json edges = json::array();
      for (int e = 0; e < rel.n; ++e)
        for (int f = e + 1; f < rel.n; ++f)
          if (rel.adjacent(e, f))
            edges.push_back({m.ground().label(e), m.ground().label(f)});
      out["relation"] = edges;
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  std::cout << "M: " << m_input << " (" << m.size() << " elements, rank "
            << m.rank() << ")\n";
  std::cout << "N: " << n_input << " (" << n.size() << " elements, rank "
            << n.rank() << ")\n";
  std::cout << "connected: " << (m.is_connected() ? "yes" : "no") << "\n";
  std::cout << "pairs in relation: " << present << " of " << total << "\n";
  std::cout << "verdict: " << (verdict ? "yes" : "no") << "\n";
  if (miss_e >= 0) {
    Subset a = matroid::with(Subset{0}, miss_e);
    Subset b = matroid::with(Subset{0}, miss_f);
    std::cout << "first missing pair: {" << m.ground().label(miss_e) << ","
              << m.ground().label(miss_f) << "} (kappa = "
              << matroid::kappa(m, a, b) << ")\n";
  }
  if (relation) {
    std::cout << "relation:\n";
    for (int e = 0; e < rel.n; ++e)
      for (int f = e + 1; f < rel.n; ++f)
        if (rel.adjacent(e, f))
          std::cout << "  {" << m.ground().label(e) << ","
                    << m.ground().label(f) << "}\n";
  }
  return 0;
}

const char* class_name(matroid::VertexClass c) {
  switch (c) {
    case matroid::VertexClass::circuit: return "circuit";
    case matroid::VertexClass::cocircuit: return "cocircuit";
    default: return "3-connected";
  }
}

void print_tree_ascii(const matroid::DecompTree& t,
                      const std::vector<matroid::VertexInfo>& info) {
  std::cout << "tree:\n";
  // Iterative DFS from vertex 0 carrying the drawing prefix.
  struct Item {
    int v;
    int parent;
    std::string prefix;
    bool last;
    std::string via;
  };
  std::vector<Item> stack{{0, -1, "", true, ""}};
  while (!stack.empty()) {
    Item item = stack.back();
    stack.pop_back();
    const Matroid& vm = t.vertices[item.v];
    std::cout << "  " << item.prefix;
    if (item.parent >= 0) std::cout << (item.last ? "`- " : "+- ") << item.via << " - ";
    std::cout << "v" << item.v << " [" << class_name(info[item.v].cls) << " "
              << vm.ground().render(vm.ground_mask()) << "]\n";
    std::string child_prefix =
        item.parent < 0 ? item.prefix
                        : item.prefix + (item.last ? "   " : "|  ");
    std::vector<Item> children;
    for (const matroid::TreeEdge& e : t.edges) {
      if (e.u != item.v && e.v != item.v) continue;
      int other = e.u == item.v ? e.v : e.u;
      if (other == item.parent) continue;
      children.push_back({other, item.v, child_prefix, false, e.basepoint});
    }
    for (std::size_t i = 0; i < children.size(); ++i)
      children[i].last = i + 1 == children.size();
    // Push in reverse so the first child prints first.
    for (auto it = children.rbegin(); it != children.rend(); ++it)
      stack.push_back(*it);
  }
}

int cmd_decompose(const std::string& m_input, const std::string& n_input,
                  bool as_json) {
  Matroid m = load_input(m_input);
  if (!m.is_connected())
    matroid::fail(matroid::Errc::not_connected,
                  "decomposition needs a connected matroid");
  matroid::DecompTree t = matroid::canonical_tree(m);
  std::vector<matroid::VertexInfo> info;
  bool have_n = !n_input.empty();
  Matroid n;
  if (have_n) {
    n = load_input(n_input);
    info = matroid::classify_vertices(t, n);
  } else {
    info = matroid::classify_vertices(t);
  }
  bool u24 = matroid::u24_condition(t);
  bool u34 = matroid::u34_forbidden_config_absent(t);
  bool mk4 = matroid::mk4_vertex_condition(t);

  if (as_json) {
    json out;
    out["matroid"] = json::parse(matroid::matroid_to_json(m));
    out["tree"] = json::parse(matroid::tree_to_json(t));
    json vertices = json::array();
    for (std::size_t v = 0; v < t.vertices.size(); ++v) {
      json jv;
      jv["class"] = class_name(info[v].cls);
      jv["binary"] = info[v].binary;
      jv["ground_count"] = info[v].ground_count;
      if (info[v].n_connected)
        jv["n_connected"] = *info[v].n_connected;
      vertices.push_back(jv);
    }
    out["vertices"] = vertices;
    json predicates;
    predicates["u24_condition"] = u24;
    predicates["u34_forbidden_config_absent"] = u34;
    predicates["mk4_vertex_condition"] = mk4;
    if (have_n) predicates["general_condition"] = matroid::general_condition(t, n);
    out["predicates"] = predicates;
    std::cout << out.dump() << "\n";
    return 0;
  }

  std::cout << "matroid: " << m_input << " (" << m.size() << " elements, rank "
            << m.rank() << ")\n";
  std::cout << "vertices: " << t.vertices.size() << ", edges: "
            << t.edges.size() << "\n";
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    const Matroid& vm = t.vertices[v];
    std::cout << "  v" << v << ": " << class_name(info[v].cls) << " on "
              << vm.ground().render(vm.ground_mask()) << ", holds "
              << info[v].ground_count << " original element"
              << (info[v].ground_count == 1 ? "" : "s")
              << (info[v].binary ? ", binary" : ", non-binary");
    if (info[v].n_connected)
      std::cout << (*info[v].n_connected ? ", N-connected" : ", not N-connected");
    std::cout << "\n";
  }
  print_tree_ascii(t, info);
  std::cout << "u24_condition: " << (u24 ? "true" : "false") << "\n";
  std::cout << "u34_forbidden_config_absent: " << (u34 ? "true" : "false") << "\n";
  std::cout << "mk4_vertex_condition: " << (mk4 ? "true" : "false") << "\n";
  if (have_n)
    std::cout << "general_condition(" << n_input << "): "
              << (matroid::general_condition(t, n) ? "true" : "false") << "\n";
  std::cout << "json: " << matroid::tree_to_json(t) << "\n";
  return 0;
}

int cmd_verify(const std::string& id, int max_n, std::uint64_t seed, int jobs,
               bool wall_time, bool as_json) {
  matroid::VerifyOptions options;
  options.max_n = max_n;
  options.seed = seed;
  options.jobs = jobs;
  matroid::VerificationReport rep = matroid::run_verification(id, options);
  if (as_json) {
    std::cout << matroid::report_to_json(rep, wall_time) << "\n";
  } else {
    std::cout << "id: " << rep.theorem_id << "\n";
    std::cout << "universe: " << rep.universe << "\n";
    std::cout << "instances checked: " << rep.instances_checked << "\n";
    std::cout << "status: " << rep.status << "\n";
    std::cout << "counterexamples: " << rep.counterexamples.size() << "\n";
    for (const matroid::Counterexample& c : rep.counterexamples) {
      std::cout << "  - " << c.note << "\n";
      std::cout << "    " << matroid::matroid_to_json(c.m) << "\n";
    }
    if (wall_time)
      std::cout << "wall time: " << rep.wall_time_seconds << "s\n";
  }
  return rep.status == "fail" ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid construction, querying, decomposition and verification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON");

  std::string show_input;
  ShowQueries queries;
  CLI::App* show = app.add_subcommand("show", "print derived data of a matroid");
  show->fallthrough();
  show->add_option("input", show_input, "catalog name, expression or JSON file")
      ->required();
  show->add_flag("--rank", queries.rank, "rank (always printed; kept for scripts)");
  show->add_flag("--circuits", queries.circuits, "list circuits");
  show->add_flag("--cocircuits", queries.cocircuits, "list cocircuits");
  show->add_flag("--flats", queries.flats, "list flats");
  show->add_flag("--cyclic-flats", queries.cyclic_flats, "list cyclic flats");
  show->add_flag("--clones", queries.clones, "list clonal classes");
  show->add_flag("--components", queries.components, "list components");
  show->add_flag("--fans", queries.fans, "list maximal fans");
  show->add_flag("--binary", queries.binary, "report binarity");
  show->add_flag("--uniform", queries.uniform, "report uniformity");

  std::string nconn_m, nconn_n, nconn_pair;
  bool nconn_relation = false;
  int nconn_jobs = 1;
  CLI::App* nconn = app.add_subcommand(
      "nconn", "test whether every pair of elements lies in a common N-minor");
  nconn->fallthrough();
  nconn->add_option("M", nconn_m, "host matroid")->required();
  nconn->add_option("N", nconn_n, "minor to look for")->required();
  nconn->add_option("--pair", nconn_pair,
                    "two comma-separated labels: print one witness");
  nconn->add_flag("--relation", nconn_relation, "list all related pairs");
  nconn->add_option("--jobs", nconn_jobs, "worker threads");

  std::string dec_m, dec_n;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "canonical 2-sum tree with vertex classification");
  decompose->fallthrough();
  decompose->add_option("M", dec_m, "connected matroid")->required();
  decompose->add_option("--n", dec_n, "also evaluate general_condition for this N");

  std::string verify_id;
  int verify_max_n = 7;
  std::uint64_t verify_seed = 0;
  int verify_jobs = 1;
  bool verify_wall = false;
  CLI::App* verify = app.add_subcommand("verify", "run one verification suite");
  verify->fallthrough();
  verify->add_option("id", verify_id, "T1..T17 or ENUM")->required();
  verify->add_option("--max-n", verify_max_n, "largest ground-set size scanned");
  verify->add_option("--seed", verify_seed, "seed for the randomized suites");
  verify->add_option("--jobs", verify_jobs, "worker threads");
  verify->add_flag("--wall-time", verify_wall, "include wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (show->parsed()) return cmd_show(show_input, queries, as_json);
    if (nconn->parsed())
      return cmd_nconn(nconn_m, nconn_n, nconn_pair, nconn_relation, nconn_jobs,
                       as_json);
    if (decompose->parsed()) return cmd_decompose(dec_m, dec_n, as_json);
    if (verify->parsed())
      return cmd_verify(verify_id, verify_max_n, verify_seed, verify_jobs,
                        verify_wall, as_json);
  } catch (const matroid::MatroidError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
