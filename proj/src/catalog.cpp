#include "matroid/catalog.hpp"

#include <bitset>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "matroid/connectivity.hpp"
#include "matroid/constructions.hpp"
#include "matroid/errors.hpp"
#include "matroid/iso.hpp"
#include "matroid/json_io.hpp"

namespace matroid {

namespace {

constexpr int kEnumerationCap = 8;
constexpr int kCacheVersion = 1;

std::string letter_label(int i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

std::vector<std::string> letter_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(letter_label(i));
  return out;
}

Matroid uniform(int r, int n) {
  std::vector<std::int8_t> table(std::size_t{1} << n);
  for (Subset s = 0; s < (Subset{1} << n); ++s)
    table[s] = static_cast<std::int8_t>(std::min(subset_size(s), r));
  return Matroid::from_rank_table(GroundSet(letter_labels(n)), std::move(table));
}

// Rank-n wheel: hub h, rim vertices v1..vn, spokes s1..sn from the hub,
// rim edges r1..rn with ri joining vi to v(i+1) (wrapping).
Matroid wheel(int n) {
  std::vector<GraphEdge> edges;
  for (int i = 1; i <= n; ++i)
    edges.push_back({"h", "v" + std::to_string(i), "s" + std::to_string(i)});
  for (int i = 1; i <= n; ++i) {
    int j = i == n ? 1 : i + 1;
    edges.push_back(
        {"v" + std::to_string(i), "v" + std::to_string(j), "r" + std::to_string(i)});
  }
  return Matroid::from_graph(edges);
}

Matroid whirl(int r) {
  Matroid w = wheel(r);
  Subset rim = 0;
  for (int i = 0; i < r; ++i) rim = with(rim, r + i);
  return relax(w, rim);
}

// Relaxes the first 3-element circuit-hyperplane in ascending bitmask order.
Matroid relax_first_triangle(const Matroid& m) {
  for (Subset s = 0; s <= m.ground_mask(); ++s) {
    if (subset_size(s) != 3 || !m.is_circuit(s)) continue;
    if (m.rank(s) == m.rank() - 1 && m.closure(s) == s) return relax(m, s);
  }
  fail(Errc::internal, "no triangle available to relax");
}

Matroid mk4() {
  return Matroid::from_graph({{"1", "2", "a"},
                              {"1", "3", "b"},
                              {"1", "4", "c"},
                              {"2", "3", "d"},
                              {"2", "4", "e"},
                              {"3", "4", "f"}});
}

Matroid mk23() {
  return Matroid::from_graph({{"u1", "w1", "a"},
                              {"u2", "w1", "b"},
                              {"u1", "w2", "c"},
                              {"u2", "w2", "d"},
                              {"u1", "w3", "e"},
                              {"u2", "w3", "f"}});
}

// ---------------------------------------------------------------------------
// Composition-expression parsing.

struct Token {
  char kind;  // 'w' word, or one of ( ) , + ~ @ and 'P' for "||"
  std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_'))
        ++j;
      out.push_back({'w', s.substr(i, j - i)});
      i = j;
      continue;
    }
    if (c == '|') {
      if (i + 1 >= s.size() || s[i + 1] != '|')
        fail(Errc::parse_error, "single '|'; parallel connection is '||'");
      out.push_back({'P', "||"});
      i += 2;
      continue;
    }
    if (c == '(' || c == ')' || c == ',' || c == '+' || c == '~' || c == '@') {
      out.push_back({c, std::string(1, c)});
      ++i;
      continue;
    }
    fail(Errc::parse_error, std::string("unexpected character '") + c + "'");
  }
  return out;
}

struct AtomTerm {
  std::string name;
  std::vector<int> args;
};

struct Parsed {
  std::vector<AtomTerm> atoms;
  // Per composition step: operator ('+', '~', 'P'), right atom index, and
  // the basepoint name for '~' and 'P'.
  struct Step {
    char op;
    int right;
    std::string basepoint;
  };
  std::vector<Step> steps;
};

int parse_int(const Token& t) {
  if (t.kind != 'w' || t.text.empty()) fail(Errc::parse_error, "expected a number");
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(Errc::parse_error, "expected a number, got '" + t.text + "'");
  return std::stoi(t.text);
}

Parsed parse_expression(const std::string& text) {
  std::vector<Token> tokens = tokenize(text);
  std::size_t pos = 0;
  auto peek = [&]() -> char { return pos < tokens.size() ? tokens[pos].kind : 0; };
  auto take = [&](char kind, const char* what) -> const Token& {
    if (pos >= tokens.size() || tokens[pos].kind != kind)
      fail(Errc::parse_error, std::string("expected ") + what);
    return tokens[pos++];
  };

  Parsed parsed;
  auto parse_atom = [&]() -> int {
    AtomTerm atom;
    atom.name = take('w', "a catalog name").text;
    if (peek() == '(') {
      ++pos;
      atom.args.push_back(parse_int(take('w', "a number")));
      if (peek() == ',') {
        ++pos;
        atom.args.push_back(parse_int(take('w', "a number")));
      }
      take(')', "')'");
    }
    parsed.atoms.push_back(atom);
    return static_cast<int>(parsed.atoms.size()) - 1;
  };

  parse_atom();
  while (pos < tokens.size()) {
    char op = peek();
    if (op != '+' && op != '~' && op != 'P')
      fail(Errc::parse_error, "expected '+', '~' or '||'");
    ++pos;
    int right = parse_atom();
    std::string basepoint;
    if (op != '+') {
      take('@', "'@basepoint'");
      basepoint = take('w', "a basepoint label").text;
    } else if (peek() == '@') {
      fail(Errc::parse_error, "direct sum takes no basepoint");
    }
    parsed.steps.push_back({op, right, basepoint});
  }
  return parsed;
}

Matroid build_atom(const AtomTerm& atom) {
  const std::vector<int>& a = atom.args;
  if (atom.name == "U") {
    if (a.size() != 2 || a[0] < 0 || a[1] < a[0] || a[1] > kMaxGroundSize)
      fail(Errc::unknown_name, "no uniform matroid with those parameters");
    return uniform(a[0], a[1]);
  }
  if (atom.name == "MW") {
    if (a.size() != 1 || a[0] < 2 || 2 * a[0] > kMaxGroundSize)
      fail(Errc::unknown_name, "wheel size out of range");
    return wheel(a[0]);
  }
  if (atom.name == "W") {
    if (a.size() != 1 || a[0] < 2 || 2 * a[0] > kMaxGroundSize)
      fail(Errc::unknown_name, "whirl size out of range");
    return whirl(a[0]);
  }
  if (!a.empty()) fail(Errc::unknown_name, "'" + atom.name + "' takes no arguments");
  if (atom.name == "MK4") return mk4();
  if (atom.name == "MK23") return mk23();
  if (atom.name == "Q6") return relax_first_triangle(whirl(3));
  if (atom.name == "P6") return relax_first_triangle(relax_first_triangle(whirl(3)));
  fail(Errc::unknown_name, "unknown catalog name '" + atom.name + "'");
}

// ---------------------------------------------------------------------------
// Enumeration by single-element extensions.
//
// Every extension of a matroid by one element corresponds to a modular cut:
// a family of flats that is closed upward and closed under intersections of
// modular pairs (flats with r(F) + r(G) = r(F ∩ G) + r(cl(F ∪ G))). The
// families are enumerated as the closed sets of the fixpoint closure
// "up-close, then add modular-pair intersections" via Ganter's next-closure,
// in lectic order over the flat list.

constexpr int kMaxFlats = 1 << (kEnumerationCap - 1);
using FlatSet = std::bitset<kMaxFlats>;

struct FlatLattice {
  std::vector<Subset> flats;             // ascending bitmask order
  std::vector<FlatSet> supersets;        // supersets[i] ⊇ {i}
  std::vector<std::vector<int>> meet;    // flat index, or -1 if not modular
  std::vector<int> closure_index;        // subset mask -> index of its closure

  explicit FlatLattice(const Matroid& m) {
    std::unordered_map<Subset, int> index;
    flats = m.flats();
    for (std::size_t i = 0; i < flats.size(); ++i)
      index[flats[i]] = static_cast<int>(i);
    int f = static_cast<int>(flats.size());
    supersets.assign(f, {});
    meet.assign(f, std::vector<int>(f, -1));
    for (int i = 0; i < f; ++i) {
      for (int j = 0; j < f; ++j) {
        if ((flats[i] & ~flats[j]) == 0) supersets[i].set(j);
        Subset both = flats[i] & flats[j];
        Subset join = m.closure(flats[i] | flats[j]);
        if (m.rank(flats[i]) + m.rank(flats[j]) ==
            m.rank(both) + m.rank(join))
          meet[i][j] = index.at(both);
      }
    }
    closure_index.assign(std::size_t{1} << m.size(), 0);
    for (Subset s = 0; s <= m.ground_mask(); ++s)
      closure_index[s] = index.at(m.closure(s));
    if (m.size() == 0) closure_index[0] = 0;
  }

  int count() const { return static_cast<int>(flats.size()); }

  FlatSet close(FlatSet s) const {
    int f = count();
    for (bool changed = true; changed;) {
      changed = false;
      FlatSet grown = s;
      for (int i = 0; i < f; ++i)
        if (s.test(i)) grown |= supersets[i];
      for (int i = 0; i < f; ++i) {
        if (!grown.test(i)) continue;
        for (int j = i + 1; j < f; ++j) {
          if (!grown.test(j)) continue;
          int k = meet[i][j];
          if (k >= 0 && !grown.test(k)) grown.set(k);
        }
      }
      if (grown != s) {
        s = grown;
        changed = true;
      }
    }
    return s;
  }

  // All modular cuts in lectic order, starting from close(∅).
  std::vector<FlatSet> modular_cuts() const {
    int f = count();
    std::vector<FlatSet> out;
    FlatSet a = close(FlatSet{});
    out.push_back(a);
    FlatSet full;
    for (int i = 0; i < f; ++i) full.set(i);
    while (a != full) {
      bool advanced = false;
      for (int i = f - 1; i >= 0; --i) {
        if (a.test(i)) continue;
        FlatSet seed;
        for (int j = 0; j < i; ++j)
          if (a.test(j)) seed.set(j);
        seed.set(i);
        FlatSet b = close(seed);
        bool lectic = true;
        for (int j = 0; j < i; ++j) {
          if (b.test(j) && !a.test(j)) {
            lectic = false;
            break;
          }
        }
        if (lectic) {
          a = b;
          out.push_back(a);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;  // lattice exhausted (f == 0)
    }
    return out;
  }
};

// The extension of `parent` by one new top-indexed element e with
// r(S ∪ e) = r(S) exactly when the closure of S lies in the cut.
Matroid extend_by_cut(const Matroid& parent, const FlatLattice& lattice,
                      const FlatSet& cut) {
  int pn = parent.size();
  Subset e_bit = Subset{1} << pn;
  std::vector<std::int8_t> table(std::size_t{1} << (pn + 1));
  for (Subset s = 0; s < (Subset{1} << pn); ++s) {
    int r = parent.rank(s);
    table[s] = static_cast<std::int8_t>(r);
    bool in_cut = cut.test(lattice.closure_index[s]);
    table[s | e_bit] = static_cast<std::int8_t>(r + (in_cut ? 0 : 1));
  }
  return Matroid::from_rank_table(GroundSet(letter_labels(pn + 1)),
                                  std::move(table));
}

std::vector<Matroid> extensions_of(const Matroid& parent) {
  FlatLattice lattice(parent);
  std::vector<Matroid> out;
  for (const FlatSet& cut : lattice.modular_cuts())
    out.push_back(extend_by_cut(parent, lattice, cut));
  return out;
}

std::vector<Matroid> dedupe_classes(const std::vector<Matroid>& raw) {
  std::vector<Matroid> reps;
  std::map<std::string, std::vector<int>> buckets;
  for (const Matroid& m : raw) {
    std::vector<int>& bucket = buckets[fingerprint(m).key()];
    bool known = false;
    for (int idx : bucket) {
      if (isomorphic(reps[idx], m)) {
        known = true;
        break;
      }
    }
    if (!known) {
      bucket.push_back(static_cast<int>(reps.size()));
      reps.push_back(m);
    }
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Cache file handling.

std::filesystem::path cache_path(int n) {
  const char* dir = std::getenv("MATROID_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return {};
  return std::filesystem::path(dir) /
         ("classes_n" + std::to_string(n) + "_v" +
          std::to_string(kCacheVersion) + ".jsonl");
}

std::vector<Matroid> load_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::vector<Matroid> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
    if (doc.is_discarded() || !doc.is_object() || !doc.contains("fingerprint") ||
        !doc.contains("matroid"))
      return {};
    Matroid m;
    try {
      m = matroid_from_json(doc["matroid"].dump());
    } catch (const MatroidError&) {
      return {};
    }
    if (fingerprint(m).key() != doc["fingerprint"].get<std::string>()) return {};
    out.push_back(std::move(m));
  }
  return out;
}

void store_cache(const std::filesystem::path& path,
                 const std::vector<Matroid>& classes) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) return;
  for (const Matroid& m : classes) {
    nlohmann::ordered_json line;
    line["fingerprint"] = fingerprint(m).key();
    line["matroid"] = nlohmann::ordered_json::parse(matroid_to_json(m));
    out << line.dump() << "\n";
  }
}

const std::vector<Matroid>& classes_locked(
    int n, std::map<int, std::vector<Matroid>>& memo) {
  auto hit = memo.find(n);
  if (hit != memo.end()) return hit->second;
  if (n == 0) {
    memo[0] = {Matroid::from_bases(GroundSet(std::vector<std::string>{}),
                                   std::vector<Subset>{0})};
    return memo[0];
  }
  std::filesystem::path path = cache_path(n);
  if (!path.empty()) {
    std::vector<Matroid> cached = load_cache(path);
    if (!cached.empty()) {
      memo[n] = std::move(cached);
      return memo[n];
    }
  }
  std::vector<Matroid> raw;
  for (const Matroid& parent : classes_locked(n - 1, memo)) {
    std::vector<Matroid> ext = extensions_of(parent);
    raw.insert(raw.end(), ext.begin(), ext.end());
  }
  std::vector<Matroid> reps = dedupe_classes(raw);
  if (!path.empty()) store_cache(path, reps);
  memo[n] = std::move(reps);
  return memo[n];
}

// ---------------------------------------------------------------------------
// Proof-construction helpers.

bool iso(const Matroid& a, const Matroid& b) {
  return isomorphic(a, b).has_value();
}

std::vector<std::string> numbered_labels(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Restriction of n to one component, relabeled x1, x2, ...
Matroid component_restriction(const Matroid& n, Subset component,
                              const std::string& prefix) {
  Matroid part = deletion(n, n.ground_mask() & ~component);
  return relabeled(part, numbered_labels(prefix, part.size()));
}

// Label of the second element of the first 2-element circuit.
std::string two_circuit_partner(const Matroid& m) {
  for (Subset c : m.circuits())
    if (subset_size(c) == 2)
      return m.ground().label(elements_of(c)[1]);
  fail(Errc::precondition_failed, "component has no 2-element circuit");
}

// U(2,3) on {c0, z, c1} with a rank-2 uniform matroid glued on at each of
// c0 and c1.
Matroid triangle_with_lines(int line_size) {
  Matroid core = relabeled(uniform(2, 3), {"c0", "z", "c1"});
  std::vector<std::string> left{"c0"}, right{"c1"};
  for (int i = 1; i < line_size; ++i) {
    left.push_back("x" + std::to_string(i));
    right.push_back("y" + std::to_string(i));
  }
  Matroid joined =
      parallel_connection(core, relabeled(uniform(2, line_size), left), "c0", "c0");
  return parallel_connection(joined, relabeled(uniform(2, line_size), right),
                             "c1", "c1");
}

}  // namespace

Matroid named(const std::string& expression) {
  Parsed parsed = parse_expression(expression);
  std::vector<Matroid> atoms;
  for (const AtomTerm& atom : parsed.atoms) atoms.push_back(build_atom(atom));
  if (atoms.size() == 1) return atoms[0];

  // Multi-atom expression: rename every atom's elements to fresh letters,
  // left to right, remembering catalog label -> fresh label per atom.
  std::vector<std::map<std::string, std::string>> renames(atoms.size());
  int cursor = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    std::vector<std::string> fresh;
    for (int j = 0; j < atoms[i].size(); ++j) {
      renames[i][atoms[i].ground().label(j)] = letter_label(cursor + j);
      fresh.push_back(letter_label(cursor + j));
    }
    atoms[i] = relabeled(atoms[i], fresh);
    cursor += static_cast<int>(fresh.size());
  }

  Matroid acc = atoms[0];
  for (const Parsed::Step& step : parsed.steps) {
    const Matroid& right = atoms[step.right];
    if (step.op == '+') {
      acc = direct_sum(acc, right);
      continue;
    }
    // The basepoint names an element of the left side by current label and
    // of the right side by its catalog label.
    auto renamed = renames[step.right].find(step.basepoint);
    std::string right_point = renamed != renames[step.right].end()
                                  ? renamed->second
                                  : step.basepoint;
    if (step.op == 'P') {
      acc = parallel_connection(acc, right, step.basepoint, right_point);
    } else {
      Matroid glued = relabeled(
          right, std::map<std::string, std::string>{{right_point, step.basepoint}});
      acc = two_sum(acc, glued, step.basepoint);
    }
  }
  return acc;
}

const std::vector<Matroid>& matroid_classes(int n) {
  if (n < 0) fail(Errc::bad_n, "negative ground-set size");
  if (n > kEnumerationCap)
    fail(Errc::cap_exceeded,
         "enumeration capped at " + std::to_string(kEnumerationCap) +
             " elements");
  static std::mutex mutex;
  static std::map<int, std::vector<Matroid>> memo;
  std::scoped_lock lock(mutex);
  return classes_locked(n, memo);
}

std::vector<Matroid> enumerate(int n, const EnumFilter& filter) {
  std::vector<Matroid> out;
  for (const Matroid& m : matroid_classes(n)) {
    if (filter.connected && !m.is_connected()) continue;
    if (filter.simple && !m.is_simple()) continue;
    if (filter.three_connected && !is_k_connected(m, 3)) continue;
    if (filter.binary && !is_binary(m)) continue;
    if (filter.min_rank && m.rank() < *filter.min_rank) continue;
    if (filter.max_rank && m.rank() > *filter.max_rank) continue;
    out.push_back(m);
  }
  return out;
}

std::vector<std::pair<std::string, Matroid>> proof_constructions(
    const Matroid& n) {
  std::vector<std::pair<std::string, Matroid>> out;
  const int sz = n.size();

  if (iso(n, uniform(2, 3))) {
    Matroid m3 = parallel_connection(relabeled(uniform(2, 4), {"a", "b", "c", "g"}),
                                     relabeled(uniform(2, 4), {"d", "e", "f", "g"}),
                                     "g", "g");
    Matroid m4 = deletion(m3, m3.ground().subset_of({"c"}));
    out.emplace_back("two 4-point lines glued at g", m3);
    out.emplace_back(
        "glued lines with c deleted: triangle {a,b,g} meets the series pair {a,b}",
        m4);
    return out;
  }

  if (iso(n, uniform(2, 2))) {
    out.emplace_back("2-circuit plus a coloop",
                     named("U(1,2)+U(1,1)"));
    return out;
  }
  if (iso(n, uniform(0, 2))) {
    out.emplace_back("2-cocircuit plus a loop", dual(named("U(1,2)+U(1,1)")));
    return out;
  }

  if (n.rank() == sz && sz >= 3) {  // free matroid U(sz, sz)
    if (sz + 1 > kMaxGroundSize)
      fail(Errc::unsupported_n, "witness would exceed the ground-set cap");
    out.emplace_back(
        "triangle plus " + std::to_string(sz - 2) + " coloops",
        direct_sum(uniform(2, 3),
                   relabeled(uniform(sz - 2, sz - 2),
                             numbered_labels("d", sz - 2))));
    return out;
  }
  if (n.rank() == 0 && sz >= 3) {  // all loops: U(0, sz)
    if (sz + 1 > kMaxGroundSize)
      fail(Errc::unsupported_n, "witness would exceed the ground-set cap");
    out.emplace_back(
        "triad plus " + std::to_string(sz - 2) + " loops",
        dual(direct_sum(uniform(2, 3),
                        relabeled(uniform(sz - 2, sz - 2),
                                  numbered_labels("d", sz - 2)))));
    return out;
  }

  const int loops = subset_size(n.loops());
  const int coloops = subset_size(n.coloops());
  if (loops + coloops == sz && loops >= 1 && coloops >= 1) {
    if (loops == 1 && coloops == 1) {
      out.emplace_back("cycle matroid of the complete graph on four vertices",
                       mk4());
      return out;
    }
    if (sz + 2 > kMaxGroundSize)
      fail(Errc::unsupported_n, "witness would exceed the ground-set cap");
    out.emplace_back(
        "same loops and coloops with one extra loop",
        direct_sum(uniform(0, loops + 1),
                   relabeled(uniform(coloops, coloops),
                             numbered_labels("d", coloops))));
    return out;
  }

  // Disconnected n whose two components tie for maximum size and both carry
  // a 2-element circuit: glue series extensions of the components onto a
  // triangle and truncate.
  std::vector<Subset> comps = n.components();
  if (comps.size() == 2 && subset_size(comps[0]) == subset_size(comps[1]) &&
      subset_size(comps[0]) >= 2) {
    Matroid n0 = component_restriction(n, comps[0], "a");
    Matroid n1 = component_restriction(n, comps[1], "b");
    auto has_two_circuit = [](const Matroid& m) {
      for (Subset c : m.circuits())
        if (subset_size(c) == 2) return true;
      return false;
    };
    if (has_two_circuit(n0) && has_two_circuit(n1) &&
        sz + 3 <= kMaxGroundSize) {
      Matroid n0s = add_series(n0, two_circuit_partner(n0), "c0");
      Matroid n1s = add_series(n1, two_circuit_partner(n1), "c1");
      Matroid core = relabeled(uniform(2, 3), {"c0", "z", "c1"});
      Matroid glued = parallel_connection(core, n0s, "c0", "c0");
      glued = parallel_connection(glued, n1s, "c1", "c1");
      out.emplace_back(
          "truncated double parallel connection of series-extended components "
          "over the triangle {c0,z,c1}",
          truncation(glued));
      return out;
    }
  }

  // Disconnected n that is a 4-element wheel plus one rank-1 uniform
  // component (or the dual picture): two rank-2 uniform matroids glued onto
  // a triangle.
  Matroid two_wheel = wheel(2);
  for (int k : {2, 3}) {
    Matroid pattern = direct_sum(relabeled(two_wheel, {"1", "2", "3", "4"}),
                                 relabeled(uniform(1, k), numbered_labels("d", k)));
    if (iso(n, pattern)) {
      out.emplace_back("two " + std::to_string(k + 1) +
                           "-point lines glued onto the triangle {c0,z,c1}",
                       triangle_with_lines(k + 1));
      return out;
    }
    Matroid copattern = direct_sum(relabeled(two_wheel, {"1", "2", "3", "4"}),
                                   relabeled(uniform(k - 1, k),
                                             numbered_labels("d", k)));
    if (iso(n, copattern)) {
      out.emplace_back("dual of two " + std::to_string(k + 1) +
                           "-point lines glued onto the triangle {c0,z,c1}",
                       dual(triangle_with_lines(k + 1)));
      return out;
    }
  }

  fail(Errc::unsupported_n, "no recorded construction for this matroid");
}

}  // namespace matroid
