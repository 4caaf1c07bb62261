#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "polyfold/complexes.hpp"

namespace polyfold {

namespace {

void free_cyclic_reduce(std::vector<int>& w) {
  std::vector<int> out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  while (out.size() >= 2 && out.front() == -out.back()) {
    out.erase(out.begin());
    out.pop_back();
  }
  w = std::move(out);
}

std::vector<int> inverse_word(const std::vector<int>& w) {
  std::vector<int> r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

std::vector<int> rotate_word(const std::vector<int>& w, size_t k) {
  std::vector<int> r(w.begin() + static_cast<long>(k), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(k));
  return r;
}

std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

struct Simplifier {
  std::vector<std::vector<int>> rels;
  std::set<int> alive;
  int moves = 0;
  int budget;

  explicit Simplifier(const Presentation& p) : budget(0) {
    for (int g = 1; g <= p.generators; ++g) alive.insert(g);
    rels = p.relators;
  }

  bool spend(int cost) {
    moves += cost;
    return moves <= budget;
  }

  void reduce_all() {
    for (auto& r : rels) free_cyclic_reduce(r);
    rels.erase(std::remove_if(rels.begin(), rels.end(),
                              [](const std::vector<int>& r) { return r.empty(); }),
               rels.end());
  }

  // Tietze generator elimination: a relator in which g occurs exactly once
  // expresses g in the others.
  bool eliminate_one() {
    int which_rel = -1, which_gen = 0;
    size_t best_len = SIZE_MAX;
    for (size_t ri = 0; ri < rels.size(); ++ri) {
      std::map<int, int> count;
      for (int x : rels[ri]) ++count[std::abs(x)];
      for (auto [g, c] : count) {
        if (c == 1 && rels[ri].size() < best_len) {
          which_rel = static_cast<int>(ri);
          which_gen = g;
          best_len = rels[ri].size();
        }
      }
    }
    if (which_rel < 0) return false;
    auto r = rels[static_cast<size_t>(which_rel)];
    size_t pos = 0;
    while (std::abs(r[pos]) != which_gen) ++pos;
    auto rot = rotate_word(r, pos);
    bool positive = rot[0] > 0;
    std::vector<int> rest(rot.begin() + 1, rot.end());
    std::vector<int> repl = positive ? inverse_word(rest) : rest;
    std::vector<std::vector<int>> next;
    for (size_t ri = 0; ri < rels.size(); ++ri) {
      if (static_cast<int>(ri) == which_rel) continue;
      std::vector<int> w;
      for (int x : rels[ri]) {
        if (std::abs(x) == which_gen) {
          if (x > 0) {
            w.insert(w.end(), repl.begin(), repl.end());
          } else {
            auto inv = inverse_word(repl);
            w.insert(w.end(), inv.begin(), inv.end());
          }
        } else {
          w.push_back(x);
        }
      }
      next.push_back(std::move(w));
    }
    rels = std::move(next);
    alive.erase(which_gen);
    spend(static_cast<int>(best_len) + 1);
    return true;
  }

  // Replace a relator by its product with a (rotated, possibly inverted)
  // other relator when this shortens it by at least `gain`.
  bool product_step(int gain, std::uint64_t* rng) {
    std::vector<size_t> order(rels.size());
    std::iota(order.begin(), order.end(), 0);
    if (rng != nullptr) {
      for (size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[splitmix64(*rng) % i]);
      }
    }
    for (size_t oi = 0; oi < order.size(); ++oi) {
      size_t i = order[oi];
      for (size_t j = 0; j < rels.size(); ++j) {
        if (i == j) continue;
        const auto& a = rels[i];
        const auto& b = rels[j];
        if (b.empty() || a.empty()) continue;
        for (int invert = 0; invert < 2; ++invert) {
          std::vector<int> bb = invert ? inverse_word(b) : b;
          for (size_t rot = 0; rot < bb.size(); ++rot) {
            std::vector<int> prod = a;
            auto rb = rotate_word(bb, rot);
            prod.insert(prod.end(), rb.begin(), rb.end());
            free_cyclic_reduce(prod);
            if (prod.size() + static_cast<size_t>(gain) <= a.size()) {
              rels[i] = std::move(prod);
              spend(static_cast<int>(b.size()));
              return true;
            }
          }
        }
      }
    }
    return false;
  }
};

SmithResult abelianization(const std::vector<std::vector<int>>& rels,
                           const std::set<int>& alive) {
  std::map<int, int> gen_index;
  for (int g : alive) {
    int idx = static_cast<int>(gen_index.size());
    gen_index[g] = idx;
  }
  std::vector<std::vector<std::int64_t>> m(
      alive.size(), std::vector<std::int64_t>(std::max<size_t>(rels.size(), 1), 0));
  for (size_t j = 0; j < rels.size(); ++j) {
    for (int x : rels[j]) {
      auto it = gen_index.find(std::abs(x));
      if (it == gen_index.end()) continue;
      m[static_cast<size_t>(it->second)][j] += x > 0 ? 1 : -1;
    }
  }
  return smith_normal_form(m);
}

// Search for a homomorphism onto a nontrivial subgroup of Sym(3).
bool maps_onto_nontrivial_sym3(const std::vector<std::vector<int>>& rels,
                               const std::set<int>& alive) {
  if (alive.empty()) return false;
  std::vector<int> gens(alive.begin(), alive.end());
  if (gens.size() > 6) return false;
  // Sym(3) as permutations of {0,1,2}
  std::array<std::array<int, 3>, 6> elems{{{0, 1, 2},
                                           {0, 2, 1},
                                           {1, 0, 2},
                                           {2, 1, 0},
                                           {1, 2, 0},
                                           {2, 0, 1}}};
  auto compose = [&](int a, int b) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[(size_t)i] = elems[(size_t)b][(size_t)elems[(size_t)a][(size_t)i]];
    for (int k = 0; k < 6; ++k) {
      if (elems[(size_t)k] == r) return k;
    }
    return 0;
  };
  std::array<int, 6> inverse{};
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      if (compose(a, b) == 0) inverse[(size_t)a] = b;
    }
  }
  std::map<int, int> assign;
  std::function<bool(size_t)> dfs = [&](size_t k) -> bool {
    if (k == gens.size()) {
      bool nontrivial = false;
      for (auto [g, e] : assign) {
        (void)g;
        if (e != 0) nontrivial = true;
      }
      if (!nontrivial) return false;
      for (const auto& r : rels) {
        int acc = 0;
        for (int x : r) {
          int e = assign.at(std::abs(x));
          acc = compose(acc, x > 0 ? e : inverse[(size_t)e]);
        }
        if (acc != 0) return false;
      }
      return true;
    }
    for (int e = 0; e < 6; ++e) {
      assign[gens[k]] = e;
      if (dfs(k + 1)) return true;
    }
    assign.erase(gens[k]);
    return false;
  };
  return dfs(0);
}

}  // namespace

Presentation pi1_presentation(const SimplicialComplex2& k) {
  // connectivity over vertices via edges
  std::vector<int> comp(static_cast<size_t>(k.vertex_count), -1);
  if (k.vertex_count == 0) {
    throw Error(ErrorCode::kDisconnected, "pi1: empty complex");
  }
  std::vector<std::vector<std::pair<int, int>>> adj(
      static_cast<size_t>(k.vertex_count));
  for (size_t e = 0; e < k.edges.size(); ++e) {
    adj[(size_t)k.edges[e][0]].push_back({k.edges[e][1], (int)e});
    adj[(size_t)k.edges[e][1]].push_back({k.edges[e][0], (int)e});
  }
  std::vector<bool> in_tree(k.edges.size(), false);
  std::queue<int> q;
  q.push(0);
  comp[0] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [v, e] : adj[static_cast<size_t>(u)]) {
      if (comp[static_cast<size_t>(v)] == -1) {
        comp[static_cast<size_t>(v)] = 0;
        in_tree[static_cast<size_t>(e)] = true;
        q.push(v);
      }
    }
  }
  for (int v = 0; v < k.vertex_count; ++v) {
    if (comp[static_cast<size_t>(v)] == -1) {
      throw Error(ErrorCode::kDisconnected, "pi1: complex is not connected");
    }
  }
  std::vector<int> gen_of(k.edges.size(), 0);
  int gens = 0;
  for (size_t e = 0; e < k.edges.size(); ++e) {
    if (!in_tree[e]) gen_of[e] = ++gens;
  }
  std::map<std::array<int, 2>, int> edge_index;
  for (size_t e = 0; e < k.edges.size(); ++e) {
    edge_index[k.edges[e]] = static_cast<int>(e);
  }
  Presentation pres;
  pres.generators = gens;
  for (const auto& t : k.triangles) {
    // boundary loop ab . bc . (ac)^-1
    std::vector<int> w;
    int eab = edge_index.at({t[0], t[1]});
    int ebc = edge_index.at({t[1], t[2]});
    int eac = edge_index.at({t[0], t[2]});
    if (gen_of[(size_t)eab]) w.push_back(gen_of[(size_t)eab]);
    if (gen_of[(size_t)ebc]) w.push_back(gen_of[(size_t)ebc]);
    if (gen_of[(size_t)eac]) w.push_back(-gen_of[(size_t)eac]);
    if (!w.empty()) pres.relators.push_back(std::move(w));
  }
  return simplify_presentation(std::move(pres), 100000);
}

Presentation simplify_presentation(Presentation pres, int budget) {
  Simplifier s(pres);
  s.budget = budget;
  s.reduce_all();

  bool in_budget = true;
  while (in_budget) {
    s.reduce_all();
    if (s.eliminate_one()) {
      in_budget = s.moves <= s.budget;
      continue;
    }
    if (s.product_step(1, nullptr)) {
      in_budget = s.moves <= s.budget;
      continue;
    }
    break;
  }

  // Randomized retries: allow non-shortening products to escape local minima.
  std::uint64_t rng = 0x6a09e667f3bcc909ull;
  int retries = 0;
  while (in_budget && !s.rels.empty() && retries < 24) {
    ++retries;
    Simplifier trial = s;
    trial.budget = s.budget;
    bool changed = trial.product_step(0, &rng);
    if (!changed) break;
    while (trial.moves <= trial.budget) {
      trial.reduce_all();
      if (trial.eliminate_one()) continue;
      if (trial.product_step(1, nullptr)) continue;
      break;
    }
    size_t total_before = 0, total_after = 0;
    for (const auto& r : s.rels) total_before += r.size();
    for (const auto& r : trial.rels) total_after += r.size();
    if (trial.rels.empty() ||
        trial.alive.size() < s.alive.size() ||
        total_after < total_before) {
      s = std::move(trial);
      retries = 0;
    }
    in_budget = s.moves <= s.budget;
  }
  s.reduce_all();

  Presentation out;
  // compact generator numbering
  std::map<int, int> renumber;
  for (int g : s.alive) {
    int idx = static_cast<int>(renumber.size()) + 1;
    renumber[g] = idx;
  }
  out.generators = static_cast<int>(s.alive.size());
  for (const auto& r : s.rels) {
    std::vector<int> w;
    for (int x : r) {
      w.push_back(x > 0 ? renumber.at(x) : -renumber.at(-x));
    }
    out.relators.push_back(std::move(w));
  }

  if (out.generators == 0 && out.relators.empty()) {
    out.status = Pi1Status::kTrivial;
    out.certificate = "presentation reduced to the empty presentation";
    return out;
  }
  SmithResult ab = abelianization(s.rels, s.alive);
  int ab_rank = static_cast<int>(s.alive.size()) - ab.rank;
  bool ab_torsion = std::any_of(ab.factors.begin(), ab.factors.end(),
                                [](std::int64_t f) { return f > 1; });
  if (ab_rank > 0 || ab_torsion) {
    out.status = Pi1Status::kNontrivial;
    out.certificate = ab_rank > 0 ? "abelianization has positive rank"
                                  : "abelianization has torsion";
    return out;
  }
  if (maps_onto_nontrivial_sym3(s.rels, s.alive)) {
    out.status = Pi1Status::kNontrivial;
    out.certificate = "maps onto a nontrivial subgroup of Sym(3)";
    return out;
  }
  out.status = Pi1Status::kUnknown;
  out.certificate = "simplification budget exhausted without certificate";
  return out;
}

}  // namespace polyfold
