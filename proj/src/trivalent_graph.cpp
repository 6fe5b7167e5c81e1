#include "torelli/trivalent_graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "torelli/sparse_matrix.hpp"

namespace torelli {

namespace {

int perm3_parity(const std::array<int, 3>& p) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

// Adjacency of a half-edge structure: loop count per vertex and edge
// multiplicities between distinct vertices (loops not counted in mult).
struct Adjacency {
  std::vector<int> loops;
  std::vector<std::vector<int>> mult;
};

template <typename G>
Adjacency adjacency_of(const G& g) {
  int n = static_cast<int>(g.triples.size());
  Adjacency a;
  a.loops.assign(n, 0);
  a.mult.assign(n, std::vector<int>(n, 0));
  std::vector<int> owner(g.pairing.size(), -1);
  for (int v = 0; v < n; ++v)
    for (int h : g.triples[v]) owner[h] = v;
  for (int h = 0; h < static_cast<int>(g.pairing.size()); ++h) {
    int h2 = g.pairing[h];
    if (h >= h2) continue;
    int u = owner[h], v = owner[h2];
    if (u == v)
      a.loops[u] += 1;
    else {
      a.mult[u][v] += 1;
      a.mult[v][u] += 1;
    }
  }
  return a;
}

template <typename G>
void validate_half_edge_structure(const G& g) {
  int n = static_cast<int>(g.triples.size());
  if (n % 2 != 0) throw std::invalid_argument("odd vertex count");
  int hn = static_cast<int>(g.pairing.size());
  if (hn != 3 * n) throw std::invalid_argument("half-edge count != 3 * vertices");
  std::vector<int> seen(hn, 0);
  for (const auto& t : g.triples)
    for (int h : t) {
      if (h < 0 || h >= hn) throw std::invalid_argument("half-edge id out of range");
      if (seen[h]++) throw std::invalid_argument("half-edge listed twice");
    }
  for (int h = 0; h < hn; ++h) {
    int p = g.pairing[h];
    if (p < 0 || p >= hn || p == h || g.pairing[p] != h)
      throw std::invalid_argument("pairing is not a fixed-point-free involution");
  }
}

std::vector<int> owner_table(const std::vector<std::array<int, 3>>& triples,
                             int half_edges) {
  std::vector<int> owner(half_edges, -1);
  for (int v = 0; v < static_cast<int>(triples.size()); ++v)
    for (int h : triples[v]) owner[h] = v;
  return owner;
}

}  // namespace

int TrivalentGraph::vertex_of(int h) const {
  for (int v = 0; v < static_cast<int>(triples.size()); ++v)
    for (int s = 0; s < 3; ++s)
      if (triples[v][s] == h) return v;
  throw std::invalid_argument("unknown half-edge");
}

bool TrivalentGraph::has_loop() const {
  auto owner = owner_table(triples, half_edges());
  for (int h = 0; h < half_edges(); ++h)
    if (owner[h] == owner[pairing[h]] && h != pairing[h] &&
        owner[h] >= 0)
      return true;
  return false;
}

bool TrivalentGraph::connected() const {
  int n = static_cast<int>(triples.size());
  if (n == 0) return true;
  auto owner = owner_table(triples, half_edges());
  std::vector<char> vis(n, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int h : triples[v]) {
      int u = owner[pairing[h]];
      if (!vis[u]) {
        vis[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

void TrivalentGraph::validate() const { validate_half_edge_structure(*this); }

TrivalentGraph TrivalentGraph::from_parts(
    std::vector<std::array<int, 3>> triples,
    const std::vector<std::pair<int, int>>& edges) {
  TrivalentGraph g;
  g.triples = std::move(triples);
  g.pairing.assign(3 * g.triples.size(), -1);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= static_cast<int>(g.pairing.size()) ||
        b >= static_cast<int>(g.pairing.size()) || a == b ||
        g.pairing[a] != -1 || g.pairing[b] != -1)
      throw std::invalid_argument("bad edge list");
    g.pairing[a] = b;
    g.pairing[b] = a;
  }
  g.validate();
  return g;
}

bool DecoratedGraph::has_loop() const {
  auto owner = owner_table(triples, static_cast<int>(pairing.size()));
  for (int h = 0; h < static_cast<int>(pairing.size()); ++h)
    if (owner[h] == owner[pairing[h]]) return true;
  return false;
}

void DecoratedGraph::validate() const {
  validate_half_edge_structure(*this);
  if (!is_tail.empty()) {
    if (is_tail.size() != pairing.size())
      throw std::invalid_argument("coloring size mismatch");
    for (int h = 0; h < static_cast<int>(pairing.size()); ++h)
      if (is_tail[h] + is_tail[pairing[h]] != 1)
        throw std::invalid_argument("every edge needs exactly one tail");
  }
}

void UniTrivalentGraph::validate() const {
  std::vector<int> seen(pairing.size(), 0);
  for (const auto& st : stars) {
    if (st.size() != 1 && st.size() != 3)
      throw std::invalid_argument("vertex degree must be 1 or 3");
    for (int h : st) seen.at(h)++;
  }
  for (std::size_t h = 0; h < pairing.size(); ++h) {
    if (seen[h] != 1) throw std::invalid_argument("half-edge count mismatch");
    int p = pairing[h];
    if (p == static_cast<int>(h) || pairing[p] != static_cast<int>(h))
      throw std::invalid_argument("bad pairing");
  }
}

// ---------------------------------------------------------------------------
// Canonical labeling of the underlying multigraph.
//
// The key is the lexicographically least sequence of rows over all vertex
// orderings, where row k = (loop count, multiplicities to positions 0..k-1).
// The search keeps the invariant that the current partial ordering matches
// the best known prefix, truncating the incumbent whenever a strictly
// smaller row is found; all orderings achieving the final key are collected,
// and their induced maps are exactly Aut(graph) composed with the first one.
// ---------------------------------------------------------------------------

namespace {

struct CanonSearch {
  int n;
  const Adjacency& adj;
  std::vector<std::vector<int>> best_rows;
  int best_len = 0;
  std::vector<std::vector<int>> best_orders;
  std::vector<int> order;
  std::vector<char> used;

  CanonSearch(int n_, const Adjacency& a) : n(n_), adj(a) {
    best_rows.resize(n);
    used.assign(n, 0);
  }

  void run() { dfs(0); }

  void dfs(int k) {
    if (k == n) {
      best_orders.push_back(order);
      return;
    }
    std::vector<std::pair<std::vector<int>, int>> cands;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::vector<int> row;
      row.reserve(k + 1);
      row.push_back(adj.loops[v]);
      for (int j = 0; j < k; ++j) row.push_back(adj.mult[v][order[j]]);
      cands.emplace_back(std::move(row), v);
    }
    std::sort(cands.begin(), cands.end());
    for (auto& [row, v] : cands) {
      if (best_len > k) {
        if (row > best_rows[k]) break;
        if (row < best_rows[k]) {
          best_len = k;
          best_orders.clear();
        }
      }
      if (best_len == k) {
        best_rows[k] = row;
        best_len = k + 1;
        best_orders.clear();
      }
      order.push_back(v);
      used[v] = 1;
      dfs(k + 1);
      order.pop_back();
      used[v] = 0;
    }
  }
};

std::string serialize_key(int m, const std::vector<std::vector<int>>& rows) {
  std::ostringstream os;
  os << 'g' << m << ':';
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k) os << '|';
    for (int x : rows[k]) os << x;
  }
  return os.str();
}

Adjacency adjacency_from_key(const std::string& key, int& m_out) {
  if (key.empty() || key[0] != 'g') throw std::invalid_argument("bad graph key");
  auto colon = key.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad graph key");
  int m = std::stoi(key.substr(1, colon - 1));
  m_out = m;
  int n = 2 * m;
  Adjacency a;
  a.loops.assign(n, 0);
  a.mult.assign(n, std::vector<int>(n, 0));
  std::string body = key.substr(colon + 1);
  std::vector<std::string> rows;
  if (!body.empty()) {
    std::istringstream is(body);
    std::string part;
    while (std::getline(is, part, '|')) rows.push_back(part);
  }
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("graph key row count mismatch");
  for (int k = 0; k < n; ++k) {
    if (static_cast<int>(rows[k].size()) != k + 1)
      throw std::invalid_argument("graph key row length mismatch");
    a.loops[k] = rows[k][0] - '0';
    for (int j = 0; j < k; ++j) {
      int v = rows[k][j + 1] - '0';
      a.mult[k][j] = v;
      a.mult[j][k] = v;
    }
  }
  return a;
}

// Canonical representative with reference orientation: vertex k owns the
// half-edges 3k..3k+2, listed by ascending (neighbor, copy); parallel copies
// pair up in order, the two ends of a loop sit next to each other.
TrivalentGraph graph_from_adjacency(const Adjacency& adj) {
  int n = static_cast<int>(adj.loops.size());
  TrivalentGraph g;
  g.triples.assign(n, {0, 0, 0});
  g.pairing.assign(3 * n, -1);
  std::vector<int> next_slot(n, 0);
  auto claim = [&](int v) {
    int h = 3 * v + next_slot[v];
    g.triples[v][next_slot[v]++] = h;
    return h;
  };
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u == v) {
        for (int l = 0; l < adj.loops[v]; ++l) {
          int h1 = claim(v), h2 = claim(v);
          g.pairing[h1] = h2;
          g.pairing[h2] = h1;
        }
      } else if (u > v) {
        for (int c = 0; c < adj.mult[v][u]; ++c) claim(v);
      } else {
        // copies towards a smaller neighbor pair with the slots that were
        // reserved when that neighbor was processed
        for (int c = 0; c < adj.mult[v][u]; ++c) claim(v);
      }
    }
  }
  // Wire up non-loop edges: c-th slot of v towards u <-> c-th slot of u
  // towards v. Slot layout is deterministic from the loops/mults.
  auto slot_base = [&](int v, int u) {
    int base = 3 * v;
    for (int w = 0; w < u; ++w)
      base += (w == v) ? 2 * adj.loops[v] : adj.mult[v][w];
    return base;
  };
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      for (int c = 0; c < adj.mult[v][u]; ++c) {
        int h1 = slot_base(v, u) + c;
        int h2 = slot_base(u, v) + c;
        g.pairing[h1] = h2;
        g.pairing[h2] = h1;
      }
  g.validate();
  return g;
}

// Half-edge correspondence parity between isomorphic loop-free graphs under
// the vertex bijection beta. Ambiguity from identical parallel edges is
// even, so the result is well defined.
int matching_parity(const TrivalentGraph& g1, const TrivalentGraph& g2,
                    const std::vector<int>& beta) {
  int hn = g1.half_edges();
  auto owner1 = owner_table(g1.triples, hn);
  auto owner2 = owner_table(g2.triples, hn);
  std::vector<int> map(hn, -1);
  std::vector<char> used(hn, 0);
  for (int v = 0; v < static_cast<int>(g1.triples.size()); ++v) {
    for (int s = 0; s < 3; ++s) {
      int h = g1.triples[v][s];
      if (map[h] != -1) continue;
      int hp = g1.pairing[h];
      int chosen = -1;
      if (map[hp] != -1) {
        chosen = g2.pairing[map[hp]];
      } else {
        int pv = beta[owner1[hp]];
        for (int t = 0; t < 3; ++t) {
          int cand = g2.triples[beta[v]][t];
          if (used[cand]) continue;
          int cp = g2.pairing[cand];
          if (used[cp] || owner2[cp] != pv) continue;
          chosen = cand;
          break;
        }
      }
      if (chosen < 0 || used[chosen]) return 0;
      map[h] = chosen;
      used[chosen] = 1;
      if (map[hp] == -1) {
        map[hp] = g2.pairing[chosen];
        used[map[hp]] = 1;
      }
    }
  }
  int sign = 1;
  for (int v = 0; v < static_cast<int>(g1.triples.size()); ++v) {
    std::array<int, 3> perm{};
    for (int s = 0; s < 3; ++s) {
      int img = map[g1.triples[v][s]];
      const auto& t2 = g2.triples[beta[v]];
      perm[s] = static_cast<int>(std::find(t2.begin(), t2.end(), img) -
                                 t2.begin());
    }
    sign *= perm3_parity(perm);
  }
  return sign;
}

}  // namespace

CanonicalForm canonicalize(const TrivalentGraph& g) {
  g.validate();
  int n = static_cast<int>(g.triples.size());
  Adjacency adj = adjacency_of(g);
  if (n == 0) return {"g0:", 1};

  CanonSearch search(n, adj);
  search.run();
  std::vector<std::vector<int>> rows(search.best_rows.begin(),
                                     search.best_rows.begin() + n);
  std::string key = serialize_key(n / 2, rows);

  for (int l : adj.loops)
    if (l > 0) return {key, 0};

  TrivalentGraph rep = graph_from_key(key);
  const std::vector<int>& ord0 = search.best_orders.front();
  // ord0[k] = input vertex placed at position k.
  std::vector<int> beta(n);
  for (int k = 0; k < n; ++k) beta[ord0[k]] = k;
  int sign = matching_parity(g, rep, beta);
  assert(sign != 0);

  // Any ordering tied with ord0 induces an automorphism of rep; a parity
  // -1 automorphism kills the class.
  for (std::size_t i = 1; i < search.best_orders.size(); ++i) {
    const auto& o = search.best_orders[i];
    std::vector<int> sigma(n);
    std::vector<int> inv0(n);
    for (int k = 0; k < n; ++k) inv0[ord0[k]] = k;
    for (int k = 0; k < n; ++k) sigma[k] = inv0[o[k]];
    if (matching_parity(rep, rep, sigma) < 0) return {key, 0};
  }
  return {key, sign};
}

TrivalentGraph graph_from_key(const std::string& key) {
  int m = 0;
  Adjacency adj = adjacency_from_key(key, m);
  return graph_from_adjacency(adj);
}

CanonicalForm canonicalize_decorated(const DecoratedGraph& g) {
  g.validate();
  int n = static_cast<int>(g.triples.size());
  int hn = static_cast<int>(g.pairing.size());
  auto owner = owner_table(g.triples, hn);
  std::vector<int> slot_of(hn);
  for (int v = 0; v < n; ++v)
    for (int s = 0; s < 3; ++s) slot_of[g.triples[v][s]] = s;

  // Sort the edges by (low vertex, high vertex, direction class), ties by
  // the low-side input slot. The tie-break threads the low-side order
  // through to the high side, so crossings of parallel edges show up in
  // the parity even though the key cannot see them.
  struct EdgeRec {
    int a, b, color, tie;
    int end_a, end_b;  // half-edge ids; for loops (first, second)
  };
  std::vector<EdgeRec> edges;
  for (int h = 0; h < hn; ++h) {
    if (h > g.pairing[h]) continue;
    int p = h, q = g.pairing[h];
    int u = owner[p], v = owner[q];
    EdgeRec e;
    if (u == v) {
      e.a = e.b = u;
      e.color = 9;  // loops sort after parallel non-loops at the same pair
      if (g.colored()) {
        e.end_a = g.is_tail[p] ? p : q;  // tail first
        e.end_b = g.pairing[e.end_a];
      } else {
        e.end_a = (slot_of[p] < slot_of[q]) ? p : q;
        e.end_b = g.pairing[e.end_a];
      }
      e.tie = std::min(slot_of[p], slot_of[q]);
    } else {
      if (u > v) {
        std::swap(p, q);
        std::swap(u, v);
      }
      e.a = u;
      e.b = v;
      e.end_a = p;
      e.end_b = q;
      e.color = g.colored() ? (g.is_tail[p] ? 0 : 1) : 2;
      e.tie = slot_of[p];
    }
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end(), [](const EdgeRec& x, const EdgeRec& y) {
    return std::tie(x.a, x.b, x.color, x.tie) <
           std::tie(y.a, y.b, y.color, y.tie);
  });

  // canonical triple order per vertex: incident ends in sorted-edge order
  std::vector<std::vector<int>> order(n);
  for (const auto& e : edges) {
    order[e.a].push_back(e.end_a);
    order[e.b].push_back(e.end_b);
  }
  int sign = 1;
  for (int v = 0; v < n; ++v) {
    std::array<int, 3> perm{};
    for (int s = 0; s < 3; ++s) perm[s] = slot_of[order[v][s]];
    sign *= perm3_parity(perm);
  }

  std::ostringstream os;
  os << 'd' << n / 2 << (g.colored() ? 'c' : 'u') << ':';
  for (const auto& e : edges) {
    os << '(' << e.a << ',' << e.b;
    if (e.color == 0) os << ",>";
    else if (e.color == 1) os << ",<";
    else if (e.color == 9) os << ",o";
    os << ')';
  }
  return {os.str(), sign};
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

// All labeled trivalent adjacency structures on n vertices (loops allowed).
void enumerate_adjacency(int n, const std::function<void(const Adjacency&)>& emit) {
  Adjacency adj;
  adj.loops.assign(n, 0);
  adj.mult.assign(n, std::vector<int>(n, 0));
  std::vector<int> deg(n, 0);

  std::function<void(int)> next_vertex = [&](int v) {
    if (v == n) {
      emit(adj);
      return;
    }
    // distribute the rest of v's degree among loops (at most one fits) and
    // neighbors above v
    std::function<void(int, int)> dist = [&](int u, int rem) {
      if (rem == 0) {
        next_vertex(v + 1);
        return;
      }
      if (u == n) return;
      int cap = std::min(rem, 3 - deg[u]);
      for (int c = cap; c >= 0; --c) {
        adj.mult[v][u] = adj.mult[u][v] = c;
        deg[u] += c;
        dist(u + 1, rem - c);
        deg[u] -= c;
        adj.mult[v][u] = adj.mult[u][v] = 0;
      }
    };
    int rem0 = 3 - deg[v];
    for (int loop = (rem0 >= 2) ? 1 : 0; loop >= 0; --loop) {
      adj.loops[v] = loop;
      dist(v + 1, rem0 - 2 * loop);
      adj.loops[v] = 0;
    }
  };
  next_vertex(0);
}

bool adjacency_connected(const Adjacency& adj) {
  int n = static_cast<int>(adj.loops.size());
  if (n == 0) return true;
  std::vector<char> vis(n, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u = 0; u < n; ++u)
      if (adj.mult[v][u] > 0 && !vis[u]) {
        vis[u] = 1;
        ++cnt;
        stack.push_back(u);
      }
  }
  return cnt == n;
}

}  // namespace

std::vector<GraphClass> enumerate_trivalent(int m, bool connected_only,
                                            int cap) {
  if (m < 1) throw std::invalid_argument("degree must be >= 1");
  if (m > cap)
    throw ResourceCapError("graph degree " + std::to_string(m) +
                           " exceeds cap " + std::to_string(cap));
  std::map<std::string, GraphClass> classes;
  enumerate_adjacency(2 * m, [&](const Adjacency& adj) {
    if (connected_only && !adjacency_connected(adj)) return;
    TrivalentGraph g = graph_from_adjacency(adj);
    CanonicalForm cf = canonicalize(g);
    if (classes.count(cf.key)) return;
    classes[cf.key] = {cf.key, cf.sign == 0, adjacency_connected(adj)};
  });
  std::vector<GraphClass> out;
  for (auto& [k, c] : classes) out.push_back(c);
  return out;
}

std::vector<std::string> enumerate_decorated(int m, bool loop_free, int cap) {
  if (m < 1) throw std::invalid_argument("degree must be >= 1");
  if (m > cap)
    throw ResourceCapError("decorated degree " + std::to_string(m) +
                           " exceeds cap " + std::to_string(cap));
  std::map<std::string, int> keys;
  enumerate_adjacency(2 * m, [&](const Adjacency& adj) {
    if (loop_free) {
      for (int l : adj.loops)
        if (l > 0) return;
    }
    TrivalentGraph base = graph_from_adjacency(adj);
    int n = 2 * m;
    // choose, for every unordered pair, how many copies point "up"
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v)
      for (int u = v + 1; u < n; ++u)
        if (adj.mult[v][u] > 0) pairs.emplace_back(v, u);
    std::vector<int> up(pairs.size(), 0);
    std::function<void(std::size_t)> choose = [&](std::size_t i) {
      if (i == pairs.size()) {
        DecoratedGraph d;
        d.triples = base.triples;
        d.pairing = base.pairing;
        d.is_tail.assign(base.pairing.size(), 0);
        auto owner = owner_table(d.triples, static_cast<int>(d.pairing.size()));
        std::map<std::pair<int, int>, int> assigned;
        for (int h = 0; h < static_cast<int>(d.pairing.size()); ++h) {
          int h2 = d.pairing[h];
          if (h >= h2) continue;
          int a = owner[h], b = owner[h2];
          if (a == b) {
            d.is_tail[h] = 1;  // loop direction is sign data only
            continue;
          }
          if (a > b) std::swap(a, b);
          auto pit = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b));
          int idx = static_cast<int>(pit - pairs.begin());
          int c = assigned[{a, b}]++;
          bool up_edge = c < up[idx];
          int lo_end = (owner[h] == a) ? h : h2;
          int hi_end = d.pairing[lo_end];
          d.is_tail[up_edge ? lo_end : hi_end] = 1;
        }
        keys[canonicalize_decorated(d).key] = 1;
        return;
      }
      for (int t = 0; t <= adj.mult[pairs[i].first][pairs[i].second]; ++t) {
        up[i] = t;
        choose(i + 1);
      }
    };
    choose(0);
  });
  std::vector<std::string> out;
  for (auto& [k, v] : keys) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// IHX
// ---------------------------------------------------------------------------

std::array<TrivalentGraph, 3> ihx_triple(const TrivalentGraph& g,
                                         int half_edge) {
  g.validate();
  auto owner = owner_table(g.triples, g.half_edges());
  int e1 = half_edge;
  int e2 = g.pairing[e1];
  int u = owner[e1], v = owner[e2];
  if (u == v) throw std::invalid_argument("IHX needs a non-loop edge");

  auto rotate_to_last = [](std::array<int, 3> t, int h) {
    while (t[2] != h) std::rotate(t.begin(), t.begin() + 1, t.end());
    return t;
  };
  auto rotate_to_first = [](std::array<int, 3> t, int h) {
    while (t[0] != h) std::rotate(t.begin(), t.begin() + 1, t.end());
    return t;
  };

  std::array<int, 3> tu = rotate_to_last(g.triples[u], e1);   // (a, b, e)
  std::array<int, 3> tv = rotate_to_first(g.triples[v], e2);  // (e', c, d)
  int a = tu[0], b = tu[1], c = tv[1], d = tv[2];

  TrivalentGraph I = g;
  I.triples[u] = {a, b, e1};
  I.triples[v] = {e2, c, d};
  TrivalentGraph H = g;
  H.triples[u] = {a, c, e1};
  H.triples[v] = {e2, b, d};
  TrivalentGraph X = g;
  X.triples[u] = {a, d, e1};
  X.triples[v] = {e2, b, c};
  return {I, H, X};
}

int as_ihx_quotient_dimension(int m, bool connected_only, int cap) {
  auto classes = enumerate_trivalent(m, connected_only, cap);
  std::map<std::string, int> column;
  int ncols = 0;
  for (const auto& c : classes)
    if (!c.as_zero) column[c.key] = ncols++;

  std::vector<SparseVec> relations;
  for (const auto& cls : classes) {
    TrivalentGraph rep = graph_from_key(cls.key);
    auto owner = owner_table(rep.triples, rep.half_edges());
    for (int h = 0; h < rep.half_edges(); ++h) {
      int h2 = rep.pairing[h];
      if (h >= h2 || owner[h] == owner[h2]) continue;
      auto [I, H, X] = ihx_triple(rep, h);
      std::map<int, Rational> row;
      auto put = [&](const TrivalentGraph& gr, int coeff) {
        CanonicalForm cf = canonicalize(gr);
        if (cf.sign == 0) return;
        row[column.at(cf.key)] += coeff * cf.sign;
      };
      put(I, 1);
      put(H, -1);
      put(X, 1);
      for (auto it = row.begin(); it != row.end();)
        it = is_zero(it->second) ? row.erase(it) : std::next(it);
      if (!row.empty()) relations.push_back(std::move(row));
    }
  }
  return ncols - rank_of_rows(relations);
}

// ---------------------------------------------------------------------------
// Graph vectors, disjoint union, deframing
// ---------------------------------------------------------------------------

void GraphVector::add(const std::string& key, const Rational& c) {
  auto it = terms.find(key);
  if (it == terms.end()) {
    if (!is_zero(c)) terms[key] = c;
    return;
  }
  it->second += c;
  if (is_zero(it->second)) terms.erase(it);
}

GraphVector graph_vector(const TrivalentGraph& g, const Rational& c) {
  GraphVector v;
  CanonicalForm cf = canonicalize(g);
  if (cf.sign != 0) v.add(cf.key, c * cf.sign);
  return v;
}

GraphVector empty_graph_vector() {
  GraphVector v;
  v.add("g0:", 1);
  return v;
}

namespace {

TrivalentGraph concatenate(const TrivalentGraph& a, const TrivalentGraph& b) {
  TrivalentGraph g = a;
  int off = a.half_edges();
  for (const auto& t : b.triples)
    g.triples.push_back({t[0] + off, t[1] + off, t[2] + off});
  for (int h = 0; h < b.half_edges(); ++h)
    g.pairing.push_back(b.pairing[h] + off);
  return g;
}

}  // namespace

GraphVector disjoint_union(const GraphVector& a, const GraphVector& b) {
  GraphVector out;
  for (const auto& [k1, c1] : a.terms)
    for (const auto& [k2, c2] : b.terms) {
      TrivalentGraph g =
          concatenate(graph_from_key(k1), graph_from_key(k2));
      CanonicalForm cf = canonicalize(g);
      if (cf.sign != 0) out.add(cf.key, c1 * c2 * cf.sign);
    }
  return out;
}

std::vector<std::pair<UniTrivalentGraph, int>> deframe(
    const TrivalentGraph& g) {
  g.validate();
  int n = static_cast<int>(g.triples.size());
  std::vector<std::pair<UniTrivalentGraph, int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    UniTrivalentGraph u;
    u.pairing = g.pairing;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) {
        for (int h : g.triples[v]) u.stars.push_back({h});
      } else {
        u.stars.push_back(
            {g.triples[v][0], g.triples[v][1], g.triples[v][2]});
      }
    }
    u.validate();
    out.emplace_back(std::move(u), (__builtin_popcount(mask) % 2) ? -1 : 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace {

void print_structure(std::ostringstream& os,
                     const std::vector<std::array<int, 3>>& triples,
                     const std::vector<int>& pairing) {
  os << triples.size() / 2 << "; ";
  for (std::size_t v = 0; v < triples.size(); ++v) {
    if (v) os << ' ';
    os << 'v' << v << ":(" << triples[v][0] << ',' << triples[v][1] << ','
       << triples[v][2] << ')';
  }
  os << "; p:";
  for (int h = 0; h < static_cast<int>(pairing.size()); ++h)
    if (h < pairing[h]) os << '(' << h << ',' << pairing[h] << ')';
}

struct Scanner {
  const std::string& s;
  std::size_t i = 0;
  explicit Scanner(const std::string& str) : s(str) {}
  void skip_ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("graph text: expected '" +
                                  std::string(1, c) + "' at offset " +
                                  std::to_string(i));
  }
  bool eat_str(const std::string& t) {
    skip_ws();
    if (s.compare(i, t.size(), t) == 0) {
      i += t.size();
      return true;
    }
    return false;
  }
  int number() {
    skip_ws();
    std::size_t j = i;
    while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("graph text: number expected");
    int v = std::stoi(s.substr(i, j - i));
    i = j;
    return v;
  }
  bool done() {
    skip_ws();
    return i == s.size();
  }
};

void parse_structure(Scanner& sc, std::vector<std::array<int, 3>>& triples,
                     std::vector<int>& pairing) {
  int m = sc.number();
  sc.expect(';');
  triples.clear();
  for (int v = 0; v < 2 * m; ++v) {
    sc.expect('v');
    int idx = sc.number();
    if (idx != v) throw std::invalid_argument("graph text: vertices out of order");
    sc.expect(':');
    sc.expect('(');
    std::array<int, 3> t{};
    t[0] = sc.number();
    sc.expect(',');
    t[1] = sc.number();
    sc.expect(',');
    t[2] = sc.number();
    sc.expect(')');
    triples.push_back(t);
  }
  sc.expect(';');
  if (!sc.eat_str("p:")) throw std::invalid_argument("graph text: pairing missing");
  pairing.assign(6 * m, -1);
  while (sc.eat('(')) {
    int a = sc.number();
    sc.expect(',');
    int b = sc.number();
    sc.expect(')');
    if (a < 0 || b < 0 || a >= 6 * m || b >= 6 * m || pairing[a] != -1 ||
        pairing[b] != -1 || a == b)
      throw std::invalid_argument("graph text: bad pairing entry");
    pairing[a] = b;
    pairing[b] = a;
  }
}

}  // namespace

std::string print_graph(const TrivalentGraph& g) {
  std::ostringstream os;
  print_structure(os, g.triples, g.pairing);
  return os.str();
}

std::string print_graph(const DecoratedGraph& g) {
  std::ostringstream os;
  print_structure(os, g.triples, g.pairing);
  if (g.colored()) {
    os << "; c:";
    for (int h = 0; h < static_cast<int>(g.pairing.size()); ++h)
      if (g.is_tail[h]) os << '(' << h << '>' << g.pairing[h] << ')';
  }
  return os.str();
}

TrivalentGraph parse_graph(const std::string& text) {
  Scanner sc(text);
  TrivalentGraph g;
  parse_structure(sc, g.triples, g.pairing);
  if (!sc.done()) throw std::invalid_argument("graph text: trailing input");
  g.validate();
  return g;
}

DecoratedGraph parse_decorated_graph(const std::string& text) {
  Scanner sc(text);
  DecoratedGraph g;
  parse_structure(sc, g.triples, g.pairing);
  if (sc.eat(';')) {
    if (!sc.eat_str("c:"))
      throw std::invalid_argument("graph text: expected colors");
    g.is_tail.assign(g.pairing.size(), 0);
    while (sc.eat('(')) {
      int t = sc.number();
      sc.expect('>');
      int h = sc.number();
      sc.expect(')');
      if (t < 0 || t >= static_cast<int>(g.pairing.size()) ||
          g.pairing[t] != h)
        throw std::invalid_argument("graph text: color on a non-edge");
      g.is_tail[t] = 1;
    }
  }
  if (!sc.done()) throw std::invalid_argument("graph text: trailing input");
  g.validate();
  return g;
}

TrivalentGraph theta_graph() {
  return TrivalentGraph::from_parts({{0, 1, 2}, {3, 4, 5}},
                                    {{0, 3}, {1, 4}, {2, 5}});
}

TrivalentGraph dumbbell_graph() {
  return TrivalentGraph::from_parts({{0, 1, 2}, {3, 4, 5}},
                                    {{0, 1}, {3, 4}, {2, 5}});
}

}  // namespace torelli
