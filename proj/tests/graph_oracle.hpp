#pragma once

// Independent brute-force oracle for the graph-space dimensions: enumerate
// every fixed-point-free involution on 6m slots, glue orbits under the
// slot symmetries (vertex swaps, triple rotations, triple transpositions)
// with orientation signs tracked by a signed union-find, and add the IHX
// rows by raw slot surgery. No canonical labeling is shared with the
// library implementation.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "torelli/sparse_matrix.hpp"

namespace graph_oracle {

using Pairing = std::vector<int>;

inline std::vector<Pairing> all_pairings(int slots) {
  std::vector<Pairing> out;
  Pairing cur(slots, -1);
  std::function<void()> rec = [&]() {
    int a = -1;
    for (int i = 0; i < slots; ++i)
      if (cur[i] < 0) {
        a = i;
        break;
      }
    if (a < 0) {
      out.push_back(cur);
      return;
    }
    for (int b = a + 1; b < slots; ++b) {
      if (cur[b] >= 0) continue;
      cur[a] = b;
      cur[b] = a;
      rec();
      cur[a] = -1;
      cur[b] = -1;
    }
  };
  rec();
  return out;
}

struct SignedUnionFind {
  std::vector<int> parent;
  std::vector<int> sign;  // sign relative to parent
  std::vector<char> zero;

  explicit SignedUnionFind(int n) : parent(n), sign(n, 1), zero(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  std::pair<int, int> find(int i) {
    if (parent[i] == i) return {i, 1};
    auto [root, s] = find(parent[i]);
    parent[i] = root;
    sign[i] *= s;
    return {root, sign[i]};
  }

  // class(i) = s * class(j)
  void unite(int i, int j, int s) {
    auto [ri, si] = find(i);
    auto [rj, sj] = find(j);
    if (ri == rj) {
      if (si != s * sj) zero[ri] = 1;
      return;
    }
    parent[ri] = rj;
    sign[ri] = si * s * sj;
    if (zero[ri]) zero[rj] = 1;
  }

  bool is_zero(int i) {
    auto [r, s] = find(i);
    (void)s;
    return zero[r];
  }
};

struct OracleSpace {
  std::vector<Pairing> pairings;
  std::map<Pairing, int> index;
  SignedUnionFind uf;
  int vertices;

  explicit OracleSpace(int m) : uf(0), vertices(2 * m) {
    pairings = all_pairings(6 * m);
    uf = SignedUnionFind(static_cast<int>(pairings.size()));
    for (int i = 0; i < static_cast<int>(pairings.size()); ++i)
      index[pairings[i]] = i;

    // slot symmetries with their orientation parity
    std::vector<std::pair<std::vector<int>, int>> gens;
    int slots = 6 * m;
    auto identity = [&]() {
      std::vector<int> p(slots);
      for (int i = 0; i < slots; ++i) p[i] = i;
      return p;
    };
    for (int v = 0; v + 1 < vertices; ++v) {  // swap neighbouring vertices
      auto p = identity();
      for (int s = 0; s < 3; ++s) std::swap(p[3 * v + s], p[3 * (v + 1) + s]);
      gens.emplace_back(p, 1);
    }
    for (int v = 0; v < vertices; ++v) {  // rotate one triple
      auto p = identity();
      p[3 * v] = 3 * v + 1;
      p[3 * v + 1] = 3 * v + 2;
      p[3 * v + 2] = 3 * v;
      gens.emplace_back(p, 1);
    }
    for (int v = 0; v < vertices; ++v) {  // transpose two slots: reverses
      auto p = identity();
      std::swap(p[3 * v], p[3 * v + 1]);
      gens.emplace_back(p, -1);
    }

    for (int i = 0; i < static_cast<int>(pairings.size()); ++i) {
      for (const auto& [p, parity] : gens) {
        Pairing moved(slots);
        for (int a = 0; a < slots; ++a) moved[p[a]] = p[pairings[i][a]];
        // class(moved) = parity * class(i)
        uf.unite(index.at(moved), i, parity);
      }
    }

    // loop slot-swap: swapping the two ends of a loop is an automorphism
    // reversing one triple, so loop classes die; the generator above
    // already catches it whenever the loop occupies two slots of one
    // triple, and conjugation closure handles the rest.
  }

  bool has_loop(const Pairing& p) const {
    for (int a = 0; a < static_cast<int>(p.size()); ++a)
      if (a / 3 == p[a] / 3) return true;
    return false;
  }

  bool connected(const Pairing& p) const {
    std::vector<char> vis(vertices, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int s = 0; s < 3; ++s) {
        int u = p[3 * v + s] / 3;
        if (!vis[u]) {
          vis[u] = 1;
          ++cnt;
          stack.push_back(u);
        }
      }
    }
    return cnt == vertices;
  }
};

struct OracleCounts {
  int classes = 0;
  int nonzero = 0;
  int connected_classes = 0;
  int connected_nonzero = 0;
};

inline OracleCounts oracle_counts(int m) {
  OracleSpace sp(m);
  OracleCounts c;
  std::set<int> roots_seen;
  for (int i = 0; i < static_cast<int>(sp.pairings.size()); ++i) {
    auto [root, s] = sp.uf.find(i);
    (void)s;
    if (!roots_seen.insert(root).second) continue;
    ++c.classes;
    bool zero = sp.uf.is_zero(root);
    bool conn = sp.connected(sp.pairings[i]);
    if (!zero) ++c.nonzero;
    if (conn) {
      ++c.connected_classes;
      if (!zero) ++c.connected_nonzero;
    }
  }
  return c;
}

// IHX surgery on raw slots. Edge = slot pair (e1, e2) in different triples.
// Returns the two companion pairings (H, X) for the relation I - H + X = 0,
// encoded back into natural slot order.
inline std::pair<Pairing, Pairing> ihx_companions(const Pairing& p, int e1) {
  int e2 = p[e1];
  int u = e1 / 3, v = e2 / 3;
  // cyclic order around u ending at e1, around v starting at e2
  auto cyc = [&](int vertex, int pivot, int offset) {
    int s = pivot % 3;
    return 3 * vertex + (s + offset) % 3;
  };
  int a = cyc(u, e1, 1), b = cyc(u, e1, 2);
  int c = cyc(v, e2, 1), d = cyc(v, e2, 2);

  // new triples: H: u <- (a, c, e1), v <- (e2, b, d)
  //              X: u <- (a, d, e1), v <- (e2, b, c)
  auto rebuild = [&](std::array<int, 3> tu, std::array<int, 3> tv) {
    int slots = static_cast<int>(p.size());
    std::vector<int> to_new(slots);
    for (int i = 0; i < slots; ++i) to_new[i] = i;
    to_new[tu[0]] = 3 * u;
    to_new[tu[1]] = 3 * u + 1;
    to_new[tu[2]] = 3 * u + 2;
    to_new[tv[0]] = 3 * v;
    to_new[tv[1]] = 3 * v + 1;
    to_new[tv[2]] = 3 * v + 2;
    Pairing out(slots);
    for (int i = 0; i < slots; ++i) out[to_new[i]] = to_new[p[i]];
    return out;
  };
  return {rebuild({a, c, e1}, {e2, b, d}), rebuild({a, d, e1}, {e2, b, c})};
}

inline int oracle_as_ihx_dimension(int m, bool connected_only) {
  OracleSpace sp(m);
  std::map<int, int> column;  // nonzero root -> column
  for (int i = 0; i < static_cast<int>(sp.pairings.size()); ++i) {
    auto [root, s] = sp.uf.find(i);
    (void)s;
    if (sp.uf.is_zero(root) || column.count(root)) continue;
    if (connected_only && !sp.connected(sp.pairings[root])) continue;
    column[root] = static_cast<int>(column.size());
  }

  std::set<torelli::SparseVec> rows;
  for (int i = 0; i < static_cast<int>(sp.pairings.size()); ++i) {
    const Pairing& p = sp.pairings[i];
    if (connected_only && !sp.connected(p)) continue;
    for (int e1 = 0; e1 < static_cast<int>(p.size()); ++e1) {
      if (e1 / 3 == p[e1] / 3 || e1 > p[e1]) continue;
      auto [h, x] = ihx_companions(p, e1);
      torelli::SparseVec row;
      auto put = [&](const Pairing& q, int coeff) {
        auto [root, s] = sp.uf.find(sp.index.at(q));
        if (sp.uf.is_zero(root)) return;
        auto it = column.find(root);
        if (it == column.end()) return;  // other component class
        row[it->second] += coeff * s;
      };
      put(p, 1);
      put(h, -1);
      put(x, 1);
      for (auto it = row.begin(); it != row.end();)
        it = torelli::is_zero(it->second) ? row.erase(it) : std::next(it);
      if (!row.empty()) rows.insert(row);
    }
  }
  std::vector<torelli::SparseVec> rel(rows.begin(), rows.end());
  return static_cast<int>(column.size()) - torelli::rank_of_rows(rel);
}

}  // namespace graph_oracle
