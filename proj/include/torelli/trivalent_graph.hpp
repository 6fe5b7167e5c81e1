#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torelli/rational.hpp"

namespace torelli {

// Thrown when an enumeration request exceeds the configured degree cap.
struct ResourceCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vertex-oriented trivalent graph of degree m: 2m vertices, each holding an
// ordered triple of half-edge ids (the order is the cyclic orientation), and
// a fixed-point-free involution pairing the 6m half-edges into 3m edges.
// Loops and parallel edges are allowed.
struct TrivalentGraph {
  std::vector<std::array<int, 3>> triples;
  std::vector<int> pairing;  // pairing[h] = partner of half-edge h

  int degree() const { return static_cast<int>(triples.size()) / 2; }
  int half_edges() const { return static_cast<int>(pairing.size()); }
  int vertex_of(int h) const;
  bool has_loop() const;
  bool connected() const;
  void validate() const;

  static TrivalentGraph from_parts(
      std::vector<std::array<int, 3>> triples,
      const std::vector<std::pair<int, int>>& edges);
};

// Graph with labeled vertices (the vector order is the labeling) and an
// optional direction per edge: is_tail[h] == 1 iff h is the source end of
// its edge. Empty is_tail means no coloring.
struct DecoratedGraph {
  std::vector<std::array<int, 3>> triples;
  std::vector<int> pairing;
  std::vector<char> is_tail;

  int degree() const { return static_cast<int>(triples.size()) / 2; }
  bool colored() const { return !is_tail.empty(); }
  bool has_loop() const;
  void validate() const;
};

// Graph with univalent and trivalent vertices; produced by the deframing map.
struct UniTrivalentGraph {
  std::vector<std::vector<int>> stars;  // per vertex: 1 or 3 half-edge ids
  std::vector<int> pairing;

  void validate() const;
};

struct CanonicalForm {
  std::string key;
  int sign;  // +1 / -1, or 0 when the class dies by antisymmetry
};

// Canonical form under graph isomorphism. Isomorphic graphs get the same
// key; sign relates the input orientation to the reference orientation of
// the canonical representative, and is 0 exactly when some automorphism
// reverses total orientation parity (in particular for every loop).
CanonicalForm canonicalize(const TrivalentGraph& g);

// Canonical representative of a key, with reference orientation.
TrivalentGraph graph_from_key(const std::string& key);

// Canonical form of a labeled graph: vertices stay fixed, each triple is
// sorted to a normal form and the sign accumulates -1 per odd permutation.
// Reversing a directed loop flips the sign and keeps the key. For uncolored
// graphs with loops the sign is representation-relative; keys are always
// well defined.
CanonicalForm canonicalize_decorated(const DecoratedGraph& g);

struct GraphClass {
  std::string key;
  bool as_zero;
  bool connected;
};

// Every isomorphism class of degree m exactly once, sorted by key.
// Throws ResourceCapError above the cap.
std::vector<GraphClass> enumerate_trivalent(int m, bool connected_only,
                                            int cap = 4);

// Distinct canonical keys of labeled 2-colored trivalent graphs of degree m
// (loop-free only when loop_free is set), sorted.
std::vector<std::string> enumerate_decorated(int m, bool loop_free,
                                             int cap = 2);

// dim span(classes) / span(AS-zero + IHX relation vectors).
int as_ihx_quotient_dimension(int m, bool connected_only, int cap = 4);

// The three graphs of one IHX move at a non-loop edge of g, in the order
// (I, H, X) with I = g; the relation is I - H + X = 0.
std::array<TrivalentGraph, 3> ihx_triple(const TrivalentGraph& g,
                                         int half_edge);

// Formal Q-linear combination of canonical graph classes.
struct GraphVector {
  std::map<std::string, Rational> terms;

  void add(const std::string& key, const Rational& c);
  bool operator==(const GraphVector& o) const { return terms == o.terms; }
};

GraphVector graph_vector(const TrivalentGraph& g, const Rational& c = 1);
GraphVector empty_graph_vector();  // the degree-0 unit, coefficient 1
GraphVector disjoint_union(const GraphVector& a, const GraphVector& b);

// Deframing: all 2^{2m} ways of splitting a subset of vertices into three
// univalent ones, with sign (-1)^{#split}. Terms in subset-mask order, the
// all-zero mask (g itself) first.
std::vector<std::pair<UniTrivalentGraph, int>> deframe(const TrivalentGraph& g);

// Text format, one graph per line:
//   m; v0:(h,h,h) v1:(h,h,h) ...; p:(a,b)(c,d)...[; c:(t>h)...]
// where the c-section lists every edge as tail>head.
std::string print_graph(const TrivalentGraph& g);
std::string print_graph(const DecoratedGraph& g);
TrivalentGraph parse_graph(const std::string& text);
DecoratedGraph parse_decorated_graph(const std::string& text);

// Named small graphs used all over the test suites.
TrivalentGraph theta_graph();
TrivalentGraph dumbbell_graph();

}  // namespace torelli
