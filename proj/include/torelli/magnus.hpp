#pragma once

#include <map>
#include <memory>
#include <vector>

#include "torelli/group_ring.hpp"

namespace torelli {

// Truncated series in non-commuting variables X_0..X_{r-1}: monomials are
// generator-index sequences of length <= trunc.
struct TensorSeries {
  int trunc;
  std::map<std::vector<int>, Rational> terms;

  explicit TensorSeries(int n) : trunc(n) {}
  static TensorSeries one(int n);

  void add_term(std::vector<int> mono, const Rational& c);
  bool operator==(const TensorSeries& o) const;
  TensorSeries degree_part(int k) const;
  int lowest_positive_degree() const;  // -1 when none
};

TensorSeries operator+(const TensorSeries& a, const TensorSeries& b);
TensorSeries operator-(const TensorSeries& a, const TensorSeries& b);
TensorSeries operator*(const TensorSeries& a, const TensorSeries& b);
TensorSeries scale(const TensorSeries& a, const Rational& c);

// Multiplicative expansion: generator x_i -> 1 + X_i, inverse -> the
// truncated alternating geometric series.
TensorSeries magnus(const Word& w, int trunc);
TensorSeries magnus(const RingElement& r, int trunc);

// Identity (21): m(1-g) == 1-g^m through degree q, for g an iterated
// commutator of weight q.
bool eq21_check(const Word& g, long m, int q);

// Binary bracket tree over leaves 0..n-1, each used once.
struct BracketExpr {
  int leaf = -1;
  std::shared_ptr<BracketExpr> left, right;

  static BracketExpr leaf_of(int i);
  static BracketExpr pair_of(BracketExpr a, BracketExpr b);
  bool is_leaf() const { return leaf >= 0; }
  int size() const;
  bool right_nested() const;
};

BracketExpr right_nested_bracket(int n);

// Formal expansion of a right-nested bracket over symbols z_0..z_{n-1}:
// (-1)^{n-1} sum over selectors of the nested products with up0(a,b) = ab,
// up1(a,b) = -ba. 2^{n-1} words, each a permutation of the leaves.
std::map<std::vector<int>, Rational> expand_bracket(const BracketExpr& e);

// Degree-n part of magnus(1 - [x_{g1},[...,x_{gn}]]) must vanish below n
// and agree with expand_bracket under z_i -> X_{gens[i]}.
bool lemma28_check(const std::vector<int>& gens);

}  // namespace torelli
