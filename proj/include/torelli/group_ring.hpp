#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "torelli/rational.hpp"

namespace torelli {

// Freely reduced word in a free group: letters (generator index, +-1).
struct Word {
  std::vector<std::pair<int, int>> letters;

  static Word identity() { return {}; }
  static Word gen(int i, int exp = 1);
  bool is_identity() const { return letters.empty(); }
  int length() const { return static_cast<int>(letters.size()); }
  bool operator<(const Word& o) const { return letters < o.letters; }
  bool operator==(const Word& o) const { return letters == o.letters; }
  std::string str() const;
};

Word operator*(const Word& a, const Word& b);
Word inverse(const Word& w);
Word power(const Word& w, long k);
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

// [x1, [x2, ..., [x_{k-1}, x_k]]]
Word nested_commutator(const std::vector<Word>& xs);

Word random_word(int rank, int max_len, std::mt19937_64& rng);

// Element of the rational group ring of a free group.
struct RingElement {
  std::map<Word, Rational> terms;

  static RingElement zero() { return {}; }
  static RingElement one();
  static RingElement of(const Word& w, const Rational& c = 1);

  bool is_zero() const { return terms.empty(); }
  void add_term(const Word& w, const Rational& c);
  bool operator==(const RingElement& o) const { return terms == o.terms; }
};

RingElement operator+(const RingElement& a, const RingElement& b);
RingElement operator-(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement operator*(const RingElement& a, const RingElement& b);
RingElement one_minus(const Word& g);

using BarTuple = std::vector<Word>;

// phi_n[g1|...|gn] = (1-g1)...(1-gn); the empty tuple gives 1.
RingElement phi(const BarTuple& t);

// Coboundary of phi_n evaluated on a length-(n+1) tuple, computed exactly.
RingElement delta_phi(const BarTuple& t);

// delta(phi_n) = 0 for n even and phi_{n+1} for n odd, as exact ring
// identities. The tuple has length n+1.
bool delta_phi_check(const BarTuple& t);

// gamma[g1|...|gn] = (-1)^{n choose 2} [gn^-1|...|g1^-1].
std::pair<int, BarTuple> gamma(const BarTuple& t);

// Exact identity (20): 1-[g,h] = (-(1-g)(1-h) + (1-h)(1-g)) g^-1 h^-1.
bool eq20_check(const Word& g, const Word& h);

// --- formal chains over a free abelian group -------------------------------
//
// Tuples of Laurent monomials with the bar boundary. Used to pin down, at
// chain level, how gamma interacts with the boundary: with the sign
// convention above the exact law is  d(gamma t) = - gamma(d t)  in every
// degree (gamma is a chain map only after the usual (-1)^n degree twist).

using Monomial = std::vector<int>;  // exponent vector
using MonomialTuple = std::vector<Monomial>;
using Chain = std::map<MonomialTuple, Rational>;

Chain bar_boundary(const Chain& c);
Chain gamma_chain(const Chain& c);

struct GammaChainReport {
  int tuples_checked;
  bool anticommutes;  // d(gamma t) + gamma(d t) == 0 for all samples
  bool commutes;      // d(gamma t) - gamma(d t) == 0 for all samples
};

GammaChainReport gamma_chain_map_check(int n, int rank, int trials,
                                       std::uint64_t seed);

}  // namespace torelli
