#include "torelli/group_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace torelli {

Word Word::gen(int i, int exp) {
  if (i < 0 || (exp != 1 && exp != -1))
    throw std::invalid_argument("bad generator letter");
  Word w;
  w.letters.emplace_back(i, exp);
  return w;
}

std::string Word::str() const {
  if (letters.empty()) return "1";
  std::ostringstream os;
  for (auto [g, e] : letters) {
    os << static_cast<char>('a' + (g % 26));
    if (g >= 26) os << g;
    if (e < 0) os << "^-1";
  }
  return os.str();
}

Word operator*(const Word& a, const Word& b) {
  Word r = a;
  for (auto [g, e] : b.letters) {
    if (!r.letters.empty() && r.letters.back().first == g &&
        r.letters.back().second == -e)
      r.letters.pop_back();
    else
      r.letters.emplace_back(g, e);
  }
  return r;
}

Word inverse(const Word& w) {
  Word r;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.emplace_back(it->first, -it->second);
  return r;
}

Word power(const Word& w, long k) {
  Word base = (k < 0) ? inverse(w) : w;
  long reps = (k < 0) ? -k : k;
  Word r;
  for (long i = 0; i < reps; ++i) r = r * base;
  return r;
}

Word commutator(const Word& a, const Word& b) {
  return a * b * inverse(a) * inverse(b);
}

Word nested_commutator(const std::vector<Word>& xs) {
  if (xs.empty()) throw std::invalid_argument("empty commutator");
  Word r = xs.back();
  for (int i = static_cast<int>(xs.size()) - 2; i >= 0; --i)
    r = commutator(xs[i], r);
  return r;
}

Word random_word(int rank, int max_len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  Word w;
  int l = len(rng);
  for (int i = 0; i < l; ++i)
    w = w * Word::gen(gen(rng), sgn(rng) ? 1 : -1);
  return w;
}

RingElement RingElement::one() { return of(Word::identity()); }

RingElement RingElement::of(const Word& w, const Rational& c) {
  RingElement r;
  r.add_term(w, c);
  return r;
}

void RingElement::add_term(const Word& w, const Rational& c) {
  if (torelli::is_zero(c)) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms[w] = c;
  } else {
    it->second += c;
    if (torelli::is_zero(it->second)) terms.erase(it);
  }
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  RingElement r = a;
  for (const auto& [w, c] : b.terms) r.add_term(w, c);
  return r;
}

RingElement operator-(const RingElement& a, const RingElement& b) {
  RingElement r = a;
  for (const auto& [w, c] : b.terms) r.add_term(w, -c);
  return r;
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  RingElement r;
  for (const auto& [w1, c1] : a.terms)
    for (const auto& [w2, c2] : b.terms) r.add_term(w1 * w2, c1 * c2);
  return r;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  return ring_mul(a, b);
}

RingElement one_minus(const Word& g) {
  RingElement r = RingElement::one();
  r.add_term(g, -1);
  return r;
}

RingElement phi(const BarTuple& t) {
  RingElement r = RingElement::one();
  for (const auto& g : t) r = r * one_minus(g);
  return r;
}

RingElement delta_phi(const BarTuple& t) {
  int n1 = static_cast<int>(t.size());
  if (n1 < 1) throw std::invalid_argument("delta needs a nonempty tuple");
  RingElement out;
  BarTuple front(t.begin() + 1, t.end());
  out = out + phi(front);
  for (int i = 1; i <= n1 - 1; ++i) {
    BarTuple merged;
    merged.reserve(n1 - 1);
    for (int j = 0; j < n1; ++j) {
      if (j == i - 1) {
        merged.push_back(t[j] * t[j + 1]);
        ++j;
      } else {
        merged.push_back(t[j]);
      }
    }
    RingElement term = phi(merged);
    if (i % 2) out = out - term;
    else out = out + term;
  }
  BarTuple back(t.begin(), t.end() - 1);
  RingElement last = phi(back);
  if (n1 % 2) out = out - last;
  else out = out + last;
  return out;
}

bool delta_phi_check(const BarTuple& t) {
  int n = static_cast<int>(t.size()) - 1;
  if (n < 1) throw std::invalid_argument("tuple too short");
  RingElement d = delta_phi(t);
  if (n % 2 == 0) return d.is_zero();
  return d == phi(t);
}

std::pair<int, BarTuple> gamma(const BarTuple& t) {
  int n = static_cast<int>(t.size());
  int sign = ((n * (n - 1) / 2) % 2) ? -1 : 1;
  BarTuple r;
  r.reserve(n);
  for (auto it = t.rbegin(); it != t.rend(); ++it) r.push_back(inverse(*it));
  return {sign, r};
}

bool eq20_check(const Word& g, const Word& h) {
  RingElement lhs = one_minus(commutator(g, h));
  RingElement prod =
      RingElement::zero() - ring_mul(one_minus(g), one_minus(h)) +
      ring_mul(one_minus(h), one_minus(g));
  RingElement rhs =
      ring_mul(prod, RingElement::of(inverse(g) * inverse(h)));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Chains over a free abelian group
// ---------------------------------------------------------------------------

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Monomial mono_inv(const Monomial& a) {
  Monomial r = a;
  for (auto& e : r) e = -e;
  return r;
}

void chain_add(Chain& c, const MonomialTuple& t, const Rational& v) {
  if (is_zero(v)) return;
  auto it = c.find(t);
  if (it == c.end()) {
    c[t] = v;
  } else {
    it->second += v;
    if (is_zero(it->second)) c.erase(it);
  }
}

}  // namespace

Chain bar_boundary(const Chain& c) {
  Chain out;
  for (const auto& [t, coef] : c) {
    int n = static_cast<int>(t.size());
    if (n == 0) continue;
    {
      MonomialTuple drop_first(t.begin() + 1, t.end());
      chain_add(out, drop_first, coef);
    }
    for (int i = 1; i <= n - 1; ++i) {
      MonomialTuple merged;
      merged.reserve(n - 1);
      for (int j = 0; j < n; ++j) {
        if (j == i - 1) {
          merged.push_back(mono_mul(t[j], t[j + 1]));
          ++j;
        } else {
          merged.push_back(t[j]);
        }
      }
      chain_add(out, merged, (i % 2) ? -coef : coef);
    }
    {
      MonomialTuple drop_last(t.begin(), t.end() - 1);
      chain_add(out, drop_last, (n % 2) ? -coef : coef);
    }
  }
  return out;
}

Chain gamma_chain(const Chain& c) {
  Chain out;
  for (const auto& [t, coef] : c) {
    int n = static_cast<int>(t.size());
    int sign = ((n * (n - 1) / 2) % 2) ? -1 : 1;
    MonomialTuple r;
    r.reserve(n);
    for (auto it = t.rbegin(); it != t.rend(); ++it)
      r.push_back(mono_inv(*it));
    chain_add(out, r, sign * coef);
  }
  return out;
}

GammaChainReport gamma_chain_map_check(int n, int rank, int trials,
                                       std::uint64_t seed) {
  if (n < 1 || n > 6) throw std::invalid_argument("chain length out of range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> expo(-2, 2);
  GammaChainReport rep{0, true, true};
  for (int trial = 0; trial < trials; ++trial) {
    MonomialTuple t;
    for (int i = 0; i < n; ++i) {
      Monomial m(rank);
      for (int j = 0; j < rank; ++j) m[j] = expo(rng);
      t.push_back(std::move(m));
    }
    Chain c;
    c[t] = 1;
    Chain dg = bar_boundary(gamma_chain(c));
    Chain gd = gamma_chain(bar_boundary(c));
    Chain sum = dg;
    for (const auto& [k, v] : gd) chain_add(sum, k, v);
    Chain diff = dg;
    for (const auto& [k, v] : gd) chain_add(diff, k, -v);
    if (!sum.empty()) rep.anticommutes = false;
    if (!diff.empty()) rep.commutes = false;
    ++rep.tuples_checked;
  }
  return rep;
}

}  // namespace torelli
