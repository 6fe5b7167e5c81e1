#include "torelli/magnus.hpp"

#include <algorithm>
#include <stdexcept>

namespace torelli {

TensorSeries TensorSeries::one(int n) {
  TensorSeries s(n);
  s.terms[{}] = 1;
  return s;
}

void TensorSeries::add_term(std::vector<int> mono, const Rational& c) {
  if (static_cast<int>(mono.size()) > trunc || is_zero(c)) return;
  auto it = terms.find(mono);
  if (it == terms.end()) {
    terms[std::move(mono)] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) terms.erase(it);
  }
}

bool TensorSeries::operator==(const TensorSeries& o) const {
  return trunc == o.trunc && terms == o.terms;
}

TensorSeries TensorSeries::degree_part(int k) const {
  TensorSeries s(trunc);
  for (const auto& [m, c] : terms)
    if (static_cast<int>(m.size()) == k) s.terms.emplace(m, c);
  return s;
}

int TensorSeries::lowest_positive_degree() const {
  int low = -1;
  for (const auto& [m, c] : terms) {
    int d = static_cast<int>(m.size());
    if (d == 0) continue;
    if (low < 0 || d < low) low = d;
  }
  return low;
}

TensorSeries operator+(const TensorSeries& a, const TensorSeries& b) {
  TensorSeries s = a;
  for (const auto& [m, c] : b.terms) s.add_term(m, c);
  return s;
}

TensorSeries operator-(const TensorSeries& a, const TensorSeries& b) {
  TensorSeries s = a;
  for (const auto& [m, c] : b.terms) s.add_term(m, -c);
  return s;
}

TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) {
  if (a.trunc != b.trunc) throw std::invalid_argument("truncation mismatch");
  TensorSeries s(a.trunc);
  for (const auto& [m1, c1] : a.terms)
    for (const auto& [m2, c2] : b.terms) {
      if (static_cast<int>(m1.size() + m2.size()) > a.trunc) continue;
      std::vector<int> m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      s.add_term(std::move(m), c1 * c2);
    }
  return s;
}

TensorSeries scale(const TensorSeries& a, const Rational& c) {
  TensorSeries s(a.trunc);
  for (const auto& [m, v] : a.terms) s.add_term(m, v * c);
  return s;
}

TensorSeries magnus(const Word& w, int trunc) {
  TensorSeries s = TensorSeries::one(trunc);
  for (auto [g, e] : w.letters) {
    TensorSeries letter(trunc);
    if (e > 0) {
      letter.add_term({}, 1);
      letter.add_term({g}, 1);
    } else {
      // (1 + X)^{-1} truncated
      Rational sign = 1;
      std::vector<int> mono;
      letter.add_term({}, 1);
      for (int d = 1; d <= trunc; ++d) {
        mono.push_back(g);
        sign = -sign;
        letter.add_term(mono, sign);
      }
    }
    s = s * letter;
  }
  return s;
}

TensorSeries magnus(const RingElement& r, int trunc) {
  TensorSeries s(trunc);
  for (const auto& [w, c] : r.terms) s = s + scale(magnus(w, trunc), c);
  return s;
}

bool eq21_check(const Word& g, long m, int q) {
  RingElement lhs;
  lhs.add_term(Word::identity(), m);
  lhs.add_term(g, -m);
  RingElement rhs = one_minus(power(g, m));
  TensorSeries diff = magnus(lhs - rhs, q);
  return diff.terms.empty();
}

BracketExpr BracketExpr::leaf_of(int i) {
  BracketExpr e;
  e.leaf = i;
  return e;
}

BracketExpr BracketExpr::pair_of(BracketExpr a, BracketExpr b) {
  BracketExpr e;
  e.left = std::make_shared<BracketExpr>(std::move(a));
  e.right = std::make_shared<BracketExpr>(std::move(b));
  return e;
}

int BracketExpr::size() const {
  if (is_leaf()) return 1;
  return left->size() + right->size();
}

bool BracketExpr::right_nested() const {
  if (is_leaf()) return true;
  return left->is_leaf() && right->right_nested();
}

BracketExpr right_nested_bracket(int n) {
  if (n < 1) throw std::invalid_argument("bracket needs a leaf");
  BracketExpr e = BracketExpr::leaf_of(n - 1);
  for (int i = n - 2; i >= 0; --i)
    e = BracketExpr::pair_of(BracketExpr::leaf_of(i), std::move(e));
  return e;
}

std::map<std::vector<int>, Rational> expand_bracket(const BracketExpr& e) {
  if (!e.right_nested())
    throw std::invalid_argument("bracket must be right-nested");
  // F(z_k, rest) = z_k * F(rest) - F(rest) * z_k, F(leaf) = leaf.
  std::function<std::map<std::vector<int>, Rational>(const BracketExpr&)>
      rec = [&](const BracketExpr& x) {
        std::map<std::vector<int>, Rational> out;
        if (x.is_leaf()) {
          out[{x.leaf}] = 1;
          return out;
        }
        int z = x.left->leaf;
        auto tail = rec(*x.right);
        for (const auto& [w, c] : tail) {
          std::vector<int> front{z};
          front.insert(front.end(), w.begin(), w.end());
          std::vector<int> back = w;
          back.push_back(z);
          out[front] += c;
          if (is_zero(out[front])) out.erase(front);
          out[back] -= c;
          if (out.count(back) && is_zero(out[back])) out.erase(back);
        }
        return out;
      };
  auto f = rec(e);
  int n = e.size();
  if ((n - 1) % 2) {
    for (auto& [w, c] : f) c = -c;
  }
  return f;
}

bool lemma28_check(const std::vector<int>& gens) {
  int n = static_cast<int>(gens.size());
  if (n < 1) return false;
  std::vector<Word> xs;
  xs.reserve(n);
  for (int g : gens) xs.push_back(Word::gen(g));
  Word c = nested_commutator(xs);
  TensorSeries series = magnus(one_minus(c), n);
  int low = series.lowest_positive_degree();
  if (!series.degree_part(0).terms.empty()) return false;
  if (low != -1 && low < n) return false;

  // substitute the Magnus image of z_i = 1 - x_i, which is -X_i under the
  // generator rule x -> 1 + X; each degree-n word soaks up (-1)^n
  int sub_sign = (n % 2) ? -1 : 1;
  TensorSeries expected(n);
  for (const auto& [w, coef] : expand_bracket(right_nested_bracket(n))) {
    std::vector<int> mono;
    mono.reserve(w.size());
    for (int leaf : w) mono.push_back(gens[leaf]);
    expected.add_term(std::move(mono), coef * sub_sign);
  }
  return series.degree_part(n) == expected;
}

}  // namespace torelli
