#include "torelli/symplectic.hpp"

#include <algorithm>
#include <stdexcept>

namespace torelli {

SymplecticSpace::SymplecticSpace(int n) : genus(n) {
  if (n < 1) throw std::invalid_argument("genus must be >= 1");
}

int SymplecticSpace::omega(int a, int b) const {
  int n = genus;
  if (a < n && b >= n && b - n == a) return 1;
  if (a >= n && b < n && a - n == b) return -1;
  return 0;
}

std::string SymplecticSpace::basis_label(int a) const {
  if (a < genus) return "x" + std::to_string(a + 1);
  return "y" + std::to_string(a - genus + 1);
}

Tensor::Tensor(int arity, int dim) : arity_(arity), dim_(dim) {
  if (arity < 0 || dim < 1) throw std::invalid_argument("bad tensor shape");
}

void Tensor::add(const std::vector<int>& idx, const Rational& c) {
  if (static_cast<int>(idx.size()) != arity_)
    throw std::invalid_argument("tensor index arity mismatch");
  for (int i : idx)
    if (i < 0 || i >= dim_) throw std::out_of_range("tensor index");
  if (is_zero(c)) return;
  auto it = entries_.find(idx);
  if (it == entries_.end()) {
    entries_[idx] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) entries_.erase(it);
  }
}

Rational Tensor::coefficient(const std::vector<int>& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Rational(0) : it->second;
}

Tensor& Tensor::operator+=(const Tensor& o) {
  for (const auto& [k, v] : o.entries_) add(k, v);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  for (const auto& [k, v] : o.entries_) add(k, -v);
  return *this;
}

Tensor& Tensor::scale(const Rational& c) {
  if (is_zero(c)) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

bool Tensor::operator==(const Tensor& o) const {
  return arity_ == o.arity_ && dim_ == o.dim_ && entries_ == o.entries_;
}

Tensor Tensor::outer(const Tensor& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("outer: dim mismatch");
  Tensor r(arity_ + o.arity_, dim_);
  for (const auto& [k1, v1] : entries_)
    for (const auto& [k2, v2] : o.entries_) {
      std::vector<int> idx = k1;
      idx.insert(idx.end(), k2.begin(), k2.end());
      r.add(idx, v1 * v2);
    }
  return r;
}

Tensor Tensor::apply_slot(const std::vector<std::vector<Rational>>& m,
                          int slot) const {
  Tensor r(arity_, dim_);
  for (const auto& [k, v] : entries_) {
    int j = k[slot];
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(m[i][j])) continue;
      std::vector<int> idx = k;
      idx[slot] = i;
      r.add(idx, v * m[i][j]);
    }
  }
  return r;
}

SparseVec Tensor::flatten() const {
  SparseVec v;
  for (const auto& [k, c] : entries_) {
    long flat = 0;
    for (int i : k) flat = flat * dim_ + i;
    v[static_cast<int>(flat)] = c;
  }
  return v;
}

long Tensor::flat_size() const {
  long s = 1;
  for (int i = 0; i < arity_; ++i) s *= dim_;
  return s;
}

Wedge3Element::Wedge3Element(int dim) : dim_(dim) {
  if (dim < 3) throw std::invalid_argument("wedge^3 needs dim >= 3");
}

void Wedge3Element::add(std::array<int, 3> idx, Rational c) {
  for (int i : idx)
    if (i < 0 || i >= dim_) throw std::out_of_range("wedge index");
  int sign = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2 - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  if (idx[0] == idx[1] || idx[1] == idx[2]) return;
  c *= sign;
  if (is_zero(c)) return;
  auto it = entries_.find(idx);
  if (it == entries_.end()) {
    entries_[idx] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) entries_.erase(it);
  }
}

Wedge3Element& Wedge3Element::operator+=(const Wedge3Element& o) {
  for (const auto& [k, v] : o.entries_) add(k, v);
  return *this;
}

Wedge3Element& Wedge3Element::operator-=(const Wedge3Element& o) {
  for (const auto& [k, v] : o.entries_) add(k, -v);
  return *this;
}

Wedge3Element& Wedge3Element::scale(const Rational& c) {
  if (is_zero(c)) {
    entries_.clear();
    return *this;
  }
  for (auto& [k, v] : entries_) v *= c;
  return *this;
}

bool Wedge3Element::operator==(const Wedge3Element& o) const {
  return dim_ == o.dim_ && entries_ == o.entries_;
}

UElement UElement::from(Wedge3Element w, const SymplecticSpace& sp) {
  for (const auto& v : kappa(w, sp))
    if (!is_zero(v))
      throw std::invalid_argument("element is not in the kernel");
  return UElement{std::move(w)};
}

std::vector<std::array<int, 3>> wedge_basis(int dim) {
  std::vector<std::array<int, 3>> basis;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) basis.push_back({i, j, k});
  return basis;
}

int wedge_index(const std::array<int, 3>& t, int dim) {
  // lexicographic position of (i<j<k) among sorted triples
  auto c2 = [](long a) { return a * (a - 1) / 2; };
  auto c3 = [&](long a) { return a * (a - 1) * (a - 2) / 6; };
  long total = c3(dim);
  long after_i = c3(dim - t[0] - 1);
  long skip_j = c2(dim - t[1] - 1);
  long skip_k = dim - t[2] - 1;
  return static_cast<int>(total - after_i - skip_j - skip_k - 1);
}

Tensor wedge3_include(const Wedge3Element& w) {
  Tensor t(3, w.dim());
  static const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
  static const std::array<int, 6> signs = {1, 1, 1, -1, -1, -1};
  for (const auto& [idx, c] : w.entries()) {
    for (int p = 0; p < 6; ++p)
      t.add({idx[perms[p][0]], idx[perms[p][1]], idx[perms[p][2]]},
            c * signs[p]);
  }
  return t;
}

Wedge3Element project_wedge3(const Tensor& t) {
  if (t.arity() != 3) throw std::invalid_argument("project_wedge3 needs arity 3");
  Wedge3Element w(t.dim());
  for (const auto& [idx, c] : t.entries()) w.add({idx[0], idx[1], idx[2]}, c);
  return w;
}

std::vector<Rational> kappa(const Wedge3Element& w,
                            const SymplecticSpace& sp) {
  std::vector<Rational> out(sp.dim(), Rational(0));
  for (const auto& [idx, c] : w.entries()) {
    auto [a, b, d] = idx;
    out[d] += 2 * c * sp.omega(a, b);
    out[b] -= 2 * c * sp.omega(a, d);
    out[a] += 2 * c * sp.omega(b, d);
  }
  return out;
}

Wedge3Element iota(const std::vector<Rational>& v,
                   const SymplecticSpace& sp) {
  if (static_cast<int>(v.size()) != sp.dim())
    throw std::invalid_argument("iota: vector dimension mismatch");
  Wedge3Element w(sp.dim());
  for (int a = 0; a < sp.dim(); ++a) {
    if (is_zero(v[a])) continue;
    for (int i = 1; i <= sp.genus; ++i)
      w.add({a, sp.x(i), sp.y(i)}, v[a]);
  }
  return w;
}

Rational kappa_iota_scalar(const SymplecticSpace& sp) {
  Rational c;
  bool have = false;
  for (int a = 0; a < sp.dim(); ++a) {
    std::vector<Rational> e(sp.dim(), Rational(0));
    e[a] = 1;
    std::vector<Rational> img = kappa(iota(e, sp), sp);
    for (int b = 0; b < sp.dim(); ++b) {
      if (b == a) continue;
      if (!is_zero(img[b]))
        throw std::logic_error("kappa(iota(.)) is not diagonal");
    }
    if (!have) {
      c = img[a];
      have = true;
    } else if (c != img[a]) {
      throw std::logic_error("kappa(iota(.)) is not a scalar multiple of id");
    }
  }
  return c;
}

namespace {

SparseMatrix kappa_matrix(const SymplecticSpace& sp) {
  auto basis = wedge_basis(sp.dim());
  SparseMatrix m(sp.dim(), static_cast<int>(basis.size()));
  for (int col = 0; col < static_cast<int>(basis.size()); ++col) {
    Wedge3Element w(sp.dim());
    w.add(basis[col], 1);
    auto img = kappa(w, sp);
    for (int row = 0; row < sp.dim(); ++row) m.set(row, col, img[row]);
  }
  return m;
}

}  // namespace

std::vector<Wedge3Element> u_basis(const SymplecticSpace& sp) {
  if (sp.genus < 2)
    throw std::invalid_argument("u_basis needs genus >= 2");
  auto basis = wedge_basis(sp.dim());
  auto kernel = kernel_basis(kappa_matrix(sp));
  std::vector<Wedge3Element> out;
  for (const auto& vec : kernel) {
    Wedge3Element w(sp.dim());
    for (const auto& [col, c] : vec) w.add(basis[col], c);
    out.push_back(std::move(w));
  }
  return out;
}

Wedge3Element project_U(const Wedge3Element& w, const SymplecticSpace& sp) {
  Rational c = kappa_iota_scalar(sp);
  if (is_zero(c))
    throw std::invalid_argument("projection degenerate at this genus");
  std::vector<Rational> k = kappa(w, sp);
  for (auto& v : k) v /= c;
  Wedge3Element out = w;
  out -= iota(k, sp);
  return out;
}

std::vector<std::vector<Rational>> project_U_matrix(
    const SymplecticSpace& sp) {
  auto basis = wedge_basis(sp.dim());
  int nb = static_cast<int>(basis.size());
  std::vector<std::vector<Rational>> m(nb,
                                       std::vector<Rational>(nb, Rational(0)));
  for (int col = 0; col < nb; ++col) {
    Wedge3Element w(sp.dim());
    w.add(basis[col], 1);
    Wedge3Element img = project_U(w, sp);
    for (const auto& [idx, c] : img.entries())
      m[wedge_index(idx, sp.dim())][col] = c;
  }
  return m;
}

}  // namespace torelli
