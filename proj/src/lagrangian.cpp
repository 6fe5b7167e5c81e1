#include "torelli/lagrangian.hpp"

#include <algorithm>
#include <stdexcept>

#include "torelli/contractions.hpp"

namespace torelli {

Mat mat_identity(int d) {
  Mat m(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Mat mat_product(const Mat& a, const Mat& b) {
  int r = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int c = static_cast<int>(b[0].size());
  Mat m(r, std::vector<Rational>(c, Rational(0)));
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (is_zero(a[i][t])) continue;
      for (int j = 0; j < c; ++j)
        if (!is_zero(b[t][j])) m[i][j] += a[i][t] * b[t][j];
    }
  return m;
}

Mat mat_rref(Mat m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return m;
  int cols = static_cast<int>(m[0].size());
  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++r) {
    int pivot = -1;
    while (lead < cols) {
      for (int i = r; i < rows; ++i)
        if (!is_zero(m[i][lead])) {
          pivot = i;
          break;
        }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) break;
    std::swap(m[r], m[pivot]);
    Rational pv = m[r][lead];
    for (auto& v : m[r]) v /= pv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][lead])) continue;
      Rational f = m[i][lead];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++lead;
  }
  return m;
}

bool same_row_space(const Mat& a, const Mat& b) {
  return mat_rref(a) == mat_rref(b);
}

namespace {

Mat mat_inverse(const Mat& a) {
  int d = static_cast<int>(a.size());
  Mat m = a;
  Mat inv = mat_identity(d);
  for (int c = 0; c < d; ++c) {
    int pivot = -1;
    for (int r = c; r < d; ++r)
      if (!is_zero(m[r][c])) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("singular matrix");
    std::swap(m[c], m[pivot]);
    std::swap(inv[c], inv[pivot]);
    Rational pv = m[c][c];
    for (int j = 0; j < d; ++j) {
      m[c][j] /= pv;
      inv[c][j] /= pv;
    }
    for (int r = 0; r < d; ++r) {
      if (r == c || is_zero(m[r][c])) continue;
      Rational f = m[r][c];
      for (int j = 0; j < d; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

Mat transpose_of(const Mat& a) {
  if (a.empty()) return a;
  Mat t(a[0].size(), std::vector<Rational>(a.size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Rational omega_vectors(const SymplecticSpace& sp,
                       const std::vector<Rational>& u,
                       const std::vector<Rational>& v) {
  Rational out = 0;
  int n = sp.genus;
  for (int i = 0; i < n; ++i) {
    out += u[i] * v[n + i];
    out -= u[n + i] * v[i];
  }
  return out;
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Third compound of an r x c matrix: rows indexed by triples of row
// indices, columns by triples of column indices, entries 3x3 minors.
Mat wedge3_of(const Mat& p, const std::vector<std::array<int, 3>>& row_triples,
              const std::vector<std::array<int, 3>>& col_triples) {
  Mat out(row_triples.size(),
          std::vector<Rational>(col_triples.size(), Rational(0)));
  for (std::size_t r = 0; r < row_triples.size(); ++r)
    for (std::size_t c = 0; c < col_triples.size(); ++c) {
      std::array<std::array<Rational, 3>, 3> sub;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          sub[i][j] = p[row_triples[r][i]][col_triples[c][j]];
      out[r][c] = det3(sub);
    }
  return out;
}

// Coordinates of the standard basis in the pair basis: row a of the inverse
// of the stacked matrix (plus rows, then minus rows).
Mat pair_coordinates(const LagrangianPair& pair) {
  int d = pair.space.dim();
  Mat stacked(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 0; i < pair.space.genus; ++i) stacked[i] = pair.plus[i];
  for (int i = 0; i < pair.space.genus; ++i)
    stacked[pair.space.genus + i] = pair.minus[i];
  return mat_inverse(stacked);
}

}  // namespace

LagrangianPair LagrangianPair::standard(int n) {
  LagrangianPair p{SymplecticSpace(n), Mat(), Mat()};
  p.plus.assign(n, std::vector<Rational>(2 * n, Rational(0)));
  p.minus.assign(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    p.plus[i][i] = 1;
    p.minus[i][n + i] = 1;
  }
  return p;
}

LagrangianPair LagrangianPair::swapped() const {
  LagrangianPair p = *this;
  std::swap(p.plus, p.minus);
  return p;
}

LagrangianPair LagrangianPair::transformed(const Mat& s) const {
  LagrangianPair p = *this;
  auto apply = [&](Mat& rows) {
    for (auto& v : rows) {
      std::vector<Rational> nv(v.size(), Rational(0));
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
          if (!is_zero(s[i][j]) && !is_zero(v[j])) nv[i] += s[i][j] * v[j];
      v = nv;
    }
  };
  apply(p.plus);
  apply(p.minus);
  return p;
}

void LagrangianPair::validate() const {
  int n = space.genus;
  if (static_cast<int>(plus.size()) != n ||
      static_cast<int>(minus.size()) != n)
    throw std::invalid_argument("Lagrangian basis must have n rows");
  for (const auto& rows : {plus, minus})
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != 2 * n)
        throw std::invalid_argument("Lagrangian row length mismatch");
      for (int j = i; j < n; ++j)
        if (!is_zero(omega_vectors(space, rows[i], rows[j])))
          throw std::invalid_argument("omega does not vanish on the subspace");
    }
  // transversality: the stacked matrix must be invertible
  pair_coordinates(*this);
}

LagrangianPair random_pair(int n, std::mt19937_64& rng) {
  SymplecticSpace sp(n);
  Mat s = random_symplectic(sp, rng);
  LagrangianPair p = LagrangianPair::standard(n).transformed(s);
  p.validate();
  return p;
}

Mat eta(const LagrangianPair& pair, int sign) {
  pair.validate();
  int n = pair.space.genus;
  Mat coords = pair_coordinates(pair);
  // vector-level projection in target coordinates: column a of P is the
  // coefficient vector of e_a on the chosen Lagrangian's basis
  Mat p(n, std::vector<Rational>(2 * n, Rational(0)));
  int off = (sign > 0) ? 0 : n;
  for (int a = 0; a < 2 * n; ++a)
    for (int i = 0; i < n; ++i) p[i][a] = coords[a][off + i];
  return wedge3_of(p, wedge_basis(n), wedge_basis(2 * n));
}

TwoForm cup_form(const LagrangianPair& pair) {
  pair.validate();
  int n = pair.space.genus;
  if (n < 3)
    throw std::invalid_argument("cup form needs dim H >= 6");
  Mat ep = eta(pair, +1);
  Mat em = eta(pair, -1);
  // determinant pairing on actual subspace vectors
  auto triples_small = wedge_basis(n);
  Mat g(triples_small.size(),
        std::vector<Rational>(triples_small.size(), Rational(0)));
  for (std::size_t r = 0; r < triples_small.size(); ++r)
    for (std::size_t c = 0; c < triples_small.size(); ++c) {
      std::array<std::array<Rational, 3>, 3> sub;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          sub[i][j] = omega_vectors(pair.space, pair.plus[triples_small[r][i]],
                                    pair.minus[triples_small[c][j]]);
      g[r][c] = det3(sub);
    }
  // M(I,J) = <eta+ e_I, eta- e_J>
  Mat m = mat_product(mat_product(transpose_of(ep), g), em);
  TwoForm f;
  int big = static_cast<int>(m.size());
  f.matrix.assign(big, std::vector<Rational>(big, Rational(0)));
  for (int i = 0; i < big; ++i)
    for (int j = 0; j < big; ++j) f.matrix[i][j] = m[i][j] - m[j][i];
  return f;
}

bool swapped_pair_equality(const LagrangianPair& pair) {
  return cup_form(pair) == cup_form(pair.swapped());
}

bool pairs_equal_or_swapped(const LagrangianPair& a, const LagrangianPair& b) {
  bool equal =
      same_row_space(a.plus, b.plus) && same_row_space(a.minus, b.minus);
  bool swapped =
      same_row_space(a.plus, b.minus) && same_row_space(a.minus, b.plus);
  return equal || swapped;
}

bool cup_forms_equal(const LagrangianPair& a, const LagrangianPair& b) {
  return cup_form(a) == cup_form(b);
}

Rational c_theta_U(const Wedge3Element& a1, const Wedge3Element& a2,
                   const LagrangianPair& pair) {
  pair.validate();
  int n = pair.space.genus;
  if (a1.dim() != 2 * n || a2.dim() != 2 * n)
    throw std::invalid_argument("c_theta_U dimension mismatch");
  // delta-dual adjustment of the minus basis: m'_j = sum_k inv(G)[k][j] m_k
  Mat g(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g[i][j] = omega_vectors(pair.space, pair.plus[i], pair.minus[j]);
  Mat ginv = mat_inverse(g);
  LagrangianPair adapted = pair;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> row(2 * n, Rational(0));
    for (int k = 0; k < n; ++k)
      for (int c = 0; c < 2 * n; ++c) row[c] += ginv[k][j] * pair.minus[k][c];
    adapted.minus[j] = row;
  }
  Mat coords = pair_coordinates(adapted);  // e_a in adapted basis

  auto wedge_coord = [&](const Wedge3Element& w, bool pure_x,
                         const std::array<int, 3>& target) {
    // coefficient of the target adapted wedge triple in w
    Rational out = 0;
    int off = pure_x ? 0 : n;
    for (const auto& [idx, c] : w.entries()) {
      std::array<std::array<Rational, 3>, 3> sub;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          sub[i][j] = coords[idx[i]][off + target[j]];
      out += c * det3(sub);
    }
    return out;
  };

  Rational total = 0;
  for (const auto& t : wedge_basis(n))
    total += wedge_coord(a1, true, t) * wedge_coord(a2, false, t);
  return total;
}

Rational c_theta_U_composite(const Wedge3Element& a1, const Wedge3Element& a2,
                             const LagrangianPair& pair) {
  pair.validate();
  int n = pair.space.genus;
  Mat coords = pair_coordinates(pair);
  auto projector = [&](int sign) {
    int off = (sign > 0) ? 0 : n;
    const Mat& rows = (sign > 0) ? pair.plus : pair.minus;
    Mat p(2 * n, std::vector<Rational>(2 * n, Rational(0)));
    for (int a = 0; a < 2 * n; ++a)
      for (int i = 0; i < n; ++i) {
        if (is_zero(coords[a][off + i])) continue;
        for (int b = 0; b < 2 * n; ++b)
          p[b][a] += coords[a][off + i] * rows[i][b];
      }
    return p;
  };
  Tensor t1 = apply_all_slots(wedge3_include(a1), projector(+1));
  Tensor t2 = apply_all_slots(wedge3_include(a2), projector(-1));
  return c_theta(t1, t2, pair.space);
}

}  // namespace torelli
