#include "torelli/contractions.hpp"

#include <algorithm>
#include <stdexcept>

namespace torelli {

Tensor contract_sp(const ChordDiagram& d, const SymplecticSpace& sp) {
  int arity = d.points();
  Tensor t(std::max(arity, 0), sp.dim());
  // iterate over the (2n)^m choices of i per chord and the sign bit
  std::vector<int> idx(arity, 0);
  std::vector<int> choice(d.degree(), 0);  // 0..2n-1: i and orientation
  int n = sp.genus;
  std::function<void(int)> rec = [&](int c) {
    if (c == d.degree()) {
      Rational coeff = 1;
      for (int k = 0; k < d.degree(); ++k)
        if (choice[k] >= n) coeff = -coeff;
      t.add(idx, coeff);
      return;
    }
    auto [a, b] = d.chords[c];
    for (int pick = 0; pick < 2 * n; ++pick) {
      choice[c] = pick;
      if (pick < n) {  // x_i at a, y_i at b
        idx[a - 1] = pick;
        idx[b - 1] = n + pick;
      } else {  // -( y_i at a, x_i at b )
        idx[a - 1] = pick;
        idx[b - 1] = pick - n;
      }
      rec(c + 1);
    }
  };
  if (arity == 0) {
    t.add({}, 1);
    return t;
  }
  rec(0);
  return t;
}

Tensor contract_gl(const ColoredChordDiagram& d, const SymplecticSpace& sp) {
  int arity = d.base.points();
  Tensor t(std::max(arity, 0), sp.dim());
  if (arity == 0) {
    t.add({}, 1);
    return t;
  }
  int n = sp.genus;
  std::vector<int> idx(arity, 0);
  std::function<void(int)> rec = [&](int c) {
    if (c == d.base.degree()) {
      t.add(idx, 1);
      return;
    }
    auto [tail, head] = d.direction[c];
    for (int i = 0; i < n; ++i) {
      idx[tail - 1] = i;
      idx[head - 1] = n + i;
      rec(c + 1);
    }
  };
  rec(0);
  return t;
}

Rational diagram_pairing(const ChordDiagram& d, const std::vector<int>& v,
                         const SymplecticSpace& sp) {
  if (static_cast<int>(v.size()) != d.points())
    throw std::invalid_argument("tuple size mismatch");
  Rational r = 1;
  for (auto [a, b] : d.chords) r *= sp.omega(v[a - 1], v[b - 1]);
  return r;
}

Rational pair_with_basis_tuple(const Tensor& t, const std::vector<int>& v,
                               const SymplecticSpace& sp) {
  if (static_cast<int>(v.size()) != t.arity())
    throw std::invalid_argument("tuple size mismatch");
  Rational out = 0;
  for (const auto& [idx, c] : t.entries()) {
    Rational term = c;
    for (int s = 0; s < t.arity() && !is_zero(term); ++s)
      term *= sp.omega(idx[s], v[s]);
    out += term;
  }
  return out;
}

Tensor group_to_wedge(const Tensor& t, const SymplecticSpace& sp) {
  if (t.arity() % 3 != 0)
    throw std::invalid_argument("arity must be divisible by 3");
  int slots = t.arity() / 3;
  int wdim = static_cast<int>(wedge_basis(sp.dim()).size());
  Tensor out(slots, wdim);
  for (const auto& [idx, c] : t.entries()) {
    std::vector<int> widx(slots);
    int sign = 1;
    bool dead = false;
    for (int s = 0; s < slots && !dead; ++s) {
      std::array<int, 3> tri = {idx[3 * s], idx[3 * s + 1], idx[3 * s + 2]};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2 - i; ++j)
          if (tri[j] > tri[j + 1]) {
            std::swap(tri[j], tri[j + 1]);
            sign = -sign;
          }
      if (tri[0] == tri[1] || tri[1] == tri[2]) {
        dead = true;
        break;
      }
      widx[s] = wedge_index(tri, sp.dim());
    }
    if (!dead) out.add(widx, c * sign);
  }
  return out;
}

Tensor project_U_slots(const Tensor& t, const SymplecticSpace& sp) {
  auto m = project_U_matrix(sp);
  Tensor out = t;
  for (int s = 0; s < t.arity(); ++s) out = out.apply_slot(m, s);
  return out;
}

std::string variant_name(InvariantVariant v) {
  switch (v) {
    case InvariantVariant::SpH: return "Sp-H";
    case InvariantVariant::SpWedge: return "Sp-wedge3";
    case InvariantVariant::SpU: return "Sp-U";
    case InvariantVariant::GlH: return "GL-H";
    case InvariantVariant::GlWedge: return "GL-wedge3";
    case InvariantVariant::GlU: return "GL-U";
  }
  return "?";
}

bool threshold_met(InvariantVariant variant, int m, int n) {
  switch (variant) {
    case InvariantVariant::SpH:
    case InvariantVariant::GlH:
      return n >= m;
    default:
      return n >= 3 * m;
  }
}

int invariant_rank(InvariantVariant variant, int m, int n) {
  SymplecticSpace sp(n);
  bool gl = variant == InvariantVariant::GlH ||
            variant == InvariantVariant::GlWedge ||
            variant == InvariantVariant::GlU;
  bool wedge = variant != InvariantVariant::SpH && variant != InvariantVariant::GlH;
  bool uproj = variant == InvariantVariant::SpU || variant == InvariantVariant::GlU;
  if (wedge && m > 1)
    throw ResourceCapError("wedge/U ranks are capped at m = 1");
  if (!wedge && m > 4) throw ResourceCapError("H ranks are capped at m = 4");
  if (uproj && n < 2)
    throw std::invalid_argument("U variants need genus >= 2");

  int diagram_degree = wedge ? 3 * m : m;
  std::vector<SparseVec> rows;
  if (gl) {
    for (const auto& d : enumerate_colored_diagrams(diagram_degree)) {
      Tensor t = contract_gl(d, sp);
      if (wedge) t = group_to_wedge(t, sp);
      if (uproj) t = project_U_slots(t, sp);
      rows.push_back(t.flatten());
    }
  } else {
    for (const auto& d : enumerate_diagrams(diagram_degree)) {
      Tensor t = contract_sp(d, sp);
      if (wedge) t = group_to_wedge(t, sp);
      if (uproj) t = project_U_slots(t, sp);
      rows.push_back(t.flatten());
    }
  }
  return rank_of_rows(std::move(rows));
}

ColoredChordDiagram decorated_to_diagram(const DecoratedGraph& g) {
  g.validate();
  if (!g.colored()) throw std::invalid_argument("graph has no coloring");
  // point of half-edge h = its (vertex, slot) position, 1-based
  std::vector<int> point(g.pairing.size());
  for (int v = 0; v < static_cast<int>(g.triples.size()); ++v)
    for (int s = 0; s < 3; ++s) point[g.triples[v][s]] = 3 * v + s + 1;
  std::vector<std::pair<int, int>> tail_head;
  for (int h = 0; h < static_cast<int>(g.pairing.size()); ++h)
    if (g.is_tail[h]) tail_head.emplace_back(point[h], point[g.pairing[h]]);
  return ColoredChordDiagram::from_directed(std::move(tail_head));
}

Tensor decorated_contract_gl(const DecoratedGraph& g,
                             const SymplecticSpace& sp) {
  return contract_gl(decorated_to_diagram(g), sp);
}

Tensor decorated_wedge_image(const DecoratedGraph& g,
                             const SymplecticSpace& sp) {
  return group_to_wedge(decorated_contract_gl(g, sp), sp);
}

Tensor decorated_u_image(const DecoratedGraph& g, const SymplecticSpace& sp) {
  return project_U_slots(decorated_wedge_image(g, sp), sp);
}

std::vector<DecoratedGraph> colored_theta_family() {
  std::vector<DecoratedGraph> out;
  for (int k = 0; k <= 3; ++k) {
    DecoratedGraph g;
    g.triples = {{0, 1, 2}, {3, 4, 5}};
    g.pairing = {3, 4, 5, 0, 1, 2};
    g.is_tail.assign(6, 0);
    for (int e = 0; e < 3; ++e)
      g.is_tail[e < k ? e : e + 3] = 1;
    g.validate();
    out.push_back(std::move(g));
  }
  return out;
}

Figure8Report figure8_basis_check(int n) {
  SymplecticSpace sp(n);
  std::vector<SparseVec> rows;
  for (const auto& g : colored_theta_family())
    rows.push_back(decorated_u_image(g, sp).flatten());
  Figure8Report rep;
  rep.genus = n;
  rep.rank = rank_of_rows(rows);

  DecoratedGraph dumbbell;
  dumbbell.triples = {{0, 1, 2}, {3, 4, 5}};
  dumbbell.pairing = {1, 0, 5, 4, 3, 2};
  dumbbell.is_tail = {1, 0, 1, 1, 0, 0};
  dumbbell.validate();
  rep.loop_image_zero = decorated_u_image(dumbbell, sp).zero();
  return rep;
}

Rational c_theta(const Tensor& a, const Tensor& b,
                 const SymplecticSpace& sp) {
  if (a.arity() != 3 || b.arity() != 3)
    throw std::invalid_argument("c_theta needs two tensors of arity 3");
  if (a.dim() != sp.dim() || b.dim() != sp.dim())
    throw std::invalid_argument("c_theta dimension mismatch");
  Rational out = 0;
  for (const auto& [ia, ca] : a.entries())
    for (const auto& [ib, cb] : b.entries()) {
      int w0 = sp.omega(ia[0], ib[0]);
      if (!w0) continue;
      int w1 = sp.omega(ia[1], ib[1]);
      if (!w1) continue;
      int w2 = sp.omega(ia[2], ib[2]);
      if (!w2) continue;
      out += ca * cb * (w0 * w1 * w2);
    }
  return out;
}

namespace {

std::vector<std::vector<Rational>> identity_matrix(int d) {
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d, Rational(0)));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

std::vector<std::vector<Rational>> mat_mul(
    const std::vector<std::vector<Rational>>& a,
    const std::vector<std::vector<Rational>>& b) {
  int r = static_cast<int>(a.size());
  int k = static_cast<int>(b.size());
  int c = static_cast<int>(b[0].size());
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(c, Rational(0)));
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (is_zero(a[i][t])) continue;
      for (int j = 0; j < c; ++j)
        if (!is_zero(b[t][j])) m[i][j] += a[i][t] * b[t][j];
    }
  return m;
}

}  // namespace

std::vector<std::vector<Rational>> random_symplectic(
    const SymplecticSpace& sp, std::mt19937_64& rng) {
  int d = sp.dim();
  auto m = identity_matrix(d);
  std::uniform_int_distribution<int> count(5, 20), param(-3, 3);
  int reps = count(rng);
  for (int r = 0; r < reps; ++r) {
    std::vector<int> v(d);
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      v[i] = param(rng);
      nonzero |= v[i] != 0;
    }
    if (!nonzero) {
      --r;
      continue;
    }
    // transvection T(e_j) = e_j + omega(e_j, v) v
    auto t = identity_matrix(d);
    for (int j = 0; j < d; ++j) {
      Rational w = 0;
      for (int b = 0; b < d; ++b)
        if (v[b]) w += Rational(sp.omega(j, b)) * v[b];
      for (int i = 0; i < d; ++i)
        if (v[i]) t[i][j] += w * v[i];
    }
    m = mat_mul(t, m);
  }
  return m;
}

std::vector<std::vector<Rational>> random_gl_block(const SymplecticSpace& sp,
                                                   std::mt19937_64& rng) {
  int n = sp.genus;
  auto a = identity_matrix(n);
  auto ainv = identity_matrix(n);
  std::uniform_int_distribution<int> count(4, 12), param(-2, 2),
      pick(0, n - 1);
  int reps = count(rng);
  for (int r = 0; r < reps; ++r) {
    int i = pick(rng), j = pick(rng);
    int c = param(rng);
    if (i == j || c == 0) continue;
    // row_i += c * row_j ; inverse gets row_i -= c * row_j applied in
    // reverse order, tracked by multiplying on the right
    for (int k = 0; k < n; ++k) a[i][k] += Rational(c) * a[j][k];
    for (int k = 0; k < n; ++k) ainv[k][j] -= Rational(c) * ainv[k][i];
  }
  // block diag(A, (A^t)^{-1}); (A^t)^{-1} = (A^{-1})^t
  int d = sp.dim();
  auto m = identity_matrix(d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[i][j] = a[i][j];
      m[n + i][n + j] = ainv[j][i];
    }
  return m;
}

Tensor apply_all_slots(const Tensor& t,
                       const std::vector<std::vector<Rational>>& m) {
  Tensor out = t;
  for (int s = 0; s < t.arity(); ++s) out = out.apply_slot(m, s);
  return out;
}

}  // namespace torelli
