#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "torelli/contractions.hpp"

using namespace torelli;

namespace {

Wedge3Element random_wedge(const SymplecticSpace& sp, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  Wedge3Element w(sp.dim());
  for (const auto& t : wedge_basis(sp.dim())) {
    int v = c(rng);
    if (v) w.add(t, v);
  }
  return w;
}

}  // namespace

TEST_CASE("sp contraction of one chord") {
  SymplecticSpace sp1(1);
  ChordDiagram d = ChordDiagram::from_pairs({{1, 2}});
  Tensor t = contract_sp(d, sp1);
  REQUIRE(t.entries().size() == 2);
  CHECK(t.coefficient({0, 1}) == Rational(1));   // x1 (x) y1
  CHECK(t.coefficient({1, 0}) == Rational(-1));  // y1 (x) x1

  SymplecticSpace sp2(2);
  Tensor t2 = contract_sp(d, sp2);
  CHECK(t2.entries().size() == 4);
  for (const auto& [idx, c] : t2.entries())
    CHECK((c == Rational(1) || c == Rational(-1)));
}

TEST_CASE("sp contraction entry counts") {
  SymplecticSpace sp(3);
  for (const auto& d : enumerate_diagrams(2)) {
    Tensor t = contract_sp(d, sp);
    CHECK(t.entries().size() == 36);  // (2n)^m
  }
}

TEST_CASE("contraction tensor is dual to the omega-product pairing") {
  SymplecticSpace sp(3);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, sp.dim() - 1);
  for (const auto& d : enumerate_diagrams(3)) {
    Tensor t = contract_sp(d, sp);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> tuple(6);
      for (auto& v : tuple) v = pick(rng);
      CHECK(pair_with_basis_tuple(t, tuple, sp) ==
            diagram_pairing(d, tuple, sp));
    }
  }
}

TEST_CASE("gl contraction of one directed chord") {
  SymplecticSpace sp(1);
  auto c = ColoredChordDiagram::from_directed({{1, 2}});
  Tensor t = contract_gl(c, sp);
  REQUIRE(t.entries().size() == 1);
  CHECK(t.coefficient({0, 1}) == Rational(1));  // x1 (x) y1

  Tensor r = contract_gl(c.reversed(), sp);
  REQUIRE(r.entries().size() == 1);
  CHECK(r.coefficient({1, 0}) == Rational(1));  // y1 (x) x1

  // signed sum over both directions = sp contraction
  Tensor sum = t;
  sum -= r;
  CHECK(sum == contract_sp(c.base, sp));
}

TEST_CASE("per-chord color sum reproduces the sp contraction") {
  for (int n = 1; n <= 2; ++n) {
    SymplecticSpace sp(n);
    for (int m = 1; m <= 2; ++m) {
      for (const auto& d : enumerate_diagrams(m)) {
        Tensor sum(2 * m, sp.dim());
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
          std::vector<std::pair<int, int>> dirs;
          for (int i = 0; i < m; ++i) {
            auto [a, b] = d.chords[i];
            dirs.emplace_back((mask >> i) & 1 ? std::make_pair(b, a)
                                              : std::make_pair(a, b));
          }
          Tensor g =
              contract_gl(ColoredChordDiagram::from_directed(dirs), sp);
          if (__builtin_popcount(mask) % 2) g.scale(-1);
          sum += g;
        }
        CHECK(sum == contract_sp(d, sp));
      }
    }
  }
}

TEST_CASE("wedge include and project") {
  SymplecticSpace sp(3);
  Wedge3Element w(sp.dim());
  w.add({0, 1, 2}, 1);  // x1^x2^x3
  Tensor t = wedge3_include(w);
  CHECK(t.entries().size() == 6);
  CHECK(t.coefficient({0, 1, 2}) == Rational(1));
  CHECK(t.coefficient({1, 0, 2}) == Rational(-1));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    Wedge3Element r = random_wedge(sp, rng);
    Wedge3Element six = project_wedge3(wedge3_include(r));
    Wedge3Element expect = r;
    expect.scale(6);
    CHECK(six == expect);
  }

  Tensor pure(3, sp.dim());
  pure.add({0, 1, 2}, 1);
  Wedge3Element p = project_wedge3(pure);
  CHECK(p.entries().size() == 1);
  CHECK(p.entries().begin()->second == Rational(1));

  Tensor repeated(3, sp.dim());
  repeated.add({0, 0, 1}, 1);
  CHECK(project_wedge3(repeated).zero());

  Tensor symmetric(3, sp.dim());
  symmetric.add({0, 1, 2}, 1);
  symmetric.add({1, 0, 2}, 1);
  symmetric.add({2, 1, 0}, 1);
  symmetric.add({0, 2, 1}, 1);
  symmetric.add({1, 2, 0}, 1);
  symmetric.add({2, 0, 1}, 1);
  CHECK(project_wedge3(symmetric).zero());

  Wedge3Element z(sp.dim());
  CHECK(wedge3_include(z).zero());
}

TEST_CASE("kappa on basis wedges") {
  SymplecticSpace sp(3);
  Wedge3Element xs(sp.dim());
  xs.add({sp.x(1), sp.x(2), sp.x(3)}, 1);
  for (const auto& v : kappa(xs, sp)) CHECK(is_zero(v));

  Wedge3Element a(sp.dim());
  a.add({sp.x(1), sp.y(1), sp.x(2)}, 1);  // -> 2 x2
  auto ka = kappa(a, sp);
  CHECK(ka[sp.x(2)] == Rational(2));
  for (int i = 0; i < sp.dim(); ++i)
    if (i != sp.x(2)) CHECK(is_zero(ka[i]));

  Wedge3Element b(sp.dim());
  b.add({sp.x(1), sp.y(1), sp.y(2)}, 1);  // -> 2 y2
  auto kb = kappa(b, sp);
  CHECK(kb[sp.y(2)] == Rational(2));
}

TEST_CASE("kappa iota scalar and the U basis") {
  for (int n = 2; n <= 4; ++n) {
    SymplecticSpace sp(n);
    Rational c = kappa_iota_scalar(sp);
    CHECK(c == Rational(2 * (n - 1)));
    CHECK(!is_zero(c));
  }
  SymplecticSpace sp3(3);
  auto basis = u_basis(sp3);
  CHECK(basis.size() == 14);  // C(6,3) - 6
  for (const auto& w : basis)
    for (const auto& v : kappa(w, sp3)) CHECK(is_zero(v));

  SymplecticSpace sp2(2);
  CHECK(u_basis(sp2).empty());  // C(4,3) - 4 = 0; degenerate genus
  CHECK_THROWS_AS(u_basis(SymplecticSpace(1)), std::invalid_argument);
}

TEST_CASE("projection onto the kernel") {
  SymplecticSpace sp(3);
  std::mt19937_64 rng(17);
  for (const auto& w : u_basis(sp)) CHECK(project_U(w, sp) == w);

  std::vector<Rational> e(sp.dim(), Rational(0));
  e[sp.x(1)] = 1;
  CHECK(project_U(iota(e, sp), sp).zero());

  for (int trial = 0; trial < 10; ++trial) {
    Wedge3Element w = random_wedge(sp, rng);
    for (const auto& v : kappa(project_U(w, sp), sp)) CHECK(is_zero(v));
  }
}

TEST_CASE("invariant ranks reproduce the dimension table at genus 3") {
  CHECK(invariant_rank(InvariantVariant::SpH, 3, 3) == 15);
  CHECK(invariant_rank(InvariantVariant::SpWedge, 1, 3) == 2);
  CHECK(invariant_rank(InvariantVariant::SpU, 1, 3) == 1);
  CHECK(invariant_rank(InvariantVariant::GlH, 3, 3) == 120);
  CHECK(invariant_rank(InvariantVariant::GlWedge, 1, 3) == 6);
  CHECK(invariant_rank(InvariantVariant::GlU, 1, 3) == 4);
}

TEST_CASE("second fundamental theorem threshold behavior") {
  CHECK(invariant_rank(InvariantVariant::SpH, 2, 1) == 2);  // < 3 diagrams
  CHECK(invariant_rank(InvariantVariant::SpH, 2, 2) == 3);
  CHECK(invariant_rank(InvariantVariant::SpH, 2, 4) == 3);  // stabilized
  CHECK(invariant_rank(InvariantVariant::SpH, 1, 1) == 1);
  CHECK(invariant_rank(InvariantVariant::SpH, 1, 3) == 1);
  CHECK(threshold_met(InvariantVariant::SpH, 2, 2));
  CHECK(!threshold_met(InvariantVariant::SpH, 2, 1));
  CHECK(!threshold_met(InvariantVariant::SpU, 1, 2));
}

TEST_CASE("sp invariance of contractions under random transvections") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 3; ++n) {
    SymplecticSpace sp(n);
    std::vector<Tensor> tensors;
    for (int m = 1; m <= 2; ++m)
      for (const auto& d : enumerate_diagrams(m))
        tensors.push_back(contract_sp(d, sp));
    for (int k = 0; k < 20; ++k) {
      auto s = random_symplectic(sp, rng);
      const Tensor& t = tensors[k % tensors.size()];
      CHECK(apply_all_slots(t, s) == t);
    }
  }
}

TEST_CASE("gl invariance of colored contractions under block matrices") {
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 3; ++n) {
    SymplecticSpace sp(n);
    std::vector<Tensor> tensors;
    for (const auto& d : enumerate_colored_diagrams(2))
      tensors.push_back(contract_gl(d, sp));
    for (int k = 0; k < 20; ++k) {
      auto s = random_gl_block(sp, rng);
      const Tensor& t = tensors[k % tensors.size()];
      CHECK(apply_all_slots(t, s) == t);
    }
  }
}

TEST_CASE("directed theta family and the loop class") {
  auto f3 = figure8_basis_check(3);
  CHECK(f3.rank == 4);
  CHECK(f3.loop_image_zero);

  auto f2 = figure8_basis_check(2);  // U is trivial at genus 2
  CHECK(f2.rank == 0);
  CHECK(f2.loop_image_zero);

  auto family = colored_theta_family();
  REQUIRE(family.size() == 4);
  std::set<std::string> keys;
  for (const auto& g : family) keys.insert(canonicalize_decorated(g).key);
  CHECK(keys.size() == 4);
}

TEST_CASE("colored antisymmetry is visible in the wedge image") {
  SymplecticSpace sp(3);
  for (const auto& g : colored_theta_family()) {
    DecoratedGraph flipped = g;
    std::swap(flipped.triples[0][0], flipped.triples[0][1]);
    Tensor a = decorated_wedge_image(g, sp);
    Tensor b = decorated_wedge_image(flipped, sp);
    b.scale(-1);
    CHECK(a == b);
  }
}

TEST_CASE("loop reversal is sign reversal in the wedge image") {
  SymplecticSpace sp(3);
  DecoratedGraph d;  // dumbbell
  d.triples = {{0, 1, 2}, {3, 4, 5}};
  d.pairing = {1, 0, 5, 4, 3, 2};
  d.is_tail = {1, 0, 1, 1, 0, 0};
  DecoratedGraph r = d;
  r.is_tail[0] = 0;
  r.is_tail[1] = 1;
  Tensor sum = decorated_wedge_image(d, sp);
  sum += decorated_wedge_image(r, sp);
  CHECK(sum.zero());
  CHECK(!decorated_wedge_image(d, sp).zero());
}

TEST_CASE("c_theta on pure tensors") {
  SymplecticSpace sp(3);
  Tensor xs(3, sp.dim()), ys(3, sp.dim());
  xs.add({sp.x(1), sp.x(2), sp.x(3)}, 1);
  ys.add({sp.y(1), sp.y(2), sp.y(3)}, 1);
  CHECK(c_theta(xs, ys, sp) == Rational(1));
  CHECK(c_theta(ys, xs, sp) == Rational(-1));
  CHECK(c_theta(xs, xs, sp) == Rational(0));

  Tensor wrong(2, sp.dim());
  CHECK_THROWS_AS(c_theta(wrong, xs, sp), std::invalid_argument);
}
