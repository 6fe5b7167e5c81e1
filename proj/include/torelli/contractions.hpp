#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torelli/chord_diagram.hpp"
#include "torelli/symplectic.hpp"

namespace torelli {

// Invariant element of tensor degree 2m dual to a degree-m diagram: each
// chord (a,b) carries sum_i ( x_i at a, y_i at b  -  y_i at a, x_i at b ).
Tensor contract_sp(const ChordDiagram& d, const SymplecticSpace& sp);

// GL version: a chord directed tail->head carries sum_i x_i at the tail and
// y_i at the head (V at the tail, V* at the head).
Tensor contract_gl(const ColoredChordDiagram& d, const SymplecticSpace& sp);

// Value of the invariant map of a diagram on a tuple of basis vectors:
// product over chords of omega(e_{v[a]}, e_{v[b]}).
Rational diagram_pairing(const ChordDiagram& d, const std::vector<int>& v,
                         const SymplecticSpace& sp);

// Pair an invariant tensor against a basis tuple slotwise through omega.
Rational pair_with_basis_tuple(const Tensor& t, const std::vector<int>& v,
                               const SymplecticSpace& sp);

// Regroup a degree-6m tensor over H into a degree-2m tensor over wedge^3 H
// by antisymmetrizing each consecutive index triple (natural quotient, no
// 1/6).
Tensor group_to_wedge(const Tensor& t, const SymplecticSpace& sp);

// Apply the U-projection matrix on every slot of a wedge-indexed tensor.
Tensor project_U_slots(const Tensor& t, const SymplecticSpace& sp);

enum class InvariantVariant { SpH, SpWedge, SpU, GlH, GlWedge, GlU };

std::string variant_name(InvariantVariant v);

// Rank of the span of all degree-m diagram contractions inside the stated
// invariant space at genus n. Wedge/U variants consume diagrams of degree
// 3m. Caps: m <= 4 for the H variants, m <= 1 for wedge/U.
int invariant_rank(InvariantVariant variant, int m, int n);

// Whether the second-fundamental-theorem threshold holds for the variant.
bool threshold_met(InvariantVariant variant, int m, int n);

// GL-contraction of a labeled 2-colored trivalent graph via its chord
// diagram: vertex j occupies points 3j+1..3j+3 in triple order.
ColoredChordDiagram decorated_to_diagram(const DecoratedGraph& g);

Tensor decorated_contract_gl(const DecoratedGraph& g,
                             const SymplecticSpace& sp);

// Image of a decorated graph in tensor^{2m} of wedge^3 H, or of U.
Tensor decorated_wedge_image(const DecoratedGraph& g,
                             const SymplecticSpace& sp);
Tensor decorated_u_image(const DecoratedGraph& g, const SymplecticSpace& sp);

// The four loop-free 2-colored theta classes (k of the three edges directed
// from vertex 0 to vertex 1, k = 0..3).
std::vector<DecoratedGraph> colored_theta_family();

struct Figure8Report {
  int genus;
  int rank;             // rank of the four theta images in tensor^2 U
  bool loop_image_zero; // decorated dumbbell image vanishes after the U step
};

Figure8Report figure8_basis_check(int n);

// C_Theta(a1 x a2 x a3, b1 x b2 x b3) = w(a1,b1) w(a2,b2) w(a3,b3),
// extended bilinearly over two tensors of arity 3.
Rational c_theta(const Tensor& a, const Tensor& b, const SymplecticSpace& sp);

// Random exact symplectic matrix: product of 5..20 integer transvections
// x -> x + w(x,v) v with parameters in [-3,3].
std::vector<std::vector<Rational>> random_symplectic(const SymplecticSpace& sp,
                                                     std::mt19937_64& rng);

// Random block matrix diag(A, (A^t)^-1) with A an integer product of
// elementary row operations (so the inverse stays exact).
std::vector<std::vector<Rational>> random_gl_block(const SymplecticSpace& sp,
                                                   std::mt19937_64& rng);

// Apply a dim x dim matrix on every slot.
Tensor apply_all_slots(const Tensor& t,
                       const std::vector<std::vector<Rational>>& m);

}  // namespace torelli
