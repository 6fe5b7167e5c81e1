#pragma once

#include <random>
#include <vector>

#include "torelli/symplectic.hpp"

namespace torelli {

using Mat = std::vector<std::vector<Rational>>;

Mat mat_identity(int d);
Mat mat_product(const Mat& a, const Mat& b);
Mat mat_rref(Mat m);
bool same_row_space(const Mat& a, const Mat& b);

// Two transverse Lagrangian subspaces of H, each given by a basis matrix
// (n rows of length 2n).
struct LagrangianPair {
  SymplecticSpace space;
  Mat plus;
  Mat minus;

  static LagrangianPair standard(int n);
  LagrangianPair swapped() const;
  LagrangianPair transformed(const Mat& s) const;  // row vectors map by s^t
  void validate() const;
};

// Image of a random word of 5..20 integer transvections on the standard pair.
LagrangianPair random_pair(int n, std::mt19937_64& rng);

// The projection wedge^3 H -> wedge^3 L^{sign} killing the other Lagrangian,
// as a C(n,3) x C(2n,3) matrix in the pair's own bases. sign: +1 or -1.
Mat eta(const LagrangianPair& pair, int sign);

// Alternating form on wedge^3 H in the standard wedge basis:
// (u, v) -> <eta+ u, eta- v> - <eta+ v, eta- u>, where < , > is the
// determinant pairing det[ omega(a_i, b_j) ] on actual vectors.
struct TwoForm {
  Mat matrix;  // antisymmetric, C(2n,3) square
  bool operator==(const TwoForm& o) const { return matrix == o.matrix; }
};

TwoForm cup_form(const LagrangianPair& pair);

// cup_form(L+,L-) == cup_form(L-,L+), which the skew-symmetry of omega
// forces for every transverse pair.
bool swapped_pair_equality(const LagrangianPair& pair);

bool pairs_equal_or_swapped(const LagrangianPair& a, const LagrangianPair& b);

// Whether the two pairs have equal cup forms. Theorem-level behavior: equal
// iff the pairs agree as (unordered) subspace pairs, provided dim H >= 6.
bool cup_forms_equal(const LagrangianPair& a, const LagrangianPair& b);

// Normative coordinate form: delta-dualize the pair bases, lift both
// arguments, read the pure-x coefficients of the first and the pure-y
// coefficients of the second, and sum the products over triples i<j<k.
Rational c_theta_U(const Wedge3Element& a1, const Wedge3Element& a2,
                   const LagrangianPair& pair);

// Oracle route for c_theta_U: project through eta+/eta-, include both
// factors into tensor degree 3 (no 1/6), and evaluate c_theta.
Rational c_theta_U_composite(const Wedge3Element& a1, const Wedge3Element& a2,
                             const LagrangianPair& pair);

inline Rational c_theta_U(const UElement& a1, const UElement& a2,
                          const LagrangianPair& pair) {
  return c_theta_U(a1.value, a2.value, pair);
}

}  // namespace torelli
