#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "torelli/rational.hpp"
#include "torelli/sparse_matrix.hpp"

namespace torelli {

// Genus-n symplectic space H of dimension 2n. Basis indices 0..n-1 are
// x_1..x_n and n..2n-1 are y_1..y_n, with omega(x_i, y_j) = delta_ij.
struct SymplecticSpace {
  int genus;

  explicit SymplecticSpace(int n);
  int dim() const { return 2 * genus; }
  int omega(int a, int b) const;
  std::string basis_label(int a) const;
  int x(int i) const { return i - 1; }          // 1-based
  int y(int i) const { return genus + i - 1; }  // 1-based
};

// Sparse exact tensor with `arity` slots, each running over 0..dim-1.
class Tensor {
 public:
  Tensor(int arity, int dim);

  int arity() const { return arity_; }
  int dim() const { return dim_; }
  const std::map<std::vector<int>, Rational>& entries() const {
    return entries_;
  }

  void add(const std::vector<int>& idx, const Rational& c);
  Rational coefficient(const std::vector<int>& idx) const;
  bool zero() const { return entries_.empty(); }

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& scale(const Rational& c);
  bool operator==(const Tensor& o) const;

  // Tensor product: slots of `o` appended after ours.
  Tensor outer(const Tensor& o) const;

  // Apply a dim x dim matrix on one slot: e_j -> sum_i M[i][j] e_i.
  Tensor apply_slot(const std::vector<std::vector<Rational>>& m,
                    int slot) const;

  // Flatten to a sparse vector with fixed-radix index packing.
  SparseVec flatten() const;
  long flat_size() const;

 private:
  int arity_;
  int dim_;
  std::map<std::vector<int>, Rational> entries_;
};

// Element of the third exterior power: strictly increasing index triples.
class Wedge3Element {
 public:
  explicit Wedge3Element(int dim);

  int dim() const { return dim_; }
  const std::map<std::array<int, 3>, Rational>& entries() const {
    return entries_;
  }
  void add(std::array<int, 3> idx, Rational c);  // sorts, tracks the sign
  bool zero() const { return entries_.empty(); }
  Wedge3Element& operator+=(const Wedge3Element& o);
  Wedge3Element& operator-=(const Wedge3Element& o);
  Wedge3Element& scale(const Rational& c);
  bool operator==(const Wedge3Element& o) const;

 private:
  int dim_;
  std::map<std::array<int, 3>, Rational> entries_;
};

// Element of U = ker(wedge^3 H -> H), kept as its kernel representative.
struct UElement {
  Wedge3Element value;

  // Validates kernel membership.
  static UElement from(Wedge3Element w, const SymplecticSpace& sp);
};

// Enumeration of the wedge basis (sorted triples in lexicographic order).
std::vector<std::array<int, 3>> wedge_basis(int dim);
int wedge_index(const std::array<int, 3>& t, int dim);

// Full antisymmetrization without the 1/6 factor: one wedge monomial maps
// to its six signed permutations in tensor degree 3.
Tensor wedge3_include(const Wedge3Element& w);

// The natural quotient map in the other direction.
Wedge3Element project_wedge3(const Tensor& t);

// Contraction to H: x1^x2^x3 -> 2( w(x1,x2)x3 - w(x1,x3)x2 + w(x2,x3)x1 ).
std::vector<Rational> kappa(const Wedge3Element& w, const SymplecticSpace& sp);

// x -> x ^ omega = sum_i x ^ x_i ^ y_i.
Wedge3Element iota(const std::vector<Rational>& v, const SymplecticSpace& sp);

// kappa(iota(x)) = c_n * x; returns c_n after asserting the identity shape
// on every basis vector. c_1 = 0 (degenerate genus).
Rational kappa_iota_scalar(const SymplecticSpace& sp);

// Basis of U = ker(kappa) inside wedge^3 H, in kernel_basis order.
std::vector<Wedge3Element> u_basis(const SymplecticSpace& sp);

// Projection onto ker(kappa) along the image of iota. Throws at genus 1
// where the splitting scalar vanishes.
Wedge3Element project_U(const Wedge3Element& w, const SymplecticSpace& sp);

// Matrix of project_U in the wedge basis (columns are images).
std::vector<std::vector<Rational>> project_U_matrix(const SymplecticSpace& sp);

}  // namespace torelli
