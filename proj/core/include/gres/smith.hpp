#pragma once

#include "gres/matrix.hpp"

#include <optional>
#include <vector>

namespace gres {

/// Which unimodular transforms smith_normal_form should accumulate.
struct SmithOptions {
  bool left = true;
  bool left_inverse = false;
  bool right = true;
  bool right_inverse = false;
};

/// U * A * V = D with D diagonal, d_0 | d_1 | ... and zeros last.
/// Transforms that were not requested are left empty.
struct SmithForm {
  Matrix U;
  Matrix D;
  Matrix V;
  Matrix U_inverse;
  Matrix V_inverse;
  std::size_t rank = 0;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const Matrix& a, SmithOptions options = {});

/// A subgroup of Z^n held by a basis in column Hermite normal form.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient = 0) : ambient_(ambient), basis_(ambient, 0) {}

  static Lattice span(const Matrix& generators);
  static Lattice full(std::size_t ambient);
  /// {x : A x = 0}; always saturated.
  static Lattice kernel(const Matrix& a);
  /// Lattice spanned by the diagonal entries of `orders` on the coordinate
  /// axes (the relation lattice of a cyclic decomposition).
  static Lattice relations(const std::vector<Integer>& orders);

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }

  bool contains(std::span<const Integer> v) const { return coordinates(v).has_value(); }
  bool contains(const Lattice& other) const;
  std::optional<std::vector<Integer>> coordinates(std::span<const Integer> v) const;

  Lattice operator+(const Lattice& other) const;
  Lattice intersect(const Lattice& other) const;
  Lattice saturation() const;

  bool operator==(const Lattice& other) const { return basis_ == other.basis_; }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivot_rows_;

  friend Lattice make_lattice(std::size_t, std::vector<std::vector<Integer>>&&);
};

/// {x : A x in L}.
Lattice preimage(const Matrix& a, const Lattice& target);
/// A(L).
Lattice image(const Matrix& a, const Lattice& source);

/// Some integral x with A x = b, if one exists.
std::optional<std::vector<Integer>> solve_integer(const Matrix& a, std::span<const Integer> b);

/// Rational solution of A x = b written as (numerators, common denominator).
struct RationalVector {
  std::vector<Integer> numerators;
  Integer denominator{1};
};
std::optional<RationalVector> solve_rational(const Matrix& a, std::span<const Integer> b);

}  // namespace gres
