#pragma once

#include "gres/module.hpp"

#include <vector>

namespace gres {

/// M (x) N with generators m_i (x) n_j of order gcd(o_i, e_j), ordered
/// row-major in (i, j); trivial ones are dropped.
class TensorProduct {
 public:
  TensorProduct(FgModule left, FgModule right);

  const FgModule& left() const { return left_; }
  const FgModule& right() const { return right_; }
  const FgModule& module() const { return module_; }

  /// Generator index of m_i (x) n_j, or -1 when that generator is zero.
  std::ptrdiff_t slot(std::size_t i, std::size_t j) const { return slot_[i * right_.ngens() + j]; }

  /// The universal bilinear map on coordinates.
  std::vector<Integer> pure(std::span<const Integer> a, std::span<const Integer> b) const;

 private:
  FgModule left_, right_, module_;
  std::vector<std::ptrdiff_t> slot_;
};

inline TensorProduct tensor(const FgModule& m, const FgModule& n) { return TensorProduct(m, n); }

/// f (x) g between tensor products.
ModuleMap tensor_map(const TensorProduct& source, const TensorProduct& target, const ModuleMap& f, const ModuleMap& g);

}  // namespace gres
