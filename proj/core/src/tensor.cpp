#include "gres/tensor.hpp"

#include "gres/errors.hpp"

namespace gres {

TensorProduct::TensorProduct(FgModule left, FgModule right) : left_(std::move(left)), right_(std::move(right)) {
  if (!(left_.ring() == right_.ring())) throw DomainError("tensor product over different rings");
  const BaseRing& ring = left_.ring();
  slot_.assign(left_.ngens() * right_.ngens(), -1);
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < left_.ngens(); ++i)
    for (std::size_t j = 0; j < right_.ngens(); ++j) {
      Integer o = gcd(left_.orders()[i], right_.orders()[j]);
      if (ring.is_unit_order(o)) continue;
      slot_[i * right_.ngens() + j] = static_cast<std::ptrdiff_t>(orders.size());
      orders.push_back(o);
    }
  module_ = FgModule(ring, std::move(orders));
}

std::vector<Integer> TensorProduct::pure(std::span<const Integer> a, std::span<const Integer> b) const {
  if (a.size() != left_.ngens() || b.size() != right_.ngens()) throw DomainError("tensor: element size mismatch");
  std::vector<Integer> out(module_.ngens());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::ptrdiff_t s = slot(i, j);
      if (s >= 0) out[static_cast<std::size_t>(s)] += a[i] * b[j];
    }
  }
  return module_.reduce(std::move(out));
}

ModuleMap tensor_map(const TensorProduct& source, const TensorProduct& target, const ModuleMap& f,
                     const ModuleMap& g) {
  if (!(f.domain() == source.left()) || !(g.domain() == source.right()) || !(f.codomain() == target.left()) ||
      !(g.codomain() == target.right()))
    throw DomainError("tensor_map: maps do not match the tensor products");
  Matrix m(target.module().ngens(), source.module().ngens());
  const std::size_t sl = source.left().ngens(), sr = source.right().ngens();
  const std::size_t tl = target.left().ngens(), tr = target.right().ngens();
  for (std::size_t a = 0; a < sl; ++a)
    for (std::size_t b = 0; b < sr; ++b) {
      std::ptrdiff_t col = source.slot(a, b);
      if (col < 0) continue;
      for (std::size_t c = 0; c < tl; ++c) {
        const Integer& fv = f.matrix()(c, a);
        if (fv == 0) continue;
        for (std::size_t d = 0; d < tr; ++d) {
          const Integer& gv = g.matrix()(d, b);
          if (gv == 0) continue;
          std::ptrdiff_t row = target.slot(c, d);
          if (row >= 0) m(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) += fv * gv;
        }
      }
    }
  return ModuleMap(source.module(), target.module(), std::move(m), f.denominator() * g.denominator());
}

}  // namespace gres
