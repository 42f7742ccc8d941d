#pragma once

#include "gres/errors.hpp"
#include "gres/module.hpp"

#include <cstdint>
#include <vector>

namespace gres {

/// Mixed-radix indexing of the elements of a finite module: coordinate 0 is
/// the least significant digit.
class ElementIndexer {
 public:
  explicit ElementIndexer(const FgModule& m) : orders_(m.orders()) {
    count_ = 1;
    for (const auto& o : orders_) {
      if (o == 0) throw DomainError("cannot enumerate an infinite module");
      if (o > (std::uint64_t(1) << 62) / count_) throw SizeLimitExceeded("module too large to enumerate");
      count_ *= o.convert_to<std::uint64_t>();
    }
  }

  std::uint64_t size() const { return count_; }

  std::vector<Integer> element(std::uint64_t index) const {
    std::vector<Integer> c(orders_.size());
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      std::uint64_t o = orders_[i].convert_to<std::uint64_t>();
      c[i] = index % o;
      index /= o;
    }
    return c;
  }

  std::uint64_t index(std::span<const Integer> coords) const {
    std::uint64_t idx = 0, base = 1;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      idx += reduce(coords[i], orders_[i]).convert_to<std::uint64_t>() * base;
      base *= orders_[i].convert_to<std::uint64_t>();
    }
    return idx;
  }

 private:
  std::vector<Integer> orders_;
  std::uint64_t count_ = 1;
};

}  // namespace gres
