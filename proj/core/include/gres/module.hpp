#pragma once

#include "gres/matrix.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gres {

/// Base ring of every computation: Z, Z/m, F_p or Q.
///
/// Modules over Z/m and F_p are handled as Z-modules annihilated by m (resp.
/// p); modules over Q as Z-lattices tensored with Q, where any nonzero
/// integer is a unit.
class BaseRing {
 public:
  enum class Kind { integers, integers_mod, prime_field, rationals };

  static BaseRing integers() { return BaseRing(Kind::integers, 0); }
  static BaseRing rationals() { return BaseRing(Kind::rationals, 0); }
  static BaseRing integers_mod(const Integer& m);
  static BaseRing prime_field(const Integer& p);
  /// "Z", "Q", "Z/6", "F2" (also "F_2", "Z/p" with p prime stays Z/p).
  static BaseRing parse(std::string_view text);

  Kind kind() const { return kind_; }
  const Integer& modulus() const { return modulus_; }
  bool is_field() const { return kind_ == Kind::prime_field || kind_ == Kind::rationals; }
  bool is_finite() const { return kind_ == Kind::integers_mod || kind_ == Kind::prime_field; }

  /// Order of the free rank-one module in the lifted picture (0 when infinite).
  Integer free_order() const { return modulus_; }
  /// True when a cyclic factor of this order is trivial over the ring.
  bool is_unit_order(const Integer& d) const { return d == 1 || (kind_ == Kind::rationals && d != 0); }

  std::string name() const;
  bool operator==(const BaseRing& other) const = default;

 private:
  BaseRing(Kind k, Integer m) : kind_(k), modulus_(std::move(m)) {}
  Kind kind_;
  Integer modulus_;
};

/// A finitely generated module held as a direct sum of cyclic modules
/// Z/o_0 + ... + Z/o_{k-1} (o_i = 0 for a free Z summand). The cyclic
/// generators form the working basis; the invariant factors are computed at
/// construction and decide isomorphism.
class FgModule {
 public:
  FgModule() : FgModule(BaseRing::integers(), {}) {}
  FgModule(BaseRing ring, std::vector<Integer> orders);

  static FgModule zero(const BaseRing& ring) { return FgModule(ring, {}); }
  static FgModule free(const BaseRing& ring, std::size_t rank);
  static FgModule cyclic(const BaseRing& ring, const Integer& order);

  const BaseRing& ring() const { return ring_; }
  const std::vector<Integer>& orders() const { return orders_; }
  std::size_t ngens() const { return orders_.size(); }
  bool is_zero() const { return orders_.empty(); }
  bool is_finite() const;
  /// Number of elements; nullopt when infinite.
  std::optional<Integer> cardinality() const;

  /// Invariant factors d_0 | d_1 | ... with zeros (free summands) last.
  /// Over a field the list is all zeros, one per dimension; over Z/m a free
  /// summand shows up as m.
  const std::vector<Integer>& canonical_form() const { return canonical_; }
  std::size_t free_rank() const;
  bool isomorphic(const FgModule& other) const {
    return ring_ == other.ring_ && canonical_ == other.canonical_;
  }

  std::vector<Integer> reduce(std::vector<Integer> coords) const;
  std::string str() const;

  /// Same ring and same cyclic basis.
  bool operator==(const FgModule& other) const { return ring_ == other.ring_ && orders_ == other.orders_; }

 private:
  BaseRing ring_;
  std::vector<Integer> orders_;
  std::vector<Integer> canonical_;
};

/// Invariant factors of Z/o_0 + ... (gcd/lcm normalization; zeros last).
std::vector<Integer> invariant_factors(std::vector<Integer> orders);

/// A homomorphism given by its matrix on the cyclic generators (column j is
/// the image of generator j). Over Q the matrix carries a positive common
/// denominator; over every other ring the denominator is 1.
class ModuleMap {
 public:
  ModuleMap() = default;
  /// Reduces entries and checks that relations go to relations.
  ModuleMap(FgModule domain, FgModule codomain, Matrix matrix, Integer denominator = 1);

  static ModuleMap identity(const FgModule& m);
  static ModuleMap zero(const FgModule& domain, const FgModule& codomain);
  /// The element with the given coordinates, as a map from the free rank-one module.
  static ModuleMap element(const FgModule& m, const std::vector<Integer>& coords, Integer denominator = 1);

  const FgModule& domain() const { return domain_; }
  const FgModule& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }
  const Integer& denominator() const { return denominator_; }

  /// Composition: (*this) after rhs.
  ModuleMap operator*(const ModuleMap& rhs) const;
  ModuleMap operator+(const ModuleMap& rhs) const;
  ModuleMap operator-(const ModuleMap& rhs) const;
  ModuleMap operator-() const;
  ModuleMap scaled(const Integer& s) const;

  /// Image of generator j as an element map.
  ModuleMap column_element(std::size_t j) const;

  bool is_zero() const { return matrix_.is_zero(); }
  bool operator==(const ModuleMap& other) const;

  std::string str() const;

 private:
  FgModule domain_;
  FgModule codomain_;
  Matrix matrix_;
  Integer denominator_{1};

  void normalize();
};

/// Assemble a map X -> M whose j-th column is the element map columns[j].
ModuleMap from_element_columns(const FgModule& domain, const FgModule& codomain,
                               const std::vector<ModuleMap>& columns);

struct DirectSum {
  FgModule module;
  std::vector<std::size_t> offsets;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};

DirectSum direct_sum(const std::vector<FgModule>& summands, const BaseRing& ring);

/// Map from a direct sum into `codomain` given blockwise.
ModuleMap copair(const DirectSum& source, const std::vector<ModuleMap>& blocks, const FgModule& codomain);
/// Map from `domain` into a direct sum given blockwise.
ModuleMap pair(const FgModule& domain, const std::vector<ModuleMap>& blocks, const DirectSum& target);
/// f_0 + f_1 + ... between direct sums.
ModuleMap direct_sum_map(const DirectSum& source, const DirectSum& target, const std::vector<ModuleMap>& diagonal);

}  // namespace gres

namespace gres {

/// One block of a map between direct sums: source summand `col` to target summand `row`.
struct Block {
  std::size_t row;
  std::size_t col;
  ModuleMap map;
};

/// Assembles a map between direct sums from its nonzero blocks; repeated blocks add up.
ModuleMap block_map(const DirectSum& source, const DirectSum& target, const std::vector<Block>& blocks);

}  // namespace gres
