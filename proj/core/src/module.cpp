#include "gres/module.hpp"

#include "gres/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace gres {

namespace {

Integer parse_integer(std::string_view s) {
  if (s.empty()) throw DomainError("empty number in ring name");
  for (char c : s)
    if (c < '0' || c > '9') throw DomainError("bad ring name component '" + std::string(s) + "'");
  return Integer(std::string(s));
}

bool is_prime(const Integer& p) {
  if (p < 2) return false;
  if (p < 1000) {
    long v = p.convert_to<long>();
    for (long d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }
  return boost::multiprecision::miller_rabin_test(p, 40);
}

}  // namespace

BaseRing BaseRing::integers_mod(const Integer& m) {
  if (m < 2) throw InvariantViolation("ring Z/m requires m >= 2");
  return BaseRing(Kind::integers_mod, m);
}

BaseRing BaseRing::prime_field(const Integer& p) {
  if (!is_prime(p)) throw InvariantViolation("prime field F_p requires p prime, got " + p.str());
  return BaseRing(Kind::prime_field, p);
}

BaseRing BaseRing::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.starts_with("Z/")) return integers_mod(parse_integer(text.substr(2)));
  if (text.starts_with("F_")) return prime_field(parse_integer(text.substr(2)));
  if (text.starts_with("F")) return prime_field(parse_integer(text.substr(1)));
  throw DomainError("unknown ring '" + std::string(text) + "'");
}

std::string BaseRing::name() const {
  switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::rationals: return "Q";
    case Kind::integers_mod: return "Z/" + modulus_.str();
    case Kind::prime_field: return "F" + modulus_.str();
  }
  return "?";
}

std::vector<Integer> invariant_factors(std::vector<Integer> orders) {
  std::map<Integer, std::size_t> counts;
  std::size_t zeros = 0;
  for (const auto& o : orders) {
    if (o == 0)
      ++zeros;
    else if (abs(o) != 1)
      ++counts[abs(o)];
  }
  // Refine the distinct orders into a pairwise coprime base.
  std::vector<Integer> base;
  for (const auto& [o, n] : counts) base.push_back(o);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        const Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        std::vector<Integer> next{g, base[i] / g, base[j] / g};
        for (std::size_t k = 0; k < base.size(); ++k)
          if (k != i && k != j) next.push_back(base[k]);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (!next.empty() && next.front() == 1) next.erase(next.begin());
        base = std::move(next);
        changed = true;
      }
  }
  // For each base element, the exponents of the summands in descending order.
  std::size_t total = 0;
  std::vector<std::vector<std::pair<unsigned, std::size_t>>> runs;
  for (const auto& b : base) {
    std::map<unsigned, std::size_t, std::greater<>> exps;
    for (const auto& [o, n] : counts) {
      unsigned e = 0;
      for (Integer v = o; v % b == 0; v /= b) ++e;
      if (e) exps[e] += n;
    }
    std::size_t sum = 0;
    runs.emplace_back();
    for (const auto& [e, n] : exps) {
      runs.back().emplace_back(e, n);
      sum += n;
    }
    total = std::max(total, sum);
  }
  std::vector<Integer> out(total, Integer(1));
  for (std::size_t k = 0; k < base.size(); ++k) {
    std::size_t pos = 0;  // from the top of the chain
    for (const auto& [e, n] : runs[k]) {
      const Integer p = pow(base[k], e);
      for (std::size_t r = 0; r < n; ++r, ++pos) out[total - 1 - pos] *= p;
    }
  }
  out.insert(out.end(), zeros, Integer(0));
  return out;
}

FgModule::FgModule(BaseRing ring, std::vector<Integer> orders) : ring_(std::move(ring)), orders_(std::move(orders)) {
  for (const auto& o : orders_) {
    bool ok = true;
    switch (ring_.kind()) {
      case BaseRing::Kind::integers: ok = o == 0 || o >= 2; break;
      case BaseRing::Kind::rationals: ok = o == 0; break;
      case BaseRing::Kind::integers_mod: ok = o >= 2 && ring_.modulus() % o == 0; break;
      case BaseRing::Kind::prime_field: ok = o == ring_.modulus(); break;
    }
    if (!ok) throw InvariantViolation("cyclic order " + o.str() + " is not admissible over " + ring_.name());
  }
  if (ring_.is_field())
    canonical_.assign(orders_.size(), Integer(0));
  else
    canonical_ = invariant_factors(orders_);
}

FgModule FgModule::free(const BaseRing& ring, std::size_t rank) {
  return FgModule(ring, std::vector<Integer>(rank, ring.free_order()));
}

FgModule FgModule::cyclic(const BaseRing& ring, const Integer& order) {
  if (ring.is_unit_order(order)) return zero(ring);
  return FgModule(ring, {order});
}

bool FgModule::is_finite() const {
  for (const auto& o : orders_)
    if (o == 0) return false;
  return true;
}

std::optional<Integer> FgModule::cardinality() const {
  Integer n = 1;
  for (const auto& o : orders_) {
    if (o == 0) return std::nullopt;
    n *= o;
  }
  return n;
}

std::size_t FgModule::free_rank() const {
  if (ring_.is_field()) return orders_.size();
  std::size_t r = 0;
  for (const auto& o : orders_)
    if (o == 0 || (ring_.kind() == BaseRing::Kind::integers_mod && o == ring_.modulus())) ++r;
  return r;
}

std::vector<Integer> FgModule::reduce(std::vector<Integer> coords) const {
  if (coords.size() != orders_.size()) throw DomainError("element has wrong number of coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = gres::reduce(coords[i], orders_[i]);
  return coords;
}

std::string FgModule::str() const {
  if (orders_.empty()) return "0";
  if (ring_.is_field()) {
    std::string base = ring_.name();
    return orders_.size() == 1 ? base : base + "^" + std::to_string(orders_.size());
  }
  // canonical_ is sorted by divisibility with zeros last; group equal runs.
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < canonical_.size();) {
    std::size_t j = i;
    while (j < canonical_.size() && canonical_[j] == canonical_[i]) ++j;
    std::string factor = canonical_[i] == 0 ? "Z" : "Z/" + canonical_[i].str();
    if (!first) os << " + ";
    first = false;
    if (j - i == 1)
      os << factor;
    else if (canonical_[i] == 0)
      os << "Z^" << (j - i);
    else
      os << '(' << factor << ")^" << (j - i);
    i = j;
  }
  return os.str();
}

ModuleMap::ModuleMap(FgModule domain, FgModule codomain, Matrix matrix, Integer denominator)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)),
      denominator_(std::move(denominator)) {
  if (!(domain_.ring() == codomain_.ring())) throw DomainError("map between modules over different rings");
  if (matrix_.rows() != codomain_.ngens() || matrix_.cols() != domain_.ngens())
    throw InvariantViolation("map matrix is " + std::to_string(matrix_.rows()) + "x" +
                             std::to_string(matrix_.cols()) + ", expected " + std::to_string(codomain_.ngens()) +
                             "x" + std::to_string(domain_.ngens()));
  if (denominator_ <= 0) throw InvariantViolation("map denominator must be positive");
  if (denominator_ != 1 && domain_.ring().kind() != BaseRing::Kind::rationals)
    throw InvariantViolation("fractional map entries are only allowed over Q");
  normalize();
  const auto& src = domain_.orders();
  const auto& dst = codomain_.orders();
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (src[j] == 0) continue;
    for (std::size_t i = 0; i < dst.size(); ++i) {
      Integer v = src[j] * matrix_(i, j);
      if (gres::reduce(v, dst[i]) != 0)
        throw InvariantViolation("map does not respect relations: generator " + std::to_string(j) + " of order " +
                                 src[j].str() + " is sent to an element whose coordinate " + std::to_string(i) +
                                 " has larger order");
    }
  }
}

void ModuleMap::normalize() {
  const auto& dst = codomain_.orders();
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    for (std::size_t j = 0; j < matrix_.cols(); ++j) matrix_(i, j) = gres::reduce(matrix_(i, j), dst[i]);
  if (denominator_ != 1) {
    Integer g = denominator_;
    for (std::size_t i = 0; i < matrix_.rows() && g != 1; ++i)
      for (std::size_t j = 0; j < matrix_.cols() && g != 1; ++j) g = gcd(g, matrix_(i, j));
    if (g != 1) {
      for (std::size_t i = 0; i < matrix_.rows(); ++i)
        for (std::size_t j = 0; j < matrix_.cols(); ++j) matrix_(i, j) /= g;
      denominator_ /= g;
    }
  }
}

ModuleMap ModuleMap::identity(const FgModule& m) { return ModuleMap(m, m, Matrix::identity(m.ngens())); }

ModuleMap ModuleMap::zero(const FgModule& domain, const FgModule& codomain) {
  return ModuleMap(domain, codomain, Matrix(codomain.ngens(), domain.ngens()));
}

ModuleMap ModuleMap::element(const FgModule& m, const std::vector<Integer>& coords, Integer denominator) {
  Matrix col(m.ngens(), 1);
  for (std::size_t i = 0; i < coords.size(); ++i) col(i, 0) = coords[i];
  return ModuleMap(FgModule::free(m.ring(), 1), m, std::move(col), std::move(denominator));
}

ModuleMap ModuleMap::operator*(const ModuleMap& rhs) const {
  if (!(rhs.codomain_ == domain_)) throw DomainError("composition: codomain/domain mismatch");
  return ModuleMap(rhs.domain_, codomain_, matrix_ * rhs.matrix_, denominator_ * rhs.denominator_);
}

ModuleMap ModuleMap::operator+(const ModuleMap& rhs) const {
  if (!(domain_ == rhs.domain_) || !(codomain_ == rhs.codomain_)) throw DomainError("sum of maps: shape mismatch");
  if (denominator_ == rhs.denominator_) return ModuleMap(domain_, codomain_, matrix_ + rhs.matrix_, denominator_);
  return ModuleMap(domain_, codomain_, matrix_.scaled(rhs.denominator_) + rhs.matrix_.scaled(denominator_),
                   denominator_ * rhs.denominator_);
}

ModuleMap ModuleMap::operator-(const ModuleMap& rhs) const { return *this + (-rhs); }

ModuleMap ModuleMap::operator-() const { return ModuleMap(domain_, codomain_, -matrix_, denominator_); }

ModuleMap ModuleMap::scaled(const Integer& s) const {
  return ModuleMap(domain_, codomain_, matrix_.scaled(s), denominator_);
}

ModuleMap ModuleMap::column_element(std::size_t j) const {
  Matrix col = matrix_.block(0, j, matrix_.rows(), 1);
  return ModuleMap(FgModule::free(domain_.ring(), 1), codomain_, std::move(col), denominator_);
}

bool ModuleMap::operator==(const ModuleMap& other) const {
  return domain_ == other.domain_ && codomain_ == other.codomain_ && denominator_ == other.denominator_ &&
         matrix_ == other.matrix_;
}

std::string ModuleMap::str() const {
  std::string s = matrix_.str();
  if (denominator_ != 1) s += "/" + denominator_.str();
  return s;
}

ModuleMap from_element_columns(const FgModule& domain, const FgModule& codomain,
                               const std::vector<ModuleMap>& columns) {
  if (columns.size() != domain.ngens()) throw DomainError("from_element_columns: wrong number of columns");
  Integer den = 1;
  for (const auto& c : columns) den = lcm(den, c.denominator());
  Matrix m(codomain.ngens(), domain.ngens());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (!(columns[j].codomain() == codomain)) throw DomainError("from_element_columns: codomain mismatch");
    Integer scale = den / columns[j].denominator();
    for (std::size_t i = 0; i < codomain.ngens(); ++i) m(i, j) = columns[j].matrix()(i, 0) * scale;
  }
  return ModuleMap(domain, codomain, std::move(m), den);
}

DirectSum direct_sum(const std::vector<FgModule>& summands, const BaseRing& ring) {
  DirectSum out;
  std::vector<Integer> orders;
  for (const auto& s : summands) {
    if (!(s.ring() == ring)) throw DomainError("direct sum over mixed rings");
    out.offsets.push_back(orders.size());
    orders.insert(orders.end(), s.orders().begin(), s.orders().end());
  }
  out.module = FgModule(ring, std::move(orders));
  const std::size_t n = out.module.ngens();
  for (std::size_t k = 0; k < summands.size(); ++k) {
    const std::size_t g = summands[k].ngens();
    Matrix inj(n, g), proj(g, n);
    for (std::size_t i = 0; i < g; ++i) {
      inj(out.offsets[k] + i, i) = 1;
      proj(i, out.offsets[k] + i) = 1;
    }
    out.injections.emplace_back(summands[k], out.module, std::move(inj));
    out.projections.emplace_back(out.module, summands[k], std::move(proj));
  }
  return out;
}

ModuleMap copair(const DirectSum& source, const std::vector<ModuleMap>& blocks, const FgModule& codomain) {
  if (blocks.size() != source.injections.size()) throw DomainError("copair: wrong number of blocks");
  Integer den = 1;
  for (const auto& b : blocks) den = lcm(den, b.denominator());
  Matrix m(codomain.ngens(), source.module.ngens());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (!(blocks[k].codomain() == codomain) || !(blocks[k].domain() == source.injections[k].domain()))
      throw DomainError("copair: block shape mismatch");
    m.set_block(0, source.offsets[k], blocks[k].matrix().scaled(den / blocks[k].denominator()));
  }
  return ModuleMap(source.module, codomain, std::move(m), den);
}

ModuleMap pair(const FgModule& domain, const std::vector<ModuleMap>& blocks, const DirectSum& target) {
  if (blocks.size() != target.injections.size()) throw DomainError("pair: wrong number of blocks");
  Integer den = 1;
  for (const auto& b : blocks) den = lcm(den, b.denominator());
  Matrix m(target.module.ngens(), domain.ngens());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (!(blocks[k].domain() == domain) || !(blocks[k].codomain() == target.projections[k].codomain()))
      throw DomainError("pair: block shape mismatch");
    m.set_block(target.offsets[k], 0, blocks[k].matrix().scaled(den / blocks[k].denominator()));
  }
  return ModuleMap(domain, target.module, std::move(m), den);
}

ModuleMap direct_sum_map(const DirectSum& source, const DirectSum& target, const std::vector<ModuleMap>& diagonal) {
  if (diagonal.size() != source.injections.size() || diagonal.size() != target.injections.size())
    throw DomainError("direct_sum_map: wrong number of blocks");
  Integer den = 1;
  for (const auto& b : diagonal) den = lcm(den, b.denominator());
  Matrix m(target.module.ngens(), source.module.ngens());
  for (std::size_t k = 0; k < diagonal.size(); ++k)
    m.set_block(target.offsets[k], source.offsets[k], diagonal[k].matrix().scaled(den / diagonal[k].denominator()));
  return ModuleMap(source.module, target.module, std::move(m), den);
}

}  // namespace gres

namespace gres {

ModuleMap block_map(const DirectSum& source, const DirectSum& target, const std::vector<Block>& blocks) {
  Integer den = 1;
  for (const auto& b : blocks) den = lcm(den, b.map.denominator());
  Matrix m(target.module.ngens(), source.module.ngens());
  for (const auto& b : blocks) {
    if (!(b.map.domain() == source.injections.at(b.col).domain()) ||
        !(b.map.codomain() == target.projections.at(b.row).codomain()))
      throw DomainError("block_map: block shape mismatch");
    const Integer scale = den / b.map.denominator();
    const Matrix& a = b.map.matrix();
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) != 0) m(target.offsets[b.row] + i, source.offsets[b.col] + j) += a(i, j) * scale;
  }
  return ModuleMap(source.module, target.module, std::move(m), den);
}

}  // namespace gres
