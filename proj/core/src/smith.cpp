#include "gres/smith.hpp"

#include "gres/errors.hpp"

#include <algorithm>
#include <utility>

namespace gres {

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d(std::min(D.rows(), D.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
  return d;
}

namespace {

class SmithWorker {
 public:
  SmithWorker(const Matrix& a, SmithOptions opt) : d_(a), opt_(opt), m_(a.rows()), n_(a.cols()) {
    if (opt_.left) u_ = Matrix::identity(m_);
    if (opt_.left_inverse) ui_ = Matrix::identity(m_);
    if (opt_.right) v_ = Matrix::identity(n_);
    if (opt_.right_inverse) vi_ = Matrix::identity(n_);
  }

  SmithForm run() {
    std::size_t t = 0;
    const std::size_t lim = std::min(m_, n_);
    while (t < lim) {
      if (!select_pivot(t)) break;
      for (;;) {
        bool dirty = eliminate(t);
        if (dirty) {
          bring_smallest_to_pivot(t);
          continue;
        }
        if (fix_divisibility(t)) continue;
        break;
      }
      if (d_(t, t) < 0) negate_row(t);
      ++t;
    }
    SmithForm out;
    out.rank = t;
    out.D = std::move(d_);
    out.U = std::move(u_);
    out.U_inverse = std::move(ui_);
    out.V = std::move(v_);
    out.V_inverse = std::move(vi_);
    return out;
  }

 private:
  Matrix d_, u_, ui_, v_, vi_;
  SmithOptions opt_;
  std::size_t m_, n_;

  bool select_pivot(std::size_t t) {
    std::size_t bi = m_, bj = n_;
    Integer best;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        const Integer& x = d_(i, j);
        if (x == 0) continue;
        Integer ax = abs(x);
        if (bi == m_ || ax < best) {
          best = ax;
          bi = i;
          bj = j;
          if (best == 1) goto found;
        }
      }
    if (bi == m_) return false;
  found:
    if (bi != t) swap_rows(t, bi);
    if (bj != t) swap_cols(t, bj);
    return true;
  }

  // Clears column t below and row t to the right by one division pass each.
  // Returns true when nonzero remainders are left over.
  bool eliminate(std::size_t t) {
    bool dirty = false;
    const Integer p = d_(t, t);
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (d_(i, t) == 0) continue;
      Integer q = d_(i, t) / p;
      if (q != 0) add_row(i, t, -q);
      if (d_(i, t) != 0) dirty = true;
    }
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (d_(t, j) == 0) continue;
      Integer q = d_(t, j) / p;
      if (q != 0) add_col(j, t, -q);
      if (d_(t, j) != 0) dirty = true;
    }
    return dirty;
  }

  void bring_smallest_to_pivot(std::size_t t) {
    Integer best = abs(d_(t, t));
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < m_; ++i)
      if (d_(i, t) != 0 && abs(d_(i, t)) < best) {
        best = abs(d_(i, t));
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < n_; ++j)
      if (d_(t, j) != 0 && abs(d_(t, j)) < best) {
        best = abs(d_(t, j));
        bi = t;
        bj = j;
      }
    if (bi != t) swap_rows(t, bi);
    if (bj != t) swap_cols(t, bj);
  }

  bool fix_divisibility(std::size_t t) {
    const Integer& p = d_(t, t);
    for (std::size_t i = t + 1; i < m_; ++i)
      for (std::size_t j = t + 1; j < n_; ++j)
        if (d_(i, j) != 0 && d_(i, j) % p != 0) {
          add_row(t, i, 1);
          return true;
        }
    return false;
  }

  // row_i += c * row_k
  void add_row(std::size_t i, std::size_t k, const Integer& c) {
    for (std::size_t j = 0; j < n_; ++j)
      if (d_(k, j) != 0) d_(i, j) += c * d_(k, j);
    if (opt_.left)
      for (std::size_t j = 0; j < m_; ++j)
        if (u_(k, j) != 0) u_(i, j) += c * u_(k, j);
    if (opt_.left_inverse)
      for (std::size_t r = 0; r < m_; ++r)
        if (ui_(r, i) != 0) ui_(r, k) -= c * ui_(r, i);
  }

  // col_j += c * col_k
  void add_col(std::size_t j, std::size_t k, const Integer& c) {
    for (std::size_t i = 0; i < m_; ++i)
      if (d_(i, k) != 0) d_(i, j) += c * d_(i, k);
    if (opt_.right)
      for (std::size_t i = 0; i < n_; ++i)
        if (v_(i, k) != 0) v_(i, j) += c * v_(i, k);
    if (opt_.right_inverse)
      for (std::size_t r = 0; r < n_; ++r)
        if (vi_(j, r) != 0) vi_(k, r) -= c * vi_(j, r);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n_; ++j) std::swap(d_(a, j), d_(b, j));
    if (opt_.left)
      for (std::size_t j = 0; j < m_; ++j) std::swap(u_(a, j), u_(b, j));
    if (opt_.left_inverse)
      for (std::size_t r = 0; r < m_; ++r) std::swap(ui_(r, a), ui_(r, b));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m_; ++i) std::swap(d_(i, a), d_(i, b));
    if (opt_.right)
      for (std::size_t i = 0; i < n_; ++i) std::swap(v_(i, a), v_(i, b));
    if (opt_.right_inverse)
      for (std::size_t r = 0; r < n_; ++r) std::swap(vi_(a, r), vi_(b, r));
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < n_; ++j) d_(t, j) = -d_(t, j);
    if (opt_.left)
      for (std::size_t j = 0; j < m_; ++j) u_(t, j) = -u_(t, j);
    if (opt_.left_inverse)
      for (std::size_t r = 0; r < m_; ++r) ui_(r, t) = -ui_(r, t);
  }
};

using Column = std::vector<Integer>;

void axpy(Column& y, const Integer& c, const Column& x, std::size_t from = 0) {
  for (std::size_t i = from; i < x.size(); ++i)
    if (x[i] != 0) y[i] += c * x[i];
}

struct Echelon {
  std::vector<Column> pivots;
  std::vector<std::size_t> pivot_rows;
  std::vector<Column> kernel;
};

// Column Hermite reduction. Columns never chosen as pivots end up zero;
// with `track` their accumulated transforms span the kernel.
Echelon column_echelon(std::vector<Column> cols, std::size_t m, bool track) {
  const std::size_t n = cols.size();
  std::vector<Column> tr;
  if (track) {
    tr.assign(n, Column(n));
    for (std::size_t j = 0; j < n; ++j) tr[j][j] = 1;
  }
  std::vector<std::size_t> active(n);
  for (std::size_t j = 0; j < n; ++j) active[j] = j;
  std::vector<std::size_t> piv_idx;
  Echelon out;

  for (std::size_t r = 0; r < m && !active.empty(); ++r) {
    std::vector<std::size_t> nz;
    for (std::size_t j : active)
      if (cols[j][r] != 0) nz.push_back(j);
    while (nz.size() > 1) {
      std::size_t p = nz[0];
      for (std::size_t j : nz)
        if (abs(cols[j][r]) < abs(cols[p][r])) p = j;
      std::vector<std::size_t> next{p};
      for (std::size_t q : nz) {
        if (q == p) continue;
        Integer c = cols[q][r] / cols[p][r];
        axpy(cols[q], -c, cols[p], r);
        if (track) axpy(tr[q], -c, tr[p]);
        if (cols[q][r] != 0) next.push_back(q);
      }
      nz = std::move(next);
    }
    if (nz.size() == 1) {
      std::size_t p = nz[0];
      if (cols[p][r] < 0) {
        for (auto& x : cols[p]) x = -x;
        if (track)
          for (auto& x : tr[p]) x = -x;
      }
      piv_idx.push_back(p);
      out.pivot_rows.push_back(r);
      active.erase(std::find(active.begin(), active.end(), p));
    }
  }
  // Reduce earlier pivot columns modulo later pivots.
  for (std::size_t k = 0; k < piv_idx.size(); ++k) {
    const std::size_t r = out.pivot_rows[k];
    const Column& pk = cols[piv_idx[k]];
    for (std::size_t j = 0; j < k; ++j) {
      Column& cj = cols[piv_idx[j]];
      if (cj[r] == 0) continue;
      Integer c = floor_div(cj[r], pk[r]);
      if (c != 0) axpy(cj, -c, pk);
    }
  }
  for (std::size_t p : piv_idx) out.pivots.push_back(std::move(cols[p]));
  if (track)
    for (std::size_t j : active) out.kernel.push_back(std::move(tr[j]));
  return out;
}

std::vector<Column> columns_of(const Matrix& a) {
  std::vector<Column> cols(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols[j] = a.column(j);
  return cols;
}

}  // namespace

SmithForm smith_normal_form(const Matrix& a, SmithOptions options) {
  return SmithWorker(a, options).run();
}

Lattice make_lattice(std::size_t ambient, std::vector<Column>&& generators) {
  Echelon e = column_echelon(std::move(generators), ambient, false);
  Lattice l(ambient);
  l.basis_ = Matrix::from_columns(e.pivots, ambient);
  l.pivot_rows_ = std::move(e.pivot_rows);
  return l;
}

Lattice Lattice::span(const Matrix& generators) {
  return make_lattice(generators.rows(), columns_of(generators));
}

Lattice Lattice::full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

Lattice Lattice::kernel(const Matrix& a) {
  Echelon e = column_echelon(columns_of(a), a.rows(), true);
  return make_lattice(a.cols(), std::move(e.kernel));
}

Lattice Lattice::relations(const std::vector<Integer>& orders) {
  std::vector<Column> gens;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) continue;
    Column c(orders.size());
    c[i] = orders[i];
    gens.push_back(std::move(c));
  }
  return make_lattice(orders.size(), std::move(gens));
}

std::optional<std::vector<Integer>> Lattice::coordinates(std::span<const Integer> v) const {
  if (v.size() != ambient_) throw DomainError("lattice coordinates: dimension mismatch");
  Column rest(v.begin(), v.end());
  std::vector<Integer> c(rank());
  for (std::size_t k = 0; k < rank(); ++k) {
    const std::size_t r = pivot_rows_[k];
    if (rest[r] == 0) continue;
    const Integer& p = basis_(r, k);
    if (rest[r] % p != 0) return std::nullopt;
    c[k] = rest[r] / p;
    for (std::size_t i = r; i < ambient_; ++i)
      if (basis_(i, k) != 0) rest[i] -= c[k] * basis_(i, k);
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return c;
}

bool Lattice::contains(const Lattice& other) const {
  for (std::size_t j = 0; j < other.rank(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

Lattice Lattice::operator+(const Lattice& other) const {
  if (ambient_ != other.ambient_) throw DomainError("lattice sum: dimension mismatch");
  return span(hstack(basis_, other.basis_));
}

Lattice Lattice::intersect(const Lattice& other) const {
  return image(basis_, preimage(basis_, other));
}

Lattice Lattice::saturation() const {
  Lattice annihilator = kernel(basis_.transpose());
  return kernel(annihilator.basis().transpose());
}

Lattice preimage(const Matrix& a, const Lattice& target) {
  if (a.rows() != target.ambient()) throw DomainError("preimage: dimension mismatch");
  Lattice k = Lattice::kernel(hstack(a, -target.basis()));
  std::vector<std::size_t> top(a.cols());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = i;
  return Lattice::span(k.basis().select_rows(top));
}

Lattice image(const Matrix& a, const Lattice& source) {
  if (a.cols() != source.ambient()) throw DomainError("image: dimension mismatch");
  return Lattice::span(a * source.basis());
}

std::optional<std::vector<Integer>> solve_integer(const Matrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw DomainError("solve: dimension mismatch");
  SmithForm s = smith_normal_form(a, {.left = true, .left_inverse = false, .right = true, .right_inverse = false});
  std::vector<Integer> ub = s.U.apply(b);
  std::vector<Integer> y(a.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.D(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.D(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V.apply(y);
}

std::optional<RationalVector> solve_rational(const Matrix& a, std::span<const Integer> b) {
  if (b.size() != a.rows()) throw DomainError("solve: dimension mismatch");
  SmithForm s = smith_normal_form(a, {.left = true, .left_inverse = false, .right = true, .right_inverse = false});
  std::vector<Integer> ub = s.U.apply(b);
  Integer den = 1;
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      den = lcm(den, s.D(i, i) / gcd(ub[i], s.D(i, i)));
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> y(a.cols());
  for (std::size_t i = 0; i < s.rank; ++i) y[i] = ub[i] * den / s.D(i, i);
  RationalVector out;
  out.numerators = s.V.apply(y);
  out.denominator = den;
  return out;
}

}  // namespace gres
