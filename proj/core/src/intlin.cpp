#include "torusdual/intlin.hpp"

#include "torusdual/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torusdual {

namespace {

int compare_abs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

void negate_column(IntMatrix& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

// Applies elementary operations to A while keeping U A V = D bookkeeping in sync.
struct SmithState {
  IntMatrix a;
  IntMatrix* u = nullptr;
  IntMatrix* u_inv = nullptr;
  IntMatrix* v = nullptr;
  IntMatrix* v_inv = nullptr;

  void row_add(std::size_t target, std::size_t source, const Integer& f) {
    if (sgn(f) == 0) return;
    a.add_row_multiple(target, source, f);
    if (u) u->add_row_multiple(target, source, f);
    if (u_inv) u_inv->add_column_multiple(source, target, -f);
  }
  void row_swap(std::size_t x, std::size_t y) {
    if (x == y) return;
    a.swap_rows(x, y);
    if (u) u->swap_rows(x, y);
    if (u_inv) u_inv->swap_columns(x, y);
  }
  void row_negate(std::size_t x) {
    a.negate_row(x);
    if (u) u->negate_row(x);
    if (u_inv) negate_column(*u_inv, x);
  }
  void col_add(std::size_t target, std::size_t source, const Integer& f) {
    if (sgn(f) == 0) return;
    a.add_column_multiple(target, source, f);
    if (v) v->add_column_multiple(target, source, f);
    if (v_inv) v_inv->add_row_multiple(source, target, -f);
  }
  void col_swap(std::size_t x, std::size_t y) {
    if (x == y) return;
    a.swap_columns(x, y);
    if (v) v->swap_columns(x, y);
    if (v_inv) v_inv->swap_rows(x, y);
  }

  // Replaces diagonal entries (p, q) = (x, y) by (gcd, lcm).
  void gcd_fix(std::size_t i, std::size_t j) {
    Integer x = a(i, i), y = a(j, j), s, t;
    Integer g = extended_gcd(x, y, s, t);
    Integer xg = x / g, yg = y / g;
    if (u) combine_rows(*u, i, j, s, t, -yg, xg);
    if (u_inv) combine_columns(*u_inv, i, j, xg, yg, -t, s);
    if (v) combine_columns(*v, i, j, 1, 1, -t * yg, s * xg);
    if (v_inv) combine_rows(*v_inv, i, j, s * xg, t * yg, -1, 1);
    a(i, i) = g;
    a(j, j) = x * yg;
  }

  // row_i <- p row_i + q row_j, row_j <- r row_i + s row_j
  static void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                           const Integer& r, const Integer& s) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer x = m(i, c), y = m(j, c);
      m(i, c) = p * x + q * y;
      m(j, c) = r * x + s * y;
    }
  }
  // col_i <- p col_i + q col_j, col_j <- r col_i + s col_j
  static void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, const Integer& p, const Integer& q,
                              const Integer& r, const Integer& s) {
    for (std::size_t c = 0; c < m.rows(); ++c) {
      Integer x = m(c, i), y = m(c, j);
      m(c, i) = p * x + q * y;
      m(c, j) = r * x + s * y;
    }
  }
};

// Row echelon form over the first `active` columns; remaining columns ride along.
// Returns pivot columns, one per nonzero leading row.
std::vector<std::size_t> echelon(IntMatrix& a, std::size_t active) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < active && top < a.rows(); ++c) {
    bool found = false;
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t r = top; r < a.rows(); ++r) {
        if (sgn(a(r, c)) == 0) continue;
        if (best == a.rows() || compare_abs(a(r, c), a(best, c)) < 0) best = r;
      }
      if (best == a.rows()) break;
      found = true;
      a.swap_rows(top, best);
      bool clean = true;
      for (std::size_t r = top + 1; r < a.rows(); ++r) {
        if (sgn(a(r, c)) == 0) continue;
        Integer q = round_quotient(a(r, c), a(top, c));
        a.add_row_multiple(r, top, -q);
        if (sgn(a(r, c)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (found) {
      if (sgn(a(top, c)) < 0) a.negate_row(top);
      pivots.push_back(c);
      ++top;
    }
  }
  return pivots;
}

void reduce_above(IntMatrix& a, const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    std::size_t p = pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      if (sgn(a(k, p)) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(k, p).get_mpz_t(), a(i, p).get_mpz_t());
      a.add_row_multiple(k, i, -q);
    }
  }
}

}  // namespace

SmithDecomposition snf(const IntMatrix& m, SmithOptions options) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithDecomposition out;
  SmithState st;
  st.a = m;
  if (options.left) {
    out.U = IntMatrix::identity(rows);
    st.u = &out.U;
  }
  if (options.left_inverse) {
    out.U_inverse = IntMatrix::identity(rows);
    st.u_inv = &out.U_inverse;
  }
  if (options.right) {
    out.V = IntMatrix::identity(cols);
    st.v = &out.V;
  }
  if (options.right_inverse) {
    out.V_inverse = IntMatrix::identity(cols);
    st.v_inv = &out.V_inverse;
  }
  IntMatrix& a = st.a;
  const std::size_t lim = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < lim; ++t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        if (bi == rows || compare_abs(a(i, j), a(bi, bj)) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi == rows) break;
    st.row_swap(t, bi);
    st.col_swap(t, bj);
    while (true) {
      for (std::size_t i = t + 1; i < rows; ++i)
        if (sgn(a(i, t)) != 0) st.row_add(i, t, -round_quotient(a(i, t), a(t, t)));
      for (std::size_t j = t + 1; j < cols; ++j)
        if (sgn(a(t, j)) != 0) st.col_add(j, t, -round_quotient(a(t, j), a(t, t)));
      // Any leftover remainder is smaller than the pivot; move the smallest one into place.
      std::size_t ri = rows, cj = cols;
      const Integer* best = nullptr;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (sgn(a(i, t)) != 0 && (!best || compare_abs(a(i, t), *best) < 0)) {
          best = &a(i, t);
          ri = i;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (sgn(a(t, j)) != 0 && (!best || compare_abs(a(t, j), *best) < 0)) {
          best = &a(t, j);
          cj = j;
          ri = rows;
        }
      if (!best) break;
      if (ri != rows) {
        st.row_swap(t, ri);
      } else {
        st.col_swap(t, cj);
      }
    }
    if (sgn(a(t, t)) < 0) st.row_negate(t);
  }
  const std::size_t rank = t;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      if (!divides(a(i, i), a(j, j))) st.gcd_fix(i, j);
  out.rank = rank;
  out.invariant_factors.assign(lim, Integer(0));
  for (std::size_t i = 0; i < rank; ++i) out.invariant_factors[i] = a(i, i);
  out.D = std::move(st.a);
  return out;
}

std::size_t rank_of(const IntMatrix& m) {
  IntMatrix a = m;
  return echelon(a, a.cols()).size();
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse_unimodular: matrix is not square");
  SmithDecomposition s = snf(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (s.D(i, i) != 1) throw DomainError("inverse_unimodular: matrix is not unimodular");
  return s.V * s.U;
}

// ---------------------------------------------------------------------------
// Lattice

Lattice Lattice::from_rows(const IntMatrix& generators) {
  IntMatrix a = generators;
  auto pivots = echelon(a, a.cols());
  reduce_above(a, pivots);
  Lattice l(generators.cols());
  l.basis_ = a.row_range(0, pivots.size());
  l.pivots_ = std::move(pivots);
  return l;
}

Lattice Lattice::from_columns(const IntMatrix& generators) { return from_rows(generators.transpose()); }

Lattice Lattice::full(std::size_t dim) {
  Lattice l(dim);
  l.basis_ = IntMatrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) l.pivots_.push_back(i);
  return l;
}

Lattice Lattice::diagonal(const IntVector& moduli) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (sgn(moduli[i]) == 0) continue;
    IntVector r(moduli.size());
    r[i] = abs(moduli[i]);
    rows.push_back(std::move(r));
  }
  return from_rows(IntMatrix::from_rows(rows, moduli.size()));
}

std::optional<IntVector> Lattice::coordinates(const IntVector& v) const {
  if (v.size() != dim_) throw ContractViolation("Lattice::coordinates: dimension mismatch");
  IntVector r = v;
  IntVector coords(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    std::size_t p = pivots_[i];
    if (sgn(r[p]) == 0) continue;
    if (!divides(basis_(i, p), r[p])) return std::nullopt;
    Integer q = r[p] / basis_(i, p);
    coords[i] = q;
    auto row = basis_.row(i);
    for (std::size_t j = p; j < dim_; ++j)
      if (sgn(row[j]) != 0) mpz_submul(r[j].get_mpz_t(), q.get_mpz_t(), row[j].get_mpz_t());
  }
  if (!is_zero(r)) return std::nullopt;
  return coords;
}

bool Lattice::contains(const Lattice& other) const {
  if (other.dim_ != dim_) return false;
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row_vector(i))) return false;
  return true;
}

Lattice Lattice::operator+(const Lattice& other) const {
  if (other.dim_ != dim_) throw ContractViolation("Lattice sum: dimension mismatch");
  return from_rows(vstack(basis_, other.basis_));
}

Integer Lattice::index() const {
  if (rank() != dim_) throw DomainError("Lattice::index: lattice is not of full rank");
  Integer idx = 1;
  for (std::size_t i = 0; i < rank(); ++i) idx *= basis_(i, pivots_[i]);
  return idx;
}

// ---------------------------------------------------------------------------
// Kernels and solving

Lattice kernel_lattice(const IntMatrix& m) {
  const std::size_t n = m.cols();
  IntMatrix a = hstack(m.transpose(), IntMatrix::identity(n));
  auto pivots = echelon(a, m.rows());
  std::vector<IntVector> rows;
  for (std::size_t i = pivots.size(); i < n; ++i) {
    IntVector r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = a(i, m.rows() + j);
    rows.push_back(std::move(r));
  }
  return Lattice::from_rows(IntMatrix::from_rows(rows, n));
}

IntMatrix kernel_basis(const IntMatrix& m) { return kernel_lattice(m).basis().transpose(); }

Lattice preimage_lattice(const IntMatrix& m, const IntMatrix& relations) {
  if (relations.rows() != m.rows()) throw ContractViolation("preimage_lattice: row mismatch");
  Lattice k = kernel_lattice(hstack(m, relations));
  return Lattice::from_rows(k.basis().column_range(0, m.cols()));
}

std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b, const IntVector& moduli) {
  if (b.size() != m.rows()) throw ContractViolation("solve: right-hand side has wrong length");
  if (!moduli.empty() && moduli.size() != m.rows()) throw ContractViolation("solve: moduli have wrong length");
  IntMatrix a = m;
  std::vector<IntVector> extra;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (sgn(moduli[i]) == 0) continue;
    IntVector col(m.rows());
    col[i] = moduli[i];
    extra.push_back(std::move(col));
  }
  if (!extra.empty()) a = hstack(a, IntMatrix::from_columns(extra, m.rows()));
  SmithDecomposition s = snf(a, {.left = true, .right = true});
  IntVector c = s.U.apply(b);
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < s.rank) {
      if (!divides(s.D(i, i), c[i])) return std::nullopt;
      y[i] = c[i] / s.D(i, i);
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  IntVector x = s.V.apply(y);
  x.resize(m.cols());
  return x;
}

// ---------------------------------------------------------------------------
// FinAbGroup

FinAbGroup FinAbGroup::from_invariants(std::size_t free_rank, IntVector torsion) {
  IntMatrix rel(free_rank + torsion.size(), torsion.size());
  for (std::size_t i = 0; i < torsion.size(); ++i) rel(free_rank + i, i) = torsion[i];
  return from_relations(rel);
}

FinAbGroup FinAbGroup::from_relations(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  SmithDecomposition s = snf(relations, {.left = true, .right = false, .left_inverse = true});
  std::vector<std::size_t> order;
  FinAbGroup g;
  for (std::size_t i = s.rank; i < n; ++i) order.push_back(i);
  g.free_rank_ = order.size();
  for (std::size_t i = 0; i < s.rank; ++i) {
    if (s.D(i, i) == 1) continue;
    order.push_back(i);
    g.torsion_.push_back(s.D(i, i));
  }
  g.to_canonical_ = s.U.select_rows(order);
  g.from_canonical_ = s.U_inverse.select_columns(order);
  if (n == 0) {
    g.to_canonical_ = IntMatrix(0, 0);
    g.from_canonical_ = IntMatrix(0, 0);
  }
  return g;
}

IntVector FinAbGroup::moduli() const {
  IntVector m(free_rank_, Integer(0));
  m.insert(m.end(), torsion_.begin(), torsion_.end());
  return m;
}

Integer FinAbGroup::order() const {
  if (free_rank_ > 0) return 0;
  Integer o = 1;
  for (const auto& d : torsion_) o *= d;
  return o;
}

Integer FinAbGroup::element_order(const IntVector& coords) const {
  IntVector c = reduce(coords);
  for (std::size_t i = 0; i < free_rank_; ++i)
    if (sgn(c[i]) != 0) return 0;
  Integer o = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    const Integer& d = torsion_[i];
    o = lcm_of(o, d / gcd_of(c[free_rank_ + i], d));
  }
  return o;
}

bool FinAbGroup::annihilated_by(const Integer& n) const {
  if (free_rank_ > 0) return n == 0;
  for (const auto& d : torsion_)
    if (!divides(d, n)) return false;
  return true;
}

IntVector FinAbGroup::reduce(IntVector coords) const {
  if (coords.size() != num_coordinates()) throw ContractViolation("FinAbGroup::reduce: wrong number of coordinates");
  for (std::size_t i = 0; i < torsion_.size(); ++i) reduce_mod(coords[free_rank_ + i], torsion_[i]);
  return coords;
}

IntVector FinAbGroup::coordinates(const IntVector& ambient) const {
  if (ambient.size() != ambient_dim()) throw ContractViolation("FinAbGroup::coordinates: wrong ambient dimension");
  if (num_coordinates() == 0) return {};
  return reduce(to_canonical_.apply(ambient));
}

IntVector FinAbGroup::ambient_element(const IntVector& coords) const {
  if (coords.size() != num_coordinates()) throw ContractViolation("FinAbGroup::ambient_element: wrong length");
  if (num_coordinates() == 0) return IntVector(ambient_dim());
  return from_canonical_.apply(coords);
}

std::string FinAbGroup::to_string() const {
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.emplace_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& d : torsion_) parts.push_back("Z/" + d.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
  return s;
}

FinAbGroup cokernel_structure(const IntMatrix& m) { return FinAbGroup::from_relations(m); }

Lattice relation_lattice(const FinAbGroup& g) { return Lattice::diagonal(g.moduli()); }

// ---------------------------------------------------------------------------
// Subquotient

Subquotient::Subquotient(Lattice numerator, const IntMatrix& denominator) : numerator_(std::move(numerator)) {
  if (denominator.rows() != numerator_.dim()) throw ContractViolation("Subquotient: denominator has wrong dimension");
  IntMatrix y(numerator_.rank(), denominator.cols());
  for (std::size_t j = 0; j < denominator.cols(); ++j) {
    auto c = numerator_.coordinates(denominator.column(j));
    if (!c) throw ContractViolation("Subquotient: denominator is not contained in numerator");
    y.set_column(j, *c);
  }
  group_ = FinAbGroup::from_relations(y);
  if (numerator_.rank() == 0) group_ = FinAbGroup::from_relations(IntMatrix(0, 0));
}

IntVector Subquotient::coordinates(const IntVector& v) const {
  auto c = numerator_.coordinates(v);
  if (!c) throw ContractViolation("Subquotient::coordinates: element is not in the numerator");
  return group_.coordinates(*c);
}

bool Subquotient::is_zero_class(const IntVector& v) const { return is_zero(coordinates(v)); }

IntVector Subquotient::lift(const IntVector& coords) const {
  if (numerator_.rank() == 0) return IntVector(ambient_dim());
  IntVector z = group_.ambient_element(coords);
  return numerator_.basis().transpose().apply(z);
}

IntVector Subquotient::representative(std::size_t k) const {
  if (k >= group_.num_coordinates()) throw ContractViolation("Subquotient::representative: index out of range");
  IntVector e(group_.num_coordinates());
  e[k] = 1;
  return lift(e);
}

// ---------------------------------------------------------------------------
// GroupHom

namespace {

IntMatrix relation_columns(const FinAbGroup& g) {
  IntVector mod = g.moduli();
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < mod.size(); ++i) {
    if (sgn(mod[i]) == 0) continue;
    IntVector c(mod.size());
    c[i] = mod[i];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols, mod.size());
}

IntMatrix reduce_rows(IntMatrix m, const FinAbGroup& target) {
  IntVector mod = target.moduli();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduce_mod(m(i, j), mod[i]);
  return m;
}

}  // namespace

GroupHom::GroupHom(FinAbGroup source, FinAbGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)) {
  if (matrix.rows() != target_.num_coordinates() || matrix.cols() != source_.num_coordinates())
    throw ContractViolation("GroupHom: matrix shape does not match the groups");
  matrix_ = reduce_rows(std::move(matrix), target_);
  IntVector smod = source_.moduli();
  for (std::size_t j = 0; j < smod.size(); ++j) {
    if (sgn(smod[j]) == 0) continue;
    IntVector img = target_.reduce(scale(smod[j], matrix_.column(j)));
    if (!torusdual::is_zero(img)) throw ContractViolation("GroupHom: matrix is not well defined on torsion");
  }
}

IntVector GroupHom::apply(const IntVector& source_coords) const {
  if (matrix_.rows() == 0) return {};
  return target_.reduce(matrix_.apply(source_coords));
}

Lattice GroupHom::kernel() const {
  return preimage_lattice(matrix_, relation_columns(target_));
}

Lattice GroupHom::image() const {
  return Lattice::from_columns(hstack(matrix_, relation_columns(target_)));
}

bool GroupHom::is_injective() const { return kernel() == relation_lattice(source_); }

bool GroupHom::is_surjective() const { return image() == Lattice::full(target_.num_coordinates()); }

bool GroupHom::is_zero() const { return matrix_.is_zero(); }

bool GroupHom::same_as(const GroupHom& other) const {
  return source_ == other.source_ && target_ == other.target_ && matrix_ == other.matrix_;
}

GroupHom GroupHom::after(const GroupHom& first) const {
  if (!(first.target_ == source_)) throw ContractViolation("GroupHom::after: groups do not compose");
  return GroupHom(first.source_, target_, matrix_ * first.matrix_);
}

GroupHom induced_hom(const Subquotient& source, const Subquotient& target,
                     const std::function<IntVector(const IntVector&)>& rule) {
  const std::size_t n = source.group().num_coordinates();
  IntMatrix m(target.group().num_coordinates(), n);
  for (std::size_t k = 0; k < n; ++k) m.set_column(k, target.coordinates(rule(source.representative(k))));
  return GroupHom(source.group(), target.group(), std::move(m));
}

}  // namespace torusdual
