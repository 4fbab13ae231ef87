#include "torusdual/homology.hpp"

#include "torusdual/errors.hpp"

#include <limits>

namespace torusdual {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

void add_block(IntMatrix& m, std::size_t row0, std::size_t col0, const IntMatrix& block, int sign) {
  for (std::size_t i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < block.cols(); ++j) {
      if (sgn(block(i, j)) == 0) continue;
      if (sign > 0) {
        m(row0 + i, col0 + j) += block(i, j);
      } else {
        m(row0 + i, col0 + j) -= block(i, j);
      }
    }
}

void add_identity(IntMatrix& m, std::size_t row0, std::size_t col0, std::size_t r, int sign) {
  for (std::size_t i = 0; i < r; ++i) m(row0 + i, col0 + i) += sign;
}

// Non-identity tuple with digits g - 1 in base (n - 1).
Tuple decode(std::size_t idx, std::size_t k, std::size_t m) {
  Tuple t(k);
  for (std::size_t i = k; i-- > 0;) {
    t[i] = idx % m + 1;
    idx /= m;
  }
  return t;
}

IntVector reduce_by(IntVector v, const IntVector& moduli) {
  for (std::size_t i = 0; i < v.size(); ++i) reduce_mod(v[i], moduli[i]);
  return v;
}

IntMatrix columns_for(const IntVector& moduli) {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (sgn(moduli[i]) == 0) continue;
    IntVector c(moduli.size());
    c[i] = moduli[i];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols, moduli.size());
}

}  // namespace

BarComplex::BarComplex(GModule module, std::size_t max_degree, std::size_t entry_bound)
    : module_(std::move(module)), max_degree_(max_degree), entry_bound_(entry_bound) {}

std::size_t BarComplex::dim(std::size_t k) const { return module_.rank() * ipow(group().order() - 1, k); }

IntVector BarComplex::moduli(std::size_t k) const {
  IntVector m;
  const std::size_t cells = ipow(group().order() - 1, k);
  m.reserve(cells * module_.rank());
  for (std::size_t c = 0; c < cells; ++c) m.insert(m.end(), module_.moduli().begin(), module_.moduli().end());
  return m;
}

IntMatrix BarComplex::relations(std::size_t k) const { return columns_for(moduli(k)); }

void BarComplex::check_size(std::size_t rows, std::size_t cols, std::size_t degree) const {
  if (rows != 0 && cols > entry_bound_ / rows)
    throw SizeLimitExceeded("bar complex: degree " + std::to_string(degree) + " matrix of size " +
                            std::to_string(rows) + " x " + std::to_string(cols) + " exceeds the entry bound " +
                            std::to_string(entry_bound_));
}

std::size_t BarComplex::normalized_index(const Tuple& t) const {
  const std::size_t m = group().order() - 1;
  std::size_t idx = 0;
  for (Element g : t) {
    if (g == 0) return npos;
    idx = idx * m + (g - 1);
  }
  return idx;
}

const IntMatrix& BarComplex::boundary(std::size_t k) const {
  if (k == 0 || k > max_degree_ + 1) throw DomainError("boundary: degree " + std::to_string(k) + " out of range");
  if (auto it = boundary_.find(k); it != boundary_.end()) return it->second;
  const FiniteGroup& g = group();
  const std::size_t r = module_.rank(), m = g.order() - 1;
  check_size(dim(k - 1), dim(k), k);
  IntMatrix d(dim(k - 1), dim(k));
  const std::size_t cells = ipow(m, k);
  for (std::size_t c = 0; c < cells; ++c) {
    Tuple t = decode(c, k, m);
    const std::size_t col = c * r;
    Tuple tail(t.begin() + 1, t.end());
    add_block(d, normalized_index(tail) * r, col, module_.action(g.inv(t[0])), 1);
    for (std::size_t i = 1; i < k; ++i) {
      Element p = g.mul(t[i - 1], t[i]);
      if (p == 0) continue;
      Tuple merged(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
      merged.push_back(p);
      merged.insert(merged.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
      add_identity(d, normalized_index(merged) * r, col, r, i % 2 == 0 ? 1 : -1);
    }
    Tuple head(t.begin(), t.end() - 1);
    add_identity(d, normalized_index(head) * r, col, r, k % 2 == 0 ? 1 : -1);
  }
  return boundary_.emplace(k, std::move(d)).first->second;
}

const IntMatrix& BarComplex::coboundary(std::size_t k) const {
  if (k > max_degree_) throw DomainError("coboundary: degree " + std::to_string(k) + " out of range");
  if (auto it = coboundary_.find(k); it != coboundary_.end()) return it->second;
  const FiniteGroup& g = group();
  const std::size_t r = module_.rank(), m = g.order() - 1;
  check_size(dim(k + 1), dim(k), k + 1);
  IntMatrix d(dim(k + 1), dim(k));
  const std::size_t cells = ipow(m, k + 1);
  for (std::size_t c = 0; c < cells; ++c) {
    Tuple t = decode(c, k + 1, m);
    const std::size_t row = c * r;
    Tuple tail(t.begin() + 1, t.end());
    add_block(d, row, normalized_index(tail) * r, module_.action(t[0]), 1);
    for (std::size_t i = 1; i <= k; ++i) {
      Element p = g.mul(t[i - 1], t[i]);
      if (p == 0) continue;
      Tuple merged(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i - 1));
      merged.push_back(p);
      merged.insert(merged.end(), t.begin() + static_cast<std::ptrdiff_t>(i + 1), t.end());
      add_identity(d, row, normalized_index(merged) * r, r, i % 2 == 0 ? 1 : -1);
    }
    Tuple head(t.begin(), t.end() - 1);
    add_identity(d, row, normalized_index(head) * r, r, (k + 1) % 2 == 0 ? 1 : -1);
  }
  return coboundary_.emplace(k, std::move(d)).first->second;
}

namespace {

template <class T>
void check_shape(const T& x, const BarComplex& b, const char* what) {
  if (x.group_order() != b.group().order() || x.rank() != b.module().rank())
    throw ContractViolation(std::string(what) + ": table does not match the complex");
}

}  // namespace

IntVector BarComplex::flatten(const Chain& x) const {
  check_shape(x, *this, "flatten");
  const std::size_t k = x.degree(), r = module_.rank(), m = group().order() - 1;
  IntVector v(dim(k));
  for (std::size_t c = 0; c < ipow(m, k); ++c) {
    auto cell = x.cell(x.index(decode(c, k, m)));
    for (std::size_t j = 0; j < r; ++j) v[c * r + j] = cell[j];
  }
  return v;
}

Chain BarComplex::chain(const IntVector& v, std::size_t k) const {
  if (v.size() != dim(k)) throw ContractViolation("chain: vector has wrong length");
  const std::size_t r = module_.rank(), m = group().order() - 1;
  Chain x(group().order(), k, r);
  for (std::size_t c = 0; c < ipow(m, k); ++c) {
    auto cell = x.cell(x.index(decode(c, k, m)));
    for (std::size_t j = 0; j < r; ++j) cell[j] = v[c * r + j];
  }
  return x;
}

IntVector BarComplex::flatten(const Cochain& f) const {
  check_shape(f, *this, "flatten");
  const std::size_t k = f.degree(), r = module_.rank();
  for (std::size_t idx = 0; idx < f.cells(); ++idx) {
    Tuple t = f.tuple(idx);
    if (normalized_index(t) != npos) continue;
    auto cell = f.cell(idx);
    if (!is_zero(module_.reduce(IntVector(cell.begin(), cell.end()))))
      throw ContractViolation("cochain is not normalized: nonzero at a tuple containing the identity");
  }
  const std::size_t m = group().order() - 1;
  IntVector v(dim(k));
  for (std::size_t c = 0; c < ipow(m, k); ++c) {
    auto cell = f.cell(f.index(decode(c, k, m)));
    for (std::size_t j = 0; j < r; ++j) v[c * r + j] = cell[j];
  }
  return v;
}

Cochain BarComplex::cochain(const IntVector& v, std::size_t k) const {
  if (v.size() != dim(k)) throw ContractViolation("cochain: vector has wrong length");
  const std::size_t r = module_.rank(), m = group().order() - 1;
  Cochain f(group().order(), k, r);
  for (std::size_t c = 0; c < ipow(m, k); ++c) {
    auto cell = f.cell(f.index(decode(c, k, m)));
    for (std::size_t j = 0; j < r; ++j) cell[j] = v[c * r + j];
  }
  return f;
}

QVector BarComplex::flatten(const QCochain& f) const {
  check_shape(f, *this, "flatten");
  const std::size_t k = f.degree(), r = module_.rank(), m = group().order() - 1;
  for (std::size_t idx = 0; idx < f.cells(); ++idx) {
    if (normalized_index(f.tuple(idx)) != npos) continue;
    for (const auto& q : f.cell(idx))
      if (!q.is_zero()) throw ContractViolation("cochain is not normalized: nonzero at a tuple containing the identity");
  }
  QVector v(dim(k));
  for (std::size_t c = 0; c < ipow(m, k); ++c) {
    auto cell = f.cell(f.index(decode(c, k, m)));
    for (std::size_t j = 0; j < r; ++j) v[c * r + j] = cell[j];
  }
  return v;
}

QCochain BarComplex::qcochain(const QVector& v, std::size_t k) const {
  if (v.size() != dim(k)) throw ContractViolation("qcochain: vector has wrong length");
  const std::size_t r = module_.rank(), m = group().order() - 1;
  QCochain f(group().order(), k, r);
  for (std::size_t c = 0; c < ipow(m, k); ++c) {
    auto cell = f.cell(f.index(decode(c, k, m)));
    for (std::size_t j = 0; j < r; ++j) cell[j] = v[c * r + j];
  }
  return f;
}

const ClassGroup& BarComplex::homology(std::size_t k) const {
  if (k > max_degree_) throw DomainError("homology: degree " + std::to_string(k) + " exceeds the degree cap");
  if (auto it = homology_.find(k); it != homology_.end()) return it->second;
  Lattice cycles = k == 0 ? Lattice::full(dim(0)) : preimage_lattice(boundary(k), relations(k - 1));
  ClassGroup h{ClassGroup::Kind::homology, static_cast<int>(k),
               Subquotient(std::move(cycles), hstack(boundary(k + 1), relations(k)))};
  return homology_.emplace(k, std::move(h)).first->second;
}

const ClassGroup& BarComplex::cohomology(std::size_t k) const {
  if (k > max_degree_) throw DomainError("cohomology: degree " + std::to_string(k) + " exceeds the degree cap");
  if (auto it = cohomology_.find(k); it != cohomology_.end()) return it->second;
  Lattice cocycles = preimage_lattice(coboundary(k), relations(k + 1));
  IntMatrix bounds = k == 0 ? relations(0) : hstack(coboundary(k - 1), relations(k));
  ClassGroup h{ClassGroup::Kind::cohomology, static_cast<int>(k), Subquotient(std::move(cocycles), bounds)};
  return cohomology_.emplace(k, std::move(h)).first->second;
}

const ClassGroup& BarComplex::tate(int i) const {
  if (auto it = tate_.find(i); it != tate_.end()) return it->second;
  ClassGroup h;
  h.degree = i;
  if (i >= 1) {
    h = cohomology(static_cast<std::size_t>(i));
  } else if (i <= -2) {
    h = homology(static_cast<std::size_t>(-i - 1));
  } else if (i == 0) {
    h.kind = ClassGroup::Kind::tate_zero;
    h.quotient = Subquotient(invariants(module_).numerator(), hstack(module_.norm_matrix(), module_.relations()));
  } else {
    h.kind = ClassGroup::Kind::tate_minus_one;
    h.quotient = Subquotient(preimage_lattice(module_.norm_matrix(), module_.relations()),
                             hstack(augmentation_columns(module_), module_.relations()));
  }
  h.degree = i;
  return tate_.emplace(i, std::move(h)).first->second;
}

bool BarComplex::is_cycle(const Chain& x) const {
  if (x.degree() == 0) return true;
  return is_zero(reduce_by(boundary(x.degree()).apply(flatten(x)), moduli(x.degree() - 1)));
}

bool BarComplex::is_cocycle(const Cochain& f) const {
  return is_zero(reduce_by(coboundary(f.degree()).apply(flatten(f)), moduli(f.degree() + 1)));
}

IntVector BarComplex::homology_class(const Chain& x) const {
  if (!is_cycle(x)) throw ContractViolation("homology_class: chain is not a cycle");
  return homology(x.degree()).quotient.coordinates(flatten(x));
}

IntVector BarComplex::cohomology_class(const Cochain& f) const {
  if (!is_cocycle(f)) throw ContractViolation("cohomology_class: cochain is not a cocycle");
  return cohomology(f.degree()).quotient.coordinates(flatten(f));
}

IntVector BarComplex::tate_class(int i, const IntVector& ambient) const {
  const ClassGroup& h = tate(i);
  if (!h.quotient.contains(ambient))
    throw ContractViolation("tate_class: element is not a cycle for Tate degree " + std::to_string(i));
  return h.quotient.coordinates(ambient);
}

Chain BarComplex::homology_representative(std::size_t k, std::size_t generator) const {
  return chain(homology(k).quotient.representative(generator), k);
}

Cochain BarComplex::cohomology_representative(std::size_t k, std::size_t generator) const {
  return cochain(cohomology(k).quotient.representative(generator), k);
}

std::optional<Cochain> BarComplex::is_coboundary(const Cochain& f) const {
  const std::size_t k = f.degree();
  if (k == 0) throw DomainError("is_coboundary: degree 0 has no coboundaries to test against");
  if (!is_cocycle(f)) throw ContractViolation("is_coboundary: cochain is not a cocycle");
  auto x = solve(coboundary(k - 1), flatten(f), moduli(k));
  if (!x) return std::nullopt;
  return cochain(*x, k - 1);
}

// ---------------------------------------------------------------------------

DualSlice::DualSlice(const IntMatrix& d_in, const IntMatrix& d_out, const Integer& d) : d_(d) {
  if (d <= 0) throw DomainError("DualSlice: d must be positive");
  const std::size_t n = d_in.rows();
  if (d_out.cols() != n) throw ContractViolation("DualSlice: incompatible differentials");
  IntMatrix dn = d * IntMatrix::identity(n);
  Lattice cocycles = d_in.cols() == 0
                         ? Lattice::full(n)
                         : preimage_lattice(d_in.transpose(), d * IntMatrix::identity(d_in.cols()));
  IntMatrix kernel = kernel_basis(d_out);
  Lattice saturated = kernel_lattice(kernel.transpose());
  coboundaries_ = Lattice::from_rows(vstack(saturated.basis(), dn));
  quotient_ = Subquotient(std::move(cocycles), coboundaries_.basis().transpose());
}

QVector DualSlice::cochain(const IntVector& coords) const { return from_scaled(quotient_.lift(coords), d_); }

namespace {

IntVector numerators_over(const QVector& f, const Integer& d) {
  IntVector x(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!divides(f[i].denominator(), d)) throw ContractViolation("DualSlice: cochain is not d-torsion");
    x[i] = f[i].numerator() * (d / f[i].denominator());
  }
  return x;
}

}  // namespace

IntVector DualSlice::coordinates(const QVector& f) const {
  IntVector x = numerators_over(f, d_);
  if (!quotient_.contains(x)) throw ContractViolation("DualSlice: cochain is not a cocycle");
  return quotient_.coordinates(x);
}

bool DualSlice::is_coboundary(const QVector& f) const { return coboundaries_.contains(numerators_over(f, d_)); }

// ---------------------------------------------------------------------------

QmodZ uct_pairing(const QCochain& f, const Chain& x) {
  if (f.degree() != x.degree()) throw ContractViolation("uct_pairing: degree mismatch");
  if (f.group_order() != x.group_order() || f.rank() != x.rank())
    throw ContractViolation("uct_pairing: tables do not match");
  QmodZ total;
  for (std::size_t idx = 0; idx < x.cells(); ++idx) {
    auto xc = x.cell(idx);
    auto fc = f.cell(idx);
    for (std::size_t j = 0; j < x.rank(); ++j)
      if (sgn(xc[j]) != 0) total += xc[j] * fc[j];
  }
  return total;
}

UniversalCoefficients::UniversalCoefficients(const BarComplex& complex, std::size_t n) : complex_(complex), n_(n) {
  if (n == 0) throw DomainError("universal coefficients: only degrees n > 0 are supported");
  if (!complex.module().is_free()) throw DomainError("universal coefficients: coefficient module must be free");
}

bool UniversalCoefficients::is_cocycle(const QCochain& f) const {
  if (f.degree() != n_) throw ContractViolation("universal coefficients: degree mismatch");
  return torusdual::is_zero(multiply(complex_.boundary(n_ + 1).transpose(), complex_.flatten(f)));
}

QVector UniversalCoefficients::evaluate(const QCochain& f) const {
  if (!is_cocycle(f)) throw ContractViolation("universal coefficients: cochain is not a cocycle");
  QVector fv = complex_.flatten(f);
  const Subquotient& h = homology().quotient;
  QVector out;
  for (std::size_t k = 0; k < h.group().num_coordinates(); ++k) out.push_back(dot(h.representative(k), fv));
  return out;
}

QCochain UniversalCoefficients::lift(const QVector& values) const {
  const Subquotient& h = homology().quotient;
  if (values.size() != h.group().num_coordinates())
    throw ContractViolation("universal coefficients: one value per homology generator is required");
  IntMatrix system = complex_.boundary(n_ + 1).transpose();
  std::vector<IntVector> reps;
  for (std::size_t k = 0; k < values.size(); ++k) reps.push_back(h.representative(k));
  system = vstack(system, IntMatrix::from_rows(reps, complex_.dim(n_)));
  QVector rhs(complex_.dim(n_ + 1));
  rhs.insert(rhs.end(), values.begin(), values.end());
  auto f = solve_qz(system, rhs);
  if (!f) throw ContractViolation("universal coefficients: values do not define a homomorphism on homology");
  return complex_.qcochain(*f, n_);
}

DualSlice UniversalCoefficients::slice(const Integer& d) const {
  return DualSlice(complex_.boundary(n_ + 1), complex_.boundary(n_), d);
}

}  // namespace torusdual
