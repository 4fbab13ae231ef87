#include "torusdual/gmodule.hpp"

#include "torusdual/errors.hpp"

#include <sstream>

namespace torusdual {

namespace {

IntMatrix reduce_rows(IntMatrix m, const IntVector& moduli) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduce_mod(m(i, j), moduli[i]);
  return m;
}

}  // namespace

GModule::GModule(GroupPtr group, IntVector moduli, std::vector<IntMatrix> action) : group_(std::move(group)) {
  if (!group_) throw ContractViolation("GModule: null group");
  const std::size_t n = group_->order();
  if (action.size() != n) throw ContractViolation("GModule: need one action matrix per group element");
  for (auto& m : moduli) m = abs(m);
  for (const auto& a : action)
    if (a.rows() != moduli.size() || a.cols() != moduli.size())
      throw ContractViolation("GModule: action matrix has wrong shape");

  moduli_ = std::move(moduli);
  for (auto& a : action) action_.push_back(reduce_rows(std::move(a), moduli_));

  const std::size_t r = rank();
  if (!(action_[0] == reduce_rows(IntMatrix::identity(r), moduli_)))
    throw ContractViolation("GModule: identity does not act trivially");
  for (Element g = 0; g < n; ++g) {
    for (std::size_t j = 0; j < r; ++j) {
      if (sgn(moduli_[j]) == 0) continue;
      for (std::size_t i = 0; i < r; ++i) {
        Integer x = action_[g](i, j) * moduli_[j];
        reduce_mod(x, moduli_[i]);
        if (sgn(x) != 0 || (sgn(moduli_[i]) == 0 && sgn(action_[g](i, j)) != 0))
          throw ContractViolation("GModule: action of element " + std::to_string(g) +
                                  " does not preserve the torsion relations");
      }
    }
    for (Element h = 0; h < n; ++h)
      if (!(reduce_rows(action_[g] * action_[h], moduli_) == action_[group_->mul(g, h)])) {
        std::ostringstream os;
        os << "GModule: action is not a homomorphism at (" << g << ", " << h << ")";
        throw ContractViolation(os.str());
      }
  }
}

GModule GModule::from_generators(GroupPtr group, IntVector moduli,
                                 const std::vector<std::pair<Element, IntMatrix>>& generator_action) {
  const FiniteGroup& g = *group;
  const std::size_t r = moduli.size();
  std::vector<IntMatrix> act(g.order());
  std::vector<bool> known(g.order(), false);
  act[0] = IntMatrix::identity(r);
  known[0] = true;
  std::vector<Element> frontier{0};
  for (std::size_t k = 0; k < frontier.size(); ++k) {
    Element x = frontier[k];
    for (const auto& [s, m] : generator_action) {
      if (s >= g.order()) throw ContractViolation("GModule: generator index out of range");
      Element y = g.mul(x, s);
      IntMatrix prod = reduce_rows(act[x] * m, moduli);
      if (!known[y]) {
        act[y] = std::move(prod);
        known[y] = true;
        frontier.push_back(y);
      } else if (!(reduce_rows(act[y], moduli) == prod)) {
        throw ContractViolation("GModule: generator matrices do not define a group action (element " +
                                std::to_string(y) + ")");
      }
    }
  }
  for (Element x = 0; x < g.order(); ++x)
    if (!known[x]) throw ContractViolation("GModule: generator list does not generate the group");
  return GModule(std::move(group), std::move(moduli), std::move(act));
}

GModule GModule::trivial(GroupPtr group, IntVector moduli) {
  std::vector<IntMatrix> act(group->order(), IntMatrix::identity(moduli.size()));
  return GModule(std::move(group), std::move(moduli), std::move(act));
}

std::size_t GModule::free_rank() const {
  std::size_t k = 0;
  for (const auto& m : moduli_)
    if (sgn(m) == 0) ++k;
  return k;
}

bool GModule::has_trivial_action() const {
  for (const auto& a : action_)
    if (!(a == action_[0])) return false;
  return true;
}

IntVector GModule::reduce(IntVector v) const {
  if (v.size() != rank()) throw ContractViolation("GModule::reduce: wrong number of coordinates");
  for (std::size_t i = 0; i < v.size(); ++i) reduce_mod(v[i], moduli_[i]);
  return v;
}

IntMatrix GModule::relations() const {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(moduli_[i]) == 0) continue;
    IntVector c(rank());
    c[i] = moduli_[i];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols, rank());
}

Subquotient GModule::as_subquotient() const { return Subquotient(Lattice::full(rank()), relations()); }

IntMatrix GModule::norm_matrix() const {
  IntMatrix n(rank(), rank());
  for (const auto& a : action_) n = n + a;
  return n;
}

GModule dual_lattice(const GModule& l) {
  if (!l.is_free()) throw DomainError("dual_lattice: module has torsion");
  std::vector<IntMatrix> act;
  for (Element g = 0; g < l.group().order(); ++g) act.push_back(l.action(l.group().inv(g)).transpose());
  return GModule(l.group_ptr(), l.moduli(), std::move(act));
}

GModule tensor(const GModule& a, const GModule& b) {
  if (!(a.group() == b.group())) throw ContractViolation("tensor: modules over different groups");
  IntVector moduli;
  for (const auto& x : a.moduli())
    for (const auto& y : b.moduli()) moduli.push_back(gcd_of(x, y));
  std::vector<IntMatrix> act;
  for (Element g = 0; g < a.group().order(); ++g) act.push_back(kronecker(a.action(g), b.action(g)));
  return GModule(a.group_ptr(), std::move(moduli), std::move(act));
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (!(a.group() == b.group())) throw ContractViolation("direct_sum: modules over different groups");
  IntVector moduli = a.moduli();
  moduli.insert(moduli.end(), b.moduli().begin(), b.moduli().end());
  std::vector<IntMatrix> act;
  for (Element g = 0; g < a.group().order(); ++g) act.push_back(block_diagonal({a.action(g), b.action(g)}));
  return GModule(a.group_ptr(), std::move(moduli), std::move(act));
}

GModule restrict_to(const GModule& a, const Subgroup& h) { return pullback(a, h.group, h.embedding); }

GModule pullback(const GModule& a, GroupPtr source, const std::vector<Element>& to_group) {
  if (to_group.size() != source->order()) throw ContractViolation("pullback: map has wrong length");
  std::vector<IntMatrix> act;
  for (Element x : to_group) act.push_back(a.action(x));
  return GModule(std::move(source), a.moduli(), std::move(act));
}

GModule augmentation_ideal(GroupPtr group) {
  const FiniteGroup& g = *group;
  const std::size_t n = g.order();
  std::vector<IntMatrix> act;
  for (Element k = 0; k < n; ++k) {
    IntMatrix m(n - 1, n - 1);
    for (Element x = 1; x < n; ++x) {
      // k (x - 1) = (kx - 1) - (k - 1)
      Element kx = g.mul(k, x);
      if (kx != 0) m(kx - 1, x - 1) += 1;
      if (k != 0) m(k - 1, x - 1) -= 1;
    }
    act.push_back(std::move(m));
  }
  return GModule(std::move(group), IntVector(n - 1), std::move(act));
}

GModule change_basis(const GModule& a, const IntMatrix& p) {
  if (!a.is_free()) throw DomainError("change_basis: module has torsion");
  IntMatrix pinv = inverse_unimodular(p);
  std::vector<IntMatrix> act;
  for (const auto& m : a.actions()) act.push_back(p * m * pinv);
  return GModule(a.group_ptr(), a.moduli(), std::move(act));
}

IntMatrix augmentation_columns(const GModule& a) {
  const std::size_t r = a.rank();
  IntMatrix cols(r, 0);
  for (Element g = 1; g < a.group().order(); ++g) cols = hstack(cols, a.action(g) - IntMatrix::identity(r));
  return cols;
}

Subquotient invariants(const GModule& a) {
  const std::size_t r = a.rank();
  const std::size_t n = a.group().order();
  IntMatrix stacked(0, r);
  for (Element g = 1; g < n; ++g) stacked = vstack(stacked, a.action(g) - IntMatrix::identity(r));
  std::vector<IntMatrix> rel(n - 1, a.relations());
  IntMatrix relations = n > 1 ? block_diagonal(rel) : IntMatrix(0, 0);
  Lattice fixed = n > 1 ? preimage_lattice(stacked, relations) : Lattice::full(r);
  return Subquotient(fixed, a.relations());
}

Subquotient coinvariants(const GModule& a) {
  return Subquotient(Lattice::full(a.rank()), hstack(augmentation_columns(a), a.relations()));
}

GroupHom norm_hom(const GModule& a) {
  IntMatrix n = a.norm_matrix();
  return induced_hom(a.as_subquotient(), invariants(a), [&](const IntVector& v) { return n.apply(v); });
}

}  // namespace torusdual
