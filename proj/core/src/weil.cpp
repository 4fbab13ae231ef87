#include "torusdual/weil.hpp"

#include "torusdual/errors.hpp"

namespace torusdual {

namespace {

constexpr std::size_t finite_order_bound = 512;

IntMatrix relation_columns(const IntVector& moduli) {
  std::vector<IntVector> cols;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (sgn(moduli[i]) == 0) continue;
    IntVector c(moduli.size());
    c[i] = moduli[i];
    cols.push_back(std::move(c));
  }
  return IntMatrix::from_columns(cols, moduli.size());
}

IntVector repeat(const IntVector& v, std::size_t times) {
  IntVector out;
  out.reserve(v.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::string triple_label(const FiniteGroup& g, Element a, Element b, Element c) {
  return "(" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")";
}

}  // namespace

ExtensionGroup::ExtensionGroup(GModule c, Cochain cocycle) : c_(std::move(c)), u_(std::move(cocycle)) {
  const FiniteGroup& g = quotient_group();
  const std::size_t n = g.order();
  if (u_.group_order() != n || u_.degree() != 2 || u_.rank() != c_.rank())
    throw ContractViolation("extension: cocycle has the wrong shape");
  for (std::size_t i = 0; i < u_.data().size(); ++i) reduce_mod(u_.data()[i], c_.moduli()[i % c_.rank()]);
  for (Element x = 0; x < n; ++x)
    if (!is_zero(u_bar(0, x)) || !is_zero(u_bar(x, 0)))
      throw ContractViolation("extension: cocycle is not normalized at " + g.label(x));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element k = 0; k < n; ++k) {
        IntVector lhs = add(c_.act(a, u_bar(b, k)), u_bar(a, g.mul(b, k)));
        IntVector rhs = add(u_bar(g.mul(a, b), k), u_bar(a, b));
        if (!c_.equivalent(lhs, rhs))
          throw ContractViolation("extension: cocycle identity fails at " + triple_label(g, a, b, k));
      }
}

Integer ExtensionGroup::order() const {
  if (!is_finite()) return 0;
  return c_.carrier().order() * Integer(static_cast<unsigned long>(quotient_group().order()));
}

ExtensionGroup::Elem ExtensionGroup::mul(const Elem& x, const Elem& y) const {
  IntVector c = add(add(x.c, c_.act(x.g, y.c)), u_bar(x.g, y.g));
  return {c_.reduce(std::move(c)), quotient_group().mul(x.g, y.g)};
}

ExtensionGroup::Elem ExtensionGroup::inv(const Elem& x) const {
  const Element gi = quotient_group().inv(x.g);
  IntVector c = subtract(scale(-1, c_.act(gi, x.c)), u_bar(gi, x.g));
  return {c_.reduce(std::move(c)), gi};
}

ExtensionGroup::Elem ExtensionGroup::power(const Elem& x, long k) const {
  Elem base = k < 0 ? inv(x) : x;
  Elem r = identity();
  for (long i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, base);
  return r;
}

IntVector ExtensionGroup::decomposition(Element g, const Elem& w) const {
  return c_.reduce(add(c_.act(g, w.c), u_bar(g, w.g)));
}

void ExtensionGroup::enumerate() const {
  if (finite_) return;
  if (!is_finite()) throw DomainError("extension: W is infinite");
  if (order() > finite_order_bound)
    throw SizeLimitExceeded("extension: |W| = " + to_string(order()) + " exceeds " +
                            std::to_string(finite_order_bound));
  const FiniteGroup& g = quotient_group();
  std::vector<IntVector> kernel{IntVector(c_.rank())};
  for (std::size_t i = 0; i < c_.rank(); ++i) {
    std::vector<IntVector> next;
    for (const IntVector& v : kernel)
      for (long a = 0; a < c_.moduli()[i].get_si(); ++a) {
        IntVector w = v;
        w[i] = a;
        next.push_back(std::move(w));
      }
    kernel = std::move(next);
  }
  for (Element x = 0; x < g.order(); ++x)
    for (const IntVector& v : kernel) {
      index_.emplace(Elem{v, x}, elements_.size());
      elements_.push_back({v, x});
    }
  const std::size_t n = elements_.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string lbl = "(";
    for (std::size_t i = 0; i < c_.rank(); ++i) lbl += (i ? "," : "") + to_string(elements_[a].c[i]);
    labels[a] = lbl + ";" + g.label(elements_[a].g) + ")";
    for (std::size_t b = 0; b < n; ++b) table[a][b] = index_.at(mul(elements_[a], elements_[b]));
  }
  finite_ = std::make_shared<const FiniteGroup>(std::move(table), std::move(labels));
}

const std::vector<ExtensionGroup::Elem>& ExtensionGroup::elements() const {
  enumerate();
  return elements_;
}

std::size_t ExtensionGroup::index_of(const Elem& w) const {
  enumerate();
  return index_.at(Elem{c_.reduce(w.c), w.g});
}

GroupPtr ExtensionGroup::as_finite_group() const {
  enumerate();
  return finite_;
}

std::vector<Element> ExtensionGroup::projection() const {
  enumerate();
  std::vector<Element> p;
  for (const Elem& e : elements_) p.push_back(e.g);
  return p;
}

Subgroup ExtensionGroup::kernel_subgroup() const {
  enumerate();
  std::vector<Element> kernel;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].g == 0) kernel.push_back(i);
  return generated_subgroup(*finite_, kernel);
}

Cochain carry_cocycle(std::size_t n) {
  Cochain u(n, 2, 1);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (i + j >= n) u.set({i, j}, {1});
  return u;
}

ExtensionGroup valuation_model(std::size_t n) {
  auto g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n));
  return ExtensionGroup(GModule::trivial_free(g, 1), carry_cocycle(n));
}

std::size_t Presentation::coset_generator(Element g) const {
  for (std::size_t s = 0; s < generators.size(); ++s)
    if (generators[s].kind == Generator::Kind::coset && generators[s].index == g) return s;
  throw ContractViolation("presentation: no generator for the identity coset");
}

namespace {

using Letters = std::vector<Presentation::Letter>;

void append_kernel_word(Letters& w, const IntVector& v, bool inverse) {
  if (!inverse) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (sgn(v[i]) != 0) w.push_back({i, v[i].get_si()});
  } else {
    for (std::size_t i = v.size(); i-- > 0;)
      if (sgn(v[i]) != 0) w.push_back({i, -v[i].get_si()});
  }
}

}  // namespace

Presentation presentation(const ExtensionGroup& w) {
  const FiniteGroup& g = w.quotient_group();
  const GModule& c = w.kernel_module();
  const std::size_t r = c.rank();
  Presentation p;
  for (std::size_t i = 0; i < r; ++i) {
    p.generators.push_back({Presentation::Generator::Kind::kernel, i, "c" + std::to_string(i + 1)});
    p.image.push_back(0);
  }
  std::vector<std::size_t> coset(g.order(), 0);
  for (Element x = 1; x < g.order(); ++x) {
    coset[x] = p.generators.size();
    p.generators.push_back({Presentation::Generator::Kind::coset, x, "t" + g.label(x)});
    p.image.push_back(x);
  }
  const auto& gen = p.generators;

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      p.relators.push_back({{{i, 1}, {j, 1}, {i, -1}, {j, -1}}, "[" + gen[i].label + "," + gen[j].label + "]"});
  for (std::size_t i = 0; i < r; ++i)
    if (sgn(c.moduli()[i]) != 0)
      p.relators.push_back({{{i, c.moduli()[i].get_si()}}, gen[i].label + "^" + to_string(c.moduli()[i])});
  for (Element x = 1; x < g.order(); ++x)
    for (std::size_t i = 0; i < r; ++i) {
      IntVector e(r);
      e[i] = 1;
      Letters word{{coset[x], 1}, {i, 1}, {coset[x], -1}};
      append_kernel_word(word, c.act(x, e), true);
      p.relators.push_back({std::move(word), gen[coset[x]].label + " " + gen[i].label + " " + gen[coset[x]].label +
                                                 "^-1 = " + g.label(x) + "." + gen[i].label});
    }
  for (Element x = 1; x < g.order(); ++x)
    for (Element y = 1; y < g.order(); ++y) {
      const Element xy = g.mul(x, y);
      Letters word{{coset[x], 1}, {coset[y], 1}};
      if (xy != 0) word.push_back({coset[xy], -1});
      append_kernel_word(word, w.u_bar(x, y), true);
      std::string rhs = xy == 0 ? "u" : "u " + gen[coset[xy]].label;
      p.relators.push_back({std::move(word), gen[coset[x]].label + " " + gen[coset[y]].label + " = " + rhs});
    }

  // Fox derivatives, projected to Z[G].
  for (const auto& rel : p.relators) {
    std::vector<IntVector> row(gen.size(), IntVector(g.order()));
    Element prefix = 0;
    for (const auto& l : rel.letters) {
      const Element s = p.image[l.generator];
      if (s == 0) {
        row[l.generator][prefix] += l.exponent;
      } else if (l.exponent == 1) {
        row[l.generator][prefix] += 1;
        prefix = g.mul(prefix, s);
      } else if (l.exponent == -1) {
        prefix = g.mul(prefix, g.inv(s));
        row[l.generator][prefix] -= 1;
      } else {
        throw InternalInconsistency("presentation: coset letters carry exponent +-1");
      }
    }
    p.fox.push_back(std::move(row));
  }

  for (const auto& rel : p.relators)
    if (!(evaluate_word(w, p, rel.letters) == w.identity()))
      throw InternalInconsistency("presentation: relator " + rel.label + " is not trivial in W");
  return p;
}

ExtensionGroup::Elem evaluate_word(const ExtensionGroup& w, const Presentation& p, const std::vector<Presentation::Letter>& word) {
  ExtensionGroup::Elem acc = w.identity();
  for (const auto& l : word) {
    const auto& gen = p.generators[l.generator];
    ExtensionGroup::Elem x;
    if (gen.kind == Presentation::Generator::Kind::kernel) {
      IntVector e(w.kernel_module().rank());
      e[gen.index] = 1;
      x = w.from_kernel(e);
    } else {
      x = w.coset_rep(gen.index);
    }
    acc = w.mul(acc, w.power(x, l.exponent));
  }
  return acc;
}

FoxComplex h1_weil(const ExtensionGroup& w, const Presentation& p, const GModule& m) {
  if (!(m.group() == w.quotient_group()))
    throw UnsupportedModel("weil: coefficient module is not a module over W/C");
  const FiniteGroup& g = w.quotient_group();
  FoxComplex fc;
  fc.module = m;
  const std::size_t r = m.rank();
  const std::size_t ns = p.generators.size();
  const std::size_t nr = p.relators.size();
  fc.generators = ns;
  fc.relators = nr;
  fc.moduli0 = m.moduli();
  fc.moduli1 = repeat(m.moduli(), ns);
  fc.moduli2 = repeat(m.moduli(), nr);

  fc.d1 = IntMatrix(r, ns * r);
  for (std::size_t s = 0; s < ns; ++s) {
    const IntMatrix& a = m.action(g.inv(p.image[s]));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) fc.d1(i, s * r + j) = a(i, j) - (i == j ? 1 : 0);
  }
  fc.d2 = IntMatrix(ns * r, nr * r);
  for (std::size_t q = 0; q < nr; ++q)
    for (std::size_t s = 0; s < ns; ++s)
      for (Element v = 0; v < g.order(); ++v) {
        const Integer& n = p.fox[q][s][v];
        if (sgn(n) == 0) continue;
        const IntMatrix& a = m.action(g.inv(v));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) fc.d2(s * r + i, q * r + j) += n * a(i, j);
      }

  IntMatrix dd = fc.d1 * fc.d2;
  for (std::size_t i = 0; i < dd.rows(); ++i)
    for (std::size_t j = 0; j < dd.cols(); ++j) {
      Integer x = dd(i, j);
      reduce_mod(x, fc.moduli0[i]);
      if (sgn(x) != 0) throw InternalInconsistency("weil: d1 d2 is not zero");
    }
  Lattice cycles = preimage_lattice(fc.d1, relation_columns(fc.moduli0));
  fc.h1 = Subquotient(std::move(cycles), hstack(fc.d2, relation_columns(fc.moduli1)));
  return fc;
}

Chain fox_to_bar(const ExtensionGroup& w, const Presentation& p, const FoxComplex& fc, const IntVector& x) {
  const std::size_t r = fc.rank();
  Chain out(w.elements().size(), 1, r);
  for (std::size_t s = 0; s < fc.generators; ++s) {
    const std::size_t idx = w.index_of(evaluate_word(w, p, {{s, 1}}));
    if (idx == 0) continue;
    IntVector block(x.begin() + s * r, x.begin() + (s + 1) * r);
    out.add({idx}, block);
  }
  return out;
}

IntVector bar_to_fox(const ExtensionGroup& w, const Presentation& p, const FoxComplex& fc, const Chain& x) {
  const std::size_t r = fc.rank();
  IntVector out(fc.generators * r);
  const auto& elems = w.elements();
  for (std::size_t idx = 1; idx < elems.size(); ++idx) {
    auto cell = x.cell(idx);
    const auto& e = elems[idx];
    for (std::size_t i = 0; i < e.c.size(); ++i)
      for (std::size_t j = 0; j < r; ++j) out[p.kernel_generator(i) * r + j] += e.c[i] * cell[j];
    if (e.g != 0) {
      const std::size_t s = p.coset_generator(e.g);
      for (std::size_t j = 0; j < r; ++j) out[s * r + j] += cell[j];
    }
  }
  return out;
}

WeilCocycles::WeilCocycles(const FoxComplex& fc) : fc_(fc) {
  if (!fc.module.is_free()) throw DomainError("weil: T-valued cocycles need a free lattice");
}

std::optional<std::size_t> WeilCocycles::failing_relator(const QVector& values) const {
  if (values.size() != dim()) throw ContractViolation("weil: cocycle has the wrong length");
  QVector img = multiply(fc_.d2.transpose(), values);
  const std::size_t r = fc_.rank();
  for (std::size_t q = 0; q < fc_.relators; ++q)
    for (std::size_t j = 0; j < r; ++j)
      if (!img[q * r + j].is_zero()) return q;
  return std::nullopt;
}

QVector WeilCocycles::coboundary(const QVector& t) const { return multiply(fc_.d1.transpose(), t); }

bool WeilCocycles::is_coboundary(const QVector& values) const {
  return solve_qz(fc_.d1.transpose(), values).has_value();
}

QVector AdmissibleHom::evaluate(const ExtensionGroup::Elem& x) const {
  const std::size_t r = lhat->rank();
  QVector out = zero_qvector(r);
  for (std::size_t i = 0; i < x.c.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) out[j] += x.c[i] * values[p->kernel_generator(i) * r + j];
  if (x.g != 0) {
    const std::size_t s = p->coset_generator(x.g);
    for (std::size_t j = 0; j < r; ++j) out[j] += values[s * r + j];
  }
  return out;
}

QVector AdmissibleHom::act(Element g, const QVector& phi) const {
  return multiply(lhat->action(lhat->group().inv(g)).transpose(), phi);
}

bool AdmissibleHom::satisfies_cocycle(const ExtensionGroup::Elem& x, const ExtensionGroup::Elem& y) const {
  return evaluate(w->mul(x, y)) == add(evaluate(x), act(x.g, evaluate(y)));
}

bool admissible_equivalent(const WeilCocycles& z, const AdmissibleHom& a, const AdmissibleHom& b) {
  return z.is_coboundary(subtract(a.values, b.values));
}

}  // namespace torusdual
