#include "torusdual/maps.hpp"

#include "torusdual/errors.hpp"

namespace torusdual {

namespace {

std::vector<Element> identity_map(std::size_t n) {
  std::vector<Element> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

IntVector cell_vector(const Chain& x, std::size_t idx) {
  auto c = x.cell(idx);
  return {c.begin(), c.end()};
}

std::string canonical_label(std::size_t k) { return "generator " + std::to_string(k); }

}  // namespace

void require_one_cycle(const GModule& a, const std::vector<Element>& image, const Chain& x) {
  if (x.degree() != 1 || x.rank() != a.rank() || x.group_order() != image.size())
    throw ContractViolation("1-chain has the wrong shape");
  IntVector d(a.rank());
  const FiniteGroup& g = a.group();
  for (std::size_t w = 0; w < image.size(); ++w) {
    IntVector v = cell_vector(x, w);
    if (is_zero(v)) continue;
    d = add(d, subtract(a.action(g.inv(image[w])).apply(v), v));
  }
  if (!is_zero(a.reduce(d))) throw ContractViolation("1-chain is not a cycle");
}

Chain corestriction_h1(const GModule& a, const Subgroup& sub, const Chain& x) {
  require_one_cycle(restrict_to(a, sub), identity_map(sub.order()), x);
  Chain y(a.group().order(), 1, a.rank());
  for (std::size_t k = 0; k < sub.order(); ++k) y.add({sub.embedding[k]}, cell_vector(x, k));
  return y;
}

Chain coinflation_h1(const ExtensionGroup& w, const GModule& a, const Chain& x) {
  require_one_cycle(a, w.projection(), x);
  Chain y(w.quotient_group().order(), 1, a.rank());
  const auto& elems = w.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) y.add({elems[i].g}, cell_vector(x, i));
  return y;
}

Chain transfer_h1(const ExtensionGroup& w, const GModule& a, const Chain& x) {
  require_one_cycle(a, w.projection(), x);
  const Subgroup ker = w.kernel_subgroup();
  Chain y(ker.order(), 1, a.rank());
  const auto& elems = w.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    IntVector v = cell_vector(x, i);
    if (is_zero(v)) continue;
    for (Element g = 0; g < w.quotient_group().order(); ++g) {
      const std::size_t c = ker.index_of(w.index_of(w.from_kernel(w.decomposition(g, elems[i]))));
      y.add({c}, a.action(g).apply(v));
    }
  }
  return y;
}

IntVector kernel_hurewicz(const ExtensionGroup& w, const GModule& a, const Chain& y) {
  const Subgroup ker = w.kernel_subgroup();
  const std::size_t r = a.rank();
  IntVector out(w.kernel_module().rank() * r);
  for (std::size_t k = 0; k < ker.order(); ++k) {
    IntVector v = cell_vector(y, k);
    const IntVector& c = w.elements()[ker.embedding[k]].c;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < r; ++j) out[i * r + j] += c[i] * v[j];
  }
  return out;
}

IntVector transfer_h0(const GModule& a, const Subgroup& k, const IntVector& v) {
  IntVector out(a.rank());
  for (Element g : right_coset_representatives(a.group(), k)) out = add(out, a.action(g).apply(v));
  return a.reduce(std::move(out));
}

IntVector dim_shift_delta(const GModule& a, const Subgroup& k, const Chain& z) {
  require_one_cycle(restrict_to(a, k), identity_map(k.order()), z);
  const FiniteGroup& h = a.group();
  const std::size_t r = a.rank();
  IntVector out((h.order() - 1) * r);
  for (std::size_t i = 0; i < k.order(); ++i) {
    const Element wi = h.inv(k.embedding[i]);
    if (wi == 0) continue;
    IntVector v = a.action(wi).apply(cell_vector(z, i));
    for (std::size_t j = 0; j < r; ++j) out[(wi - 1) * r + j] += v[j];
  }
  return out;
}

IntVector dim_shift_delta(const GModule& a, const Chain& z) {
  return dim_shift_delta(a, generated_subgroup(a.group(), a.group().generators()), z);
}

WeilHomology::WeilHomology(const ExtensionGroup& w, GModule m)
    : w_(w), m_(std::move(m)), cm_(tensor(w.kernel_module(), m_)), p_(torusdual::presentation(w)) {
  if (!m_.is_free()) throw DomainError("weil homology: coefficient module must be free");
  fox_ = h1_weil(w_, p_, m_);
  base_ = std::make_unique<BarComplex>(m_, 1);
  h1_c_ = cm_.as_subquotient();
  h1_c_inv_ = invariants(cm_);
}

IntVector WeilHomology::corestriction_rule(const IntVector& cm) const {
  const std::size_t r = m_.rank();
  IntVector out(fox_.generators * r);
  for (std::size_t i = 0; i < w_.kernel_module().rank(); ++i)
    for (std::size_t j = 0; j < r; ++j) out[fox_.position(p_.kernel_generator(i), j)] += cm[i * r + j];
  return out;
}

Chain WeilHomology::coinflation_rule(const IntVector& x) const {
  const std::size_t r = m_.rank();
  Chain y(w_.quotient_group().order(), 1, r);
  for (std::size_t s = 0; s < fox_.generators; ++s) {
    if (p_.image[s] == 0) continue;
    y.add({p_.image[s]}, IntVector(x.begin() + s * r, x.begin() + (s + 1) * r));
  }
  return y;
}

IntVector WeilHomology::transfer_rule(const IntVector& x) const {
  const std::size_t r = m_.rank();
  IntVector out(cm_.rank());
  for (std::size_t s = 0; s < fox_.generators; ++s) {
    IntVector v(x.begin() + s * r, x.begin() + (s + 1) * r);
    if (is_zero(v)) continue;
    const auto elem = evaluate_word(w_, p_, {{s, 1}});
    for (Element g = 0; g < w_.quotient_group().order(); ++g) {
      IntVector u = w_.decomposition(g, elem);
      IntVector gv = m_.action(g).apply(v);
      for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < r; ++j) out[i * r + j] += u[i] * gv[j];
    }
  }
  return cm_.reduce(std::move(out));
}

InducedMap WeilHomology::corestriction() const {
  return {"H1(C, M)", "H1(W, M)", "a (x) m -> sum_i a_i m e_{c_i}",
          induced_hom(h1_c_, h1_w(), [&](const IntVector& v) { return corestriction_rule(v); })};
}

InducedMap WeilHomology::coinflation() const {
  return {"H1(W, M)", "H1(G, M)", "m e_{t_g} -> m [g], kernel generators -> 0",
          induced_hom(h1_w(), h1_g(), [&](const IntVector& v) { return base_->flatten(coinflation_rule(v)); })};
}

InducedMap WeilHomology::transfer() const {
  return {"H1(W, M)", "H1(C, M)", "m e_s -> sum_g u(w_g, s) (x) g m",
          induced_hom(h1_w(), h1_c_, [&](const IntVector& v) { return transfer_rule(v); })};
}

InducedMap WeilHomology::transfer_to_invariants() const {
  return {"H1(W, M)", "H1(C, M)^G", "m e_s -> sum_g u(w_g, s) (x) g m",
          induced_hom(h1_w(), h1_c_inv_, [&](const IntVector& v) { return transfer_rule(v); })};
}

InducedMap WeilHomology::norm() const {
  IntMatrix n = cm_.norm_matrix();
  return {"H1(C, M)", "H1(C, M)", "x -> sum_g g x",
          induced_hom(h1_c_, h1_c_, [&](const IntVector& v) { return n.apply(v); })};
}

FiveTermReport five_term_check(const WeilHomology& h) {
  FiveTermReport rep;
  const GroupHom cor = h.corestriction().map;
  const GroupHom coinf = h.coinflation().map;
  const Lattice image = cor.image();
  const Lattice kernel = coinf.kernel();
  rep.corestriction_image_is_kernel = image == kernel;
  if (!rep.corestriction_image_is_kernel) {
    for (std::size_t k = 0; k < cor.source().num_coordinates() && !rep.witness; ++k) {
      IntVector e(cor.source().num_coordinates());
      e[k] = 1;
      if (!kernel.contains(cor.apply(e))) rep.witness = "coinflation of Cor(" + canonical_label(k) + ") is nonzero";
    }
    for (std::size_t r = 0; r < kernel.rank() && !rep.witness; ++r)
      if (!image.contains(kernel.basis().row_vector(r)))
        rep.witness = "kernel element " + std::to_string(r) + " of coinflation is not a corestriction";
  }
  rep.coinflation_surjective = coinf.is_surjective();
  if (!rep.coinflation_surjective && !rep.witness) {
    const Lattice img = coinf.image();
    for (std::size_t k = 0; k < coinf.target().num_coordinates() && !rep.witness; ++k) {
      IntVector e(coinf.target().num_coordinates());
      e[k] = 1;
      if (!img.contains(e)) rep.witness = "H1(G, M) " + canonical_label(k) + " is not hit by coinflation";
    }
  }
  return rep;
}

}  // namespace torusdual
