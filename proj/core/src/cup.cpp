#include "torusdual/cup.hpp"

#include "torusdual/errors.hpp"

namespace torusdual {

namespace {

void require_norm_zero(const GModule& a_mod, const IntVector& a) {
  if (!is_zero(a_mod.reduce(a_mod.norm_matrix().apply(a))))
    throw ContractViolation("cup: element does not have norm zero");
}

void require_one_cocycle(const GModule& m, const Cochain& f) {
  const FiniteGroup& g = m.group();
  if (f.degree() != 1 || f.rank() != m.rank() || f.group_order() != g.order())
    throw ContractViolation("cup: 1-cochain has the wrong shape");
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y) {
      IntVector d = add(subtract(m.act(x, f.value({y})), f.value({g.mul(x, y)})), f.value({x}));
      if (!is_zero(m.reduce(d))) throw ContractViolation("cup: 1-cochain is not a cocycle");
    }
}

void require_two_cocycle(const GModule& m, const Cochain& f) {
  const FiniteGroup& g = m.group();
  if (f.degree() != 2 || f.rank() != m.rank() || f.group_order() != g.order())
    throw ContractViolation("cup: 2-cochain has the wrong shape");
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c) {
        IntVector d = subtract(add(m.act(a, f.value({b, c})), f.value({a, g.mul(b, c)})),
                               add(f.value({g.mul(a, b), c}), f.value({a, b})));
        if (!is_zero(m.reduce(d))) throw ContractViolation("cup: 2-cochain is not a cocycle");
      }
}

void add_outer(IntVector& out, const IntVector& x, const IntVector& y, int sign) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (sign > 0) {
        out[i * y.size() + j] += x[i] * y[j];
      } else {
        out[i * y.size() + j] -= x[i] * y[j];
      }
    }
  }
}

std::vector<Element> identity_elements(std::size_t n) {
  std::vector<Element> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::string subgroup_label(const FiniteGroup& g, const std::vector<Element>& emb) {
  std::string s = "{";
  for (std::size_t i = 0; i < emb.size(); ++i) s += (i ? ", " : "") + g.label(emb[i]);
  return s + "}";
}

}  // namespace

IntVector swap_tensor(std::size_t rank_a, std::size_t rank_b, const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < rank_a; ++i)
    for (std::size_t j = 0; j < rank_b; ++j) out[j * rank_a + i] = v[i * rank_b + j];
  return out;
}

IntVector cup_m1_1(const GModule& a_mod, const GModule& b_mod, const IntVector& a, const Cochain& r) {
  require_norm_zero(a_mod, a);
  require_one_cocycle(b_mod, r);
  IntVector out(a_mod.rank() * b_mod.rank());
  for (Element g = 0; g < a_mod.group().order(); ++g) add_outer(out, a_mod.act(g, a), r.value({g}), -1);
  return tensor(a_mod, b_mod).reduce(std::move(out));
}

IntVector cup_m2_1(const GModule& b_mod, const GModule& a_mod, const Chain& x, const Cochain& f) {
  require_one_cycle(b_mod, identity_elements(b_mod.group().order()), x);
  require_one_cocycle(a_mod, f);
  const GModule ba = tensor(b_mod, a_mod);
  IntVector out(ba.rank());
  for (Element g = 0; g < b_mod.group().order(); ++g) add_outer(out, x.value({g}), f.value({g}), -1);
  out = ba.reduce(std::move(out));
  if (!is_zero(ba.reduce(ba.norm_matrix().apply(out))))
    throw InternalInconsistency("cup_m2_1: result does not have norm zero");
  return out;
}

IntVector cup_2_m2(const GModule& b_mod, const GModule& a_mod, const Cochain& f, const Chain& x) {
  require_two_cocycle(b_mod, f);
  require_one_cycle(a_mod, identity_elements(a_mod.group().order()), x);
  const FiniteGroup& g = a_mod.group();
  const GModule ba = tensor(b_mod, a_mod);
  IntVector out(ba.rank());
  for (Element h = 1; h < g.order(); ++h) {
    IntVector xh = x.value({h});
    if (is_zero(xh)) continue;
    for (Element k = 0; k < g.order(); ++k) add_outer(out, f.value({k, h}), a_mod.action(k).apply(xh), 1);
  }
  out = ba.reduce(std::move(out));
  for (Element k = 0; k < g.order(); ++k)
    if (!ba.equivalent(ba.action(k).apply(out), out))
      throw InternalInconsistency("cup_2_m2: result is not invariant");
  return out;
}

Cochain cup_m1_2(const GModule& a_mod, const GModule& c_mod, const IntVector& a, const Cochain& u) {
  require_norm_zero(a_mod, a);
  require_two_cocycle(c_mod, u);
  const FiniteGroup& g = a_mod.group();
  const GModule ac = tensor(a_mod, c_mod);
  Cochain out(g.order(), 1, ac.rank());
  for (Element x = 0; x < g.order(); ++x) {
    IntVector v(ac.rank());
    for (Element k = 0; k < g.order(); ++k) add_outer(v, a_mod.act(k, a), c_mod.act(k, u.value({g.inv(k), x})), 1);
    out.set({x}, ac.reduce(std::move(v)));
  }
  return out;
}

FundamentalClassData::FundamentalClassData(GModule c_in, Cochain u_in) : c(std::move(c_in)), u(std::move(u_in)) {
  ExtensionGroup check(c, u);
  u = check.cocycle();
}

bool ClassFormationReport::pass() const { return failure() == nullptr; }

const SubgroupCheck* ClassFormationReport::failure() const {
  for (const auto& s : subgroups)
    if (!s.pass) return &s;
  return nullptr;
}

ClassFormationReport class_formation_check(const FundamentalClassData& data) {
  const FiniteGroup& g = data.group();
  const bool finite = data.c.free_rank() == 0;
  const bool valuation_shape = data.c.is_free() && data.c.has_trivial_action() && g.is_cyclic();
  if (!finite && !valuation_shape)
    throw UnsupportedModel("class formation check: C must be finite, or free with trivial action over a cyclic group");
  ClassFormationReport rep;
  for (const Subgroup& h : subgroups(g)) {
    SubgroupCheck s;
    s.subgroup = h.embedding;
    const GModule ch = restrict_to(data.c, h);
    BarComplex bar(ch, 2);
    s.h1 = bar.cohomology(1).group();
    s.h2 = bar.cohomology(2).group();
    Cochain res(h.order(), 2, data.c.rank());
    for (Element a = 0; a < h.order(); ++a)
      for (Element b = 0; b < h.order(); ++b) res.set({a, b}, data.u.value({h.embedding[a], h.embedding[b]}));
    s.restriction_order = s.h2.element_order(bar.cohomology_class(res));
    const Integer n(static_cast<unsigned long>(h.order()));
    const FinAbGroup cyclic_n = FinAbGroup::from_invariants(0, n == 1 ? IntVector{} : IntVector{n});
    const std::string where = "subgroup " + subgroup_label(g, h.embedding);
    if (!s.h1.is_trivial()) {
      s.witness = where + ": H^1 = " + s.h1.to_string() + " is not zero";
    } else if (!(s.h2 == cyclic_n)) {
      s.witness = where + ": H^2 = " + s.h2.to_string() + " is not cyclic of order " + to_string(n);
    } else if (s.restriction_order != n) {
      s.witness = where + ": restricted class has order " + to_string(s.restriction_order) + ", not " + to_string(n);
    } else {
      s.pass = true;
    }
    rep.subgroups.push_back(std::move(s));
  }
  return rep;
}

InducedMap cup_with_fundamental_class(const FundamentalClassData& data, const GModule& a, int i) {
  if (!(a.group() == data.group())) throw ContractViolation("cup: module over a different group");
  const GModule ac = tensor(a, data.c);
  auto source = std::make_shared<BarComplex>(a, 1);
  auto target = std::make_shared<BarComplex>(ac, 1);
  if (i == -2) {
    const GModule ca = tensor(data.c, a);
    return {"H^-2(G, A)", "H^0(G, A (x) C)", "x -> sum_{g,h} u(g, h) (x) g x(h), factors swapped",
            induced_hom(source->homology(1).quotient, target->tate(0).quotient, [&](const IntVector& v) {
              return swap_tensor(data.c.rank(), a.rank(), cup_2_m2(data.c, a, data.u, source->chain(v, 1)));
            })};
  }
  if (i == -1) {
    return {"H^-1(G, A)", "H^1(G, A (x) C)", "a -> (g -> sum_k k a (x) k u(k^{-1}, g))",
            induced_hom(source->tate(-1).quotient, target->cohomology(1).quotient, [&](const IntVector& v) {
              return target->flatten(cup_m1_2(a, data.c, a.reduce(v), data.u));
            })};
  }
  throw DomainError("cup with the fundamental class is implemented for degrees -2 and -1 only");
}

InducedMap tate_nakayama_iso(const FundamentalClassData& data, const GModule& a, int i) {
  ClassFormationReport rep = class_formation_check(data);
  if (const SubgroupCheck* f = rep.failure()) throw HypothesisFailure("Tate-Nakayama hypotheses fail: " + f->witness);
  return cup_with_fundamental_class(data, a, i);
}

}  // namespace torusdual
