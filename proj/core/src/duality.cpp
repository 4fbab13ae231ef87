#include "torusdual/duality.hpp"

#include "torusdual/errors.hpp"

#include <random>

namespace torusdual {

namespace {

IntVector unit(std::size_t n, std::size_t k) {
  IntVector e(n);
  e[k] = 1;
  return e;
}

FinAbGroup dual_torsion(const FinAbGroup& a, const Integer& d) {
  IntVector t;
  for (std::size_t i = 0; i < a.free_rank(); ++i) t.push_back(d);
  for (const Integer& m : a.torsion()) t.push_back(gcd_of(m, d));
  IntVector kept;
  for (const Integer& x : t)
    if (x > 1) kept.push_back(x);
  std::sort(kept.begin(), kept.end());
  return FinAbGroup::from_invariants(0, kept);
}

std::string coords_label(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace

Subquotient hom_g_l_c(const TorusFixture& fix) { return invariants(tensor(fix.formation_module(), fix.lattice_dual())); }

DualityContext::DualityContext(const TorusFixture& fix)
    : fix_(fix), lhat_(fix.lattice_dual()), data_(FundamentalClassData::from(fix.weil)) {
  ClassFormationReport rep = class_formation_check(data_);
  if (const SubgroupCheck* f = rep.failure())
    throw HypothesisFailure(fix.name + ": Tate-Nakayama hypotheses fail: " + f->witness);
  homology_ = std::make_unique<WeilHomology>(fix.weil, lhat_);
  cocycles_ = std::make_unique<WeilCocycles>(homology_->fox());
  transfer_ = homology_->transfer_to_invariants().map;
  const FinAbGroup& target = transfer_.target();
  for (std::size_t k = 0; k < target.num_coordinates(); ++k) {
    auto s = solve(transfer_.matrix(), unit(target.num_coordinates(), k), target.moduli());
    if (!s) throw InternalInconsistency(fix.name + ": generator " + std::to_string(k) + " of Hom_G(L, C) is not a transfer");
    lifts_.push_back(homology_->h1_w().lift(*s));
  }
}

QVector DualityContext::psi(const QVector& f) const {
  if (!cocycles_->is_cocycle(f)) throw ContractViolation("psi: values do not define a cocycle");
  QVector out;
  for (const IntVector& x : lifts_) out.push_back(dot(x, f));
  return out;
}

Theorem1Report verify_theorem1(const DualityContext& ctx, long max_d, unsigned seed) {
  Theorem1Report rep;
  const WeilCocycles& z = ctx.cocycles();
  rep.h1_w = ctx.homology().h1_w().group();
  rep.hom_glc = ctx.hom_g_l_c().group();
  rep.free_ranks_equal = rep.h1_w.free_rank() == rep.hom_glc.free_rank();
  rep.transfer_bijective = ctx.transfer().is_bijective();
  if (!rep.transfer_bijective) rep.failure = "Tr_1 is not a bijection onto Hom_G(L, C)";
  if (!rep.free_ranks_equal && !rep.failure)
    rep.failure = "free ranks differ: H_1(W, Lhat) = " + rep.h1_w.to_string() + ", Hom_G(L, C) = " + rep.hom_glc.to_string();

  std::mt19937_64 rng(seed);
  rep.additive = true;
  rep.kills_coboundaries = true;
  const std::size_t gens = rep.hom_glc.num_coordinates();
  for (long d = 1; d <= max_d; ++d) {
    SliceCheck sc;
    sc.d = d;
    DualSlice slice = z.slice(d);
    sc.classes = slice.group();
    sc.duals = dual_torsion(rep.hom_glc, d);
    // Coordinates in `duals`: value * (order of the slot), reduced; slots with order 1 are dropped.
    std::vector<Integer> slot;
    for (std::size_t i = 0; i < rep.hom_glc.free_rank(); ++i) slot.push_back(d);
    for (const Integer& m : rep.hom_glc.torsion()) slot.push_back(gcd_of(m, d));
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < slot.size(); ++i)
      if (slot[i] > 1) kept.push_back(i);
    std::stable_sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) { return slot[a] < slot[b]; });

    const std::size_t nc = sc.classes.num_coordinates();
    sc.psi = IntMatrix(kept.size(), nc);
    std::vector<QVector> images;
    for (std::size_t k = 0; k < nc; ++k) {
      QVector v = ctx.psi(slice.cochain(unit(nc, k)));
      images.push_back(v);
      for (std::size_t r = 0; r < kept.size(); ++r) {
        const QmodZ& q = v[kept[r]];
        const Integer& m = slot[kept[r]];
        if (!divides(q.denominator(), m)) {
          if (!rep.failure) rep.failure = "Psi value " + q.to_string() + " is not " + to_string(m) + "-torsion";
          continue;
        }
        sc.psi(r, k) = q.numerator() * (m / q.denominator());
      }
      for (std::size_t i = 0; i < gens; ++i) {
        bool used = false;
        for (std::size_t r : kept) used = used || r == i;
        if (!used && !v[i].is_zero() && !rep.failure)
          rep.failure = "Psi value on a generator of order dividing gcd with " + std::to_string(d) + " is nonzero";
      }
    }
    try {
      sc.bijective = GroupHom(sc.classes, sc.duals, sc.psi).is_bijective();
    } catch (const ContractViolation&) {
      sc.bijective = false;
    }
    if (!sc.bijective && !rep.failure)
      rep.failure = "d = " + std::to_string(d) + ": Psi is not a bijection " + sc.classes.to_string() + " -> " +
                    sc.duals.to_string();

    // Additivity on random combinations and vanishing on coboundaries.
    for (int trial = 0; trial < 4 && nc > 0; ++trial) {
      IntVector a(nc), b(nc);
      for (std::size_t k = 0; k < nc; ++k) {
        a[k] = std::uniform_int_distribution<long>(-3, 3)(rng);
        b[k] = std::uniform_int_distribution<long>(-3, 3)(rng);
      }
      QVector fa = slice.cochain(a), fb = slice.cochain(b);
      if (!(ctx.psi(add(fa, fb)) == add(ctx.psi(fa), ctx.psi(fb)))) rep.additive = false;
    }
    QVector t(ctx.lattice_dual().rank());
    for (auto& q : t) q = QmodZ(std::uniform_int_distribution<long>(0, d - 1)(rng), d);
    if (!is_zero(ctx.psi(z.coboundary(t)))) rep.kills_coboundaries = false;
    rep.slices.push_back(std::move(sc));
  }
  if (!rep.additive && !rep.failure) rep.failure = "Psi is not additive";
  if (!rep.kills_coboundaries && !rep.failure) rep.failure = "Psi does not vanish on a coboundary";
  return rep;
}

DiagramReport verify_diagram_A(const DualityContext& ctx) {
  DiagramReport rep;
  const WeilHomology& h = ctx.homology();
  rep.top_row = five_term_check(h);
  if (!rep.top_row.exact()) rep.failure = "top row: " + rep.top_row.witness.value_or("not exact");

  const GroupHom norm = h.norm().map;
  rep.transfer_after_corestriction_is_norm = h.transfer().map.after(h.corestriction().map).same_as(norm);
  if (!rep.transfer_after_corestriction_is_norm && !rep.failure) {
    const GroupHom tc = h.transfer().map.after(h.corestriction().map);
    for (std::size_t k = 0; k < tc.source().num_coordinates(); ++k) {
      IntVector e = unit(tc.source().num_coordinates(), k);
      if (!(tc.target().reduce(tc.apply(e)) == tc.target().reduce(norm.apply(e)))) {
        rep.failure = "first square: Tr(Cor(generator " + std::to_string(k) + ")) differs from its norm";
        break;
      }
    }
  }

  const GModule& cm = h.kernel_coefficients();
  BarComplex cm_bar(cm, 1);
  const Subquotient& hat0 = cm_bar.tate(0).quotient;
  const FundamentalClassData& data = ctx.fundamental_class();
  GroupHom cup = induced_hom(h.h1_g(), hat0, [&](const IntVector& v) {
    return cup_2_m2(data.c, ctx.lattice_dual(), data.u, h.base().chain(v, 1));
  });
  GroupHom project = induced_hom(h.h1_c_invariants(), hat0, [](const IntVector& v) { return v; });
  GroupHom left = cup.after(h.coinflation().map);
  GroupHom right = project.after(ctx.transfer());
  rep.cup_square_commutes = left.same_as(right);
  if (!rep.cup_square_commutes && !rep.failure) {
    for (std::size_t k = 0; k < left.source().num_coordinates(); ++k) {
      IntVector e = unit(left.source().num_coordinates(), k);
      if (!(left.target().reduce(left.apply(e)) == left.target().reduce(right.apply(e)))) {
        rep.failure = "second square: H_1(W) generator " + std::to_string(k) + " maps to " +
                      coords_label(left.apply(e)) + " vs " + coords_label(right.apply(e));
        break;
      }
    }
  }
  rep.cup_is_isomorphism = cup.is_bijective();
  if (!rep.cup_is_isomorphism && !rep.failure) rep.failure = "cup with the fundamental class is not bijective";

  // Bottom row: H_1(C) -> H_1(C)^G -> hat-H^0 -> 0.
  GroupHom n_inv = induced_hom(h.h1_c(), h.h1_c_invariants(), [&](const IntVector& v) { return cm.norm_matrix().apply(v); });
  rep.bottom_row_exact = n_inv.image() == project.kernel() && project.is_surjective();
  if (!rep.bottom_row_exact && !rep.failure) rep.failure = "bottom row is not exact";
  return rep;
}

KernelReport kernel_characterization(const DualityContext& ctx) {
  const WeilHomology& h = ctx.homology();
  const GroupHom cor = h.corestriction().map;
  const GroupHom norm = h.norm().map;
  KernelReport rep{cor.kernel(), norm.kernel(), std::nullopt};
  if (!(rep.corestriction_kernel == rep.norm_kernel)) {
    for (std::size_t r = 0; r < rep.corestriction_kernel.rank() && !rep.failure; ++r)
      if (!rep.norm_kernel.contains(rep.corestriction_kernel.basis().row_vector(r)))
        rep.failure = "element " + coords_label(rep.corestriction_kernel.basis().row_vector(r)) +
                      " is killed by Cor but has nonzero norm";
    for (std::size_t r = 0; r < rep.norm_kernel.rank() && !rep.failure; ++r)
      if (!rep.corestriction_kernel.contains(rep.norm_kernel.basis().row_vector(r)))
        rep.failure = "element " + coords_label(rep.norm_kernel.basis().row_vector(r)) +
                      " has norm zero but survives Cor";
  }
  return rep;
}

ExtensionReport extension_obstruction(const TorusFixture& fix, const QVector& psi) {
  const GModule& c = fix.formation_module();
  const GModule lhat = fix.lattice_dual();
  const FiniteGroup& g = fix.group();
  const std::size_t rc = c.rank(), rl = lhat.rank();
  if (psi.size() != rc * rl) throw ContractViolation("extension: psi has the wrong length");
  auto image = [&](const IntVector& a) {
    QVector v = zero_qvector(rl);
    for (std::size_t i = 0; i < rc; ++i)
      for (std::size_t j = 0; j < rl; ++j) v[j] += a[i] * psi[i * rl + j];
    return v;
  };
  for (std::size_t i = 0; i < rc; ++i)
    if (sgn(c.moduli()[i]) != 0 && !is_zero(image(scale(c.moduli()[i], unit(rc, i)))))
      throw ContractViolation("extension: psi is not defined on the torsion of C");

  ExtensionReport rep;
  // (g psi(a))(l) = psi(a)(g^{-1} l), i.e. the action matrix of g^{-1} on Lhat, transposed.
  auto act_t = [&](Element x, const QVector& phi) { return multiply(lhat.action(g.inv(x)).transpose(), phi); };
  rep.invariant = true;
  for (Element x : g.generators())
    for (std::size_t i = 0; i < rc && rep.invariant; ++i) {
      const IntVector e = unit(rc, i);
      if (!(image(c.act(x, e)) == act_t(x, image(e)))) {
        rep.invariant = false;
        rep.diagnostic = "psi(" + g.label(x) + " . c" + std::to_string(i + 1) + ") differs from " + g.label(x) +
                         " . psi(c" + std::to_string(i + 1) + ")";
      }
    }
  if (!rep.invariant) return rep;

  BarComplex bar(lhat, 2);
  QCochain pushed(g.order(), 2, rl);
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) pushed.set({a, b}, image(fix.weil.u_bar(a, b)));
  UniversalCoefficients uct(bar, 2);
  if (!uct.is_cocycle(pushed)) throw InternalInconsistency("extension: pushed class is not a cocycle");
  rep.obstruction = uct.evaluate(pushed);
  rep.obstruction_zero = is_zero(rep.obstruction);

  // Solve the relator conditions for the coset-generator values with f(c_i) = psi(e_i) fixed.
  Presentation p = presentation(fix.weil);
  FoxComplex fc = h1_weil(fix.weil, p, lhat);
  const IntMatrix cond = fc.d2.transpose();
  const std::size_t fixed = rc * rl;
  IntMatrix free_part = cond.column_range(fixed, cond.cols() - fixed);
  QVector rhs = zero_qvector(cond.rows());
  for (std::size_t r = 0; r < cond.rows(); ++r)
    for (std::size_t k = 0; k < fixed; ++k) rhs[r] += (-cond(r, k)) * psi[k];
  if (auto sol = solve_qz(free_part, rhs)) {
    QVector f = psi;
    f.insert(f.end(), sol->begin(), sol->end());
    rep.extension = std::move(f);
  }
  if (rep.obstruction_zero != rep.extension.has_value())
    rep.diagnostic = "obstruction and explicit extension disagree";
  return rep;
}

}  // namespace torusdual
