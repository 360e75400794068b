#include "latslope/tensorconj.hpp"

#include <algorithm>

namespace latslope {

namespace {

Rat index_sqrt(const Rat& ratio, const char* what) {
  auto r = exact_sqrt(ratio);
  if (!r) throw Error(std::string("index is not an exact square root: ") + what);
  return *r;
}

Subspace mask_sum(const IsotypicDecomposition& dec, std::uint32_t mask,
                  std::size_t ambient) {
  Subspace u = Subspace::zero(ambient);
  for (std::size_t i = 0; i < dec.components.size(); ++i)
    if (mask & (std::uint32_t(1) << i)) u = u.sum(dec.components[i]);
  return u;
}

// rows spanning the tensor subspace sum_i E_i (x) F_i
RatMatrix split_basis(const std::vector<Subspace>& e_parts,
                      const std::vector<Subspace>& f_parts, std::size_t l_dim,
                      std::size_t m_dim) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < e_parts.size(); ++i)
    total += e_parts[i].dim() * f_parts[i].dim();
  RatMatrix rows(total, l_dim * m_dim);
  std::size_t r = 0;
  for (std::size_t i = 0; i < e_parts.size(); ++i) {
    const auto& eb = e_parts[i].basis();
    const auto& fb = f_parts[i].basis();
    for (std::size_t p = 0; p < eb.rows(); ++p)
      for (std::size_t q = 0; q < fb.rows(); ++q) {
        for (std::size_t a = 0; a < l_dim; ++a) {
          if (eb(p, a) == 0) continue;
          for (std::size_t c = 0; c < m_dim; ++c)
            rows(r, a * m_dim + c) = eb(p, a) * fb(q, c);
        }
        ++r;
      }
  }
  return rows;
}

}  // namespace

GroupAction product_action(const GroupAction& act_g, const GroupAction& act_h) {
  Lattice t = tensor(act_g.parent, act_h.parent);
  std::vector<IntMatrix> gens;
  IntMatrix id_l = int_identity(act_g.parent.rank());
  IntMatrix id_m = int_identity(act_h.parent.rank());
  for (const auto& g : act_g.generators) gens.push_back(kron(g, id_m));
  for (const auto& h : act_h.generators) gens.push_back(kron(id_l, h));
  // re-validated against the Kronecker Gram; a failure here would mean the
  // index conventions of tensor() and kron() drifted apart
  ValidateOptions vo;
  vo.closure_cap = 200000;
  return validate_action(t, std::move(gens), vo);
}

std::vector<SplitSubspace> split_invariant_subspaces(
    const IsotypicDecomposition& dec_e, const IsotypicDecomposition& dec_f,
    std::size_t e_ambient, std::size_t f_ambient) {
  if (!dec_e.multiplicity_free() || !dec_f.multiplicity_free())
    throw Error("split subspaces require multiplicity-free actions on both sides");
  std::size_t r = dec_e.r(), s = dec_f.r();
  std::size_t choices = std::size_t(1) << s;
  std::vector<SplitSubspace> out;
  std::vector<std::uint32_t> masks(r, 0);
  // odometer over per-component masks; all-zero skipped
  for (;;) {
    std::size_t i = 0;
    while (i < r) {
      if (++masks[i] < choices) break;
      masks[i] = 0;
      ++i;
    }
    if (i == r) break;
    SplitSubspace sp;
    sp.masks = masks;
    std::vector<Subspace> e_parts;
    for (std::size_t c = 0; c < r; ++c) {
      e_parts.push_back(dec_e.components[c]);
      sp.f_parts.push_back(mask_sum(dec_f, masks[c], f_ambient));
    }
    sp.realized = Subspace(e_ambient * f_ambient,
                           split_basis(e_parts, sp.f_parts, e_ambient, f_ambient));
    out.push_back(std::move(sp));
  }
  return out;
}

namespace {

struct TensorScan {
  Lattice t;
  TensorMinSlope best;
};

TensorScan scan_splits(const Lattice& l, const IsotypicDecomposition& dec_e,
                       const Lattice& m, const IsotypicDecomposition& dec_f) {
  Lattice t = tensor(l, m);
  auto splits = split_invariant_subspaces(dec_e, dec_f, l.rank(), m.rank());
  std::optional<SlopeValue> best;
  std::vector<Sublattice> minimizers;
  SplitSubspace best_split;
  Sublattice witness = Sublattice::zero(t);
  for (auto& sp : splits) {
    Sublattice cut = intersect(t, sp.realized);
    SlopeValue sv = slope_of(cut);
    if (!best || compare(sv, *best) == Order::Less) {
      best = sv;
      best_split = sp;
      witness = cut;
      minimizers.clear();
    }
    if (compare(sv, *best) == Order::Equal) minimizers.push_back(cut);
  }
  std::sort(minimizers.begin(), minimizers.end(),
            [](const Sublattice& a, const Sublattice& b) {
              if (a.rank() != b.rank()) return a.rank() < b.rank();
              return a.coeffs().data() < b.coeffs().data();
            });
  minimizers.erase(std::unique(minimizers.begin(), minimizers.end()),
                   minimizers.end());
  MinSlopeResult res{*best, witness, MinSlopeMethod::Invariant, {}, minimizers};
  return {t, {res, best_split}};
}

IsotypicDecomposition require_mf(const GroupAction& act,
                                 const DecomposeOptions& opts, const char* side) {
  auto dec = isotypic_decompose(act, opts);
  if (dec.status == MfStatus::Inconclusive)
    throw Error(std::string(side) + ": isotypic splitting inconclusive");
  if (!dec.multiplicity_free())
    throw Error(std::string(side) + ": action is not multiplicity-free (" +
                dec.failure_stage + ")");
  return dec;
}

}  // namespace

TensorMinSlope min_slope_tensor(const Lattice& l, const GroupAction& act_g,
                                const Lattice& m, const GroupAction& act_h,
                                const DecomposeOptions& opts) {
  auto dec_e = require_mf(act_g, opts, "left factor");
  auto dec_f = require_mf(act_h, opts, "right factor");
  return scan_splits(l, dec_e, m, dec_f).best;
}

ConjectureReport conjecture_check(const Lattice& l, const GroupAction& act_g,
                                  const Lattice& m, const GroupAction& act_h,
                                  const ConjectureOptions& opts) {
  auto dec_e = require_mf(act_g, opts.decompose, "left factor");
  auto dec_f = require_mf(act_h, opts.decompose, "right factor");
  auto mu_l = min_slope_invariant(l, dec_e);
  auto mu_m = min_slope_invariant(m, dec_f);
  auto scan = scan_splits(l, dec_e, m, dec_f);
  SlopeValue product = mul(mu_l.value, mu_m.value);
  Order ord = compare(scan.best.result.value, product);
  if (ord == Order::Greater)
    throw Error("trivial inequality violated: split scan missed a sublattice");
  ConjectureReport rep{mu_l.value,
                       mu_m.value,
                       scan.best.result.value,
                       product,
                       ord == Order::Equal ? Verdict::Equal : Verdict::StrictlyLess,
                       scan.best.minimizing_split,
                       scan.best.result.witness,
                       dec_e.r(),
                       dec_f.r(),
                       false};
  if (rep.verdict == Verdict::StrictlyLess) {
    // candidate counterexample: cross-check through the group-free path
    if (scan.t.rank() <= opts.brute.rank_cap) {
      auto brute = min_slope_bruteforce(scan.t, opts.brute);
      if (compare(brute.value, rep.mu_min_tensor) != Order::Equal)
        throw Error("split scan disagrees with brute force on the tensor");
      rep.reverified = true;
    }
  }
  return rep;
}

namespace {

struct AuditSide {
  std::uint32_t mask;
  Subspace e;       // component of the L-side span
  Sublattice li;    // L cap E_i
  Subspace f;       // assigned F_i
  Sublattice mi;    // M cap F_i
  std::size_t l_dim, m_dim;
};

Rat gram_det(const Sublattice& s) {
  return s.rank() == 0 ? Rat(1) : det_rat(s.gram());
}

// det of (A tensor B) p (C tensor D) style orthogonal sums of projections
Rat proj_tensor_det(const Rat& det_a, std::size_t rank_a, const Rat& det_b,
                    std::size_t rank_b) {
  if (rank_a == 0 || rank_b == 0) return Rat(1);
  return rat_pow(det_a, rank_b) * rat_pow(det_b, rank_a);
}

TheoremAudit audit_with_order(const Lattice& l, const IsotypicDecomposition& dec_e,
                              const Lattice& m, const IsotypicDecomposition& dec_f,
                              const SplitSubspace& split, bool swapped) {
  TheoremAudit audit;
  std::size_t ln = l.rank(), mn = m.rank();
  std::uint32_t full_mask = (std::uint32_t(1) << dec_f.r()) - 1;

  AuditSide s1{split.masks[0], dec_e.components[0],
               intersect(l, dec_e.components[0]), split.f_parts[0],
               intersect(m, split.f_parts[0]), dec_e.components[0].dim(),
               split.f_parts[0].dim()};
  AuditSide s2{split.masks[1], dec_e.components[1],
               intersect(l, dec_e.components[1]), split.f_parts[1],
               intersect(m, split.f_parts[1]), dec_e.components[1].dim(),
               split.f_parts[1].dim()};
  if (swapped) std::swap(s1, s2);

  audit.applicable = true;
  audit.l1 = s1.l_dim;
  audit.l2 = s2.l_dim;
  audit.m1 = s1.m_dim;
  audit.m2 = s2.m_dim;
  audit.sign_product_1 = (long(audit.m1) - long(audit.m2)) *
                         (long(audit.l1) - long(audit.l2));
  audit.sign_product_2 = -audit.sign_product_1;

  // a = [L : L1 p L2]
  audit.a = index(l, vstack(s1.li.coeffs(), s2.li.coeffs()));

  bool disjoint = (s1.mask & s2.mask) == 0;
  bool covering = (s1.mask | s2.mask) == full_mask;
  audit.full_diagram = disjoint && covering;

  // b: the honest module index [M : M1 + M2], finite when F1 + F2 = F
  audit.b_defined = covering;
  if (covering) {
    IntMatrix sum = hnf_basis(vstack(s1.mi.coeffs(), s2.mi.coeffs()));
    Int d = det_int(sum);
    audit.b = d < 0 ? Int(-d) : d;
  }

  // alpha_i = (mu(L_i)/mu(L))^(l_i) as an exact 2l-th root
  Rat det_l = l.vol_sq(), det_m = m.vol_sq();
  Rat det_l1 = gram_det(s1.li), det_l2 = gram_det(s2.li);
  Rat det_m1 = gram_det(s1.mi), det_m2 = gram_det(s2.mi);
  audit.alpha1 = {rat_pow(det_l1, ln) / rat_pow(det_l, audit.l1), 2 * ln};
  audit.alpha2 = {rat_pow(det_l2, ln) / rat_pow(det_l, audit.l2), 2 * ln};
  audit.beta1 = audit.m1 == 0
                    ? Radical{Rat(1), 2}
                    : Radical{rat_pow(det_m1, mn) / rat_pow(det_m, audit.m1), 2 * mn};
  audit.beta2 = audit.m2 == 0
                    ? Radical{Rat(1), 2}
                    : Radical{rat_pow(det_m2, mn) / rat_pow(det_m, audit.m2), 2 * mn};

  // per-side indices b_i = [pi'_iM : M_i] = [M : M_i p (M cap F_i-perp)]
  auto side_b = [&](const AuditSide& s) -> Rat {
    if (s.m_dim == 0) return Rat(1);
    Sublattice perp = intersect(m, s.f.orthogonal_complement(m.gram()));
    Rat ratio = gram_det(s.mi) * gram_det(perp) / det_m;
    return index_sqrt(ratio, "b_i");
  };
  audit.b1 = side_b(s1);
  audit.b2 = side_b(s2);

  // diagram determinants inside the tensor lattice
  Lattice t = tensor(l, m);
  Rat det_t = rat_pow(det_l, mn) * rat_pow(det_m, ln);
  Sublattice p = intersect(t, split.realized);
  Rat det_p = gram_det(p);

  IntMatrix bot_left = vstack(kron(s1.li.coeffs(), s1.mi.coeffs()),
                              kron(s2.li.coeffs(), s2.mi.coeffs()));
  RatMatrix blr = to_rat(bot_left);
  Rat det_bot_left = bot_left.rows() == 0
                         ? Rat(1)
                         : det_rat(blr * t.gram() * blr.transpose());

  Sublattice t_perp = intersect(t, split.realized.orthogonal_complement(t.gram()));
  Rat det_t_perp = gram_det(t_perp);
  Rat det_pi_u = det_t / det_t_perp;
  Rat det_pi_uperp = det_t / det_p;

  Rat det_pi1l = det_l / det_l2;  // E2 = E1-perp for r = 2
  Rat det_pi2l = det_l / det_l1;
  auto proj_m_det = [&](const AuditSide& s) -> Rat {
    if (s.m_dim == 0) return Rat(1);
    Sublattice perp = intersect(m, s.f.orthogonal_complement(m.gram()));
    return det_m / gram_det(perp);
  };
  Rat det_pi1m = proj_m_det(s1);
  Rat det_pi2m = proj_m_det(s2);

  Rat proj_left = proj_tensor_det(det_pi1l, audit.l1, det_pi1m, audit.m1) *
                  proj_tensor_det(det_pi2l, audit.l2, det_pi2m, audit.m2);

  audit.x = index_sqrt(det_bot_left / det_p, "x");
  audit.t = index_sqrt(det_p / det_pi_u, "t");
  audit.xp = index_sqrt(det_pi_u / proj_left, "x'");

  Rat a2{audit.a * audit.a};
  audit.checks.push_back(
      {"alpha1*alpha2 = a",
       compare(mul(audit.alpha1, audit.alpha2), Radical{a2, 2}) == Order::Equal});
  if (audit.full_diagram) {
    Rat b2v{audit.b * audit.b};
    audit.checks.push_back(
        {"beta1*beta2 = b",
         compare(mul(audit.beta1, audit.beta2), Radical{b2v, 2}) == Order::Equal});
  }
  {
    Rat rhs = rat_pow(Rat(audit.a), audit.m1 + audit.m2) *
              rat_pow(audit.b1, audit.l1) * rat_pow(audit.b2, audit.l2);
    audit.checks.push_back(
        {"x*t*x' = a^(m1+m2) * b1^l1 * b2^l2", audit.x * audit.t * audit.xp == rhs});
  }
  {
    Rat lim1 = rat_pow(Rat(audit.a), audit.m1) * rat_pow(audit.b1, audit.l1);
    Rat lim2 = rat_pow(Rat(audit.a), audit.m2) * rat_pow(audit.b2, audit.l2);
    audit.checks.push_back(
        {"x <= min(a^m1 b^l1, a^m2 b^l2)", audit.x <= std::min(lim1, lim2)});
  }
  if (audit.full_diagram) {
    IntMatrix bot_right = vstack(kron(s1.li.coeffs(), s2.mi.coeffs()),
                                 kron(s2.li.coeffs(), s1.mi.coeffs()));
    Rat det_bot_right(1);
    if (bot_right.rows() > 0) {
      RatMatrix brr = to_rat(bot_right);
      det_bot_right = det_rat(brr * t.gram() * brr.transpose());
    }
    // the cross side pairs pi_1 L with pi'_2 M and pi_2 L with pi'_1 M
    Rat proj_right = proj_tensor_det(det_pi1l, audit.l1, det_pi2m, audit.m2) *
                     proj_tensor_det(det_pi2l, audit.l2, det_pi1m, audit.m1);
    audit.y = index_sqrt(det_bot_right / det_t_perp, "y");
    audit.yp = index_sqrt(det_pi_uperp / proj_right, "y'");
    Rat lim1 = rat_pow(Rat(audit.a), audit.m1) * rat_pow(Rat(audit.b), audit.l2);
    Rat lim2 = rat_pow(Rat(audit.a), audit.m2) * rat_pow(Rat(audit.b), audit.l1);
    audit.checks.push_back(
        {"y' <= min(a^m1 b^l2, a^m2 b^l1)", *audit.yp <= std::min(lim1, lim2)});
    Rat chain = rat_pow(Rat(audit.a), audit.m1 + audit.m2) *
                rat_pow(Rat(audit.b), audit.l1 + audit.l2);
    audit.checks.push_back(
        {"y*t*y' = a^m * b^l", *audit.y * audit.t * *audit.yp == chain});
  }
  return audit;
}

}  // namespace

TheoremAudit theorem_audit(const Lattice& l, const GroupAction& act_g,
                           const Lattice& m, const GroupAction& act_h,
                           const DecomposeOptions& opts) {
  auto dec_e = require_mf(act_g, opts, "left factor");
  auto dec_f = require_mf(act_h, opts, "right factor");
  if (dec_e.r() != 2) {
    TheoremAudit audit;
    audit.reason = "audit needs exactly two components on the L side (r = " +
                   std::to_string(dec_e.r()) + ")";
    return audit;
  }
  auto scan = scan_splits(l, dec_e, m, dec_f);
  const auto& split = scan.best.minimizing_split;
  std::uint32_t full_mask = (std::uint32_t(1) << dec_f.r()) - 1;
  if ((split.masks[0] | split.masks[1]) != full_mask) {
    TheoremAudit audit;
    audit.reason = "F1 + F2 is a proper subspace of F; the index b is infinite";
    return audit;
  }
  TheoremAudit audit = audit_with_order(l, dec_e, m, dec_f, split, false);
  TheoremAudit mirror = audit_with_order(l, dec_e, m, dec_f, split, true);
  // swapping the two components must not change any verdict
  if (audit.a != mirror.a || audit.x != mirror.x || audit.t != mirror.t ||
      audit.xp != mirror.xp || audit.checks.size() != mirror.checks.size())
    throw Error("audit is not invariant under component swap");
  for (std::size_t i = 0; i < audit.checks.size(); ++i)
    if (audit.checks[i].passed != mirror.checks[i].passed)
      throw Error("audit is not invariant under component swap");
  return audit;
}

ReductionPredicates reduction_predicates(const Lattice& l, const GroupAction& act_g,
                                         const Lattice& m, const GroupAction& act_h,
                                         const DecomposeOptions& opts) {
  auto dec_e = require_mf(act_g, opts, "left factor");
  auto dec_f = require_mf(act_h, opts, "right factor");
  auto mu_l = min_slope_invariant(l, dec_e);
  auto mu_m = min_slope_invariant(m, dec_f);
  auto scan = scan_splits(l, dec_e, m, dec_f);
  const auto& split = scan.best.minimizing_split;

  Subspace sum_e = Subspace::zero(l.rank());
  Subspace sum_f = Subspace::zero(m.rank());
  std::optional<Subspace> cap_f;
  for (std::size_t i = 0; i < split.masks.size(); ++i) {
    if (split.masks[i] == 0) continue;
    sum_e = sum_e.sum(dec_e.components[i]);
    sum_f = sum_f.sum(split.f_parts[i]);
    cap_f = cap_f ? cap_f->intersect(split.f_parts[i]) : split.f_parts[i];
  }
  return {compare(mu_l.value, slope(l)) == Order::Equal,
          compare(mu_m.value, slope(m)) == Order::Equal,
          sum_e.dim() == l.rank(), sum_f.dim() == m.rank(),
          cap_f ? cap_f->dim() == 0 : true};
}

}  // namespace latslope
