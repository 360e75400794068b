#include "latslope/grouprep.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <unordered_set>

#include "latslope/poly.hpp"
#include "latslope/rng.hpp"

namespace latslope {

namespace {

std::string matrix_key(const IntMatrix& m) {
  std::string k;
  k.reserve(m.rows() * m.cols() * 3);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      k += m(i, j).get_str();
      k += ',';
    }
  return k;
}

// BFS closure of the generated group; nullopt when it exceeds the cap.
std::optional<std::unordered_set<std::string>> closure_keys(
    std::size_t n, const std::vector<IntMatrix>& gens, unsigned long cap) {
  std::unordered_set<std::string> seen;
  std::deque<IntMatrix> queue;
  IntMatrix id = int_identity(n);
  seen.insert(matrix_key(id));
  queue.push_back(id);
  while (!queue.empty()) {
    IntMatrix cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      IntMatrix next = cur * g;
      auto key = matrix_key(next);
      if (seen.count(key)) continue;
      if (seen.size() >= cap) return std::nullopt;
      seen.insert(std::move(key));
      queue.push_back(std::move(next));
    }
  }
  return seen;
}

}  // namespace

GroupAction validate_action(const Lattice& l, std::vector<IntMatrix> generators,
                            const ValidateOptions& opts) {
  std::size_t n = l.rank();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw InputError("generator has the wrong shape");
    Int d = det_int(g);
    if (d != 1 && d != -1)
      throw InputError("generator is not unimodular (det = " + d.get_str() + ")");
    RatMatrix gr = to_rat(g);
    if (gr * l.gram() * gr.transpose() != l.gram())
      throw InputError("generator does not preserve the Gram matrix");
  }
  GroupAction action{l, std::move(generators), std::nullopt};
  auto closure = closure_keys(n, action.generators, opts.closure_cap);
  if (!closure) {
    if (opts.strict_closure)
      throw CapExceeded("group closure exceeded the cap of " +
                        std::to_string(opts.closure_cap));
    // Finiteness still holds: integer matrices preserving a positive
    // definite form generate a finite group. Only the order is left unset.
  } else {
    action.order = closure->size();
  }
  return action;
}

std::vector<RatMatrix> commutant(const GroupAction& action) {
  std::size_t n = action.parent.rank();
  // unknowns X_{ab}; equations sum_k X_{ik} g_{kj} - g_{ik} X_{kj} = 0
  std::size_t eqs = action.generators.size() * n * n;
  RatMatrix sys(eqs, n * n);
  std::size_t row = 0;
  for (const auto& g : action.generators) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          sys(row, i * n + k) += Rat(g(k, j));
          sys(row, k * n + j) -= Rat(g(i, k));
        }
        ++row;
      }
  }
  RatMatrix kernel = rational_kernel(sys);
  std::vector<RatMatrix> basis;
  for (std::size_t b = 0; b < kernel.rows(); ++b) {
    RatMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = kernel(b, i * n + j);
    basis.push_back(std::move(x));
  }
  return basis;
}

namespace {

// Matrix of the action of g restricted to the row space of `basis`:
// solves A * basis = basis * g exactly.
RatMatrix restrict_to(const RatMatrix& basis, const RatMatrix& g) {
  auto sol = solve_left(basis, basis * g);
  if (!sol) throw Error("subspace is not invariant under the generator");
  return *sol;
}

}  // namespace

IsotypicDecomposition isotypic_decompose(const GroupAction& action,
                                         const DecomposeOptions& opts) {
  IsotypicDecomposition dec;
  std::size_t n = action.parent.rank();
  auto comm = commutant(action);
  dec.commutant_dim = comm.size();

  for (std::size_t a = 0; a < comm.size(); ++a)
    for (std::size_t b = a + 1; b < comm.size(); ++b)
      if (comm[a] * comm[b] != comm[b] * comm[a]) {
        dec.status = MfStatus::NotMultiplicityFree;
        dec.failure_stage = "commutant is not commutative";
        return dec;
      }

  // Draw random small-integer combinations of the commutant basis until the
  // minimal polynomial splits into commutant_dim distinct rational factors.
  Xoshiro256 rng(opts.seed);
  std::size_t d = comm.size();
  for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
    RatMatrix t(n, n);
    for (auto& c : comm) {
      long coeff = static_cast<long>(rng.next_range(13)) - 6;
      if (coeff == 0) coeff = 1;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(i, j) += Rat(coeff) * c(i, j);
    }
    Poly p = minimal_polynomial(t);
    if (p.degree() != static_cast<int>(d)) continue;
    auto roots = rational_roots(p);
    if (roots.size() != d) continue;
    bool distinct = true;
    for (std::size_t i = 0; i + 1 < roots.size(); ++i)
      if (roots[i] == roots[i + 1]) distinct = false;
    if (!distinct) continue;

    std::vector<Subspace> comps;
    std::size_t total = 0;
    for (const Rat& theta : roots) {
      RatMatrix shifted = t;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= theta;
      // eigenspace: rows v with v * (t - theta) = 0
      RatMatrix eig = rational_kernel(shifted.transpose());
      comps.emplace_back(n, eig);
      total += comps.back().dim();
    }
    if (total != n) continue;  // splitting element was not generic enough

    // canonical order, independent of the splitting element
    std::sort(comps.begin(), comps.end(), [](const Subspace& a, const Subspace& b) {
      if (a.dim() != b.dim()) return a.dim() < b.dim();
      return a.basis().data() < b.basis().data();
    });

    // stability and absolute irreducibility of each component
    dec.components = comps;
    dec.component_endo_dims.clear();
    for (const auto& comp : comps) {
      for (const auto& g : action.generators) {
        if (Subspace(n, comp.basis() * to_rat(g)) != comp) {
          dec.status = MfStatus::NotMultiplicityFree;
          dec.failure_stage = "eigencomponent is not invariant";
          return dec;
        }
      }
      // commutant of the restricted action
      std::vector<RatMatrix> restricted;
      for (const auto& g : action.generators)
        restricted.push_back(restrict_to(comp.basis(), to_rat(g)));
      std::size_t k = comp.dim();
      RatMatrix sys(restricted.size() * k * k, k * k);
      std::size_t row = 0;
      for (const auto& rg : restricted) {
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t m = 0; m < k; ++m) {
              sys(row, i * k + m) += rg(m, j);
              sys(row, m * k + j) -= rg(i, m);
            }
            ++row;
          }
      }
      std::size_t endo_dim = k * k - rref(sys).pivots.size();
      dec.component_endo_dims.push_back(endo_dim);
    }
    for (std::size_t i = 0; i < dec.component_endo_dims.size(); ++i)
      if (dec.component_endo_dims[i] != 1) {
        dec.status = MfStatus::NotMultiplicityFree;
        dec.failure_stage = "component endomorphism ring has dimension " +
                            std::to_string(dec.component_endo_dims[i]);
        return dec;
      }
    // mutual orthogonality under the Gram form (unitary isotypic components)
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        RatMatrix prod =
            comps[i].basis() * action.parent.gram() * comps[j].basis().transpose();
        for (const auto& v : prod.data())
          if (v != 0) throw Error("isotypic components are not orthogonal");
      }
    dec.status = MfStatus::MultiplicityFree;
    return dec;
  }
  dec.status = MfStatus::Inconclusive;
  dec.failure_stage = "no splitting element found within the retry budget";
  return dec;
}

std::vector<Subspace> invariant_subspaces(const IsotypicDecomposition& dec) {
  if (!dec.multiplicity_free())
    throw Error("invariant subspaces require a multiplicity-free action");
  std::size_t r = dec.components.size();
  std::size_t ambient = dec.components.front().ambient();
  std::vector<Subspace> out;
  for (std::size_t mask = 1; mask < (std::size_t(1) << r); ++mask) {
    Subspace u = Subspace::zero(ambient);
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t(1) << i)) u = u.sum(dec.components[i]);
    out.push_back(std::move(u));
  }
  return out;
}

MinSlopeResult min_slope_invariant(const Lattice& l,
                                   const IsotypicDecomposition& dec) {
  if (!dec.multiplicity_free())
    throw Error("invariant-path minimal slope requires a multiplicity-free action");
  auto spaces = invariant_subspaces(dec);
  std::optional<SlopeValue> best;
  std::vector<Sublattice> minimizers;
  for (const auto& u : spaces) {
    Sublattice s = intersect(l, u);
    SlopeValue sv = slope_of(s);
    if (!best || compare(sv, *best) == Order::Less) {
      best = sv;
      minimizers.clear();
    }
    if (compare(sv, *best) == Order::Equal) minimizers.push_back(std::move(s));
  }
  std::sort(minimizers.begin(), minimizers.end(),
            [](const Sublattice& a, const Sublattice& b) {
              if (a.rank() != b.rank()) return a.rank() < b.rank();
              return a.coeffs().data() < b.coeffs().data();
            });
  minimizers.erase(std::unique(minimizers.begin(), minimizers.end()),
                   minimizers.end());
  return {*best, minimizers.front(), MinSlopeMethod::Invariant, {}, minimizers};
}

MinSlopeResult min_slope_invariant(const Lattice& l, const GroupAction& action,
                                   const DecomposeOptions& opts) {
  return min_slope_invariant(l, isotypic_decompose(action, opts));
}

GroupAction naive_automorphisms(const Lattice& l,
                                const AutomorphismSearchOptions& opts) {
  std::size_t n = l.rank();
  if (n > opts.rank_cap)
    throw CapExceeded("automorphism search rank cap exceeded");
  Rat max_diag = l.gram()(0, 0);
  for (std::size_t i = 1; i < n; ++i)
    max_diag = std::max(max_diag, l.gram()(i, i));
  auto shorts = enumerate_short(l.gram(), max_diag);
  // candidate images, both signs
  std::vector<std::vector<Int>> cand;
  std::vector<Rat> cand_norm;
  for (const auto& sv : shorts) {
    cand.push_back(sv.coeffs);
    cand_norm.push_back(sv.norm_sq);
    std::vector<Int> neg = sv.coeffs;
    for (auto& t : neg) t = -t;
    cand.push_back(std::move(neg));
    cand_norm.push_back(sv.norm_sq);
  }
  auto pair_ip = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    Rat acc(0);
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b[j] != 0) acc += Rat(a[i]) * l.gram()(i, j) * Rat(b[j]);
    }
    return acc;
  };

  std::vector<IntMatrix> found;
  std::vector<std::size_t> chosen(n);
  unsigned long nodes = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == n) {
      IntMatrix g(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = cand[chosen[i]][j];
      Int d = det_int(g);
      if (d == 1 || d == -1) found.push_back(std::move(g));
      return;
    }
    for (std::size_t c = 0; c < cand.size(); ++c) {
      if (++nodes > opts.node_cap)
        throw CapExceeded("automorphism search node cap exceeded");
      if (cand_norm[c] != l.gram()(depth, depth)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j)
        if (pair_ip(cand[chosen[j]], cand[c]) != l.gram()(depth, j)) ok = false;
      if (!ok) continue;
      chosen[depth] = c;
      rec(depth + 1);
    }
  };
  rec(0);
  // Select a small generating subset before validating, to keep the closure
  // pass from multiplying every element by every element.
  std::vector<IntMatrix> gens;
  std::unordered_set<std::string> covered;
  covered.insert(matrix_key(int_identity(n)));
  for (const auto& e : found) {
    if (covered.count(matrix_key(e))) continue;
    gens.push_back(e);
    auto cl = closure_keys(n, gens, opts.node_cap);
    if (!cl) throw CapExceeded("automorphism closure cap exceeded");
    covered = std::move(*cl);
  }
  if (gens.empty()) gens.push_back(int_identity(n));
  return validate_action(l, std::move(gens));
}

}  // namespace latslope
