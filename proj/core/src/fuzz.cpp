#include "latslope/fuzz.hpp"

#include <sstream>

#include <json.hpp>

namespace latslope {

using nlohmann::json;

namespace {

json gram_json(const Lattice& l) {
  json rows = json::array();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < l.rank(); ++j)
      row.push_back(rat_to_string(l.gram()(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json coeff_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string reproducer(const std::string& campaign, std::uint64_t seed,
                       unsigned trial, json detail) {
  detail["campaign"] = campaign;
  detail["seed"] = seed;
  detail["trial"] = trial;
  return detail.dump(2);
}

std::size_t pick_rank(Xoshiro256& rng, const FuzzConfig& cfg) {
  return static_cast<std::size_t>(
      rng.next_int(static_cast<long>(cfg.min_rank), static_cast<long>(cfg.max_rank)));
}

template <typename Body>
FuzzOutcome run_campaign(const char* name, const FuzzConfig& cfg, Body body) {
  FuzzOutcome out;
  out.campaign = name;
  out.seed = cfg.seed;
  out.trials = cfg.trials;
  Xoshiro256 rng(cfg.seed);
  for (unsigned t = 0; t < cfg.trials; ++t) {
    auto detail = body(rng);
    if (detail) {
      ++out.failures;
      out.failure_details.push_back({t, reproducer(name, cfg.seed, t, *detail)});
    }
  }
  return out;
}

}  // namespace

std::string fuzz_summary_csv(const FuzzOutcome& o) {
  std::ostringstream os;
  os << "campaign,seed,trials,failures\n"
     << o.campaign << "," << o.seed << "," << o.trials << "," << o.failures
     << "\n";
  return os.str();
}

FuzzOutcome parallelogram_campaign(const FuzzConfig& cfg) {
  return run_campaign("parallelogram", cfg,
                      [&](Xoshiro256& rng) -> std::optional<json> {
    std::size_t n = pick_rank(rng, cfg);
    Lattice l = random_lattice(rng, n, cfg.entry_bound);
    std::size_t r1 = static_cast<std::size_t>(rng.next_int(1, long(n)));
    std::size_t r2 = static_cast<std::size_t>(rng.next_int(1, long(n)));
    Sublattice s1 = random_sublattice(rng, l, r1);
    Sublattice s2 = random_sublattice(rng, l, r2);
    auto rep = parallelogram_check(l, s1, s2);
    if (rep.holds) return std::nullopt;
    return json{{"gram", gram_json(l)},
                {"s1", coeff_json(s1.coeffs())},
                {"s2", coeff_json(s2.coeffs())}};
  });
}

FuzzOutcome lemma_x_campaign(const FuzzConfig& cfg) {
  return run_campaign("lemma-x", cfg, [&](Xoshiro256& rng) -> std::optional<json> {
    std::size_t n = std::max<std::size_t>(2, pick_rank(rng, cfg));
    Lattice l = random_lattice(rng, n, cfg.entry_bound);
    std::size_t r = static_cast<std::size_t>(rng.next_int(1, long(n) - 1));
    Sublattice s = random_sublattice(rng, l, r);
    auto rep = quotient_minslope_check(l, s);
    if (rep.holds()) return std::nullopt;
    return json{{"gram", gram_json(l)}, {"s", coeff_json(s.coeffs())}};
  });
}

FuzzOutcome bost_chen_campaign(const FuzzConfig& cfg) {
  return run_campaign("bost-chen", cfg, [&](Xoshiro256& rng) -> std::optional<json> {
    // rank pairs with product <= 9, kept small enough to brute-force
    static const std::pair<std::size_t, std::size_t> shapes[] = {
        {1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}, {3, 3}};
    auto [rl, rm] = shapes[rng.next_range(7)];
    long bound = rl * rm >= 8 ? 1 : 2;
    Lattice l = random_lattice(rng, rl, bound);
    Lattice m = random_lattice(rng, rm, bound);
    MinSlopeOptions opts;
    opts.rank_cap = 9;
    auto mu_l = min_slope_bruteforce(l, opts);
    auto mu_m = min_slope_bruteforce(m, opts);
    auto mu_t = min_slope_bruteforce(tensor(l, m), opts);
    if (compare(mu_t.value, mul(mu_l.value, mu_m.value)) == Order::Equal)
      return std::nullopt;
    return json{{"gram_L", gram_json(l)},
                {"gram_M", gram_json(m)},
                {"mu_min_L", rat_to_string(mu_l.value.vol_sq)},
                {"mu_min_M", rat_to_string(mu_m.value.vol_sq)},
                {"mu_min_T", rat_to_string(mu_t.value.vol_sq)}};
  });
}

FuzzOutcome identities_campaign(const FuzzConfig& cfg) {
  return run_campaign("identities", cfg, [&](Xoshiro256& rng) -> std::optional<json> {
    std::size_t n = std::max<std::size_t>(2, pick_rank(rng, cfg));
    Lattice l = random_lattice(rng, n, cfg.entry_bound);
    json fail;

    // det(G_L) = det(G_S) det(G_{L/S}) along a random saturated sublattice
    std::size_t r = static_cast<std::size_t>(rng.next_int(1, long(n) - 1));
    Sublattice s = random_sublattice(rng, l, r);
    Lattice q = quotient(l, s).lattice;
    if (det_rat(s.gram()) * q.vol_sq() != l.vol_sq())
      fail["exact_sequence"] = false;

    // mu(L (x) M) = mu(L) mu(M)
    Lattice m = random_lattice(rng, pick_rank(rng, cfg), cfg.entry_bound);
    if (compare(slope(tensor(l, m)), mul(slope(l), slope(m))) != Order::Equal)
      fail["tensor_slope"] = false;

    // mu(dual L) = mu(L)^-1
    if (compare(slope(dual(l)), slope_inverse(slope(l))) != Order::Equal)
      fail["dual_slope"] = false;

    // index^2 = Gram determinant ratio for a random finite-index submodule
    IntMatrix nmat(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          nmat(i, j) = Int(rng.next_int(-2, 2));
    } while (det_int(nmat) == 0);
    Int idx = index(l, nmat);  // throws if the ratio identity fails
    RatMatrix nr = to_rat(nmat);
    Rat ratio = det_rat(nr * l.gram() * nr.transpose()) / l.vol_sq();
    if (Rat(idx) * Rat(idx) != ratio) fail["index_ratio"] = false;

    if (fail.empty()) return std::nullopt;
    fail["gram"] = gram_json(l);
    fail["s"] = coeff_json(s.coeffs());
    return fail;
  });
}

FuzzOutcome first_minimum_tensor_campaign(const FuzzConfig& cfg) {
  return run_campaign("lambda-tensor", cfg,
                      [&](Xoshiro256& rng) -> std::optional<json> {
    std::size_t rl = static_cast<std::size_t>(rng.next_int(2, 3));
    std::size_t rm = static_cast<std::size_t>(rng.next_int(2, 3));
    Lattice l = random_lattice(rng, rl, cfg.entry_bound);
    Lattice m = random_lattice(rng, rm, cfg.entry_bound);
    Rat lam_l = first_minimum(l);
    Rat lam_m = first_minimum(m);
    Rat lam_t = first_minimum(tensor(l, m));
    if (lam_t <= lam_l * lam_m) return std::nullopt;
    return json{{"gram_L", gram_json(l)},
                {"gram_M", gram_json(m)},
                {"lambda_L_sq", rat_to_string(lam_l)},
                {"lambda_M_sq", rat_to_string(lam_m)},
                {"lambda_T_sq", rat_to_string(lam_t)}};
  });
}

}  // namespace latslope
