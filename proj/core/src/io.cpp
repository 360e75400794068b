#include "latslope/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace latslope {

using nlohmann::json;

namespace {

json rat_matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(rat_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json int_matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json slope_json(const SlopeValue& s) {
  return {{"vol_sq", rat_to_string(s.vol_sq)},
          {"rank", s.rank},
          {"approx", s.approx()}};
}

json radical_json(const Radical& r) {
  json j{{"radicand", rat_to_string(r.radicand)},
         {"root", r.root},
         {"approx", r.approx()}};
  if (auto v = r.rational_value()) j["rational"] = rat_to_string(*v);
  return j;
}

RatMatrix parse_gram(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("gram must be a nonempty array");
  std::size_t n = j.size();
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw InputError("gram must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& cell = j[i][k];
      if (cell.is_string())
        g(i, k) = rat_from_string(cell.get<std::string>());
      else if (cell.is_number_integer())
        g(i, k) = make_rat(cell.get<long>());
      else
        throw InputError("gram entries must be rational strings or integers");
    }
  }
  return g;
}

IntMatrix parse_generator(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n)
    throw InputError("generator must be an n x n integer matrix");
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw InputError("generator must be an n x n integer matrix");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& cell = j[i][k];
      if (cell.is_number_integer())
        g(i, k) = Int(cell.get<long>());
      else if (cell.is_string())
        g(i, k) = Int(cell.get<std::string>());
      else
        throw InputError("generator entries must be integers");
    }
  }
  return g;
}

constexpr unsigned long kCorpusClosureCap = 50000;

}  // namespace

LoadedLattice load_lattice_text(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("gram"))
    throw InputError("lattice JSON must be an object with a \"gram\" field");
  std::string name = j.value("name", "");
  Lattice l(parse_gram(j["gram"]), name);
  LoadedLattice out{l, std::nullopt};
  if (j.contains("group_generators") && !j["group_generators"].is_null()) {
    std::vector<IntMatrix> gens;
    for (const auto& gj : j["group_generators"])
      gens.push_back(parse_generator(gj, l.rank()));
    ValidateOptions vo;
    vo.closure_cap = kCorpusClosureCap;
    out.action = validate_action(l, std::move(gens), vo);
  }
  return out;
}

LoadedLattice load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_lattice_text(ss.str());
}

std::string lattice_to_json(const Lattice& l,
                            const std::vector<IntMatrix>* generators) {
  json j{{"name", l.label()}, {"gram", rat_matrix_json(l.gram())}};
  if (generators && !generators->empty()) {
    json gens = json::array();
    for (const auto& g : *generators) {
      json rows = json::array();
      for (std::size_t i = 0; i < g.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < g.cols(); ++k)
          row.push_back(static_cast<long>(g(i, k).get_si()));
        rows.push_back(std::move(row));
      }
      gens.push_back(std::move(rows));
    }
    j["group_generators"] = std::move(gens);
  }
  return j.dump(2);
}

void save_lattice_file(const std::string& path, const Lattice& l,
                       const std::vector<IntMatrix>* generators) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << lattice_to_json(l, generators) << "\n";
}

std::string slope_to_json(const SlopeValue& s) { return slope_json(s).dump(2); }

std::string minslope_to_json(const MinSlopeResult& r) {
  json j{{"value", slope_json(r.value)},
         {"method", r.method == MinSlopeMethod::Brute ? "brute" : "invariant"},
         {"witness", int_matrix_json(r.witness.coeffs())}};
  json bounds = json::array();
  for (const auto& b : r.bounds)
    bounds.push_back({{"rank", b.rank},
                      {"bound", rat_to_string(b.bound)},
                      {"via_dual", b.via_dual}});
  j["enumeration_bounds"] = std::move(bounds);
  json mins = json::array();
  for (const auto& w : r.all_minimizers)
    mins.push_back(int_matrix_json(w.coeffs()));
  j["all_minimizers"] = std::move(mins);
  return j.dump(2);
}

std::string filtration_to_json(const Filtration& f) {
  json steps = json::array();
  for (const auto& s : f.steps) steps.push_back(int_matrix_json(s.coeffs()));
  json slopes = json::array();
  for (const auto& s : f.quotient_slopes) slopes.push_back(slope_json(s));
  json polygon = json::array();
  for (const auto& v : f.polygon)
    polygon.push_back({{"rank", v.rank},
                       {"vol_sq", rat_to_string(v.vol_sq)},
                       {"approx_log_vol", v.approx_log_vol}});
  return json{{"steps", steps}, {"quotient_slopes", slopes}, {"polygon", polygon}}
      .dump(2);
}

std::string semistable_to_json(const SemistabilityReport& r) {
  json j{{"semistable", r.semistable},
         {"mu", slope_json(r.mu)},
         {"mu_min", slope_json(r.mu_min)}};
  if (r.destabilizing)
    j["destabilizing"] = int_matrix_json(r.destabilizing->coeffs());
  json bounds = json::array();
  for (const auto& b : r.bounds)
    bounds.push_back({{"rank", b.rank},
                      {"bound", rat_to_string(b.bound)},
                      {"via_dual", b.via_dual}});
  j["enumeration_bounds"] = std::move(bounds);
  return j.dump(2);
}

namespace {

json split_json(const SplitSubspace& sp) {
  json masks = json::array();
  for (auto m : sp.masks) masks.push_back(m);
  return {{"masks", masks}, {"subspace", rat_matrix_json(sp.realized.basis())}};
}

}  // namespace

std::string conjecture_to_json(const ConjectureReport& r) {
  json j{{"mu_min_L", slope_json(r.mu_min_l)},
         {"mu_min_M", slope_json(r.mu_min_m)},
         {"mu_min_tensor", slope_json(r.mu_min_tensor)},
         {"product", slope_json(r.product)},
         {"verdict", r.verdict == Verdict::Equal ? "equal" : "strictly_less"},
         {"r", r.r},
         {"s", r.s},
         {"minimizing_split", split_json(r.minimizing_split)},
         {"witness", int_matrix_json(r.witness.coeffs())}};
  if (r.verdict == Verdict::StrictlyLess) {
    j["candidate_counterexample"] = true;
    j["reverified_by_bruteforce"] = r.reverified;
  }
  return j.dump(2);
}

std::string audit_to_json(const TheoremAudit& a) {
  json j{{"applicable", a.applicable}};
  if (!a.applicable) {
    j["reason"] = a.reason;
    return j.dump(2);
  }
  j["full_diagram"] = a.full_diagram;
  j["l1"] = a.l1;
  j["l2"] = a.l2;
  j["m1"] = a.m1;
  j["m2"] = a.m2;
  j["a"] = a.a.get_str();
  if (a.b_defined) j["b"] = a.b.get_str();
  j["b1"] = rat_to_string(a.b1);
  j["b2"] = rat_to_string(a.b2);
  j["alpha1"] = radical_json(a.alpha1);
  j["alpha2"] = radical_json(a.alpha2);
  j["beta1"] = radical_json(a.beta1);
  j["beta2"] = radical_json(a.beta2);
  j["x"] = rat_to_string(a.x);
  j["t"] = rat_to_string(a.t);
  j["x_prime"] = rat_to_string(a.xp);
  if (a.y) j["y"] = rat_to_string(*a.y);
  if (a.yp) j["y_prime"] = rat_to_string(*a.yp);
  j["sign_product_12"] = a.sign_product_1;
  j["sign_product_21"] = a.sign_product_2;
  json checks = json::array();
  for (const auto& c : a.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}});
  j["checks"] = std::move(checks);
  return j.dump(2);
}

namespace {

RatMatrix root_gram(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;
  for (auto [a, b] : edges) {
    g(a, b) = 1;
    g(b, a) = 1;
  }
  return g;
}

// Reflection in basis vector i, computed from the Gram matrix:
// b_j -> b_j - (2 G_ji / G_ii) b_i. Integral for root lattices.
IntMatrix gram_reflection(const RatMatrix& g, std::size_t i) {
  std::size_t n = g.rows();
  RatMatrix s = rat_identity(n);
  for (std::size_t j = 0; j < n; ++j) s(j, i) -= 2 * g(j, i) / g(i, i);
  return to_int(s);
}

std::vector<IntMatrix> weyl_generators(const RatMatrix& g) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < g.rows(); ++i)
    gens.push_back(gram_reflection(g, i));
  return gens;
}

std::vector<IntMatrix> sign_generators(std::size_t n) {
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = int_identity(n);
    s(i, i) = -1;
    gens.push_back(std::move(s));
  }
  return gens;
}

std::vector<IntMatrix> signed_permutation_generators(std::size_t n) {
  std::vector<IntMatrix> gens;
  IntMatrix flip = int_identity(n);
  flip(0, 0) = -1;
  gens.push_back(std::move(flip));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntMatrix swap = int_identity(n);
    swap(i, i) = 0;
    swap(i + 1, i + 1) = 0;
    swap(i, i + 1) = 1;
    swap(i + 1, i) = 1;
    gens.push_back(std::move(swap));
  }
  return gens;
}

// embeds block generators of an orthogonal sum
std::vector<IntMatrix> block_embed(const std::vector<IntMatrix>& gens,
                                   std::size_t offset, std::size_t total) {
  std::vector<IntMatrix> out;
  for (const auto& g : gens) {
    IntMatrix e = int_identity(total);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) e(offset + i, offset + j) = g(i, j);
    out.push_back(std::move(e));
  }
  return out;
}

CorpusEntry make_entry(std::string name, Lattice l, std::vector<IntMatrix> gens,
                       std::string provenance) {
  ValidateOptions vo;
  vo.closure_cap = kCorpusClosureCap;
  std::optional<GroupAction> action;
  if (!gens.empty()) action = validate_action(l, std::move(gens), vo);
  return {std::move(name), std::move(l), std::move(action), std::move(provenance)};
}

std::vector<std::pair<int, int>> dynkin_edges(const std::string& family,
                                              std::size_t n) {
  std::vector<std::pair<int, int>> edges;
  if (family == "a") {
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({int(i), int(i + 1)});
  } else if (family == "d") {
    edges = {{0, 2}, {1, 2}};
    for (std::size_t i = 2; i + 1 < n; ++i) edges.push_back({int(i), int(i + 1)});
  } else if (family == "e") {
    edges = {{0, 2}, {2, 3}, {1, 3}};
    for (std::size_t i = 3; i + 1 < n; ++i) edges.push_back({int(i), int(i + 1)});
  }
  return edges;
}

}  // namespace

CorpusEntry corpus(const std::string& name) {
  auto parse_count = [&](std::size_t from) -> std::optional<std::size_t> {
    if (from >= name.size()) return std::nullopt;
    std::size_t n = 0;
    for (std::size_t i = from; i < name.size(); ++i) {
      if (!isdigit(name[i])) return std::nullopt;
      n = n * 10 + (name[i] - '0');
    }
    return n;
  };

  if (name == "glued2") {
    RatMatrix g(2, 2);
    g(0, 0) = 1;
    g(0, 1) = g(1, 0) = make_rat(1, 2);
    g(1, 1) = make_rat(1, 2);
    std::vector<IntMatrix> gens;
    gens.push_back(int_matrix(2, 2, {1, 0, 1, -1}));
    gens.push_back(int_matrix(2, 2, {-1, 0, 0, -1}));
    return make_entry("glued2", Lattice(g, "glued2"), std::move(gens),
                      "rank-2 glue of two orthogonal norm-1 vectors, index 2");
  }
  if (name == "a2p2a2" || name == "a2p3a2") {
    long c = name[3] - '0';
    RatMatrix a2 = root_gram(2, dynkin_edges("a", 2));
    Lattice first(a2, "a2");
    Lattice second = scale(Lattice(a2, ""), Rat(c * c));
    Lattice sum = direct_sum(first, second);
    auto gens = block_embed(weyl_generators(a2), 0, 4);
    auto right = block_embed(weyl_generators(a2), 2, 4);
    gens.insert(gens.end(), right.begin(), right.end());
    return make_entry(name, Lattice(sum.gram(), name), std::move(gens),
                      "orthogonal sum of a2 and a scaled copy, product Weyl action");
  }
  if (name.rfind("diag_", 0) == 0) {
    std::vector<Rat> diag;
    std::size_t pos = 5;
    while (pos < name.size()) {
      std::size_t next = name.find('_', pos);
      std::string tok = name.substr(pos, next == std::string::npos ? next : next - pos);
      diag.push_back(rat_from_string(tok));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (diag.empty()) throw InputError("empty diagonal corpus name: " + name);
    RatMatrix g(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) g(i, i) = diag[i];
    return make_entry(name, Lattice(g, name), sign_generators(diag.size()),
                      "diagonal lattice with the full sign group");
  }
  if (name.size() >= 2 && (name[0] == 'z')) {
    auto n = parse_count(1);
    if (n && *n >= 1 && *n <= 9) {
      return make_entry(name, Lattice(rat_identity(*n), name),
                        *n == 1 ? sign_generators(1)
                                : signed_permutation_generators(*n),
                        "standard cubic lattice with signed permutations");
    }
  }
  if (name.size() >= 2 && (name[0] == 'a' || name[0] == 'd' || name[0] == 'e')) {
    auto n = parse_count(1);
    std::string family(1, name[0]);
    bool ok = n && ((family == "a" && *n >= 1 && *n <= 9) ||
                    (family == "d" && *n >= 4 && *n <= 9) ||
                    (family == "e" && *n >= 6 && *n <= 8));
    if (ok) {
      RatMatrix g = *n == 1 ? rat_matrix(1, 1, {2})
                            : root_gram(*n, dynkin_edges(family, *n));
      return make_entry(name, Lattice(g, name), weyl_generators(g),
                        "root lattice Gram with Weyl reflection generators");
    }
  }
  throw InputError("unknown corpus entry: " + name);
}

std::vector<std::string> corpus_names() {
  return {"z1",     "z2",     "z3",     "z4",       "a2",       "a3",
          "a4",     "d4",     "d5",     "e6",       "e7",       "e8",
          "a2p2a2", "a2p3a2", "glued2", "diag_1_2", "diag_1_3", "diag_1_4",
          "diag_2_3", "diag_1_2_3"};
}

Lattice random_lattice(Xoshiro256& rng, std::size_t rank, long entry_bound) {
  for (;;) {
    IntMatrix b(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        b(i, j) = Int(rng.next_int(-entry_bound, entry_bound));
    if (det_int(b) == 0) continue;
    RatMatrix br = to_rat(b);
    return Lattice(br * br.transpose(), "random");
  }
}

Sublattice random_sublattice(Xoshiro256& rng, const Lattice& l, std::size_t rank) {
  for (;;) {
    IntMatrix c(rank, l.rank());
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < l.rank(); ++j)
        c(i, j) = Int(rng.next_int(-2, 2));
    if (rank_rat(to_rat(c)) != rank) continue;
    return Sublattice(l, c, true);
  }
}

}  // namespace latslope
