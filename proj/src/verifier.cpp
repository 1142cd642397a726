#include "rhotensor/verifier.hpp"

#include <chrono>
#include <unordered_set>

#include "rhotensor/eigencone.hpp"
#include "rhotensor/weight_order.hpp"

namespace rhotensor {

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerdictReport make_report(std::string campaign, const RootDatum& datum) {
  VerdictReport r;
  r.campaign = std::move(campaign);
  r.spec = datum.spec().name();
  return r;
}

std::uint64_t parabolic_order(const RootDatum& datum, NodeSet J) {
  std::unordered_set<Weight, WeightHash> seen{datum.rho()};
  std::vector<Weight> stack{datum.rho()};
  while (!stack.empty()) {
    Weight w = stack.back();
    stack.pop_back();
    for (int j : J.nodes()) {
      Weight v = w;
      reflect_in_place(datum, j, v);
      if (seen.insert(v).second) stack.push_back(v);
    }
  }
  return seen.size();
}

Weight two_rho(const RootDatum& datum) { return Weight::constant(datum.rank(), 2); }

}  // namespace

void VerdictReport::add(std::string subject, std::string expected, std::string observed, bool ok) {
  cases.push_back({std::move(subject), std::move(expected), std::move(observed), ok});
  ok ? ++passed : ++failed;
}

int saturation_factor(const RootSystemSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::G: return 2;
    case Family::F: return 144;
    case Family::E: return spec.rank == 6 ? 36 : spec.rank == 7 ? 144 : 3600;
  }
  return 1;
}

VerdictReport kostant_check(const RootDatum& datum, int d, const ComputeLimits& limits) {
  if (d < 1) throw PreconditionViolated("saturation factor must be positive");
  if (datum.spec().family == Family::E && !limits.allow_heavy) {
    throw ResourceLimit("kostant_check for " + datum.spec().name() +
                        " is not feasible at desk scale (V(dρ) with d = " +
                        std::to_string(saturation_factor(datum.spec())) + "); pass allow_heavy to try anyway");
  }
  Stopwatch clock;
  VerdictReport rep = make_report("kostant", datum);
  const Weight drho = Weight::constant(datum.rank(), d);
  const std::vector<Weight> below = enumerate_dominant_below(datum, two_rho(datum), limits);
  const IrrDecomposition delta = tensor_decompose(datum, drho, drho, limits);

  for (const Weight& lambda : below) {
    const std::int64_t m = delta.multiplicity(static_cast<std::int64_t>(d) * lambda);
    rep.add("V(" + std::to_string(d) + "*[" + lambda.to_string() + "])", "multiplicity >= 1", std::to_string(m),
            m >= 1);
  }
  if (d == 1) {
    for (const auto& [nu, m] : delta.entries) {
      const bool ok = leq_root_order(datum, nu, two_rho(datum));
      rep.add("component [" + nu.to_string() + "] (x" + std::to_string(m) + ")", "<= 2rho", ok ? "<= 2rho" : "not <= 2rho",
              ok);
    }
  }
  BigInt lhs = 0;
  for (const auto& [nu, m] : delta.entries) lhs += BigInt(m) * weyl_dim(datum, nu);
  const BigInt dim = weyl_dim(datum, drho);
  const BigInt expected = dim * dim;
  rep.add("dimension conservation", expected.str(), lhs.str(), lhs == expected);

  rep.facts["factor"] = std::to_string(d);
  rep.facts["dominant_below_2rho"] = std::to_string(below.size());
  rep.facts["components"] = std::to_string(delta.entries.size());
  rep.facts["dim_v_drho"] = dim.str();
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

VerdictReport exterior_dim_check(const RootDatum& datum) {
  Stopwatch clock;
  VerdictReport rep = make_report("dims", datum);
  const BigInt dim_rho = weyl_dim(datum, datum.rho());
  const BigInt lhs = (BigInt(1) << datum.rank()) * dim_rho * dim_rho;
  const BigInt rhs = BigInt(1) << datum.dim_g();
  rep.add("2^r * dim V(rho)^2", "2^" + std::to_string(datum.dim_g()) + " = " + rhs.str(), lhs.str(), lhs == rhs);
  rep.facts["dim_v_rho"] = dim_rho.str();
  rep.facts["dim_g"] = std::to_string(datum.dim_g());
  rep.facts["rank"] = std::to_string(datum.rank());
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

VerdictReport conjecture4_probe(const RootDatum& datum, int height_cap, const ComputeLimits& limits) {
  if (!datum.spec().simply_laced()) {
    throw PreconditionViolated("saturation probe applies to simply-laced types only, got " + datum.spec().name());
  }
  if (height_cap < 0) throw PreconditionViolated("height cap must be non-negative");
  Stopwatch clock;
  VerdictReport rep = make_report("probe-saturation", datum);
  rep.informational = true;
  const std::size_t r = datum.rank();

  std::vector<Weight> box;
  Weight w(r);
  while (true) {
    box.push_back(w);
    std::size_t i = r;
    while (i > 0 && w[i - 1] == height_cap) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  if (box.size() > 4096) throw ResourceLimit("probe box too large; lower the height cap");

  std::map<std::pair<Weight, Weight>, IrrDecomposition> cache;
  auto invariants = [&](const Weight& a, const Weight& b, const Weight& c, std::int64_t n) {
    auto key = std::make_pair(n * a, n * b);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, tensor_decompose(datum, key.first, key.second, limits)).first;
    return it->second.multiplicity(dual_weight(datum, n * c));
  };

  std::uint64_t scanned = 0, with_invariants = 0;
  for (std::size_t i = 0; i < box.size(); ++i) {
    for (std::size_t j = i; j < box.size(); ++j) {
      for (std::size_t k = j; k < box.size(); ++k) {
        const Weight &a = box[i], &b = box[j], &c = box[k];
        if (!in_root_lattice(datum, a + b + c)) continue;
        ++scanned;
        if (invariants(a, b, c, 1) > 0) {
          ++with_invariants;
          continue;
        }
        for (std::int64_t n : {2, 3}) {
          const std::int64_t m = invariants(a, b, c, n);
          if (m > 0) {
            rep.add("([" + a.to_string() + "], [" + b.to_string() + "], [" + c.to_string() + "])",
                    "invariants at N=1", "none at N=1, " + std::to_string(m) + " at N=" + std::to_string(n), false);
            break;
          }
        }
      }
    }
  }
  rep.facts["height_cap"] = std::to_string(height_cap);
  rep.facts["triples_scanned"] = std::to_string(scanned);
  rep.facts["triples_with_invariants"] = std::to_string(with_invariants);
  rep.facts["candidates"] = std::to_string(rep.failed);
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

VerdictReport lemma7_campaign(const RootDatum& datum, const ComputeLimits& limits) {
  Stopwatch clock;
  VerdictReport rep = make_report("vertices", datum);
  const Lemma7Report l7 = lemma7_check(datum, limits);
  for (const auto& s : l7.subsets) {
    rep.add("c_" + s.J.to_string(), "vertex clauses", "c=[" + s.c.to_string() + "] b=[" + s.b.to_string() + "]",
            s.pass());
  }
  rep.add("c_{} = 2rho", "true", l7.c_empty_is_2rho ? "true" : "false", l7.c_empty_is_2rho);
  rep.add("c_I = 0", "true", l7.c_full_is_zero ? "true" : "false", l7.c_full_is_zero);
  rep.add("vertices pairwise distinct", "true", l7.vertices_distinct ? "true" : "false", l7.vertices_distinct);
  rep.add("empty intersections (H not in K)", std::to_string(l7.empty_pairs_checked) + " empty",
          std::to_string(l7.empty_pairs_checked - l7.nonempty_found) + " empty", l7.nonempty_found == 0);
  rep.add("two-point witnesses (H strictly in K)", std::to_string(l7.witness_pairs_checked) + " verified",
          std::to_string(l7.witness_pairs_checked - l7.witness_failures) + " verified", l7.witness_failures == 0);
  for (const auto& f : l7.failures) rep.add("failure", "none", f, false);
  rep.facts["subsets"] = std::to_string(l7.subsets.size());
  rep.facts["empty_pairs_checked"] = std::to_string(l7.empty_pairs_checked);
  rep.facts["witness_pairs_checked"] = std::to_string(l7.witness_pairs_checked);
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

VerdictReport corollary8_campaign(const RootDatum& datum, const ComputeLimits& limits) {
  Stopwatch clock;
  VerdictReport rep = make_report("hull", datum);
  const std::size_t r = datum.rank();
  if (r > limits.max_subset_rank) throw ResourceLimit("hull sweep exceeds the subset rank cap");
  Weight lo = Weight::constant(r, 0), hi = Weight::constant(r, 0);
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
    const Weight c = vertex_c(datum, NodeSet(mask)).to_integral();
    for (std::size_t i = 0; i < r; ++i) {
      lo[i] = std::min(lo[i], c[i]);
      hi[i] = std::max(hi[i], c[i]);
    }
  }
  BigInt volume = 1;
  for (std::size_t i = 0; i < r; ++i) {
    lo[i] -= 1;
    hi[i] += 1;
    volume *= hi[i] - lo[i] + 1;
  }
  if (volume > limits.max_lattice_points) throw ResourceLimit("hull sweep box exceeds the lattice-point cap");

  std::uint64_t points = 0, inside = 0, mismatches = 0;
  Weight w = lo;
  while (true) {
    const WeightQ q(w);
    const bool by_hull = corollary8_membership(datum, q, limits);
    const bool by_def = in_polytope_by_definition(datum, q);
    ++points;
    inside += by_def;
    if (by_hull != by_def) {
      ++mismatches;
      rep.add("[" + w.to_string() + "]", by_def ? "inside" : "outside", by_hull ? "inside" : "outside", false);
    }
    std::size_t i = r;
    while (i > 0 && w[i - 1] == hi[i - 1]) {
      w[i - 1] = lo[i - 1];
      --i;
    }
    if (i == 0) break;
    ++w[i - 1];
  }
  rep.add("lattice points in box", "0 mismatches", std::to_string(mismatches) + " mismatches", mismatches == 0);
  rep.facts["box_lo"] = lo.to_string();
  rep.facts["box_hi"] = hi.to_string();
  rep.facts["points"] = std::to_string(points);
  rep.facts["inside"] = std::to_string(inside);
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

VerdictReport prop9_campaign(const RootDatum& datum, const ComputeLimits& limits) {
  Stopwatch clock;
  VerdictReport rep = make_report("prop9", datum);
  std::optional<WeightMultiset> rho_char;
  if (datum.rank() <= 4) rho_char = freudenthal_multiplicities(datum, datum.rho(), limits);
  for (const Weight& lambda : enumerate_dominant_below(datum, two_rho(datum), limits)) {
    const std::string subject = "[" + lambda.to_string() + "] - rho";
    try {
      const Prop9Result res = prop9_decompose(datum, lambda, rho_char ? &*rho_char : nullptr);
      std::string observed = "beta=[" + res.beta.to_string() + "] hull+lattice";
      if (res.freudenthal) observed += ", freudenthal m=" + std::to_string(res.multiplicity);
      rep.add(subject, "weight of V(rho)", observed, true);
    } catch (const InternalConsistencyError& e) {
      rep.add(subject, "weight of V(rho)", e.what(), false);
    }
  }
  if (datum.rank() <= limits.max_subset_rank) {
    for (std::uint32_t mask = 0; mask < (1u << datum.rank()); ++mask) {
      const NodeSet J(mask);
      const WeightQ lhs = vertex_c(datum, J) - WeightQ(datum.rho());
      const WeightQ rhs(apply_word(datum, longest_element(datum, J), datum.rho()));
      rep.add("c_" + J.to_string() + " - rho", "w_o^J(rho) = [" + rhs.to_string() + "]", "[" + lhs.to_string() + "]",
              lhs == rhs);
    }
  }
  rep.facts["freudenthal_oracle"] = rho_char ? "on" : "off";
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

VerdictReport ineq5_campaign(const RootDatum& datum, const ComputeLimits& limits) {
  Stopwatch clock;
  VerdictReport rep = make_report("ineq", datum);
  const ParabolicTable table(datum, limits);
  std::uint64_t checks = 0;
  for (const Weight& lambda : enumerate_dominant_below(datum, two_rho(datum), limits)) {
    const Ineq5Report r = ineq5_check(datum, lambda, table);
    checks += r.checks;
    std::string observed = std::to_string(r.violations.size()) + " violations of " + std::to_string(r.checks);
    if (!r.violations.empty()) {
      const auto& v = r.violations.front();
      observed += "; first at node " + std::to_string(v.node) + ", w=" + v.w.to_string() + ": " + v.lhs.to_string() +
                  " > " + v.rhs.to_string();
    }
    rep.add("[" + lambda.to_string() + "]", "0 violations", observed, r.pass());
  }
  rep.facts["inequalities_checked"] = std::to_string(checks);
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

VerdictReport identity4_campaign(const RootDatum& datum, std::uint64_t samples, const ComputeLimits& limits) {
  Stopwatch clock;
  VerdictReport rep = make_report("identity4", datum);
  for (int node = 1; node <= static_cast<int>(datum.rank()); ++node) {
    const Eq4Sweep s = samples == 0 ? eq4_sweep_exhaustive(datum, node, limits)
                                    : eq4_sweep_sampled(datum, node, samples, 0x5eed0000u + node, limits);
    std::string observed = std::to_string(s.triples_checked) + " triples, |W^P|=" + std::to_string(s.coset_size);
    if (!s.failures.empty()) observed += "; first failure " + s.failures.front();
    rep.add("node " + std::to_string(node), "identity holds on every triple", observed, s.failures.empty());
  }
  rep.facts["mode"] = samples == 0 ? "exhaustive" : "sampled";
  if (samples) rep.facts["samples_per_node"] = std::to_string(samples);
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

VerdictReport parabolic_campaign(const RootDatum& datum, const ComputeLimits& limits) {
  Stopwatch clock;
  VerdictReport rep = make_report("parabolics", datum);
  const std::uint64_t order = weyl_group_order(datum, limits);
  for (int node = 1; node <= static_cast<int>(datum.rank()); ++node) {
    const MaximalParabolic P = maximal_parabolic(datum, node);
    const auto reps = minimal_coset_reps(datum, P, limits);
    const std::uint64_t levi_order = parabolic_order(datum, P.levi);
    const std::string subject = "node " + std::to_string(node);
    rep.add(subject + ": |W^P|*|W_L|", std::to_string(order), std::to_string(reps.size() * levi_order),
            reps.size() * levi_order == order);

    const Rational rho_levi_at = eval_coweight(datum, P.rho_levi, node);
    rep.add(subject + ": rho^L(x_P)", "0", rho_levi_at.to_string(), rho_levi_at.is_zero());

    bool fixes = true;
    for (int k = 1; k <= static_cast<int>(datum.rank()); ++k) {
      const Rational v = eval_coweight(datum, WeightQ(apply_word(datum, P.longest_levi, datum.simple_root(k))), node);
      if (v != Rational(k == node ? 1 : 0)) fixes = false;
    }
    rep.add(subject + ": w_o^P(x_P) = x_P", "true", fixes ? "true" : "false", fixes);

    bool reps_ok = true;
    for (const auto& w : reps) {
      if (!is_reduced(datum, w)) reps_ok = false;
      for (int j : P.levi.nodes())
        if (!is_positive_root_vector(datum, apply_word(datum, w, datum.simple_root(j)))) reps_ok = false;
    }
    rep.add(subject + ": representatives reduced, Levi roots positive", "true", reps_ok ? "true" : "false", reps_ok);
  }
  rep.facts["weyl_group_order"] = std::to_string(order);
  rep.wall_time_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace rhotensor
