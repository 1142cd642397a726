#include "rhotensor/eigencone.hpp"

#include <random>
#include <unordered_set>

#include "rhotensor/polytope.hpp"
#include "rhotensor/weight_order.hpp"

namespace rhotensor {

namespace {

void require_node(const RootDatum& datum, int node) {
  if (node < 1 || static_cast<std::size_t>(node) > datum.rank()) {
    throw PreconditionViolated("node " + std::to_string(node) + " out of range for " + datum.spec().name());
  }
}

Rational at_xP(const RootDatum& datum, const MaximalParabolic& P, const WeightQ& w) {
  return eval_coweight(datum, w, P.node);
}

WeightQ inverse_action(const RootDatum& datum, const WeylWord& w, const Weight& v) {
  return WeightQ(apply_word(datum, w.inverse(), v));
}

}  // namespace

MaximalParabolic maximal_parabolic(const RootDatum& datum, int node) {
  require_node(datum, node);
  MaximalParabolic P;
  P.node = node;
  P.levi = NodeSet(NodeSet::full(datum.rank()).mask() & ~(1u << (node - 1)));
  P.rho_levi = Rational(1, 2) * b_of_J(datum, P.levi);
  P.longest_levi = longest_element(datum, P.levi);
  return P;
}

std::vector<WeylWord> minimal_coset_reps(const RootDatum& datum, const MaximalParabolic& P,
                                         const ComputeLimits& limits) {
  if (datum.rank() > limits.max_coset_rank && !limits.allow_heavy) {
    throw ResourceLimit("coset enumeration for " + datum.spec().name() + " exceeds the rank cap");
  }
  // W^P is in bijection with the orbit of ω_P, whose stabiliser is W_L.
  // Walking down that orbit by s_i at positive coordinates prepends s_i to a
  // reduced word of a minimal representative.
  Weight omega(datum.rank());
  omega[P.node - 1] = 1;
  std::vector<WeylWord> reps{WeylWord{}};
  std::vector<std::pair<Weight, WeylWord>> level{{omega, WeylWord{}}};
  std::unordered_set<Weight, WeightHash> seen{datum.rho()};
  while (!level.empty()) {
    std::vector<std::pair<Weight, WeylWord>> next;
    for (const auto& [nu, word] : level) {
      for (std::size_t i = 0; i < datum.rank(); ++i) {
        if (nu[i] <= 0) continue;
        WeylWord w = WeylWord{{static_cast<int>(i) + 1}} * word;
        // Canonical key: the action on the strictly dominant ρ.
        if (!seen.insert(apply_word(datum, w, datum.rho())).second) continue;
        Weight img = nu;
        reflect_in_place(datum, static_cast<int>(i) + 1, img);
        reps.push_back(w);
        next.emplace_back(img, std::move(w));
        if (reps.size() > limits.max_lattice_points) throw ResourceLimit("W^P exceeds the lattice-point cap");
      }
    }
    level = std::move(next);
  }
  return reps;
}

WeightQ chi(const RootDatum& datum, const MaximalParabolic& P, const WeylWord& w) {
  return WeightQ(datum.rho()) - Rational(2) * P.rho_levi + inverse_action(datum, w, datum.rho());
}

Eq4Values eq4_values(const RootDatum& datum, const MaximalParabolic& P, const WeylWord& u, const WeylWord& v,
                     const WeylWord& w) {
  const WeylWord w0 = longest_element(datum, NodeSet::full(datum.rank()));
  const WeylWord dual = w0 * w * P.longest_levi;
  Eq4Values out;
  out.lhs = at_xP(datum, P, chi(datum, P, dual) - chi(datum, P, u) - chi(datum, P, v));
  const WeightQ rho(datum.rho());
  out.rhs = at_xP(datum, P,
                  -rho - inverse_action(datum, u, datum.rho()) - inverse_action(datum, v, datum.rho()) -
                      inverse_action(datum, w, datum.rho()));
  return out;
}

Rational ineq3_check(const RootDatum& datum, const MaximalParabolic& P, const WeylWord& u, const WeylWord& v,
                     const WeylWord& w) {
  const WeightQ sum = WeightQ(datum.rho()) + inverse_action(datum, u, datum.rho()) +
                      inverse_action(datum, v, datum.rho()) + inverse_action(datum, w, datum.rho());
  return at_xP(datum, P, sum);
}

Eq4Sweep eq4_sweep_exhaustive(const RootDatum& datum, int node, const ComputeLimits& limits) {
  const MaximalParabolic P = maximal_parabolic(datum, node);
  const auto reps = minimal_coset_reps(datum, P, limits);
  const WeylWord w0 = longest_element(datum, NodeSet::full(datum.rank()));
  const WeightQ rho(datum.rho());

  // Per-element pieces, each computed through χ and the Weyl action.
  std::vector<Rational> chi_at(reps.size()), dual_chi_at(reps.size()), inv_rho_at(reps.size());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    chi_at[k] = at_xP(datum, P, chi(datum, P, reps[k]));
    dual_chi_at[k] = at_xP(datum, P, chi(datum, P, w0 * reps[k] * P.longest_levi));
    inv_rho_at[k] = at_xP(datum, P, inverse_action(datum, reps[k], datum.rho()));
  }
  const Rational rho_at = at_xP(datum, P, rho);

  Eq4Sweep out;
  out.node = node;
  out.coset_size = reps.size();
  for (std::size_t u = 0; u < reps.size(); ++u) {
    for (std::size_t v = 0; v < reps.size(); ++v) {
      for (std::size_t w = 0; w < reps.size(); ++w) {
        const Rational lhs = dual_chi_at[w] - chi_at[u] - chi_at[v];
        const Rational rhs = -rho_at - inv_rho_at[u] - inv_rho_at[v] - inv_rho_at[w];
        ++out.triples_checked;
        if (lhs != rhs && out.failures.size() < 20) {
          out.failures.push_back("(" + reps[u].to_string() + ", " + reps[v].to_string() + ", " + reps[w].to_string() +
                                 "): " + lhs.to_string() + " != " + rhs.to_string());
        }
      }
    }
  }
  return out;
}

Eq4Sweep eq4_sweep_sampled(const RootDatum& datum, int node, std::uint64_t samples, std::uint64_t seed,
                           const ComputeLimits& limits) {
  const MaximalParabolic P = maximal_parabolic(datum, node);
  const auto reps = minimal_coset_reps(datum, P, limits);
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
  Eq4Sweep out;
  out.node = node;
  out.coset_size = reps.size();
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto& u = reps[pick(gen)];
    const auto& v = reps[pick(gen)];
    const auto& w = reps[pick(gen)];
    const Eq4Values vals = eq4_values(datum, P, u, v, w);
    ++out.triples_checked;
    if (!vals.holds() && out.failures.size() < 20) {
      out.failures.push_back("(" + u.to_string() + ", " + v.to_string() + ", " + w.to_string() +
                             "): " + vals.lhs.to_string() + " != " + vals.rhs.to_string());
    }
  }
  return out;
}

ParabolicTable::ParabolicTable(const RootDatum& datum, const ComputeLimits& limits) {
  const int r = static_cast<int>(datum.rank());
  for (int node = 1; node <= r; ++node) {
    parabolics_.push_back(maximal_parabolic(datum, node));
    reps_.push_back(minimal_coset_reps(datum, parabolics_.back(), limits));
    std::vector<Rational> rhs;
    for (const auto& w : reps_.back()) {
      rhs.push_back(eval_coweight(datum, WeightQ(datum.rho() + apply_word(datum, w.inverse(), datum.rho())), node));
    }
    rhs_.push_back(std::move(rhs));
  }
}

Ineq5Report ineq5_check(const RootDatum& datum, const Weight& lambda, const ParabolicTable& table) {
  const Weight two_rho = Weight::constant(datum.rank(), 2);
  if (lambda.rank() != datum.rank() || !lambda.is_dominant() || !leq_root_order(datum, lambda, two_rho)) {
    throw PreconditionViolated("ineq5_check needs a dominant weight below 2ρ, got " + lambda.to_string());
  }
  Ineq5Report rep;
  rep.lambda = lambda;
  rep.lambda_dual = dual_weight(datum, lambda);
  for (const auto& P : table.parabolics()) {
    const auto& reps = table.reps(P.node);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      // λ*(w x_P) = (w⁻¹ λ*)(x_P)
      const Rational lhs = eval_coweight(datum, WeightQ(apply_word(datum, reps[k].inverse(), rep.lambda_dual)), P.node);
      const Rational& rhs = table.ineq5_rhs(P.node, k);
      ++rep.checks;
      if (lhs > rhs) rep.violations.push_back({P.node, reps[k], lhs, rhs});
    }
  }
  return rep;
}

Ineq5Report ineq5_check(const RootDatum& datum, const Weight& lambda, const ComputeLimits& limits) {
  return ineq5_check(datum, lambda, ParabolicTable(datum, limits));
}

}  // namespace rhotensor
