#include "rhotensor/rep_theory.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace rhotensor {

namespace {

void require_dominant(const Weight& w, const char* what) {
  if (!w.is_dominant()) throw NonDominantInput(std::string(what) + " needs a dominant weight, got " + w.to_string());
}

void require_rank(const RootDatum& datum, const Weight& w) {
  if (w.rank() != datum.rank()) {
    throw PreconditionViolated("weight " + w.to_string() + " has rank " + std::to_string(w.rank()) + ", " +
                               datum.spec().name() + " needs " + std::to_string(datum.rank()));
  }
}

using SignedMap = std::unordered_map<Weight, std::int64_t, WeightHash>;

// Klimyk contributions of the dominant weights at positions shard, shard+stride, ...
SignedMap klimyk_shard(const RootDatum& datum, const Weight& lambda, const std::vector<std::pair<Weight, std::int64_t>>& dom,
                       std::size_t shard, std::size_t stride) {
  SignedMap acc;
  const Weight shift = lambda + datum.rho();
  for (std::size_t k = shard; k < dom.size(); k += stride) {
    const auto& [nu, m] = dom[k];
    for (const Weight& beta : weyl_orbit(datum, nu)) {
      auto reg = dominate_regular(datum, shift + beta);
      if (!reg) continue;
      auto& slot = acc[reg->weight - datum.rho()];
      slot = checked_add(slot, reg->sign > 0 ? m : -m);
    }
  }
  return acc;
}

}  // namespace

std::int64_t WeightMultiset::multiplicity(const RootDatum& datum, const Weight& beta) const {
  auto it = dominant.find(dominate(datum, beta).first);
  return it == dominant.end() ? 0 : it->second;
}

std::vector<std::pair<Weight, std::int64_t>> WeightMultiset::expand(const RootDatum& datum) const {
  std::vector<std::pair<Weight, std::int64_t>> out;
  for (const auto& [w, m] : dominant)
    for (const Weight& v : weyl_orbit(datum, w)) out.emplace_back(v, m);
  return out;
}

BigInt weyl_dim(const RootDatum& datum, const Weight& lambda) {
  require_rank(datum, lambda);
  require_dominant(lambda, "weyl_dim");
  const Weight shifted = lambda + datum.rho();
  BigInt num = 1, den = 1;
  for (std::size_t k = 0; k < datum.num_positive_roots(); ++k) {
    num *= datum.coroot_pairing(shifted, k);
    den *= datum.coroot_pairing(datum.rho(), k);
  }
  if (num % den != 0) throw InternalConsistencyError("Weyl dimension is not an integer for " + lambda.to_string());
  return num / den;
}

WeightMultiset freudenthal_multiplicities(const RootDatum& datum, const Weight& lambda, const ComputeLimits& limits) {
  require_rank(datum, lambda);
  require_dominant(lambda, "freudenthal_multiplicities");
  std::vector<Weight> weights = enumerate_dominant_below(datum, lambda, limits);

  // Process by increasing depth below λ so that every μ + kα is already known.
  std::vector<std::pair<std::int64_t, Weight>> by_depth;
  by_depth.reserve(weights.size());
  for (const Weight& w : weights) {
    const auto c = to_root_basis(datum, WeightQ(lambda - w));
    Rational h;
    for (const auto& x : c) h += x;
    by_depth.emplace_back(h.to_int64(), w);
  }
  std::sort(by_depth.begin(), by_depth.end());

  const Weight lr = lambda + datum.rho();
  const std::int64_t top_norm = datum.scaled_inner(lr, lr);
  const auto& roots = datum.positive_roots();
  std::vector<std::int64_t> root_norm(roots.size());
  for (std::size_t a = 0; a < roots.size(); ++a) root_norm[a] = datum.scaled_inner(roots[a].weight, roots[a].weight);

  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  mult.reserve(weights.size() * 2);
  for (const auto& [depth, mu] : by_depth) {
    if (depth == 0) {
      mult[mu] = 1;
      continue;
    }
    std::int64_t num = 0;
    for (std::size_t a = 0; a < roots.size(); ++a) {
      const Weight& alpha = roots[a].weight;
      Weight nu = mu;
      std::int64_t pairing = datum.scaled_inner(mu, alpha);
      while (true) {
        nu += alpha;
        pairing = checked_add(pairing, root_norm[a]);
        auto it = mult.find(dominate(datum, nu).first);
        // α-strings of weights are unbroken.
        if (it == mult.end()) break;
        num = checked_add(num, checked_mul(it->second, pairing));
      }
    }
    num = checked_mul(num, 2);
    const Weight mr = mu + datum.rho();
    const std::int64_t den = checked_sub(top_norm, datum.scaled_inner(mr, mr));
    if (den <= 0 || num % den != 0) {
      throw InternalConsistencyError("Freudenthal recursion produced a non-integral multiplicity at " + mu.to_string());
    }
    mult[mu] = num / den;
  }

  WeightMultiset out;
  out.highest = lambda;
  out.total = 0;
  for (const auto& [w, m] : mult) {
    if (m <= 0) throw InternalConsistencyError("non-positive weight multiplicity at " + w.to_string());
    out.dominant.emplace(w, m);
    out.total += BigInt(m) * weyl_orbit(datum, w).size();
  }
  return out;
}

bool hull_membership(const RootDatum& datum, const Weight& lambda_top, const WeightQ& beta) {
  require_dominant(lambda_top, "hull_membership");
  const auto dom = dominate(datum, beta).first;
  const auto c = to_root_basis(datum, WeightQ(lambda_top) - dom);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.sign() >= 0; });
}

bool weight_of_v_rho(const RootDatum& datum, const Weight& beta) {
  require_rank(datum, beta);
  return in_root_lattice(datum, beta - datum.rho()) && hull_membership(datum, datum.rho(), WeightQ(beta));
}

IrrDecomposition tensor_decompose(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                                  const ComputeLimits& limits) {
  require_rank(datum, lambda);
  require_rank(datum, mu);
  require_dominant(lambda, "tensor_decompose");
  require_dominant(mu, "tensor_decompose");

  Weight outer = lambda, inner = mu;
  const BigInt dim_outer = weyl_dim(datum, outer), dim_inner = weyl_dim(datum, inner);
  if (dim_outer < dim_inner || (dim_outer == dim_inner && outer < inner)) std::swap(outer, inner);

  const WeightMultiset chars = freudenthal_multiplicities(datum, inner, limits);
  std::vector<std::pair<Weight, std::int64_t>> dom(chars.dominant.begin(), chars.dominant.end());
  std::size_t distinct = 0;
  for (const auto& entry : dom) distinct += weyl_orbit(datum, entry.first).size();
  if (distinct > limits.max_lattice_points) {
    throw ResourceLimit("V(" + inner.to_string() + ") has " + std::to_string(distinct) +
                        " distinct weights, above the cap of " + std::to_string(limits.max_lattice_points));
  }

  const std::size_t workers = std::clamp<std::size_t>(limits.threads, 1, std::max<std::size_t>(dom.size(), 1));
  std::vector<SignedMap> partial(workers);
  if (workers == 1) {
    partial[0] = klimyk_shard(datum, outer, dom, 0, 1);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t s = 0; s < workers; ++s) {
        pool.emplace_back([&, s] {
          try {
            partial[s] = klimyk_shard(datum, outer, dom, s, workers);
          } catch (...) {
            errors[s] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // Integer addition is associative, so the merged result does not depend on
  // the sharding.
  SignedMap total = std::move(partial[0]);
  for (std::size_t s = 1; s < workers; ++s)
    for (const auto& [w, m] : partial[s]) total[w] = checked_add(total[w], m);

  IrrDecomposition out;
  for (const auto& [w, m] : total) {
    if (m < 0) throw InternalConsistencyError("Klimyk sum left a negative multiplicity at " + w.to_string());
    if (m > 0) out.entries.emplace(w, m);
  }
  return out;
}

std::int64_t tensor_multiplicity(const RootDatum& datum, const Weight& lambda, const Weight& mu, const Weight& nu,
                                 const ComputeLimits& limits) {
  require_dominant(nu, "tensor_multiplicity");
  return tensor_decompose(datum, lambda, mu, limits).multiplicity(nu);
}

std::int64_t invariant_dim_triple(const RootDatum& datum, const Weight& lambda, const Weight& mu, const Weight& nu,
                                  const ComputeLimits& limits) {
  return tensor_multiplicity(datum, lambda, mu, dual_weight(datum, nu), limits);
}

}  // namespace rhotensor
