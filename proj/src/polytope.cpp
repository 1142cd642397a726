#include "rhotensor/polytope.hpp"

#include <algorithm>
#include <set>

#include "rhotensor/exact_lp.hpp"

namespace rhotensor {

namespace {

void require_subset_rank(const RootDatum& datum, const ComputeLimits& limits, const char* what) {
  if (datum.rank() > limits.max_subset_rank) {
    throw ResourceLimit(std::string(what) + " iterates 2^r subsets; rank " + std::to_string(datum.rank()) +
                        " exceeds the cap " + std::to_string(limits.max_subset_rank));
  }
}

WeightQ two_rho(const RootDatum& datum) { return WeightQ(Weight::constant(datum.rank(), 2)); }

Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  return det;
}

}  // namespace

WeightQ b_of_J(const RootDatum& datum, NodeSet J) {
  Weight sum(datum.rank());
  for (const auto& root : datum.positive_roots()) {
    bool supported = true;
    for (std::size_t i = 0; i < datum.rank(); ++i)
      if (root.simple[i] != 0 && !J.contains(static_cast<int>(i) + 1)) supported = false;
    if (supported) sum += root.weight;
  }
  return WeightQ(sum);
}

WeightQ vertex_c(const RootDatum& datum, NodeSet J) { return two_rho(datum) - b_of_J(datum, J); }

WeightQ project_pi_J(const RootDatum& datum, const WeightQ& w, NodeSet J) {
  WeightQ out(datum.rank());
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (J.contains(static_cast<int>(i) + 1)) out[i] = w[i];
  return out;
}

bool in_face_A_complement(const RootDatum& datum, const WeightQ& y, NodeSet H) {
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    const int s = y[i].sign();
    if (s < 0 || (H.contains(static_cast<int>(i) + 1) && s != 0)) return false;
  }
  return true;
}

bool in_face_C(const RootDatum& datum, const WeightQ& y, NodeSet K) {
  const auto c = to_root_basis(datum, two_rho(datum) - y);
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    const int s = c[i].sign();
    if (s < 0 || (!K.contains(static_cast<int>(i) + 1) && s != 0)) return false;
  }
  return true;
}

std::optional<WeightQ> face_intersection_point(const RootDatum& datum, NodeSet H, NodeSet K) {
  // y = 2ρ - Σ_{k∈K} t_k α_k with t >= 0; y_h = 0 on H, y_i >= 0 elsewhere.
  const std::vector<int> ks = K.nodes();
  const auto& cartan = datum.cartan();
  LinearSystem sys;
  sys.num_vars = ks.size();
  for (std::size_t i = 0; i < datum.rank(); ++i) {
    std::vector<Rational> row(ks.size());
    for (std::size_t t = 0; t < ks.size(); ++t) row[t] = Rational(cartan[ks[t] - 1][i]);
    if (H.contains(static_cast<int>(i) + 1)) {
      sys.add_equality(std::move(row), Rational(2));
    } else {
      sys.add_upper_bound(std::move(row), Rational(2));
    }
  }
  const auto t = find_feasible_point(sys);
  if (!t) return std::nullopt;
  WeightQ y = two_rho(datum);
  for (std::size_t k = 0; k < ks.size(); ++k) y -= (*t)[k] * WeightQ(datum.simple_root(ks[k]));
  return y;
}

bool Lemma7Report::pass() const {
  return failures.empty() && c_empty_is_2rho && c_full_is_zero && vertices_distinct &&
         std::all_of(subsets.begin(), subsets.end(), [](const auto& s) { return s.pass(); });
}

Lemma7Report lemma7_check(const RootDatum& datum, const ComputeLimits& limits) {
  require_subset_rank(datum, limits, "lemma7_check");
  const std::size_t r = datum.rank();
  const std::uint32_t count = 1u << r;
  const NodeSet full = NodeSet::full(r);
  Lemma7Report report;

  std::vector<WeightQ> c(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    const NodeSet J(mask);
    Lemma7SubsetResult res;
    res.J = J;
    res.b = b_of_J(datum, J);
    res.c = vertex_c(datum, J);
    res.b_shape = true;
    for (std::size_t i = 0; i < r; ++i) {
      const bool in_J = J.contains(static_cast<int>(i) + 1);
      if (in_J ? res.b[i] != Rational(2) : res.b[i].sign() > 0) res.b_shape = false;
    }
    res.c_in_A = in_face_A_complement(datum, res.c, J);
    res.c_in_C = in_face_C(datum, res.c, J);
    const auto js = J.nodes();
    std::vector<std::vector<Rational>> block(js.size(), std::vector<Rational>(js.size()));
    for (std::size_t a = 0; a < js.size(); ++a)
      for (std::size_t b = 0; b < js.size(); ++b) block[a][b] = Rational(datum.cartan()[js[a] - 1][js[b] - 1]);
    res.unique_point = js.empty() || !determinant(block).is_zero();
    if (!res.pass()) report.failures.push_back("subset " + J.to_string() + " fails the vertex clauses");
    c[mask] = res.c;
    report.subsets.push_back(std::move(res));
  }

  report.c_empty_is_2rho = c[0] == two_rho(datum);
  report.c_full_is_zero = c[full.mask()] == WeightQ(Weight(r));
  std::set<std::string> distinct;
  for (const auto& v : c) distinct.insert(v.to_string());
  report.vertices_distinct = distinct.size() == count;

  for (std::uint32_t h = 0; h < count; ++h) {
    for (std::uint32_t k = 0; k < count; ++k) {
      const NodeSet H(h), K(k);
      if (!H.subset_of(K)) {
        ++report.empty_pairs_checked;
        if (auto y = face_intersection_point(datum, H, K)) {
          ++report.nonempty_found;
          report.failures.push_back("A_{I\\" + H.to_string() + "} meets C_" + K.to_string() + " at " + y->to_string());
        }
      } else if (H != K) {
        ++report.witness_pairs_checked;
        const bool ok = c[h] != c[k] && in_face_A_complement(datum, c[h], H) && in_face_C(datum, c[h], K) &&
                        in_face_A_complement(datum, c[k], H) && in_face_C(datum, c[k], K);
        if (!ok) {
          ++report.witness_failures;
          report.failures.push_back("witness pair c_" + H.to_string() + ", c_" + K.to_string() + " not in A_{I\\" +
                                    H.to_string() + "} ∩ C_" + K.to_string());
        }
      }
    }
  }
  return report;
}

bool corollary8_membership(const RootDatum& datum, const WeightQ& lambda, const ComputeLimits& limits) {
  require_subset_rank(datum, limits, "corollary8_membership");
  const std::size_t r = datum.rank();
  const std::uint32_t count = 1u << r;
  std::vector<WeightQ> gens;
  gens.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) gens.push_back(vertex_c(datum, NodeSet(mask)));

  LinearSystem sys;
  sys.num_vars = count;
  sys.add_equality(std::vector<Rational>(count, Rational(1)), Rational(1));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Rational> row(count);
    for (std::uint32_t g = 0; g < count; ++g) row[g] = gens[g][i];
    sys.add_equality(std::move(row), lambda[i]);
  }
  return find_feasible_point(sys).has_value();
}

bool in_polytope_by_definition(const RootDatum& datum, const WeightQ& lambda) {
  if (!lambda.is_dominant()) return false;
  const auto c = to_root_basis(datum, two_rho(datum) - lambda);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.sign() >= 0; });
}

Prop9Result prop9_decompose(const RootDatum& datum, const Weight& lambda, const WeightMultiset* rho_character) {
  const Weight two_rho_int = Weight::constant(datum.rank(), 2);
  if (lambda.rank() != datum.rank() || !lambda.is_dominant() || !leq_root_order(datum, lambda, two_rho_int)) {
    throw PreconditionViolated("prop9_decompose needs a dominant weight below 2ρ, got " + lambda.to_string());
  }
  Prop9Result res;
  res.beta = lambda - datum.rho();
  res.lattice_hull = weight_of_v_rho(datum, res.beta);
  if (rho_character) {
    res.multiplicity = rho_character->multiplicity(datum, res.beta);
    res.freudenthal = res.multiplicity > 0;
    if (*res.freudenthal != res.lattice_hull) {
      throw InternalConsistencyError("weight oracles disagree on " + res.beta.to_string() + " for " + datum.spec().name());
    }
  }
  if (!res.lattice_hull) {
    throw InternalConsistencyError(res.beta.to_string() + " = λ - ρ is not a weight of V(ρ) in " + datum.spec().name());
  }
  return res;
}

Prop9Result prop9_decompose(const RootDatum& datum, const Weight& lambda, const ComputeLimits& limits) {
  if (datum.rank() > 4) return prop9_decompose(datum, lambda, nullptr);
  const WeightMultiset rho_char = freudenthal_multiplicities(datum, datum.rho(), limits);
  return prop9_decompose(datum, lambda, &rho_char);
}

}  // namespace rhotensor
