#include "rhotensor/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace rhotensor {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

void link(Matrix& g, int i, int j, std::int64_t v) {
  g[i - 1][j - 1] = v;
  g[j - 1][i - 1] = v;
}

// (α_i, α_j) for the Bourbaki-numbered diagram, scaled so that every
// diagonal entry is even.
Matrix gram_matrix(const RootSystemSpec& spec) {
  const int r = spec.rank;
  Matrix g(r, std::vector<std::int64_t>(r, 0));
  switch (spec.family) {
    case Family::A:
      for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i < r; ++i) link(g, i, i + 1, -1);
      break;
    case Family::B:
      for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = i < r ? 4 : 2;
      for (int i = 1; i < r; ++i) link(g, i, i + 1, -2);
      break;
    case Family::C:
      for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = i < r ? 2 : 4;
      for (int i = 1; i < r; ++i) link(g, i, i + 1, i + 1 < r ? -1 : -2);
      break;
    case Family::D:
      for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = 2;
      for (int i = 1; i + 1 < r; ++i) link(g, i, i + 1, -1);
      link(g, r - 2, r, -1);
      break;
    case Family::E:
      for (int i = 1; i <= r; ++i) g[i - 1][i - 1] = 2;
      link(g, 1, 3, -1);
      link(g, 2, 4, -1);
      for (int i = 3; i < r; ++i) link(g, i, i + 1, -1);
      break;
    case Family::F:
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(g, 1, 2, -2);
      link(g, 2, 3, -2);
      link(g, 3, 4, -1);
      break;
    case Family::G:
      g[0][0] = 2;
      g[1][1] = 6;
      link(g, 1, 2, -3);
      break;
  }
  return g;
}

std::vector<std::vector<Rational>> invert(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = Rational(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw InternalConsistencyError("Cartan matrix is singular");
    std::swap(a[piv], a[col]);
    Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational f = a[row][col];
      for (std::size_t k = 0; k < 2 * n; ++k) a[row][k] -= f * a[col][k];
    }
  }
  std::vector<std::vector<Rational>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(a[i].begin() + n, a[i].end());
  return out;
}

}  // namespace

std::string RootSystemSpec::name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

RootSystemSpec RootSystemSpec::parse(const std::string& text) {
  if (text.size() < 2) throw InvalidSpec("bad type '" + text + "': expected letter+rank such as B3");
  const std::string letters = "ABCDEFG";
  auto pos = letters.find(static_cast<char>(std::toupper(static_cast<unsigned char>(text[0]))));
  if (pos == std::string::npos) throw InvalidSpec("unknown family in type '" + text + "'");
  const std::string digits = text.substr(1);
  if (digits.empty() || digits.size() > 3 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    throw InvalidSpec("bad rank in type '" + text + "'");
  }
  RootSystemSpec spec{static_cast<Family>(pos), std::stoi(digits)};
  validate(spec);
  return spec;
}

void validate(const RootSystemSpec& spec) {
  const int r = spec.rank;
  bool ok = false;
  switch (spec.family) {
    case Family::A: ok = r >= 1; break;
    case Family::B: ok = r >= 2; break;
    case Family::C: ok = r >= 2; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
    case Family::F: ok = r == 4; break;
    case Family::G: ok = r == 2; break;
  }
  if (!ok) throw InvalidSpec("no simple Lie algebra of type " + spec.name());
  if (static_cast<std::size_t>(r) > kMaxRank) {
    throw InvalidSpec("type " + spec.name() + " exceeds the supported rank " + std::to_string(kMaxRank));
  }
}

NodeSet::NodeSet(std::initializer_list<int> nodes) {
  for (int n : nodes) mask_ |= 1u << (n - 1);
}

std::vector<int> NodeSet::nodes() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string NodeSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int n : nodes()) {
    if (!first) s += ',';
    s += std::to_string(n);
    first = false;
  }
  return s + "}";
}

std::int64_t PositiveRoot::height() const { return std::accumulate(simple.begin(), simple.end(), std::int64_t{0}); }

std::size_t expected_num_positive_roots(const RootSystemSpec& spec) {
  const std::size_t r = spec.rank;
  switch (spec.family) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

RootDatum build_root_datum(const RootSystemSpec& spec) {
  validate(spec);
  RootDatum d;
  d.spec_ = spec;
  const std::size_t r = spec.rank;
  d.gram_ = gram_matrix(spec);
  d.cartan_.assign(r, std::vector<std::int64_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) d.cartan_[i][j] = 2 * d.gram_[i][j] / d.gram_[j][j];
  d.cartan_inverse_ = invert(d.cartan_);

  // (ω_i, ω_k) = (C^-1)_ik (α_k, α_k) / 2, cleared of denominators.
  std::vector<std::vector<Rational>> form(r, std::vector<Rational>(r));
  BigInt lcm = 1;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      form[i][k] = d.cartan_inverse_[i][k] * Rational(d.gram_[k][k], 2);
      lcm = boost::multiprecision::lcm(lcm, form[i][k].denominator());
    }
  }
  d.inner_scale_ = narrow_int64(lcm);
  d.scaled_form_.assign(r, std::vector<std::int64_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) d.scaled_form_[i][k] = (form[i][k] * Rational(d.inner_scale_)).to_int64();

  for (std::size_t i = 0; i < r; ++i) d.simple_roots_.emplace_back(std::span<const std::int64_t>(d.cartan_[i]));
  d.rho_ = Weight::constant(r, 1);

  // Closure of the simple roots under s_i, keeping positive results.
  using Coords = std::vector<std::int64_t>;
  std::set<Coords> seen;
  std::vector<Coords> frontier;
  for (std::size_t i = 0; i < r; ++i) {
    Coords e(r, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const Coords& beta : frontier) {
      for (std::size_t i = 0; i < r; ++i) {
        std::int64_t pairing = 0;
        for (std::size_t j = 0; j < r; ++j) pairing += beta[j] * d.cartan_[j][i];
        Coords img = beta;
        img[i] -= pairing;
        if (std::any_of(img.begin(), img.end(), [](std::int64_t x) { return x < 0; })) continue;
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }

  std::vector<Coords> roots(seen.begin(), seen.end());
  std::stable_sort(roots.begin(), roots.end(), [](const Coords& a, const Coords& b) {
    return std::accumulate(a.begin(), a.end(), 0LL) < std::accumulate(b.begin(), b.end(), 0LL);
  });
  for (Coords& a : roots) {
    PositiveRoot pr;
    pr.weight = Weight(r);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) pr.weight[k] += a[j] * d.cartan_[j][k];
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) pr.norm2 += a[j] * a[k] * d.gram_[j][k];
    pr.coroot.resize(r);
    for (std::size_t j = 0; j < r; ++j) {
      std::int64_t num = a[j] * d.gram_[j][j];
      if (num % pr.norm2 != 0) throw InternalConsistencyError("non-integral coroot in " + spec.name());
      pr.coroot[j] = num / pr.norm2;
    }
    pr.simple = std::move(a);
    d.positive_roots_.push_back(std::move(pr));
  }
  if (d.positive_roots_.size() != expected_num_positive_roots(spec)) {
    throw InternalConsistencyError("root closure for " + spec.name() + " produced " +
                                   std::to_string(d.positive_roots_.size()) + " positive roots");
  }
  return d;
}

std::int64_t RootDatum::scaled_inner(const Weight& a, const Weight& b) const {
  std::int64_t s = 0;
  const std::size_t r = rank();
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t k = 0; k < r; ++k) row = checked_add(row, checked_mul(scaled_form_[i][k], b[k]));
    s = checked_add(s, checked_mul(a[i], row));
  }
  return s;
}

Rational RootDatum::inner(const WeightQ& a, const WeightQ& b) const {
  Rational s;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t k = 0; k < rank(); ++k) s += a[i] * Rational(scaled_form_[i][k]) * b[k];
  return s / Rational(inner_scale_);
}

std::int64_t RootDatum::coroot_pairing(const Weight& w, std::size_t k) const {
  const auto& co = positive_roots_[k].coroot;
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank(); ++j) s = checked_add(s, checked_mul(co[j], w[j]));
  return s;
}

WeightQ simple_reflection(const RootDatum& datum, int node, const WeightQ& w) {
  if (node < 1 || static_cast<std::size_t>(node) > datum.rank()) throw PreconditionViolated("node index out of range");
  WeightQ out = w;
  const Rational p = w[node - 1];
  if (p.is_zero()) return out;
  const auto& row = datum.cartan()[node - 1];
  for (std::size_t k = 0; k < datum.rank(); ++k)
    if (row[k] != 0) out[k] -= p * Rational(row[k]);
  return out;
}

void reflect_in_place(const RootDatum& datum, int node, Weight& w) {
  const std::int64_t p = w[node - 1];
  if (p == 0) return;
  const auto& row = datum.cartan()[node - 1];
  for (std::size_t k = 0; k < datum.rank(); ++k)
    if (row[k] != 0) w[k] = checked_sub(w[k], checked_mul(p, row[k]));
}

WeightQ apply_word(const RootDatum& datum, const WeylWord& word, const WeightQ& w) {
  WeightQ out = w;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) out = simple_reflection(datum, *it, out);
  return out;
}

Weight apply_word(const RootDatum& datum, const WeylWord& word, const Weight& w) {
  Weight out = w;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    if (*it < 1 || static_cast<std::size_t>(*it) > datum.rank()) throw PreconditionViolated("node index out of range");
    reflect_in_place(datum, *it, out);
  }
  return out;
}

std::vector<Rational> to_root_basis(const RootDatum& datum, const WeightQ& w) {
  const std::size_t r = datum.rank();
  if (w.rank() != r) throw PreconditionViolated("weight rank does not match root datum");
  std::vector<Rational> c(r);
  const auto& inv = datum.cartan_inverse();
  for (std::size_t i = 0; i < r; ++i) {
    if (w[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) c[j] += w[i] * inv[i][j];
  }
  return c;
}

Rational eval_coweight(const RootDatum& datum, const WeightQ& w, int node) {
  if (node < 1 || static_cast<std::size_t>(node) > datum.rank()) throw PreconditionViolated("node index out of range");
  const auto& inv = datum.cartan_inverse();
  Rational s;
  for (std::size_t i = 0; i < datum.rank(); ++i)
    if (!w[i].is_zero()) s += w[i] * inv[i][node - 1];
  return s;
}

std::pair<WeightQ, WeylWord> dominate(const RootDatum& datum, const WeightQ& w) {
  WeightQ cur = w;
  std::vector<int> applied;
  while (true) {
    int neg = 0;
    for (std::size_t i = 0; i < cur.rank(); ++i) {
      if (cur[i].sign() < 0) {
        neg = static_cast<int>(i) + 1;
        break;
      }
    }
    if (neg == 0) break;
    cur = simple_reflection(datum, neg, cur);
    applied.push_back(neg);
  }
  return {std::move(cur), WeylWord{{applied.rbegin(), applied.rend()}}};
}

std::pair<Weight, WeylWord> dominate(const RootDatum& datum, const Weight& w) {
  Weight cur = w;
  std::vector<int> applied;
  const std::size_t r = datum.rank();
  while (true) {
    std::size_t i = 0;
    while (i < r && cur[i] >= 0) ++i;
    if (i == r) break;
    reflect_in_place(datum, static_cast<int>(i) + 1, cur);
    applied.push_back(static_cast<int>(i) + 1);
  }
  return {cur, WeylWord{{applied.rbegin(), applied.rend()}}};
}

std::optional<RegularDominant> dominate_regular(const RootDatum& datum, Weight w) {
  const std::size_t r = datum.rank();
  int sign = 1;
  while (true) {
    std::size_t neg = r;
    for (std::size_t i = 0; i < r; ++i) {
      // A zero coordinate at any stage means the orbit meets a wall.
      if (w[i] == 0) return std::nullopt;
      if (w[i] < 0 && neg == r) neg = i;
    }
    if (neg == r) return RegularDominant{w, sign};
    reflect_in_place(datum, static_cast<int>(neg) + 1, w);
    sign = -sign;
  }
}

WeylWord longest_element(const RootDatum& datum, NodeSet nodes) {
  Weight cur = datum.rho();
  std::vector<int> applied;
  while (true) {
    int pick = 0;
    for (int j : nodes.nodes()) {
      if (static_cast<std::size_t>(j) > datum.rank()) throw PreconditionViolated("node index out of range");
      if (cur[j - 1] > 0) {
        pick = j;
        break;
      }
    }
    if (pick == 0) break;
    reflect_in_place(datum, pick, cur);
    applied.push_back(pick);
  }
  return WeylWord{{applied.rbegin(), applied.rend()}};
}

Weight dual_weight(const RootDatum& datum, const Weight& lambda) {
  if (!lambda.is_dominant()) throw NonDominantInput("dual_weight needs a dominant weight, got " + lambda.to_string());
  return -apply_word(datum, longest_element(datum, NodeSet::full(datum.rank())), lambda);
}

bool is_positive_root_vector(const RootDatum& datum, const Weight& root) {
  const auto c = to_root_basis(datum, WeightQ(root));
  for (const auto& x : c) {
    if (x.sign() > 0) return true;
    if (x.sign() < 0) return false;
  }
  return false;
}

std::size_t word_length(const RootDatum& datum, const WeylWord& word) {
  std::size_t count = 0;
  for (const auto& pr : datum.positive_roots())
    if (!is_positive_root_vector(datum, apply_word(datum, word, pr.weight))) ++count;
  return count;
}

std::vector<Weight> weyl_orbit(const RootDatum& datum, const Weight& dominant) {
  if (!dominant.is_dominant()) throw NonDominantInput("weyl_orbit needs a dominant weight");
  // Walking down from the dominant element by s_i with a positive i-th
  // coordinate only ever produces elements one level deeper, so deduplication
  // is per level.
  std::vector<Weight> orbit{dominant};
  std::vector<Weight> level{dominant};
  const std::size_t r = datum.rank();
  while (!level.empty()) {
    std::unordered_set<Weight, WeightHash> next;
    for (const Weight& w : level) {
      for (std::size_t i = 0; i < r; ++i) {
        if (w[i] <= 0) continue;
        Weight v = w;
        reflect_in_place(datum, static_cast<int>(i) + 1, v);
        next.insert(v);
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end(), std::greater<>());
    orbit.insert(orbit.end(), level.begin(), level.end());
  }
  return orbit;
}

std::uint64_t weyl_group_order(const RootDatum& datum, const ComputeLimits& limits) {
  if (datum.rank() > limits.max_coset_rank && !limits.allow_heavy) {
    throw ResourceLimit("Weyl group enumeration for " + datum.spec().name() + " exceeds the rank cap");
  }
  return weyl_orbit(datum, datum.rho()).size();
}

}  // namespace rhotensor
