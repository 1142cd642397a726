#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rhotensor/root_system.hpp"

using namespace rhotensor;

namespace {

const std::vector<std::string> kAllTypes = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "B2", "B3", "B4",
                                            "B5", "B6", "B7", "C2", "C3", "C4", "C5", "C6", "D4", "D5", "D6",
                                            "D7", "E6", "E7", "E8", "F4", "G2"};
const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2",
                                              "C3", "C4", "D4", "D5", "F4", "G2"};

RootDatum datum(const std::string& name) { return build_root_datum(RootSystemSpec::parse(name)); }

Weight random_weight(std::mt19937_64& rng, std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  Weight w(rank);
  for (std::size_t i = 0; i < rank; ++i) w[i] = d(rng);
  return w;
}

/// Orbit of ρ under the subgroup generated by the nodes of J.
std::size_t subgroup_order(const RootDatum& d, NodeSet J) {
  std::set<Weight> seen{d.rho()};
  std::vector<Weight> frontier{d.rho()};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& w : frontier) {
      for (int j : J.nodes()) {
        Weight v = w;
        reflect_in_place(d, j, v);
        if (seen.insert(v).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST_CASE("type names parse and invalid ones are rejected") {
  CHECK(RootSystemSpec::parse("B3").name() == "B3");
  CHECK(RootSystemSpec::parse("C2").rank == 2);
  CHECK(RootSystemSpec::parse("a2") == RootSystemSpec{Family::A, 2});
  for (const char* bad : {"A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "Z9", "", "A", "3", "A-1", "A17"}) {
    CAPTURE(std::string(bad));
    CHECK_THROWS_AS(RootSystemSpec::parse(bad), InvalidSpec);
  }
  CHECK_THROWS_AS(build_root_datum(RootSystemSpec{Family::D, 3}), InvalidSpec);
}

TEST_CASE("root closure matches the classification") {
  for (const auto& name : kAllTypes) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    const auto h = oracle::coxeter_number(d.spec());
    const auto r = static_cast<std::int64_t>(d.rank());
    CHECK(static_cast<std::int64_t>(d.num_positive_roots()) == r * h / 2);
    CHECK(d.num_positive_roots() == expected_num_positive_roots(d.spec()));
    CHECK(d.dim_g() == 2 * d.num_positive_roots() + d.rank());
    std::int64_t top = 0;
    std::set<std::vector<std::int64_t>> distinct;
    for (const auto& pr : d.positive_roots()) {
      top = std::max(top, pr.height());
      distinct.insert(pr.simple);
      for (auto c : pr.simple) CHECK(c >= 0);
    }
    CHECK(top == h - 1);
    CHECK(distinct.size() == d.num_positive_roots());
    CHECK(d.rho() == Weight::constant(d.rank(), 1));
  }
}

TEST_CASE("cartan data is consistent") {
  for (const auto& name : kAllTypes) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    const std::size_t r = d.rank();
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) {
          CHECK(d.cartan()[i][j] == 2);
        } else {
          CHECK(d.cartan()[i][j] <= 0);
          CHECK((d.cartan()[i][j] == 0) == (d.cartan()[j][i] == 0));
        }
        CHECK(d.gram()[i][j] == d.gram()[j][i]);
        CHECK(2 * d.gram()[i][j] == d.cartan()[i][j] * d.gram()[j][j]);
        Rational s = 0;
        for (std::size_t k = 0; k < r; ++k) s += Rational(d.cartan()[i][k]) * d.cartan_inverse()[k][j];
        CHECK(s == Rational(i == j ? 1 : 0));
      }
      CHECK(d.simple_root(static_cast<int>(i) + 1) == Weight(std::span<const std::int64_t>(d.cartan()[i])));
    }
    // ρ in simple-root coordinates is half the positive-root sum.
    std::vector<std::int64_t> sum(r, 0);
    for (const auto& pr : d.positive_roots())
      for (std::size_t i = 0; i < r; ++i) sum[i] += pr.simple[i];
    const auto rho_c = to_root_basis(d, WeightQ(d.rho()));
    for (std::size_t i = 0; i < r; ++i) CHECK(rho_c[i] == Rational(sum[i], 2));
  }
}

TEST_CASE("A1 and A2 basics") {
  const RootDatum a1 = datum("A1");
  CHECK(a1.cartan() == std::vector<std::vector<std::int64_t>>{{2}});
  CHECK(a1.num_positive_roots() == 1);
  CHECK(a1.rho() == Weight({1}));
  CHECK(simple_reflection(a1, 1, WeightQ(Weight({-1}))) == WeightQ(Weight({1})));
  CHECK(apply_word(a1, WeylWord{{1}}, a1.rho()) == Weight({-1}));
  CHECK(to_root_basis(a1, WeightQ(a1.rho()))[0] == Rational(1, 2));
  CHECK(eval_coweight(a1, WeightQ(a1.rho()), 1) == Rational(1, 2));
  auto [dom, word] = dominate(a1, Weight({-3}));
  CHECK(dom == Weight({3}));
  CHECK(word.letters == std::vector<int>{1});

  const RootDatum a2 = datum("A2");
  CHECK(a2.num_positive_roots() == 3);
  CHECK(a2.dim_g() == 8);
  CHECK(simple_reflection(a2, 1, WeightQ(a2.rho())) == WeightQ(Weight({-1, 2})));
  CHECK(simple_reflection(a2, 2, WeightQ(Weight(2))) == WeightQ(Weight(2)));
  CHECK(apply_word(a2, WeylWord{{1, 2, 1}}, a2.rho()) == Weight({-1, -1}));
  CHECK(apply_word(a2, WeylWord{}, Weight({4, -7})) == Weight({4, -7}));
  const auto c = to_root_basis(a2, WeightQ(a2.rho()));
  CHECK(c == std::vector<Rational>{1, 1});
  CHECK(eval_coweight(a2, WeightQ(a2.rho()), 1) == Rational(1));
  CHECK(to_root_basis(a2, WeightQ(Weight(2))) == std::vector<Rational>{0, 0});
  auto [d2, w2] = dominate(a2, Weight({-1, 2}));
  CHECK(d2 == Weight({1, 1}));
  CHECK(w2.letters == std::vector<int>{1});

  CHECK(longest_element(a2, NodeSet{}).empty());
  const WeylWord wo = longest_element(a2, NodeSet{1, 2});
  CHECK(wo.length() == 3);
  CHECK(apply_word(a2, wo, a2.rho()) == Weight({-1, -1}));
  const WeylWord w1 = longest_element(a2, NodeSet{1});
  CHECK(w1.letters == std::vector<int>{1});
  CHECK(a2.rho() - apply_word(a2, w1, a2.rho()) == a2.simple_root(1));

  CHECK(dual_weight(a2, Weight({1, 0})) == Weight({0, 1}));
  CHECK(dual_weight(a2, Weight(2)) == Weight(2));
  CHECK_THROWS_AS(dual_weight(a2, Weight({1, -1})), NonDominantInput);
}

TEST_CASE("eval_coweight extracts root coordinates") {
  for (const auto& name : kSmallTypes) {
    const RootDatum d = datum(name);
    for (int j = 1; j <= static_cast<int>(d.rank()); ++j)
      for (int k = 1; k <= static_cast<int>(d.rank()); ++k)
        CHECK(eval_coweight(d, WeightQ(d.simple_root(j)), k) == Rational(j == k ? 1 : 0));
  }
}

TEST_CASE("dual weight is the identity exactly when w_o = -1") {
  std::mt19937_64 rng(3);
  for (const auto& name : {"A1", "A2", "A3", "B3", "C3", "D4", "D5", "E6", "E7", "F4", "G2"}) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    const WeylWord wo = longest_element(d, NodeSet::full(d.rank()));
    const bool minus_one = apply_word(d, wo, d.rho()) == -d.rho() && [&] {
      for (int i = 1; i <= static_cast<int>(d.rank()); ++i) {
        Weight w(d.rank());
        w[i - 1] = 1;
        if (apply_word(d, wo, w) != -w) return false;
      }
      return true;
    }();
    const std::string n = name;
    const bool table = n == "A1" || n[0] == 'B' || n[0] == 'C' || n == "D4" || n == "E7" || n == "F4" || n == "G2";
    CHECK(minus_one == table);
    for (int s = 0; s < 50; ++s) {
      const Weight lam = oracle::random_dominant(rng, d.rank(), 4);
      const Weight dual = dual_weight(d, lam);
      CHECK(dual.is_dominant());
      CHECK(dual_weight(d, dual) == lam);
      if (table) CHECK(dual == lam);
    }
  }
}

TEST_CASE("simple reflections are involutions on random weights") {
  std::mt19937_64 rng(1);
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    std::uniform_int_distribution<int> node(1, static_cast<int>(d.rank()));
    for (int s = 0; s < 1000; ++s) {
      const Weight w = random_weight(rng, d.rank(), -6, 6);
      const int i = node(rng);
      const WeightQ once = simple_reflection(d, i, WeightQ(w));
      CHECK(simple_reflection(d, i, once) == WeightQ(w));
      // w - s_i w is a multiple of α_i.
      const auto diff = to_root_basis(d, WeightQ(w) - once);
      for (std::size_t k = 0; k < d.rank(); ++k)
        if (static_cast<int>(k) + 1 != i) CHECK(diff[k].is_zero());
    }
  }
}

TEST_CASE("dominate is idempotent and returns reduced words") {
  std::mt19937_64 rng(2);
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    for (int s = 0; s < 300; ++s) {
      const Weight w = random_weight(rng, d.rank(), -5, 5);
      const auto [dom, word] = dominate(d, w);
      CHECK(dom.is_dominant());
      CHECK(apply_word(d, word, w) == dom);
      CHECK(word.length() <= d.num_positive_roots());
      CHECK(is_reduced(d, word));
      const auto again = dominate(d, dom);
      CHECK(again.first == dom);
      CHECK(again.second.empty());
      const WeylWord inv = word.inverse();
      CHECK(apply_word(d, word, apply_word(d, inv, w)) == w);

      const auto [domq, wordq] = dominate(d, WeightQ(w));
      CHECK(domq == WeightQ(dom));
      CHECK(wordq == word);
    }
  }
}

TEST_CASE("dominate_regular detects walls and word parity") {
  std::mt19937_64 rng(4);
  for (const auto& name : {"A2", "B3", "C3", "G2", "D4", "F4"}) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    for (int s = 0; s < 400; ++s) {
      const Weight w = random_weight(rng, d.rank(), -3, 3);
      bool singular = false;
      for (std::size_t k = 0; k < d.num_positive_roots(); ++k)
        if (oracle::pairing(d, w, k) == 0) singular = true;
      const auto reg = dominate_regular(d, w);
      CHECK(reg.has_value() == !singular);
      if (reg) {
        const auto [dom, word] = dominate(d, w);
        CHECK(reg->weight == dom);
        CHECK(reg->sign == (word.length() % 2 == 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("longest elements") {
  std::mt19937_64 rng(5);
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    const NodeSet full = NodeSet::full(d.rank());
    const WeylWord wo = longest_element(d, full);
    CHECK(wo.length() == d.num_positive_roots());
    CHECK(is_reduced(d, wo));
    for (int s = 0; s < 50; ++s) {
      const Weight lam = oracle::random_dominant(rng, d.rank(), 5);
      for (auto c : apply_word(d, wo, lam)) CHECK(c <= 0);
    }
    for (std::uint32_t mask = 0; mask < (1u << d.rank()); ++mask) {
      const NodeSet J(mask);
      const WeylWord wJ = longest_element(d, J);
      std::size_t nJ = 0;
      for (const auto& pr : d.positive_roots()) {
        bool inside = true;
        for (std::size_t i = 0; i < d.rank(); ++i)
          if (pr.simple[i] && !J.contains(static_cast<int>(i) + 1)) inside = false;
        nJ += inside;
      }
      CHECK(wJ.length() == nJ);
      CHECK(is_reduced(d, wJ));
      const Weight img = apply_word(d, wJ, d.rho());
      for (int j : J.nodes()) CHECK(img[j - 1] == -1);
      for (int l : wJ.letters) CHECK(J.contains(l));
    }
  }
}

TEST_CASE("weyl group orders and orbits") {
  for (const auto& name : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C3", "C5", "D4", "D5", "G2", "F4",
                           "E6"}) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    CHECK(weyl_group_order(d) == oracle::weyl_order_table(d.spec()));
  }
  for (const auto& name : {"A3", "B3", "G2", "F4"}) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    const auto order = oracle::weyl_order_table(d.spec());
    CHECK(weyl_orbit(d, d.rho()).size() == order);
    CHECK(weyl_orbit(d, Weight(d.rank())).size() == 1);
    for (int i = 1; i <= static_cast<int>(d.rank()); ++i) {
      Weight w(d.rank());
      w[i - 1] = 1;
      const auto orbit = weyl_orbit(d, w);
      const std::set<Weight> uniq(orbit.begin(), orbit.end());
      CHECK(uniq.size() == orbit.size());
      const NodeSet stabilizer(NodeSet::full(d.rank()).mask() & ~(1u << (i - 1)));
      CHECK(orbit.size() * subgroup_order(d, stabilizer) == order);
    }
  }
}

TEST_CASE("positive-root test used by coset conditions") {
  const RootDatum d = datum("B3");
  for (const auto& pr : d.positive_roots()) {
    CHECK(is_positive_root_vector(d, pr.weight));
    CHECK_FALSE(is_positive_root_vector(d, -pr.weight));
  }
}
