#include <set>

#include "doctest.h"
#include "rhotensor/exact_lp.hpp"
#include "rhotensor/polytope.hpp"

using namespace rhotensor;

namespace {

RootDatum datum(const std::string& name) { return build_root_datum(RootSystemSpec::parse(name)); }

WeightQ q(std::initializer_list<std::int64_t> v) { return WeightQ(Weight(v)); }

}  // namespace

TEST_CASE("exact simplex") {
  LinearSystem s;
  s.num_vars = 2;
  s.add_equality({1, 1}, 1);
  s.add_upper_bound({1, -1}, Rational(-1, 3));
  auto x = find_feasible_point(s);
  REQUIRE(x);
  CHECK(s.satisfied_by(*x));
  CHECK((*x)[0] <= Rational(1, 3));

  LinearSystem infeasible;
  infeasible.num_vars = 2;
  infeasible.add_equality({1, 1}, 1);
  infeasible.add_upper_bound({1, 1}, Rational(1, 2));
  CHECK_FALSE(find_feasible_point(infeasible));

  LinearSystem negative_rhs;
  negative_rhs.num_vars = 1;
  negative_rhs.add_equality({1}, -1);
  CHECK_FALSE(find_feasible_point(negative_rhs));

  LinearSystem redundant;
  redundant.num_vars = 3;
  redundant.add_equality({1, 1, 0}, 2);
  redundant.add_equality({2, 2, 0}, 4);
  redundant.add_equality({0, 1, 1}, 3);
  x = find_feasible_point(redundant);
  REQUIRE(x);
  CHECK(redundant.satisfied_by(*x));

  LinearSystem empty;
  empty.num_vars = 2;
  x = find_feasible_point(empty);
  REQUIRE(x);
  CHECK(x->size() == 2);
}

TEST_CASE("b_J and c_J examples") {
  const RootDatum a2 = datum("A2");
  CHECK(b_of_J(a2, NodeSet{}) == q({0, 0}));
  CHECK(b_of_J(a2, NodeSet{1, 2}) == q({2, 2}));
  CHECK(b_of_J(a2, NodeSet{1}) == q({2, -1}));
  CHECK(vertex_c(a2, NodeSet{}) == q({2, 2}));
  CHECK(vertex_c(a2, NodeSet{1, 2}) == q({0, 0}));
  CHECK(vertex_c(a2, NodeSet{1}) == q({0, 3}));
  CHECK(vertex_c(a2, NodeSet{2}) == q({3, 0}));
  CHECK(project_pi_J(a2, q({2, -1}), NodeSet{1}) == q({2, 0}));
  CHECK(project_pi_J(a2, q({2, -1}), NodeSet{}) == q({0, 0}));
  CHECK(project_pi_J(a2, q({2, -1}), NodeSet{1, 2}) == q({2, -1}));
}

TEST_CASE("b_J has the 2-on-J shape and c_J - rho = w_o^J(rho)") {
  for (const auto& name : {"A3", "B3", "C3", "G2", "D4", "F4", "B5"}) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    for (std::uint32_t mask = 0; mask < (1u << d.rank()); ++mask) {
      const NodeSet J(mask);
      const WeightQ b = b_of_J(d, J);
      for (std::size_t i = 0; i < d.rank(); ++i) {
        if (J.contains(static_cast<int>(i) + 1)) {
          CHECK(b[i] == Rational(2));
        } else {
          CHECK(b[i] <= Rational(0));
        }
      }
      CHECK(vertex_c(d, J) - WeightQ(d.rho()) == WeightQ(apply_word(d, longest_element(d, J), d.rho())));
    }
  }
}

TEST_CASE("pi_J is injective on small non-negative combinations of -alpha_j") {
  for (const auto& name : {"A3", "B3", "C3", "G2", "D4", "F4"}) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    for (std::uint32_t mask = 1; mask < (1u << d.rank()); ++mask) {
      const NodeSet J(mask);
      const auto js = J.nodes();
      std::set<std::string> images;
      std::size_t count = 0;
      std::vector<std::int64_t> c(js.size(), 0);
      while (true) {
        WeightQ w(d.rank());
        for (std::size_t t = 0; t < js.size(); ++t) w -= Rational(c[t]) * WeightQ(d.simple_root(js[t]));
        images.insert(project_pi_J(d, w, J).to_string());
        ++count;
        std::size_t k = 0;
        while (k < c.size() && c[k] == 3) c[k++] = 0;
        if (k == c.size()) break;
        ++c[k];
      }
      CHECK(images.size() == count);
    }
  }
}

TEST_CASE("face intersections on small types") {
  const RootDatum a1 = datum("A1");
  const Lemma7Report r1 = lemma7_check(a1);
  CHECK(r1.pass());
  CHECK(r1.subsets.size() == 2);
  CHECK(r1.subsets[0].c == q({2}));
  CHECK(r1.subsets[1].c == q({0}));

  const RootDatum a2 = datum("A2");
  const Lemma7Report r2 = lemma7_check(a2);
  CHECK(r2.pass());
  std::set<std::string> verts;
  for (const auto& s : r2.subsets) verts.insert(s.c.to_string());
  CHECK(verts == std::set<std::string>{"2,2", "0,3", "3,0", "0,0"});
  // 16 ordered pairs: 9 with H ⊆ K (5 proper), 7 with H ⊄ K.
  CHECK(r2.empty_pairs_checked == 7);
  CHECK(r2.witness_pairs_checked == 5);
  CHECK(r2.nonempty_found == 0);

  ComputeLimits small;
  small.max_subset_rank = 3;
  CHECK_THROWS_AS(lemma7_check(datum("A4"), small), ResourceLimit);
}

TEST_CASE("face intersections follow the sign pattern of the Cartan matrix") {
  // If h ∈ H∖K then every y ∈ C_K has y_h = 2 - Σ_k t_k C[k][h] >= 2, so
  // y_h = 0 is impossible; if H ⊆ K then c_H lies in the intersection.
  for (const auto& name : {"A3", "B3", "C3", "G2"}) {
    CAPTURE(name);
    const RootDatum d = datum(name);
    const std::uint32_t n = 1u << d.rank();
    for (std::uint32_t h = 0; h < n; ++h) {
      for (std::uint32_t k = 0; k < n; ++k) {
        const NodeSet H(h), K(k);
        const auto y = face_intersection_point(d, H, K);
        CHECK(y.has_value() == H.subset_of(K));
        if (y) {
          CHECK(in_face_A_complement(d, *y, H));
          CHECK(in_face_C(d, *y, K));
        }
      }
    }
  }
}

TEST_CASE("membership in the hull of the vertices") {
  const RootDatum a2 = datum("A2");
  CHECK(corollary8_membership(a2, q({0, 0})));
  CHECK(corollary8_membership(a2, q({1, 1})));
  CHECK_FALSE(corollary8_membership(a2, q({3, 1})));
  CHECK(corollary8_membership(a2, WeightQ({Rational(3, 2), Rational(3, 2)})));
  CHECK_FALSE(corollary8_membership(a2, q({-1, 2})));
  CHECK(in_polytope_by_definition(a2, q({1, 1})));
  CHECK_FALSE(in_polytope_by_definition(a2, q({3, 1})));
  CHECK_FALSE(in_polytope_by_definition(a2, q({-1, 2})));
}

TEST_CASE("lambda = rho + beta examples") {
  const RootDatum a2 = datum("A2");
  const auto top = prop9_decompose(a2, Weight({2, 2}));
  CHECK(top.beta == a2.rho());
  CHECK(top.lattice_hull);
  REQUIRE(top.freudenthal);
  CHECK(*top.freudenthal);
  CHECK(top.multiplicity == 1);
  const auto mid = prop9_decompose(a2, Weight({1, 1}));
  CHECK(mid.beta == Weight({0, 0}));
  CHECK(mid.multiplicity == 2);
  CHECK(prop9_decompose(a2, Weight({3, 0})).beta == Weight({2, -1}));
  CHECK_THROWS_AS(prop9_decompose(a2, Weight({1, 0})), PreconditionViolated);
  CHECK_THROWS_AS(prop9_decompose(a2, Weight({4, 1})), PreconditionViolated);
  CHECK_THROWS_AS(prop9_decompose(a2, Weight({-1, 3})), PreconditionViolated);
  const RootDatum b5 = datum("B5");
  const auto hull_only = prop9_decompose(b5, Weight::constant(5, 2));
  CHECK(hull_only.lattice_hull);
  CHECK_FALSE(hull_only.freudenthal);
}
