#include <functional>
#include <set>

#include "helpers.hpp"

#include "forestpat/bijections.hpp"
#include "forestpat/cycles.hpp"
#include "forestpat/generators.hpp"
#include "forestpat/text.hpp"

using namespace forestpat;
using testing::forest;
using testing::pats;
using testing::perm;

namespace {

std::set<Forest> avoiders(int n, const PatternSet& ps) {
  std::set<Forest> out;
  ForestStream s(n, Family::Unordered);
  while (s.next())
    if (avoids(s.current(), ps)) out.insert(s.current());
  return out;
}

// Every forest outside `image` must be rejected by the inverse.
template <class Inverse>
void check_rejects_outside(int n, const std::set<Forest>& image, Inverse inv) {
  ForestStream s(n, Family::Unordered);
  while (s.next()) {
    if (image.count(s.current())) continue;
    bool thrown = false;
    try {
      (void)inv(s.current());
    } catch (const Error&) {
      thrown = true;
    }
    REQUIRE_MESSAGE(thrown, to_string(s.current()));
  }
}

bool single_descent_tree(const Forest& f) {
  if (f.roots().size() != 1) return false;
  const Label r = f.roots().front();
  if (descent_kind(f, r) != DescentKind::ProperDescent) return false;
  for (Label v : f.ground())
    if (v != r && descent_kind(f, v) != DescentKind::None) return false;
  return true;
}

}  // namespace

TEST_CASE("phi examples") {
  CHECK(phi(perm({3, 6, 8, 4, 1, 10, 2, 9, 7, 5})) == forest(10, {0, 1, 0, 3, 2, 3, 2, 6, 2, 1}));
  CHECK(phi(Permutation::identity(4)) == forest(4, {0, 1, 2, 3}));
  CHECK(phi(perm({4, 3, 2, 1})) == forest(4, {0, 0, 0, 0}));
  CHECK(phi_inv(forest(10, {0, 1, 0, 3, 2, 3, 2, 6, 2, 1})) == perm({3, 6, 8, 4, 1, 10, 2, 9, 7, 5}));
  CHECK_ERROR_KIND(phi_inv(forest(2, {2, 0})), NotIncreasing);
}

TEST_CASE("phi_d examples") {
  const auto a = phi_d(perm({4, 10, 7}));
  CHECK(a.roots() == std::vector<Label>{10});
  CHECK(a.children(10) == std::vector<Label>{4, 7});
  const auto b = phi_d(perm({5, 2, 6}));
  CHECK(b.roots() == std::vector<Label>{5, 6});
  CHECK(b.parent(2) == 6);
  CHECK(phi_d(perm({3})) == Forest::from_parents(std::vector<Label>{3}, std::vector<Label>{0}));
}

TEST_CASE("theta examples") {
  CHECK(theta(CycleDecomposition::ordered({{2, 1}})) == forest(2, {2, 0}));
  CHECK(theta(CycleDecomposition::ordered({{3}, {1}, {2}})) == phi(perm({3, 1, 2})));
  const auto f = theta(CycleDecomposition::ordered({{11, 4, 10, 7}, {12}, {8, 3, 1}, {9, 5, 2, 6}}));
  CHECK(height(f) == 4);
  CHECK(f.path_to(2) == std::vector<Label>{8, 9, 6, 2});
  CHECK(top_down_maxima(f) == std::vector<Label>{8, 9, 11, 12});
  CHECK(avoids(f, pats("213,312")));
  CHECK_ERROR_KIND(theta_inv(forest(3, {2, 0, 1})), NotUnimodal);
}

TEST_CASE("shallow examples") {
  const auto f = shallow(parse_set_partition("{1,3,4,5}{2,6}"));
  CHECK(f == forest(6, {0, 0, 1, 1, 1, 2}));
  CHECK(shallow(parse_set_partition("{1}{2}{3}")) == forest(3, {0, 0, 0}));
  CHECK(shallow(parse_set_partition("{1,2,3}")) == forest(3, {0, 1, 1}));
}

TEST_CASE("xi and gamma examples") {
  CHECK(xi(parse_cycles("[(2,1)(3)]")) == forest(3, {2, 0, 2}));
  CHECK(xi(parse_cycles("[(1)][(2)][(3)]")) == forest(3, {0, 0, 0}));
  CHECK(gamma(parse_ordered_set_partition("{2}{1,3}")) == forest(3, {3, 0, 2}));
  CHECK(gamma(parse_ordered_set_partition("{1}{2}{3}")) == forest(3, {0, 1, 2}));
  CHECK(all_partitioned_cycle_decomps(3).size() == 13);
  CHECK(all_ordered_set_partitions(3).size() == 13);
}

TEST_CASE("tau examples") {
  const ListPartition small({{3, 4, 1}, {2}}, {});
  CHECK(tau(small, TauVariant::Unimodal132) == forest(4, {4, 0, 0, 3}));
  CHECK(tau(ListPartition({{1, 2, 3, 4}}, {}), TauVariant::Unimodal132) == forest(4, {0, 1, 2, 3}));

  const auto lp = parse_list_partition("{11,9,12,5,3,8,15,2,6}{13,10,14,1,7,4}", {});
  const auto f = tau(lp, TauVariant::Unimodal132);
  CHECK(f.roots() == std::vector<Label>{11, 13});
  CHECK(f.children(11) == std::vector<Label>{9, 12});
  CHECK(f.children(12) == std::vector<Label>{5, 8, 15});
  CHECK(f.parent(2) == 15);
  CHECK(f.parent(3) == 5);
  CHECK(f.parent(6) == 15);
  CHECK(f.parent(8) == 12);
  CHECK(avoids(f, pats("312,213,132")));
  CHECK(tau_inv(f, TauVariant::Unimodal132) == lp);
}

TEST_CASE("rho examples") {
  const auto f = rho(perm({12, 3, 11, 2, 9, 8}));
  CHECK(f.roots() == std::vector<Label>{9});
  CHECK(f.children(9) == std::vector<Label>{2, 3});
  CHECK(f.children(3) == std::vector<Label>{8, 11, 12});
  CHECK(rho_inv(f) == perm({12, 3, 11, 2, 9, 8}));
  CHECK(rho(perm({2, 1})) == forest(2, {2, 0}));
  CHECK_ERROR_KIND(rho(perm({1, 2})), TwoAfterOne);
  CHECK_ERROR_KIND(rho(perm({3, 1, 2})), TwoAfterOne);

  int trees = 0;
  ForestStream s(4, Family::Unordered);
  while (s.next()) trees += single_descent_tree(s.current());
  CHECK(trees == 12);
}

TEST_CASE("psi examples") {
  const ListPartitionFlags rev{.ordered_blocks = true, .up_to_reverse = true};
  const auto lp = parse_list_partition("{5}{14,13}{7}{4}{15}{12,3,11,2,9,8}{6,1}{10}", rev);
  const auto f = psi(lp);
  CHECK(f.size() == 15);
  CHECK(avoids(f, pats("321,2143,3142")));
  CHECK(psi_inv(f) == lp);
  CHECK(psi(ListPartition({{3}, {1}, {2}}, rev)) == phi(perm({3, 1, 2})));

  std::set<Forest> image;
  for (const auto& x : all_list_partitions(3, rev)) image.insert(psi(x));
  CHECK(image.size() == 15);
}

TEST_CASE("alpha examples") {
  CHECK(alpha(forest(4, {0, 3, 4, 1})) == forest(4, {0, 4, 2, 1}));
  CHECK(beta_wilf(forest(4, {0, 4, 2, 1})) == forest(4, {0, 3, 4, 1}));
  CHECK(alpha(phi(perm({3, 6, 8, 4, 1, 10, 2, 9, 7, 5}))) == phi(perm({3, 6, 8, 4, 1, 10, 2, 9, 7, 5})));
  CHECK_ERROR_KIND(alpha(forest(3, {3, 1, 0})), NotInClass);  // path 3, 1, 2
  CHECK_ERROR_KIND(beta_wilf(forest(3, {2, 3, 0})), NotInClass);
}

TEST_CASE("exhaustive round trips and images, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    std::set<Forest> image;

    for_each_permutation(n, [&](const Permutation& p) {
      const auto f = phi(p);
      REQUIRE(phi_inv(f) == p);
      image.insert(f);
    });
    CHECK(image == avoiders(n, pats("21")));
    image.clear();
    for_each_permutation(n, [&](const Permutation& p) {
      const auto f = phi_d(p);
      REQUIRE(phi_d_inv(f) == p);
      image.insert(f);
    });
    CHECK(image == avoiders(n, pats("12")));
    image.clear();

    for_each_ordered_cycle_decomp(n, [&](const CycleDecomposition& cd) {
      const auto f = theta(cd);
      REQUIRE(theta_inv(f) == cd);
      image.insert(f);
    });
    CHECK(image == avoiders(n, pats("213,312")));
    image.clear();

    for_each_set_partition(n, [&](const SetPartition& sp) {
      const auto f = shallow(sp);
      REQUIRE(shallow_inv(f) == sp);
      image.insert(f);
    });
    CHECK(image == avoiders(n, pats("21,123")));
    image.clear();

    for_each_partitioned_cycle_decomp(n, [&](const CycleDecomposition& cd) {
      const auto f = xi(cd);
      REQUIRE(xi_inv(f) == cd);
      image.insert(f);
    });
    CHECK(image == avoiders(n, pats("213,312,123")));
    image.clear();

    for_each_ordered_set_partition(n, [&](const OrderedSetPartition& osp) {
      const auto f = gamma(osp);
      REQUIRE(gamma_inv(f) == osp);
      image.insert(f);
    });
    CHECK(image == avoiders(n, pats("213,312,321")));
    image.clear();

    for (TauVariant v : {TauVariant::Unimodal132, TauVariant::OneDescent}) {
      for_each_list_partition(n, {}, [&](const ListPartition& lp) {
        const auto f = tau(lp, v);
        REQUIRE(tau_inv(f, v) == lp);
        image.insert(f);
      });
      CHECK(image == avoiders(n, pats(v == TauVariant::Unimodal132 ? "312,213,132" : "321,132,213")));
      image.clear();
    }

    if (n >= 2) {
      for_each_permutation(n, [&](const Permutation& p) {
        if (p.position_of(2) > p.position_of(1)) return;
        const auto f = rho(p);
        REQUIRE(rho_inv(f) == p);
        REQUIRE(single_descent_tree(f));
        image.insert(f);
      });
      std::set<Forest> trees;
      ForestStream s(n, Family::Unordered);
      while (s.next())
        if (single_descent_tree(s.current())) trees.insert(s.current());
      CHECK(image == trees);
      image.clear();
    }

    const auto from = avoiders(n, pats("312"));
    const auto to = avoiders(n, pats("321"));
    CHECK(from.size() == to.size());
    for (const auto& f : from) {
      const auto g = alpha(f);
      REQUIRE(beta_wilf(g) == f);
      REQUIRE(shape_signature(g) == shape_signature(f));
      REQUIRE(top_down_maxima(g) == top_down_maxima(f));
      image.insert(g);
    }
    CHECK(image == to);
    image.clear();
    for (const auto& f : to) REQUIRE(alpha(beta_wilf(f)) == f);
  }
}

TEST_CASE("psi image, n <= 5") {
  const ListPartitionFlags rev{.ordered_blocks = true, .up_to_reverse = true};
  for (int n = 1; n <= 5; ++n) {
    std::set<Forest> image;
    for_each_list_partition(n, rev, [&](const ListPartition& lp) {
      const auto f = psi(lp);
      REQUIRE(psi_inv(f) == lp);
      image.insert(f);
    });
    CHECK(image == avoiders(n, pats("321,2143,3142")));
  }
}

TEST_CASE("inverses reject forests outside their class, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    check_rejects_outside(n, avoiders(n, pats("21")), [](const Forest& f) { return phi_inv(f); });
    check_rejects_outside(n, avoiders(n, pats("213,312")), [](const Forest& f) { return theta_inv(f); });
    check_rejects_outside(n, avoiders(n, pats("21,123")), [](const Forest& f) { return shallow_inv(f); });
    check_rejects_outside(n, avoiders(n, pats("213,312,123")), [](const Forest& f) { return xi_inv(f); });
    check_rejects_outside(n, avoiders(n, pats("213,312,321")), [](const Forest& f) { return gamma_inv(f); });
    check_rejects_outside(n, avoiders(n, pats("312,213,132")),
                          [](const Forest& f) { return tau_inv(f, TauVariant::Unimodal132); });
    check_rejects_outside(n, avoiders(n, pats("321,132,213")),
                          [](const Forest& f) { return tau_inv(f, TauVariant::OneDescent); });
    check_rejects_outside(n, avoiders(n, pats("321,2143,3142")), [](const Forest& f) { return psi_inv(f); });
  }
}

TEST_CASE("maps work on arbitrary grounds") {
  const auto f = theta(CycleDecomposition::ordered({{40, 10}, {70}}));
  CHECK(f.ground() == std::vector<Label>{10, 40, 70});
  CHECK(theta_inv(f) == CycleDecomposition::ordered({{40, 10}, {70}}));
}
