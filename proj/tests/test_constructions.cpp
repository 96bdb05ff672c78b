#include <doctest.h>

#include <algorithm>
#include <set>

#include "edis/canonical.hpp"
#include "edis/congruence.hpp"
#include "edis/constructions.hpp"
#include "edis/errors.hpp"
#include "edis/io.hpp"

using namespace edis;

namespace {

FiniteInverseSemigroup trivial() {
  return semigroup_from_table({{0}});
}

}  // namespace

TEST_CASE("direct product") {
  auto c2 = cyclic_group(2);
  CHECK(is_isomorphic(direct_product(trivial(), c2), c2).has_value());
  auto c2c2 = direct_product(c2, c2);
  CHECK(c2c2.order() == 4);
  CHECK(is_E_disjunctive(c2c2));
  auto i1 = symmetric_inverse_monoid(1).semigroup;
  auto p  = direct_product(i1, c2);
  CHECK(p.order() == 4);
  CHECK_FALSE(is_E_disjunctive(p));
}

TEST_CASE("adjoining identities and zeros") {
  auto c2 = cyclic_group(2);
  CHECK_FALSE(is_E_disjunctive(adjoin_identity(c2)));  // C_2 has an identity
  auto c2z = adjoin_zero(c2);
  CHECK(c2z.order() == 3);
  CHECK(is_E_disjunctive(c2z));
  CHECK_FALSE(is_E_disjunctive(adjoin_zero(c2z)));
}

TEST_CASE("zero direct unions") {
  auto c2 = cyclic_group(2);
  auto u1 = zero_direct_union({c2});
  CHECK(is_isomorphic(u1, adjoin_zero(c2)).has_value());
  auto u2 = zero_direct_union({c2, c2});
  CHECK(u2.order() == 5);
  CHECK(is_E_disjunctive(u2));
  auto u3 = zero_direct_union({adjoin_zero(c2), c2});
  CHECK_FALSE(is_E_disjunctive(u3));
  CHECK_THROWS_AS(zero_direct_union({semigroup_from_flat_table(0, {})}),
                  Error);
}

TEST_CASE("wreath product C_2 wr I_2") {
  auto res = wreath_product(cyclic_group(2), all_partial_perms(2));
  CHECK(res.semigroup.order() == 17);  // 1*1 + 4*2 + 2*4
  CHECK(is_E_disjunctive(res.semigroup));
  // the projection is a surjective homomorphism onto T = I_2
  CHECK(res.t.order() == 7);
  std::set<int> image;
  for (int a = 0; a < res.semigroup.order(); ++a) {
    image.insert(res.projection[a]);
    for (int b = 0; b < res.semigroup.order(); ++b) {
      CHECK(res.projection[res.semigroup.product(a, b)]
            == res.t.product(res.projection[a], res.projection[b]));
    }
  }
  CHECK(static_cast<int>(image.size()) == res.t.order());
}

TEST_CASE("trivial wr T is T") {
  auto res = wreath_product(trivial(), all_partial_perms(2));
  CHECK(is_isomorphic(res.semigroup, res.t).has_value());
}

TEST_CASE("wreath product requires T closed") {
  // a 2-cycle without its square
  std::vector<PartialPerm> t = {PartialPerm::from_pairs(2, {{0, 1}, {1, 0}})};
  CHECK_THROWS_AS(wreath_product(cyclic_group(2), t), TNotClosedError);
}

TEST_CASE("wreath products of zero-free E-disjunctive S are E-disjunctive") {
  // every inverse subsemigroup T of I_2, S in {C_2, C_3}
  auto i2 = all_partial_perms(2);
  int  m  = static_cast<int>(i2.size());
  std::vector<std::vector<PartialPerm>> subsemigroups;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<PartialPerm> t;
    for (int i = 0; i < m; ++i) {
      if (mask & (1 << i)) {
        t.push_back(i2[i]);
      }
    }
    bool closed = true;
    for (auto const& a : t) {
      closed = closed
               && std::find(t.begin(), t.end(), a.inverse()) != t.end();
      for (auto const& b : t) {
        closed = closed && std::find(t.begin(), t.end(), a * b) != t.end();
      }
    }
    if (closed) {
      subsemigroups.push_back(std::move(t));
    }
  }
  CHECK(subsemigroups.size() > 5);
  for (auto const& s : {cyclic_group(2), cyclic_group(3)}) {
    for (auto const& t : subsemigroups) {
      CHECK(is_E_disjunctive(wreath_product(s, t).semigroup));
    }
  }
}

TEST_CASE("symmetric inverse monoids") {
  CHECK(symmetric_inverse_monoid(0).semigroup.order() == 1);
  auto i1 = symmetric_inverse_monoid(1).semigroup;
  CHECK(i1.order() == 2);
  CHECK_FALSE(is_E_disjunctive(i1));
  auto i2 = symmetric_inverse_monoid(2).semigroup;
  CHECK(i2.order() == 7);
  CHECK(is_E_disjunctive(i2));
  CHECK(is_E_disjunctive(symmetric_inverse_monoid(3).semigroup));
  CHECK_THROWS_AS(symmetric_inverse_monoid(8), TooLargeError);
}

TEST_CASE("dual symmetric inverse monoids") {
  CHECK(dual_symmetric_inverse_monoid(1).semigroup.order() == 1);
  auto d2 = dual_symmetric_inverse_monoid(2).semigroup;
  CHECK(d2.order() == 3);  // S(2,1)^2 1! + S(2,2)^2 2! = 1 + 2
  CHECK(is_E_disjunctive(d2));
  auto d3 = dual_symmetric_inverse_monoid(3).semigroup;
  CHECK(d3.order() == 25);  // 1 + 9*2 + 6
  CHECK(is_E_disjunctive(d3));
  auto d4 = dual_symmetric_inverse_monoid(4).semigroup;
  CHECK(d4.order() == 339);  // 1 + 49*2 + 36*6 + 24
  CHECK(is_E_disjunctive(d4));
  CHECK_THROWS_AS(dual_symmetric_inverse_monoid(5), TooLargeError);
}

TEST_CASE("monogenic monoids") {
  CHECK(monogenic(2, 3).semigroup.order() == 8);   // 5 + 3
  CHECK(monogenic(1, 4).semigroup.order() == 5);   // k + 1
  CHECK(monogenic(0, 4).semigroup.order() == 5);   // S_{0,k} = S_{1,k}
  auto m32 = monogenic(3, 2).semigroup;
  CHECK(m32.order() == 16);  // 14 + 2
  CHECK(is_E_disjunctive(m32));

  // distinct parameters give non-isomorphic monoids (n, k up to 4)
  std::vector<std::pair<int, int>> params;
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= 4; ++k) {
      params.emplace_back(n, k);
    }
  }
  std::vector<std::vector<int>> canon;
  for (auto [n, k] : params) {
    canon.push_back(canonical_table(monogenic(n, k).semigroup));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    for (std::size_t j = 0; j < params.size(); ++j) {
      CHECK((canon[i] == canon[j]) == (i == j));
    }
  }
}

TEST_CASE("monogenic normal forms") {
  for (auto [n, k] : {std::pair{1, 2}, {2, 2}, {3, 2}, {2, 3}}) {
    auto forms = monogenic_normal_forms(n, k);
    CHECK(static_cast<int>(forms.size()) == n * (n + 1) * (2 * n + 1) / 6 + k);
    int idem = 0;
    for (auto const& f : forms) {
      idem += (f.kind == MonogenicNormalForm::Kind::chain) ? (f.a == f.c)
                                                           : (f.a == 0);
    }
    CHECK(idem == n * (n + 1) / 2 + 1);
    CHECK(idem == monogenic(n, k).semigroup.num_idempotents());
  }
  auto small = monogenic_normal_forms(1, 2);
  CHECK(small.size() == 3);
}

TEST_CASE("strong semilattices of groups") {
  // a single group comes back unchanged
  StrongSemilatticeSpec one;
  one.semilattice = trivial();
  one.groups      = {cyclic_group(3)};
  one.maps        = {{{0, 1, 2}}};
  CHECK(is_isomorphic(strong_semilattice_of_groups(one).semigroup,
                      cyclic_group(3))
            .has_value());

  // incoherent connecting maps are rejected
  StrongSemilatticeSpec bad;
  bad.semilattice = semigroup_from_table({{0, 0}, {0, 1}});
  bad.groups      = {cyclic_group(2), cyclic_group(2)};
  bad.maps.assign(2, std::vector<std::vector<int>>(2));
  bad.maps[0][0] = {0, 1};
  bad.maps[1][1] = {0, 1};
  bad.maps[1][0] = {0, 0, 0};  // wrong arity
  CHECK_THROWS_AS(strong_semilattice_of_groups(bad), IncoherentSpecError);
}

TEST_CASE("clifford extremal semigroups attain the idempotent bound") {
  CHECK(clifford_extremal(1).order() == 3);
  auto c3 = clifford_extremal(3);
  CHECK(c3.order() == 11);  // 2^3 + 3
  CHECK(is_E_disjunctive(c3));
  auto c4 = clifford_extremal(4);
  CHECK(c4.order() == 20);
  CHECK(is_E_disjunctive(c4));
  int kappa4 = 0;
  for (int i = 0; i < c4.order(); ++i) {
    kappa4 += !c4.is_idempotent(i);
  }
  CHECK(c4.order() == (1 << kappa4) + kappa4);
}

TEST_CASE("the minimal 11-element example") {
  auto res = minimal_example_11();
  auto const& s = res.s;
  CHECK(s.order() == 11);
  CHECK(is_E_disjunctive(s));

  int x  = res.x;
  int y  = res.y;
  int x2 = s.product(x, x);
  int x3 = s.product(x2, x);
  int xx = s.product(x, s.inverse(x));

  // presentation relations hold
  CHECK(s.product(x, y) == x2);
  CHECK(s.product(x, s.inverse(y)) == x2);
  CHECK(s.product(y, x) == x2);
  CHECK(s.product(y, s.inverse(x)) == x2);
  CHECK(s.product(s.inverse(y), s.inverse(x)) == x2);
  CHECK(s.product(y, s.inverse(y)) == xx);

  // idempotents are x^-1x, y^-1y, xx^-1, x^2
  std::set<int> expected = {s.product(s.inverse(x), x),
                            s.product(s.inverse(y), y), xx, x2};
  auto          idems    = s.idempotents();
  CHECK(std::set<int>(idems.begin(), idems.end()) == expected);
  CHECK(expected.size() == 4);

  // least right congruence over (x^3, x): non-trivial classes {x, y, x^3}
  // and {x^2, xx^-1}; idempotent-pure
  auto rho = right_congruence_closure(s, {{x3, x}});
  CHECK(is_idempotent_pure(s, rho));
  std::set<std::set<int>> nontrivial;
  for (auto const& cls : rho.classes()) {
    if (cls.size() > 1) {
      nontrivial.insert(std::set<int>(cls.begin(), cls.end()));
    }
  }
  CHECK(nontrivial == std::set<std::set<int>>{{x, y, x3}, {x2, xx}});

  // cached: a second call returns the same semigroup instantly
  auto again = minimal_example_11();
  CHECK(again.s.table() == s.table());
}
