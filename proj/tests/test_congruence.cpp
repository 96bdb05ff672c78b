#include <doctest.h>

#include <algorithm>
#include <set>

#include "edis/canonical.hpp"
#include "edis/congruence.hpp"
#include "edis/constructions.hpp"
#include "edis/enumeration.hpp"
#include "edis/errors.hpp"
#include "edis/io.hpp"

using namespace edis;

namespace {

FiniteInverseSemigroup two_chain() {
  return semigroup_from_table({{0, 0}, {0, 1}});
}

// direct pairwise definition of the syntactic congruence, as an oracle
Partition oracle_syntactic(FiniteInverseSemigroup const& s) {
  int              n = s.order();
  auto             related = [&](int x, int y) {
    for (int alpha = 0; alpha <= n; ++alpha) {
      for (int beta = 0; beta <= n; ++beta) {
        int ax = (alpha == n) ? x : s.product(alpha, x);
        int ay = (alpha == n) ? y : s.product(alpha, y);
        int axb = (beta == n) ? ax : s.product(ax, beta);
        int ayb = (beta == n) ? ay : s.product(ay, beta);
        if (s.is_idempotent(axb) != s.is_idempotent(ayb)) {
          return false;
        }
      }
    }
    return true;
  };
  std::vector<int> labels(n, -1);
  int              next = 0;
  for (int x = 0; x < n; ++x) {
    if (labels[x] != -1) {
      continue;
    }
    labels[x] = next;
    for (int y = x + 1; y < n; ++y) {
      if (labels[y] == -1 && related(x, y)) {
        labels[y] = next;
      }
    }
    ++next;
  }
  return Partition::from_labels(labels);
}

}  // namespace

TEST_CASE("congruence closure") {
  auto chain = two_chain();
  CHECK(congruence_closure(chain, {}).is_trivial());
  CHECK(congruence_closure(chain, {{0, 1}}).is_universal());

  auto g = cyclic_group(2);
  CHECK(right_congruence_closure(g, {}).is_trivial());
  CHECK(right_congruence_closure(g, {{1, 0}}).is_universal());
}

TEST_CASE("quotient") {
  auto s22 = monogenic(2, 2).semigroup;
  auto q   = quotient(s22, Partition(s22.order()));
  CHECK(is_isomorphic(q.semigroup, s22).has_value());

  auto chain = two_chain();
  CHECK(quotient(chain, congruence_closure(chain, {{0, 1}})).semigroup.order()
        == 1);

  // S_{2,2} is E-unitary, so its maximum E-disjunctive image is its maximum
  // group image C_2 (the order-3 monogenic image is a strictly smaller
  // idempotent-pure quotient)
  auto maxq = max_E_disjunctive_quotient(s22);
  CHECK(maxq.semigroup.order() == 2);
  CHECK(is_isomorphic(maxq.semigroup, cyclic_group(2)).has_value());
  CHECK(is_E_unitary(s22));

  // the order-3 monogenic image arises from a smaller idempotent-pure
  // congruence, generated by identifying x x^-1 with x^-1 x
  {
    auto m22 = monogenic(2, 2);
    auto const& s = m22.semigroup;
    int x  = m22.generator;
    auto rho = congruence_closure(
        s, {{s.product(x, s.inverse(x)), s.product(s.inverse(x), x)}});
    CHECK(is_idempotent_pure(s, rho));
    CHECK(rho.num_classes() == 3);
    CHECK(is_isomorphic(quotient(s, rho).semigroup,
                        monogenic(1, 2).semigroup)
              .has_value());
    CHECK(rho.refines(syntactic_congruence(s)));
  }

  // a non-congruence is rejected with a witness: on C_3, relating the
  // identity to a generator without its square
  auto c3  = cyclic_group(3);
  auto bad = Partition::from_labels({0, 0, 1});
  CHECK_FALSE(is_congruence(c3, bad));
  CHECK_THROWS_AS(quotient(c3, bad), NotACongruenceError);
  try {
    quotient(c3, bad);
  } catch (NotACongruenceError const& e) {
    CHECK(bad.same(e.a, e.b));
    int pa = e.left ? c3.product(e.multiplier, e.a)
                    : c3.product(e.a, e.multiplier);
    int pb = e.left ? c3.product(e.multiplier, e.b)
                    : c3.product(e.b, e.multiplier);
    CHECK_FALSE(bad.same(pa, pb));
  }
}

TEST_CASE("idempotent purity") {
  auto chain = two_chain();
  CHECK(is_idempotent_pure(chain, Partition(2)));
  CHECK(is_idempotent_pure(chain, congruence_closure(chain, {{0, 1}})));

  auto g = cyclic_group(2);
  CHECK_FALSE(is_idempotent_pure(g, congruence_closure(g, {{0, 1}})));
}

TEST_CASE("kernel and trace") {
  auto s22 = monogenic(2, 2).semigroup;
  auto kt  = kernel_trace(s22, Partition(s22.order()));
  CHECK(kt.kernel == s22.idempotents());
  CHECK(kt.trace.is_trivial());

  // syntactic congruence of monogenic(2,2): kernel is exactly E(S), the
  // congruence is non-trivial, and the trace is universal on E (the maximum
  // E-disjunctive image is the group C_2, merging all four idempotents)
  Partition rho = syntactic_congruence(s22);
  CHECK_FALSE(rho.is_trivial());
  auto kt2 = kernel_trace(s22, rho);
  CHECK(kt2.kernel == s22.idempotents());
  CHECK(kt2.trace.is_universal());
  // idempotent-pure quotients have kernel exactly E(S)
  CHECK(is_idempotent_pure(s22, rho));
}

TEST_CASE("syntactic congruence against the pairwise oracle") {
  std::vector<FiniteInverseSemigroup> family;
  family.push_back(cyclic_group(3));
  family.push_back(cyclic_group(4));
  family.push_back(two_chain());
  family.push_back(monogenic(2, 2).semigroup);
  family.push_back(symmetric_inverse_monoid(2).semigroup);
  for (int n = 1; n <= 5; ++n) {
    for (auto const& t : enumerate_inverse_semigroups(n)) {
      family.push_back(semigroup_from_flat_table(n, t));
    }
  }
  for (auto const& s : family) {
    CHECK(syntactic_congruence(s) == oracle_syntactic(s));
  }
  // any group: equality; any semilattice: universal
  CHECK(syntactic_congruence(cyclic_group(5)).is_trivial());
  CHECK(syntactic_congruence(two_chain()).is_universal());
}

TEST_CASE("E-unitarity coincides with purity of the minimum group"
          " congruence") {
  for (int n = 1; n <= 5; ++n) {
    for (auto const& t : enumerate_inverse_semigroups(n)) {
      auto s = semigroup_from_flat_table(n, t);
      // the minimum group congruence identifies all idempotents
      std::vector<std::pair<int, int>> pairs;
      auto idems = s.idempotents();
      for (std::size_t i = 1; i < idems.size(); ++i) {
        pairs.emplace_back(idems[0], idems[i]);
      }
      auto sigma = congruence_closure(s, pairs);
      CHECK(quotient(s, sigma).semigroup.is_group());
      CHECK(is_idempotent_pure(s, sigma) == is_E_unitary(s));
    }
  }
}

TEST_CASE("E-disjunctivity decisions") {
  CHECK(is_E_disjunctive(symmetric_inverse_monoid(2).semigroup));
  CHECK_FALSE(is_E_disjunctive(symmetric_inverse_monoid(1).semigroup));
  CHECK(is_E_disjunctive(monogenic(2, 1).semigroup));
  CHECK_FALSE(is_E_disjunctive(monogenic(2, 2).semigroup));
  CHECK(is_E_disjunctive(semigroup_from_table({{0}})));
  CHECK(is_E_disjunctive(semigroup_from_flat_table(0, {})));
}

TEST_CASE("E-unitarity") {
  CHECK(is_E_unitary(cyclic_group(4)));
  CHECK(is_E_unitary(two_chain()));
  CHECK_FALSE(is_E_unitary(symmetric_inverse_monoid(2).semigroup));
}

TEST_CASE("syntactic preorder") {
  // on an E-disjunctive input it is the natural partial order
  for (auto const& s : {symmetric_inverse_monoid(2).semigroup,
                        monogenic(2, 1).semigroup, cyclic_group(3)}) {
    auto rel = syntactic_preorder(s);
    for (int a = 0; a < s.order(); ++a) {
      for (int b = 0; b < s.order(); ++b) {
        CHECK(static_cast<bool>(rel[a * s.order() + b])
              == s.natural_leq(a, b));
      }
    }
  }
  // always reflexive and transitive
  for (int n = 1; n <= 4; ++n) {
    for (auto const& t : enumerate_inverse_semigroups(n)) {
      auto s   = semigroup_from_flat_table(n, t);
      auto rel = syntactic_preorder(s);
      for (int a = 0; a < n; ++a) {
        CHECK(rel[a * n + a]);
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) {
            if (rel[a * n + b] && rel[b * n + c]) {
              CHECK(rel[a * n + c]);
            }
          }
        }
      }
    }
  }
  // separation witness: on the 2-chain the preorder is universal while the
  // natural order is not
  auto chain = two_chain();
  auto rel   = syntactic_preorder(chain);
  CHECK(rel == std::vector<char>(4, 1));
  CHECK_FALSE(chain.natural_leq(1, 0));
}

TEST_CASE("the maximum quotient of an E-disjunctive semigroup is itself") {
  auto i2 = symmetric_inverse_monoid(2).semigroup;
  auto q  = max_E_disjunctive_quotient(i2);
  CHECK(q.semigroup.order() == i2.order());
  for (int a = 0; a < i2.order(); ++a) {
    CHECK(q.hom[a] == a);  // the identity map, classes in element order
  }
}

TEST_CASE("readouts, N(S) and phi_S") {
  auto g = cyclic_group(3);
  CHECK(n_set(g) == std::vector<int>{0});  // the identity
  CHECK(phi_S(g, 0) == std::vector<int>{0});
  CHECK_THROWS_AS(readout(g, 1), Error);
  CHECK(n_set(semigroup_from_table({{0}})).empty());

  auto clifford = clifford_extremal(3);
  CHECK(n_set(clifford).size() == 3);
  std::set<std::vector<int>> images;
  for (int e : clifford.idempotents()) {
    images.insert(phi_S(clifford, e));
  }
  CHECK(images.size() == 8);  // injective on all idempotents

  // readouts of distinct idempotents differ on every E-disjunctive
  // semigroup of order <= 5
  for (int n = 1; n <= 5; ++n) {
    for (auto const& t : enumerate_inverse_semigroups(n)) {
      auto s = semigroup_from_flat_table(n, t);
      if (!is_E_disjunctive(s)) {
        continue;
      }
      for (int e : s.idempotents()) {
        for (int f : s.idempotents()) {
          CHECK((readout(s, e) == readout(s, f)) == (e == f));
        }
      }
    }
  }
  auto i2 = symmetric_inverse_monoid(2).semigroup;
  for (int e : i2.idempotents()) {
    for (int f : i2.idempotents()) {
      if (e != f) {
        CHECK_FALSE(readout(i2, e) == readout(i2, f));
      }
    }
  }
}

TEST_CASE("phi_S injective does not imply E-disjunctive") {
  // strong semilattice C_2 -> C_2 over a 2-chain with the identity map
  StrongSemilatticeSpec spec;
  spec.semilattice = two_chain();
  spec.groups      = {cyclic_group(2), cyclic_group(2)};
  spec.maps.assign(2, std::vector<std::vector<int>>(2));
  spec.maps[0][0] = {0, 1};
  spec.maps[1][1] = {0, 1};
  spec.maps[1][0] = {0, 1};  // identity structure map downwards
  auto s = strong_semilattice_of_groups(spec).semigroup;
  CHECK(s.order() == 4);
  CHECK_FALSE(is_E_disjunctive(s));
  std::set<std::vector<int>> images;
  for (int e : s.idempotents()) {
    images.insert(phi_S(s, e));
  }
  CHECK(images.size() == s.idempotents().size());
}

TEST_CASE("compatibility relation") {
  auto g    = cyclic_group(3);
  auto comp = compatibility_relation(g);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      CHECK(static_cast<bool>(comp[a * 3 + b]) == (a == b));
    }
  }
  auto chain = two_chain();
  CHECK(compatibility_relation(chain) == std::vector<char>(4, 1));
}

TEST_CASE("idempotent-pure congruences sit below the syntactic congruence") {
  for (int n = 1; n <= 4; ++n) {
    for (auto const& t : enumerate_inverse_semigroups(n)) {
      auto s   = semigroup_from_flat_table(n, t);
      auto syn = syntactic_congruence(s);
      auto comp = compatibility_relation(s);
      for (auto const& rho : all_congruences(s)) {
        if (is_idempotent_pure(s, rho)) {
          CHECK(rho.refines(syn));
          for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
              if (rho.same(a, b)) {
                CHECK(comp[a * n + b]);
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("identity and zero readout patterns on E-disjunctive semigroups") {
  // pattern(e) over S^1 x S^1: alpha e beta idempotent. On an E-disjunctive
  // semigroup, matching the pattern of the (formal) identity forces e to be
  // the identity; an all-idempotent pattern forces e to be the zero.
  for (int n = 1; n <= 5; ++n) {
    for (auto const& t : enumerate_inverse_semigroups(n)) {
      auto s = semigroup_from_flat_table(n, t);
      if (!is_E_disjunctive(s)) {
        continue;
      }
      for (int e = 0; e < n; ++e) {
        bool identity_pattern = true;
        bool zero_pattern     = true;
        for (int alpha = 0; alpha <= n; ++alpha) {
          for (int beta = 0; beta <= n; ++beta) {
            int ae = (alpha == n) ? e : s.product(alpha, e);
            int aeb = (beta == n) ? ae : s.product(ae, beta);
            bool lhs = s.is_idempotent(aeb);
            zero_pattern = zero_pattern && lhs;
            bool rhs;  // alpha beta idempotent in S^1
            if (alpha == n && beta == n) {
              rhs = true;
            } else if (alpha == n) {
              rhs = s.is_idempotent(beta);
            } else if (beta == n) {
              rhs = s.is_idempotent(alpha);
            } else {
              rhs = s.is_idempotent(s.product(alpha, beta));
            }
            identity_pattern = identity_pattern && (lhs == rhs);
          }
        }
        if (identity_pattern) {
          CHECK(s.identity_element() == e);
        }
        if (zero_pattern) {
          CHECK(s.zero_element() == e);
        }
      }
    }
  }
}

TEST_CASE("maximum image is a group exactly for E-unitary inputs") {
  for (int n = 1; n <= 5; ++n) {
    for (auto const& t : enumerate_inverse_semigroups(n)) {
      auto s = semigroup_from_flat_table(n, t);
      CHECK(max_E_disjunctive_quotient(s).semigroup.is_group()
            == is_E_unitary(s));
    }
  }
}

TEST_CASE("non-E-disjunctive semigroups have an idempotent-pure congruence"
          " merging idempotents") {
  // contrapositive of the kernel-trace lemma, on orders <= 5
  for (int n = 1; n <= 5; ++n) {
    for (auto const& t : enumerate_inverse_semigroups(n)) {
      auto s = semigroup_from_flat_table(n, t);
      if (!is_E_disjunctive(s)) {
        auto kt = kernel_trace(s, syntactic_congruence(s));
        CHECK_FALSE(kt.trace.is_trivial());
      }
    }
  }
}
