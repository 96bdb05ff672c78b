#include <doctest.h>

#include <random>

#include "edis/errors.hpp"
#include "edis/partial_perm.hpp"
#include "edis/partition.hpp"

using namespace edis;

namespace {

PartialPerm random_pperm(std::mt19937_64& rng, int deg) {
  std::vector<int> points(deg);
  for (int i = 0; i < deg; ++i) {
    points[i] = i;
  }
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<int>                   im(deg, PartialPerm::UNDEFINED);
  std::uniform_int_distribution<int> keep(0, deg);
  int                                k = keep(rng);
  std::vector<int> targets = points;
  std::shuffle(targets.begin(), targets.end(), rng);
  for (int i = 0; i < k; ++i) {
    im[points[i]] = targets[i];
  }
  return PartialPerm(deg, im);
}

// |I_n| = sum_k C(n,k)^2 k!
long long symmetric_inverse_order(int n) {
  auto binom = [](int a, int b) {
    long long r = 1;
    for (int i = 0; i < b; ++i) {
      r = r * (a - i) / (i + 1);
    }
    return r;
  };
  long long total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      fact *= k;
    }
    total += binom(n, k) * binom(n, k) * fact;
  }
  return total;
}

}  // namespace

TEST_CASE("partial perm composition is associative") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    int         deg = 1 + static_cast<int>(rng() % 6);
    PartialPerm f = random_pperm(rng, deg), g = random_pperm(rng, deg),
                h = random_pperm(rng, deg);
    CHECK((f * g) * h == f * (g * h));
  }
}

TEST_CASE("partial perm inverse laws") {
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 200; ++trial) {
    int         deg = 1 + static_cast<int>(rng() % 6);
    PartialPerm f   = random_pperm(rng, deg);
    CHECK(f * f.inverse() * f == f);
    CHECK(f.inverse() * f * f.inverse() == f.inverse());
    CHECK((f * f.inverse()).is_idempotent());
  }
}

TEST_CASE("partial perm text format round-trips") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    PartialPerm f = random_pperm(rng, 1 + static_cast<int>(rng() % 7));
    CHECK(PartialPerm::parse(f.to_string()) == f);
  }
  CHECK(PartialPerm::parse("deg 3; 0->1 2->0")
        == PartialPerm::from_pairs(3, {{0, 1}, {2, 0}}));
  CHECK(PartialPerm::parse("deg 2;") == PartialPerm(2));
  CHECK_THROWS_AS(PartialPerm::parse("deg 2; 0->0 1->0"), ParseError);
  CHECK_THROWS_AS(PartialPerm::parse("3; 0->1"), ParseError);
}

TEST_CASE("partition text format round-trips") {
  edis::Partition p = edis::Partition::parse("0 1 0 2 1");
  CHECK(p.num_classes() == 3);
  CHECK(p.same(0, 2));
  CHECK(p.same(1, 4));
  CHECK_FALSE(p.same(0, 3));
  CHECK(edis::Partition::parse(p.to_string()) == p);
  CHECK(edis::Partition::parse("").size() == 0);
  CHECK_THROWS_AS(edis::Partition::parse("0 x 1"), ParseError);
  // ids are renumbered by first occurrence
  CHECK(edis::Partition::parse("5 5 2") == edis::Partition::parse("0 0 1"));
}

TEST_CASE("all_partial_perms matches the I_n order formula") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(static_cast<long long>(all_partial_perms(n).size())
          == symmetric_inverse_order(n));
  }
  CHECK(all_partial_perms(2).size() == 7);
}
