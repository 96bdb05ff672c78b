#include "edis/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "edis/errors.hpp"

namespace edis {

namespace {

// Invariant colouring: initial profile per element, refined by the products
// against the current colour classes until the class count is stable. Colour
// ids are assigned by sorted profile, so they are isomorphism-invariant.
std::vector<int> invariant_colouring(FiniteInverseSemigroup const& s) {
  int n = s.order();
  if (n == 0) {
    return {};
  }
  GreenData g = green_data(s);

  std::vector<int> rsize(g.r.num_classes(), 0), lsize(g.l.num_classes(), 0),
      dsize(g.d.num_classes(), 0);
  for (int i = 0; i < n; ++i) {
    ++rsize[g.r.class_of(i)];
    ++lsize[g.l.class_of(i)];
    ++dsize[g.d.class_of(i)];
  }

  using Profile = std::vector<std::int64_t>;
  std::vector<Profile> prof(n);
  for (int i = 0; i < n; ++i) {
    int down = 0;
    for (int b = 0; b < n; ++b) {
      down += s.natural_leq(b, i);
    }
    // index and period of the cyclic subsemigroup generated by i
    int idx = 0, per = 0;
    {
      std::vector<int> seen(n, -1);
      int              x = i, step = 0;
      while (seen[x] == -1) {
        seen[x] = step++;
        x       = s.product(x, i);
      }
      idx = seen[x];
      per = step - seen[x];
    }
    prof[i] = {s.is_idempotent(i),
               g.h[i],
               down,
               rsize[g.r.class_of(i)],
               lsize[g.l.class_of(i)],
               dsize[g.d.class_of(i)],
               idx,
               per,
               s.is_idempotent(s.product(i, i))};
  }

  auto compress = [&](std::vector<Profile> const& p) {
    std::vector<Profile> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colour(n);
    for (int i = 0; i < n; ++i) {
      colour[i] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), p[i])
          - sorted.begin());
    }
    return std::make_pair(colour, static_cast<int>(sorted.size()));
  };

  auto [colour, k] = compress(prof);
  while (k < n) {
    std::vector<Profile> next(n);
    for (int i = 0; i < n; ++i) {
      Profile                                    p = {colour[i]};
      std::vector<std::pair<std::int64_t, std::int64_t>> mult;
      mult.reserve(n);
      for (int j = 0; j < n; ++j) {
        mult.emplace_back(
            static_cast<std::int64_t>(colour[j]) * k + colour[s.product(i, j)],
            static_cast<std::int64_t>(colour[j]) * k + colour[s.product(j, i)]);
      }
      std::sort(mult.begin(), mult.end());
      for (auto const& [a, b] : mult) {
        p.push_back(a);
        p.push_back(b);
      }
      next[i] = std::move(p);
    }
    auto [ncolour, nk] = compress(next);
    if (nk == k) {
      colour = ncolour;
      break;
    }
    colour = ncolour;
    k      = nk;
  }
  return colour;
}

}  // namespace

CanonicalForm canonical_form(FiniteInverseSemigroup const& s) {
  int n = s.order();
  if (n == 0) {
    return {{}, {}};
  }
  std::vector<int> colour = invariant_colouring(s);
  int num_colours = 1 + *std::max_element(colour.begin(), colour.end());

  // elements grouped by colour; labels are assigned colour-block by
  // colour-block, so candidate bijections permute within blocks only
  std::vector<std::vector<int>> blocks(num_colours);
  for (int i = 0; i < n; ++i) {
    blocks[colour[i]].push_back(i);
  }

  std::uint64_t count = 1;
  for (auto const& b : blocks) {
    for (std::uint64_t f = 2; f <= b.size(); ++f) {
      count *= f;
      if (count > 100000000ULL) {
        throw TooLargeError("canonical_form: colour classes too symmetric");
      }
    }
  }

  std::vector<int> best_table;
  std::vector<int> best_relabel;
  std::vector<int> relabel(n);  // relabel[old] = new
  std::vector<int> position(n);  // new -> old

  // iterate over all block-respecting bijections via per-block permutations
  std::vector<std::vector<int>> perm(num_colours);
  for (int c = 0; c < num_colours; ++c) {
    perm[c].resize(blocks[c].size());
    for (std::size_t i = 0; i < blocks[c].size(); ++i) {
      perm[c][i] = static_cast<int>(i);
    }
  }

  std::vector<int> cand(static_cast<std::size_t>(n) * n);
  while (true) {
    int next = 0;
    for (int c = 0; c < num_colours; ++c) {
      for (std::size_t i = 0; i < blocks[c].size(); ++i) {
        int old          = blocks[c][perm[c][i]];
        relabel[old]     = next;
        position[next++] = old;
      }
    }
    bool better = best_table.empty();
    bool worse  = false;
    for (int a = 0; a < n && !worse; ++a) {
      for (int b = 0; b < n; ++b) {
        int v = relabel[s.product(position[a], position[b])];
        cand[a * n + b] = v;
        if (!better) {
          int bv = best_table[a * n + b];
          if (v < bv) {
            better = true;
          } else if (v > bv) {
            worse = true;
            break;
          }
        }
      }
    }
    if (better && !worse) {
      best_table   = cand;
      best_relabel = relabel;
    }
    // advance the odometer of per-block permutations
    int c = num_colours - 1;
    while (c >= 0 && !std::next_permutation(perm[c].begin(), perm[c].end())) {
      --c;
    }
    if (c < 0) {
      break;
    }
  }
  return {std::move(best_table), std::move(best_relabel)};
}

std::vector<int> canonical_table(FiniteInverseSemigroup const& s) {
  return canonical_form(s).table;
}

std::optional<std::vector<int>>
is_isomorphic(FiniteInverseSemigroup const& s1,
              FiniteInverseSemigroup const& s2) {
  if (s1.order() != s2.order()) {
    return std::nullopt;
  }
  if (s1.num_idempotents() != s2.num_idempotents()) {
    return std::nullopt;
  }
  CanonicalForm c1 = canonical_form(s1);
  CanonicalForm c2 = canonical_form(s2);
  if (c1.table != c2.table) {
    return std::nullopt;
  }
  // sigma = relabel2^-1 o relabel1
  int              n = s1.order();
  std::vector<int> inv2(n);
  for (int i = 0; i < n; ++i) {
    inv2[c2.relabel[i]] = i;
  }
  std::vector<int> iso(n);
  for (int i = 0; i < n; ++i) {
    iso[i] = inv2[c1.relabel[i]];
  }
  return iso;
}

}  // namespace edis
