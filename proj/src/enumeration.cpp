#include "edis/enumeration.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "edis/canonical.hpp"
#include "edis/congruence.hpp"
#include "edis/errors.hpp"

namespace edis {

namespace {

// Partial-table completer: fills unknown (-1) cells by DFS, keeping every
// fully determined triple associative after each assignment. Static per-cell
// candidate masks, a diagonal rule (non-idempotents have s*s != s), an
// optional symmetry constraint, and an optional involution link
// (a b)^-1 = b^-1 a^-1 are enforced during propagation.
class TableCompleter {
 public:
  int                        n = 0;
  std::vector<std::uint32_t> cand;       // per-cell candidate bitmask
  std::vector<int>           inv;        // involution; empty disables the link
  int                        first_non_idem = 0;  // diag rule from here on
  bool                       symmetric      = false;

  template <typename Callback>
  void run(std::vector<int> table, Callback const& emit) {
    // seed propagation over the initial assignments
    if (!propagate(table)) {
      return;
    }
    dfs(table, emit);
  }

 private:
  bool assign(std::vector<int>& t, int a, int b, int v,
              bool& changed) const {
    int& cell = t[a * n + b];
    if (cell == v) {
      return true;
    }
    if (cell != -1) {
      return false;
    }
    if (!(cand[a * n + b] & (std::uint32_t(1) << v))) {
      return false;
    }
    if (a == b && a >= first_non_idem && v == a) {
      return false;
    }
    cell    = v;
    changed = true;
    if (symmetric && !assign(t, b, a, v, changed)) {
      return false;
    }
    if (!inv.empty() && !assign(t, inv[b], inv[a], inv[v], changed)) {
      return false;
    }
    return true;
  }

  bool propagate(std::vector<int>& t) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          int ab = t[a * n + b];
          if (ab == -1) {
            continue;
          }
          for (int c = 0; c < n; ++c) {
            int bc = t[b * n + c];
            if (bc == -1) {
              continue;
            }
            int l = t[ab * n + c];
            int r = t[a * n + bc];
            if (l != -1 && r != -1) {
              if (l != r) {
                return false;
              }
            } else if (l != -1) {
              if (!assign(t, a, bc, l, changed)) {
                return false;
              }
            } else if (r != -1) {
              if (!assign(t, ab, c, r, changed)) {
                return false;
              }
            }
          }
        }
      }
    }
    return true;
  }

  template <typename Callback>
  void dfs(std::vector<int> const& t, Callback const& emit) const {
    // choose the unknown cell with fewest candidates
    int best = -1, best_count = n + 1;
    for (int i = 0; i < n * n; ++i) {
      if (t[i] != -1) {
        continue;
      }
      int count = __builtin_popcount(cand[i]);
      if (count < best_count) {
        best      = i;
        best_count = count;
      }
    }
    if (best == -1) {
      emit(t);
      return;
    }
    int a = best / n, b = best % n;
    for (int v = 0; v < n; ++v) {
      if (!(cand[best] & (std::uint32_t(1) << v))) {
        continue;
      }
      std::vector<int> copy    = t;
      bool             changed = false;
      if (!assign(copy, a, b, v, changed)) {
        continue;
      }
      if (!propagate(copy)) {
        continue;
      }
      dfs(copy, emit);
    }
  }
};

void insert_canonical(std::set<std::vector<int>>& out,
                      std::vector<int> const& flat, int n) {
  FiniteInverseSemigroup s = semigroup_from_flat_table(n, flat);
  out.insert(canonical_table(s));
}

}  // namespace

std::vector<std::vector<int>> enumerate_semilattices(int m) {
  if (m == 0) {
    return {{}};
  }
  std::set<std::vector<int>> out;
  TableCompleter             tc;
  tc.n = m;
  tc.cand.assign(static_cast<std::size_t>(m) * m, (std::uint32_t(1) << m) - 1);
  tc.symmetric      = true;
  tc.first_non_idem = m;  // everything idempotent; diag rule disabled
  std::vector<int> table(static_cast<std::size_t>(m) * m, -1);
  for (int e = 0; e < m; ++e) {
    table[e * m + e] = e;
  }
  tc.run(table, [&](std::vector<int> const& t) {
    insert_canonical(out, t, m);
  });
  return {out.begin(), out.end()};
}

namespace {

struct ExtensionSeed {
  int              n, m;
  std::vector<int> e_table;  // m x m
  std::vector<int> inv;      // full involution on n elements
  std::vector<int> d, r;     // per element; for e < m both are e
};

// candidates for cell (a, b): d(c) <= d(a) and r(c) <= r(b) in the
// semilattice order, sharpened to equality when r(a) = d(b)
void complete_seed(ExtensionSeed const& seed,
                   std::set<std::vector<int>>& out) {
  int n = seed.n, m = seed.m;
  auto eleq = [&](int e, int f) {  // e <= f in E
    return seed.e_table[e * m + f] == e;
  };
  TableCompleter tc;
  tc.n              = n;
  tc.inv            = seed.inv;
  tc.first_non_idem = m;
  tc.cand.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::uint32_t mask    = 0;
      bool          compose = seed.r[a] == seed.d[b];
      for (int c = 0; c < n; ++c) {
        bool ok = compose ? (seed.d[c] == seed.d[a] && seed.r[c] == seed.r[b])
                          : (eleq(seed.d[c], seed.d[a])
                             && eleq(seed.r[c], seed.r[b]));
        if (ok) {
          mask |= std::uint32_t(1) << c;
        }
      }
      tc.cand[a * n + b] = mask;
    }
  }

  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int e = 0; e < m; ++e) {
    for (int f = 0; f < m; ++f) {
      table[e * n + f] = seed.e_table[e * m + f];
    }
  }
  bool seed_ok = true;
  auto force   = [&](int a, int b, int v) {
    int& cell = table[a * n + b];
    if (cell != -1 && cell != v) {
      seed_ok = false;
    }
    if (!(tc.cand[a * n + b] & (std::uint32_t(1) << v))) {
      seed_ok = false;
    }
    cell = v;
  };
  for (int s = m; s < n; ++s) {
    force(s, seed.inv[s], seed.d[s]);   // s s^-1 = d(s)
    force(seed.inv[s], s, seed.r[s]);   // s^-1 s = r(s)
    force(seed.d[s], s, s);             // d(s) s = s
    force(s, seed.r[s], s);             // s r(s) = s
  }
  if (!seed_ok) {
    return;
  }
  tc.run(table, [&](std::vector<int> const& t) {
    // every completion is associative with the fixed involution as
    // inverse; validation also asserts that
    insert_canonical(out, t, n);
  });
}

std::vector<ExtensionSeed> build_seeds(int n) {
  std::vector<ExtensionSeed> seeds;
  for (int m = 1; m < n; ++m) {
    int kappa = n - m;
    for (auto const& e_table : enumerate_semilattices(m)) {
      for (int p = 0; 2 * p <= kappa; ++p) {
        ExtensionSeed base;
        base.n       = n;
        base.m       = m;
        base.e_table = e_table;
        base.inv.resize(n);
        for (int e = 0; e < m; ++e) {
          base.inv[e] = e;
        }
        for (int i = 0; i < p; ++i) {
          base.inv[m + 2 * i]     = m + 2 * i + 1;
          base.inv[m + 2 * i + 1] = m + 2 * i;
        }
        for (int s = m + 2 * p; s < n; ++s) {
          base.inv[s] = s;
        }
        // d/r assignments: free (d, r) per inverse pair, d = r per
        // self-inverse element
        int slots = p + (kappa - 2 * p);
        std::vector<int> choice(slots, 0);
        auto limit = [&](int i) {
          return (i < p) ? m * m : m;
        };
        while (true) {
          ExtensionSeed seed = base;
          seed.d.assign(n, 0);
          seed.r.assign(n, 0);
          for (int e = 0; e < m; ++e) {
            seed.d[e] = seed.r[e] = e;
          }
          for (int i = 0; i < p; ++i) {
            int s           = m + 2 * i;
            seed.d[s]       = choice[i] / m;
            seed.r[s]       = choice[i] % m;
            seed.d[s + 1]   = seed.r[s];
            seed.r[s + 1]   = seed.d[s];
          }
          for (int i = p; i < slots; ++i) {
            int s     = m + 2 * p + (i - p);
            seed.d[s] = seed.r[s] = choice[i];
          }
          seeds.push_back(std::move(seed));
          int pos = slots - 1;
          while (pos >= 0 && choice[pos] == limit(pos) - 1) {
            choice[pos] = 0;
            --pos;
          }
          if (pos < 0) {
            break;
          }
          ++choice[pos];
        }
      }
    }
  }
  return seeds;
}

}  // namespace

std::vector<std::vector<int>> enumerate_inverse_semigroups(int n, int jobs) {
  if (n < 0 || n > 6) {
    throw TooLargeError("enumerate_inverse_semigroups: n must be <= 6");
  }
  if (n == 0) {
    return {{}};
  }
  std::set<std::vector<int>> out;
  for (auto const& t : enumerate_semilattices(n)) {
    insert_canonical(out, t, n);
  }
  std::vector<ExtensionSeed> seeds = build_seeds(n);
  if (jobs <= 1) {
    for (auto const& seed : seeds) {
      complete_seed(seed, out);
    }
  } else {
    int workers = std::min<int>(jobs, static_cast<int>(seeds.size()));
    std::vector<std::future<std::set<std::vector<int>>>> futures;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < workers; ++w) {
      futures.push_back(std::async(std::launch::async, [&]() {
        std::set<std::vector<int>> local;
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= seeds.size()) {
            break;
          }
          complete_seed(seeds[i], local);
        }
        return local;
      }));
    }
    for (auto& f : futures) {
      auto local = f.get();
      out.insert(local.begin(), local.end());
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<int>> enumerate_inverse_semigroups_brute(int n) {
  if (n < 0 || n > 5) {
    throw TooLargeError("brute enumeration: n must be <= 5");
  }
  if (n == 0) {
    return {{}};
  }
  std::set<std::vector<int>> out;
  TableCompleter             tc;
  tc.n = n;
  tc.cand.assign(static_cast<std::size_t>(n) * n, (std::uint32_t(1) << n) - 1);
  tc.first_non_idem = n;  // no diagonal rule; idempotents float freely
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  tc.run(table, [&](std::vector<int> const& t) {
    try {
      insert_canonical(out, t, n);
    } catch (NotInverseError const&) {
      // associative but not inverse; skip
    }
  });
  return {out.begin(), out.end()};
}

CensusRow classify_order(int n, int jobs) {
  CensusRow row{n, 0, 0, 0, 0};
  for (auto const& t : enumerate_inverse_semigroups(n, jobs)) {
    FiniteInverseSemigroup s = semigroup_from_flat_table(n, t);
    ++row.total;
    bool semilattice = s.is_semilattice();
    if (is_E_unitary(s) && !semilattice) {
      ++row.e_unitary_non_semilattice;
    }
    if (is_E_disjunctive(s)) {
      ++row.e_disjunctive;
      if (s.has_identity()) {
        ++row.e_disjunctive_monoids;
      }
    }
  }
  return row;
}

MonogenicCensus monogenic_census(std::int64_t m) {
  if (m < 2) {
    throw Error("monogenic_census: max size must be >= 2");
  }
  MonogenicCensus c{m, 0, 0, 0.0};
  for (std::int64_t n = 1;; ++n) {
    std::int64_t chain = n * (n + 1) * (2 * n + 1) / 6;
    if (chain + 1 > m) {
      break;
    }
    std::int64_t ks = m - chain;  // k ranges over 1..ks
    c.total += ks;
    // S_{n,k} is E-disjunctive exactly when n > k (see the census columns:
    // S_{1,k} = C_k with an identity adjoined is never E-disjunctive)
    if (n >= 2) {
      c.e_disjunctive += std::min<std::int64_t>(n - 1, ks);
    }
  }
  c.proportion = static_cast<double>(c.e_disjunctive)
                 / static_cast<double>(c.total);
  return c;
}

}  // namespace edis
