#include "edis/congruence.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "edis/errors.hpp"

namespace edis {

namespace {

Partition saturate(FiniteInverseSemigroup const& s,
                   std::vector<std::pair<int, int>> const& pairs,
                   bool both_sides) {
  int       n = s.order();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> work;
  for (auto [a, b] : pairs) {
    if (uf.unite(a, b)) {
      work.emplace_back(a, b);
    }
  }
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    for (int x = 0; x < n; ++x) {
      int ra = s.product(a, x), rb = s.product(b, x);
      if (uf.unite(ra, rb)) {
        work.emplace_back(ra, rb);
      }
      if (both_sides) {
        int la = s.product(x, a), lb = s.product(x, b);
        if (uf.unite(la, lb)) {
          work.emplace_back(la, lb);
        }
      }
    }
  }
  return uf.to_partition();
}

}  // namespace

Partition congruence_closure(FiniteInverseSemigroup const& s,
                             std::vector<std::pair<int, int>> const& pairs) {
  return saturate(s, pairs, true);
}

Partition
right_congruence_closure(FiniteInverseSemigroup const& s,
                         std::vector<std::pair<int, int>> const& pairs) {
  return saturate(s, pairs, false);
}

bool is_congruence(FiniteInverseSemigroup const& s, Partition const& rho) {
  int n = s.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!rho.same(a, b)) {
        continue;
      }
      for (int x = 0; x < n; ++x) {
        if (!rho.same(s.product(a, x), s.product(b, x))
            || !rho.same(s.product(x, a), s.product(x, b))) {
          return false;
        }
      }
    }
  }
  return true;
}

QuotientResult quotient(FiniteInverseSemigroup const& s, Partition const& rho) {
  int n = s.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!rho.same(a, b)) {
        continue;
      }
      for (int x = 0; x < n; ++x) {
        if (!rho.same(s.product(x, a), s.product(x, b))) {
          throw NotACongruenceError(a, b, x, true);
        }
        if (!rho.same(s.product(a, x), s.product(b, x))) {
          throw NotACongruenceError(a, b, x, false);
        }
      }
    }
  }
  int              m = rho.num_classes();
  std::vector<int> rep(m, -1);
  for (int i = 0; i < n; ++i) {
    if (rep[rho.class_of(i)] == -1) {
      rep[rho.class_of(i)] = i;
    }
  }
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      table[a * m + b] = rho.class_of(s.product(rep[a], rep[b]));
    }
  }
  QuotientResult res;
  res.semigroup = semigroup_from_flat_table(m, std::move(table));
  res.hom.resize(n);
  for (int i = 0; i < n; ++i) {
    res.hom[i] = rho.class_of(i);
  }
  return res;
}

bool is_idempotent_pure(FiniteInverseSemigroup const& s, Partition const& rho) {
  std::vector<int> has_idem(rho.num_classes(), -1);
  std::vector<int> has_non(rho.num_classes(), -1);
  for (int i = 0; i < s.order(); ++i) {
    (s.is_idempotent(i) ? has_idem : has_non)[rho.class_of(i)] = i;
  }
  for (int c = 0; c < rho.num_classes(); ++c) {
    if (has_idem[c] != -1 && has_non[c] != -1) {
      return false;
    }
  }
  return true;
}

KernelTrace kernel_trace(FiniteInverseSemigroup const& s,
                         Partition const& rho) {
  KernelTrace       kt;
  std::vector<char> class_has_idem(rho.num_classes(), 0);
  for (int i = 0; i < s.order(); ++i) {
    if (s.is_idempotent(i)) {
      class_has_idem[rho.class_of(i)] = 1;
      kt.idempotents.push_back(i);
    }
  }
  for (int i = 0; i < s.order(); ++i) {
    if (class_has_idem[rho.class_of(i)]) {
      kt.kernel.push_back(i);
    }
  }
  std::vector<int> labels;
  labels.reserve(kt.idempotents.size());
  for (int e : kt.idempotents) {
    labels.push_back(rho.class_of(e));
  }
  kt.trace = Partition::from_labels(labels);
  return kt;
}

SyntacticData::SyntacticData(FiniteInverseSemigroup const& s)
    : order_(s.order()),
      row_words_((static_cast<std::size_t>(order_ + 1) * (order_ + 1) + 63)
                 / 64) {
  int n = order_;
  words_.assign(static_cast<std::size_t>(n) * row_words_, 0);
  // alpha, beta in S^1 indexed 0..n, with n the formal identity
  for (int x = 0; x < n; ++x) {
    std::uint64_t* row = words_.data() + static_cast<std::size_t>(x) * row_words_;
    for (int alpha = 0; alpha <= n; ++alpha) {
      int ax = (alpha == n) ? x : s.product(alpha, x);
      for (int beta = 0; beta <= n; ++beta) {
        int axb = (beta == n) ? ax : s.product(ax, beta);
        if (!s.is_idempotent(axb)) {
          std::size_t i = static_cast<std::size_t>(alpha) * (n + 1) + beta;
          row[i >> 6] |= std::uint64_t(1) << (i & 63);
        }
      }
    }
  }
  // group elements whose bit rows coincide, bucketing by row hash first
  std::vector<int> labels(n, -1);
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  int next_label = 0;
  for (int x = 0; x < n; ++x) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::size_t w = 0; w < row_words_; ++w) {
      h = (h ^ words_[x * row_words_ + w]) * 0x100000001b3ULL;
    }
    auto& bucket = buckets[h];
    for (int y : bucket) {
      if (std::equal(words_.begin() + x * row_words_,
                     words_.begin() + (x + 1) * row_words_,
                     words_.begin() + y * row_words_)) {
        labels[x] = labels[y];
        break;
      }
    }
    if (labels[x] == -1) {
      labels[x] = next_label++;
      bucket.push_back(x);
    }
  }
  congruence_ = Partition::from_labels(labels);
}

bool SyntacticData::preorder_leq(int x, int y) const {
  std::uint64_t const* rx = words_.data() + static_cast<std::size_t>(x) * row_words_;
  std::uint64_t const* ry = words_.data() + static_cast<std::size_t>(y) * row_words_;
  for (std::size_t w = 0; w < row_words_; ++w) {
    if (rx[w] & ~ry[w]) {
      return false;
    }
  }
  return true;
}

Partition syntactic_congruence(FiniteInverseSemigroup const& s) {
  return SyntacticData(s).congruence();
}

bool is_E_disjunctive(FiniteInverseSemigroup const& s) {
  return syntactic_congruence(s).is_trivial();
}

bool is_E_unitary(FiniteInverseSemigroup const& s) {
  for (int e = 0; e < s.order(); ++e) {
    if (!s.is_idempotent(e)) {
      continue;
    }
    for (int x = 0; x < s.order(); ++x) {
      if (!s.is_idempotent(x) && s.product(e, x) == e) {
        return false;  // e <= x with x not idempotent
      }
    }
  }
  return true;
}

QuotientResult max_E_disjunctive_quotient(FiniteInverseSemigroup const& s) {
  Partition      rho = syntactic_congruence(s);
  QuotientResult q   = quotient(s, rho);
  if (!is_E_disjunctive(q.semigroup)) {
    throw Error("max_E_disjunctive_quotient: quotient is not E-disjunctive");
  }
  if (!is_idempotent_pure(s, rho)) {
    throw Error("max_E_disjunctive_quotient: hom is not idempotent-pure");
  }
  return q;
}

std::vector<char> syntactic_preorder(FiniteInverseSemigroup const& s) {
  SyntacticData     data(s);
  int               n = s.order();
  std::vector<char> rel(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      rel[x * n + y] = data.preorder_leq(x, y);
    }
  }
  return rel;
}

Readout readout(FiniteInverseSemigroup const& s, int e) {
  if (!s.is_idempotent(e)) {
    throw Error("readout: element " + std::to_string(e)
                + " is not idempotent");
  }
  Readout r;
  r.owner = e;
  for (int i = 0; i < s.order(); ++i) {
    if (!s.is_idempotent(i)) {
      r.axis.push_back(i);
    }
  }
  r.axis.push_back(-1);  // formal identity
  int m = static_cast<int>(r.axis.size());
  r.bits.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    int alpha = r.axis[i];
    int ae    = (alpha == -1) ? e : s.product(alpha, e);
    for (int j = 0; j < m; ++j) {
      int beta         = r.axis[j];
      int aeb          = (beta == -1) ? ae : s.product(ae, beta);
      r.bits[i * m + j] = !s.is_idempotent(aeb);
    }
  }
  return r;
}

std::vector<int> n_set(FiniteInverseSemigroup const& s) {
  std::set<int> out;
  for (int u = 0; u < s.order(); ++u) {
    if (!s.is_idempotent(u)) {
      out.insert(s.product(u, s.inverse(u)));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> phi_S(FiniteInverseSemigroup const& s, int f) {
  if (!s.is_idempotent(f)) {
    throw Error("phi_S: element " + std::to_string(f) + " is not idempotent");
  }
  std::vector<int> out;
  for (int e : n_set(s)) {
    if (s.natural_leq(e, f)) {
      out.push_back(e);
    }
  }
  return out;
}

std::vector<char> compatibility_relation(FiniteInverseSemigroup const& s) {
  int               n = s.order();
  std::vector<char> rel(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      rel[a * n + b] = s.is_idempotent(s.product(a, s.inverse(b)))
                       && s.is_idempotent(s.product(s.inverse(a), b));
    }
  }
  return rel;
}

std::vector<Partition> all_congruences(FiniteInverseSemigroup const& s) {
  int                      n = s.order();
  std::set<Partition>      found;
  std::vector<Partition>   frontier;
  found.insert(Partition(n));
  // principal congruences and those from pair sets of size two
  std::vector<Partition> seeds;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      seeds.push_back(congruence_closure(s, {{a, b}}));
    }
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  for (auto const& p : seeds) {
    if (found.insert(p).second) {
      frontier.push_back(p);
    }
  }
  // close under joins with the seeds
  while (!frontier.empty()) {
    Partition p = frontier.back();
    frontier.pop_back();
    for (auto const& q : seeds) {
      std::vector<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (p.same(i, j) || q.same(i, j)) {
            pairs.emplace_back(i, j);
          }
        }
      }
      Partition join = congruence_closure(s, pairs);
      if (found.insert(join).second) {
        frontier.push_back(join);
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace edis
