#include "edis/semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "edis/errors.hpp"

namespace edis {

std::vector<int> FiniteInverseSemigroup::idempotents() const {
  std::vector<int> out;
  for (int i = 0; i < order_; ++i) {
    if (idem_[i]) {
      out.push_back(i);
    }
  }
  return out;
}

int FiniteInverseSemigroup::num_idempotents() const {
  return static_cast<int>(std::count(idem_.begin(), idem_.end(), 1));
}

bool FiniteInverseSemigroup::natural_leq(int s, int t) const {
  return s == product(product(s, inv_[s]), t);
}

int FiniteInverseSemigroup::word(std::vector<int> const& letters) const {
  int acc = letters.at(0);
  for (std::size_t i = 1; i < letters.size(); ++i) {
    acc = product(acc, letters[i]);
  }
  return acc;
}

bool FiniteInverseSemigroup::is_semilattice() const {
  for (int i = 0; i < order_; ++i) {
    if (!idem_[i]) {
      return false;
    }
  }
  return true;
}

bool FiniteInverseSemigroup::is_group() const {
  return order_ >= 1 && num_idempotents() == 1;
}

std::optional<int> FiniteInverseSemigroup::identity_element() const {
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int s = 0; s < order_ && ok; ++s) {
      ok = product(e, s) == s && product(s, e) == s;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

std::optional<int> FiniteInverseSemigroup::zero_element() const {
  for (int z = 0; z < order_; ++z) {
    bool ok = true;
    for (int s = 0; s < order_ && ok; ++s) {
      ok = product(z, s) == z && product(s, z) == z;
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

std::string FiniteInverseSemigroup::label(int i) const {
  if (i < static_cast<int>(labels_.size()) && !labels_[i].empty()) {
    return labels_[i];
  }
  return "s" + std::to_string(i);
}

std::string FiniteInverseSemigroup::to_table_string() const {
  std::ostringstream os;
  os << order_ << "\n";
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (b > 0) {
        os << ' ';
      }
      os << product(a, b);
    }
    os << "\n";
  }
  return os.str();
}

FiniteInverseSemigroup semigroup_from_flat_table(int order,
                                                 std::vector<int> table) {
  if (order < 0
      || static_cast<std::size_t>(order) * order != table.size()) {
    throw ParseError("table: size does not match order");
  }
  for (int v : table) {
    if (v < 0 || v >= order) {
      throw ParseError("table: entry " + std::to_string(v) + " out of range");
    }
  }
  FiniteInverseSemigroup s;
  s.order_ = order;
  s.table_ = std::move(table);

  auto prod = [&](int a, int b) { return s.table_[a * order + b]; };

  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      int ab = prod(a, b);
      for (int c = 0; c < order; ++c) {
        if (prod(ab, c) != prod(a, prod(b, c))) {
          throw NotAssociativeError(a, b, c);
        }
      }
    }
  }

  s.idem_.assign(order, 0);
  for (int a = 0; a < order; ++a) {
    s.idem_[a] = (prod(a, a) == a);
  }
  s.inv_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    int count = 0;
    for (int b = 0; b < order; ++b) {
      if (prod(prod(a, b), a) == a && prod(prod(b, a), b) == b) {
        s.inv_[a] = b;
        ++count;
      }
    }
    if (count == 0) {
      throw NotInverseError("element " + std::to_string(a) + " has no inverse",
                            a);
    }
    if (count > 1) {
      throw NotInverseError("element " + std::to_string(a) + " has "
                                + std::to_string(count) + " inverses",
                            a);
    }
  }
  for (int e = 0; e < order; ++e) {
    if (!s.idem_[e]) {
      continue;
    }
    for (int f = e + 1; f < order; ++f) {
      if (s.idem_[f] && prod(e, f) != prod(f, e)) {
        throw NotInverseError("idempotents " + std::to_string(e) + " and "
                                  + std::to_string(f) + " do not commute",
                              e);
      }
    }
  }
  return s;
}

FiniteInverseSemigroup
semigroup_from_table(std::vector<std::vector<int>> const& table) {
  int              n = static_cast<int>(table.size());
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (auto const& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw ParseError("table: ragged row");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return semigroup_from_flat_table(n, std::move(flat));
}

FiniteInverseSemigroup parse_table(std::string const& text) {
  std::istringstream is(text);
  int                n;
  if (!(is >> n) || n < 0) {
    throw ParseError("table: expected order on first line");
  }
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (auto& v : flat) {
    if (!(is >> v)) {
      throw ParseError("table: too few entries");
    }
  }
  int extra;
  if (is >> extra) {
    throw ParseError("table: trailing data");
  }
  return semigroup_from_flat_table(n, std::move(flat));
}

ClosureResult closure_of_partial_perms(std::vector<PartialPerm> const& gens) {
  ClosureResult res;
  if (gens.empty()) {
    res.semigroup = semigroup_from_flat_table(0, {});
    return res;
  }
  int deg = gens[0].degree();
  for (auto const& g : gens) {
    if (g.degree() != deg) {
      throw Error("closure: generators must share one degree");
    }
  }

  std::vector<PartialPerm>                                    elts;
  std::unordered_map<PartialPerm, int, PartialPermHash>       index;
  auto add = [&](PartialPerm const& p) -> int {
    auto it = index.find(p);
    if (it != index.end()) {
      return it->second;
    }
    int id = static_cast<int>(elts.size());
    elts.push_back(p);
    index.emplace(p, id);
    return id;
  };
  for (auto const& g : gens) {
    add(g);
    add(g.inverse());
  }
  // products of known elements until closed
  for (std::size_t i = 0; i < elts.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(elts[i] * elts[j]);
      if (i != j) {
        add(elts[j] * elts[i]);
      }
    }
  }
  int              n = static_cast<int>(elts.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a * n + b] = index.at(elts[a] * elts[b]);
    }
  }
  res.semigroup = semigroup_from_flat_table(n, std::move(table));
  res.elements  = std::move(elts);
  return res;
}

bool natural_leq(FiniteInverseSemigroup const& s, int a, int b) {
  return s.natural_leq(a, b);
}

bool r_leq(FiniteInverseSemigroup const& s, int a, int b) {
  // a in b S^1
  if (a == b) {
    return true;
  }
  for (int x = 0; x < s.order(); ++x) {
    if (s.product(b, x) == a) {
      return true;
    }
  }
  return false;
}

bool l_leq(FiniteInverseSemigroup const& s, int a, int b) {
  if (a == b) {
    return true;
  }
  for (int x = 0; x < s.order(); ++x) {
    if (s.product(x, b) == a) {
      return true;
    }
  }
  return false;
}

GreenData green_data(FiniteInverseSemigroup const& s) {
  int       n = s.order();
  GreenData g;

  // principal right/left ideals as labels
  std::vector<int> rlab(n), llab(n);
  {
    std::vector<std::vector<char>> rset(n), lset(n);
    for (int a = 0; a < n; ++a) {
      rset[a].assign(n, 0);
      lset[a].assign(n, 0);
      rset[a][a] = 1;
      lset[a][a] = 1;
      for (int x = 0; x < n; ++x) {
        rset[a][s.product(a, x)] = 1;
        lset[a][s.product(x, a)] = 1;
      }
    }
    std::vector<int> ridx, lidx;
    for (int a = 0; a < n; ++a) {
      rlab[a] = -1;
      for (int k = 0; k < static_cast<int>(ridx.size()); ++k) {
        if (rset[ridx[k]] == rset[a]) {
          rlab[a] = k;
          break;
        }
      }
      if (rlab[a] == -1) {
        rlab[a] = static_cast<int>(ridx.size());
        ridx.push_back(a);
      }
      llab[a] = -1;
      for (int k = 0; k < static_cast<int>(lidx.size()); ++k) {
        if (lset[lidx[k]] == lset[a]) {
          llab[a] = k;
          break;
        }
      }
      if (llab[a] == -1) {
        llab[a] = static_cast<int>(lidx.size());
        lidx.push_back(a);
      }
    }
  }
  g.r = Partition::from_labels(rlab);
  g.l = Partition::from_labels(llab);

  // D = L o R: a D b iff exists c with a L c and c R b
  UnionFind uf(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.l.same(a, b) || g.r.same(a, b)) {
        uf.unite(a, b);
      }
    }
  }
  g.d = uf.to_partition();

  // h: longest chain in the natural partial order with top s, 1-based
  g.h.assign(n, 0);
  std::vector<int> order_by_downset(n);
  for (int i = 0; i < n; ++i) {
    order_by_downset[i] = i;
  }
  std::vector<int> downset(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      downset[a] += s.natural_leq(b, a);
    }
  }
  std::sort(order_by_downset.begin(), order_by_downset.end(),
            [&](int a, int b) { return downset[a] < downset[b]; });
  for (int a : order_by_downset) {
    int best = 0;
    for (int b = 0; b < n; ++b) {
      if (b != a && s.natural_leq(b, a)) {
        best = std::max(best, g.h[b]);
      }
    }
    g.h[a] = best + 1;
  }
  return g;
}

std::vector<PartialPerm> vagner_preston(FiniteInverseSemigroup const& s) {
  if (s.order() < 1) {
    throw Error("vagner_preston: order must be >= 1");
  }
  int                      n = s.order();
  std::vector<PartialPerm> out;
  out.reserve(n);
  for (int a = 0; a < n; ++a) {
    int              e = s.product(a, s.inverse(a));  // a a^-1
    std::vector<int> im(n, PartialPerm::UNDEFINED);
    for (int x = 0; x < n; ++x) {
      if (s.product(x, e) == x) {
        im[x] = s.product(x, a);
      }
    }
    out.emplace_back(n, std::move(im));
  }
  return out;
}

}  // namespace edis
