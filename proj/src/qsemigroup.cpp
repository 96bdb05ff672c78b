#include "edis/qsemigroup.hpp"

#include <algorithm>
#include <map>

#include "edis/errors.hpp"

namespace edis {

void Poset::validate() const {
  for (int a = 0; a < size; ++a) {
    if (!leq_at(a, a)) {
      throw Error("poset: not reflexive");
    }
    for (int b = 0; b < size; ++b) {
      if (a != b && leq_at(a, b) && leq_at(b, a)) {
        throw Error("poset: not antisymmetric");
      }
      for (int c = 0; c < size; ++c) {
        if (leq_at(a, b) && leq_at(b, c) && !leq_at(a, c)) {
          throw Error("poset: not transitive");
        }
      }
    }
  }
}

std::optional<int> Poset::meet(int a, int b) const {
  int best = -1;
  for (int c = 0; c < size; ++c) {
    if (leq_at(c, a) && leq_at(c, b)) {
      if (best == -1 || leq_at(best, c)) {
        best = c;
      }
    }
  }
  if (best == -1) {
    return std::nullopt;
  }
  for (int c = 0; c < size; ++c) {
    if (leq_at(c, a) && leq_at(c, b) && !leq_at(c, best)) {
      return std::nullopt;  // lower bounds exist but no greatest one
    }
  }
  return best;
}

namespace {

// natural order of T extended by the formal identity (index -1)
bool t1_leq(FiniteInverseSemigroup const& t, int a, int b) {
  if (b == -1) {
    return a == -1 || t.is_idempotent(a);
  }
  if (a == -1) {
    return false;
  }
  return t.natural_leq(a, b);
}

}  // namespace

std::optional<PreactionViolation> validate_preaction(Preaction const& q) {
  int m  = q.y.size;
  int nt = q.t.order();
  auto detail = [&](int yy, int tt) {
    return "(y=" + std::to_string(yy) + ", t=" + std::to_string(tt) + ")";
  };

  // (1) each t acts as an order isomorphism between subsets of Y
  for (int tt = 0; tt < nt; ++tt) {
    for (int y1 = 0; y1 < m; ++y1) {
      if (!q.defined(y1, tt)) {
        continue;
      }
      for (int y2 = 0; y2 < m; ++y2) {
        if (!q.defined(y2, tt)) {
          continue;
        }
        if (y1 != y2 && q.at(y1, tt) == q.at(y2, tt)) {
          return PreactionViolation{1, "not injective at " + detail(y1, tt)};
        }
        if (q.y.leq_at(y1, y2)
            != q.y.leq_at(q.at(y1, tt), q.at(y2, tt))) {
          return PreactionViolation{1, "not order-preserving at "
                                           + detail(y1, tt)};
        }
      }
    }
  }
  // (2) s <= t implies graph containment, over T^1
  for (int s = 0; s < nt; ++s) {
    for (int tt = 0; tt < nt; ++tt) {
      if (!t1_leq(q.t, s, tt)) {
        continue;
      }
      for (int yy = 0; yy < m; ++yy) {
        if (q.defined(yy, s)
            && (!q.defined(yy, tt) || q.at(yy, s) != q.at(yy, tt))) {
          return PreactionViolation{2, "s=" + std::to_string(s)
                                           + " <= t=" + std::to_string(tt)
                                           + " fails at y="
                                           + std::to_string(yy)};
        }
      }
    }
    // s <= formal identity: idempotents act as partial identities
    if (q.t.is_idempotent(s)) {
      for (int yy = 0; yy < m; ++yy) {
        if (q.defined(yy, s) && q.at(yy, s) != yy) {
          return PreactionViolation{2, "idempotent t=" + std::to_string(s)
                                           + " moves y="
                                           + std::to_string(yy)};
        }
      }
    }
  }
  // (3) groupoid composition and inverses
  for (int s = 0; s < nt; ++s) {
    for (int yy = 0; yy < m; ++yy) {
      if (!q.defined(yy, s)) {
        continue;
      }
      int img = q.at(yy, s);
      int si  = q.t.inverse(s);
      if (!q.defined(img, si) || q.at(img, si) != yy) {
        return PreactionViolation{3, "inverse clause fails at "
                                         + detail(yy, s)};
      }
      for (int tt = 0; tt < nt; ++tt) {
        if (q.defined(img, tt)) {
          int st = q.t.product(s, tt);
          if (!q.defined(yy, st) || q.at(yy, st) != q.at(img, tt)) {
            return PreactionViolation{3, "composition clause fails at "
                                             + detail(yy, s) + " then t="
                                             + std::to_string(tt)};
          }
        }
      }
    }
  }
  // (4) domains are order ideals
  for (int tt = 0; tt < nt; ++tt) {
    for (int y1 = 0; y1 < m; ++y1) {
      if (!q.defined(y1, tt)) {
        continue;
      }
      for (int y2 = 0; y2 < m; ++y2) {
        if (q.y.leq_at(y2, y1) && !q.defined(y2, tt)) {
          return PreactionViolation{4, "dom(t=" + std::to_string(tt)
                                           + ") is not down-closed at y="
                                           + std::to_string(y2)};
        }
      }
    }
  }
  // (5) every y lies in the domain of some idempotent
  for (int yy = 0; yy < m; ++yy) {
    bool covered = false;
    for (int e = 0; e < nt && !covered; ++e) {
      covered = q.t.is_idempotent(e) && q.defined(yy, e);
    }
    if (!covered) {
      return PreactionViolation{5, "y=" + std::to_string(yy)
                                       + " is in no idempotent domain"};
    }
  }
  // (6) underline{s} underline{t} is contained in underline{st}
  for (int s = 0; s < nt; ++s) {
    for (int tt = 0; tt < nt; ++tt) {
      int st = q.t.product(s, tt);
      for (int yy = 0; yy < m; ++yy) {
        if (q.defined(yy, s) && q.defined(q.at(yy, s), tt)) {
          if (!q.defined(yy, st)
              || q.at(yy, st) != q.at(q.at(yy, s), tt)) {
            return PreactionViolation{6, "composition containment fails at "
                                             + detail(yy, s)};
          }
        }
      }
    }
  }
  // (7) any two of (x,y) in s, (y,z) in t, (x,z) in st imply the third
  for (int s = 0; s < nt; ++s) {
    for (int tt = 0; tt < nt; ++tt) {
      int st = q.t.product(s, tt);
      for (int x = 0; x < m; ++x) {
        if (q.defined(x, s) && q.defined(x, st)) {
          int y = q.at(x, s);
          if (!q.defined(y, tt) || q.at(y, tt) != q.at(x, st)) {
            return PreactionViolation{7, "two-of-three (s, st) fails at x="
                                             + std::to_string(x)};
          }
        }
      }
      for (int y = 0; y < m; ++y) {
        if (!q.defined(y, tt)) {
          continue;
        }
        int z = q.at(y, tt);
        for (int x = 0; x < m; ++x) {
          if (q.defined(x, st) && q.at(x, st) == z) {
            if (!q.defined(x, s) || q.at(x, s) != y) {
              return PreactionViolation{7, "two-of-three (t, st) fails at x="
                                               + std::to_string(x)};
            }
          }
        }
      }
    }
  }
  // (8) idempotents act as partial identities (checked within (2) as well)
  for (int e = 0; e < nt; ++e) {
    if (!q.t.is_idempotent(e)) {
      continue;
    }
    for (int yy = 0; yy < m; ++yy) {
      if (q.defined(yy, e) && q.at(yy, e) != yy) {
        return PreactionViolation{8, "idempotent e=" + std::to_string(e)
                                         + " is not a partial identity"};
      }
    }
  }
  return std::nullopt;
}

ConjugationPreaction conjugation_preaction(FiniteInverseSemigroup const& s) {
  ConjugationPreaction res;
  res.quotient = max_E_disjunctive_quotient(s);
  auto const& t   = res.quotient.semigroup;
  auto const& hom = res.quotient.hom;

  res.y_of_element.assign(s.order(), -1);
  for (int e = 0; e < s.order(); ++e) {
    if (s.is_idempotent(e)) {
      res.y_of_element[e] = static_cast<int>(res.idempotent.size());
      res.idempotent.push_back(e);
    }
  }
  int m = static_cast<int>(res.idempotent.size());

  res.q.y.size = m;
  res.q.y.leq.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      res.q.y.leq[i * m + j]
          = s.natural_leq(res.idempotent[i], res.idempotent[j]);
    }
  }
  res.q.y.validate();

  res.q.t = t;
  int nt  = t.order();
  res.q.map.assign(static_cast<std::size_t>(m) * nt, -1);
  for (int yi = 0; yi < m; ++yi) {
    int e = res.idempotent[yi];
    for (int tt = 0; tt < nt; ++tt) {
      // defined iff some witness a in S has a/rho <= tt and e <= a a^-1
      int value = -1;
      for (int a = 0; a < s.order(); ++a) {
        if (!t.natural_leq(hom[a], tt)) {
          continue;
        }
        int aai = s.product(a, s.inverse(a));
        if (s.product(e, aai) != e) {
          continue;  // e <= a a^-1 fails
        }
        int v = s.product(s.product(s.inverse(a), e), a);
        if (value == -1) {
          value = v;
        } else if (value != v) {
          throw Error("conjugation_preaction: witnesses disagree (engine bug)");
        }
      }
      if (value != -1) {
        res.q.map[yi * nt + tt] = res.y_of_element[value];
      }
    }
  }
  if (auto violation = validate_preaction(res.q)) {
    throw PreactionInvalidError(violation->condition, violation->detail);
  }
  return res;
}

ExtendedAction extend_preaction(Preaction const& q) {
  if (auto violation = validate_preaction(q)) {
    throw PreactionInvalidError(violation->condition, violation->detail);
  }
  int m  = q.y.size;
  int nt = q.t.order();
  auto const& t = q.t;

  // X'_q = {(y, s) : some s' in s T^1 has (y, s') defined}
  std::vector<std::vector<char>> right_ideal(nt, std::vector<char>(nt, 0));
  for (int s = 0; s < nt; ++s) {
    right_ideal[s][s] = 1;
    for (int u = 0; u < nt; ++u) {
      right_ideal[s][t.product(s, u)] = 1;
    }
  }
  std::vector<int>              xp_id(static_cast<std::size_t>(m) * nt, -1);
  std::vector<std::pair<int, int>> xp;  // (y, s)
  for (int yy = 0; yy < m; ++yy) {
    for (int s = 0; s < nt; ++s) {
      bool in = false;
      for (int u = 0; u < nt && !in; ++u) {
        in = right_ideal[s][u] && q.defined(yy, u);
      }
      if (in) {
        xp_id[yy * nt + s] = static_cast<int>(xp.size());
        xp.emplace_back(yy, s);
      }
    }
  }
  int np = static_cast<int>(xp.size());

  // the preorder: (y1,s1) preceq (y2,s2) iff some s3 in T^1 lands both in
  // dom(q) with ordered values
  auto preceq = [&](int i, int j) {
    auto [y1, s1] = xp[i];
    auto [y2, s2] = xp[j];
    // s3 = formal identity
    if (q.defined(y1, s1) && q.defined(y2, s2)
        && q.y.leq_at(q.at(y1, s1), q.at(y2, s2))) {
      return true;
    }
    for (int s3 = 0; s3 < nt; ++s3) {
      int p1 = t.product(s1, s3), p2 = t.product(s2, s3);
      if (q.defined(y1, p1) && q.defined(y2, p2)
          && q.y.leq_at(q.at(y1, p1), q.at(y2, p2))) {
        return true;
      }
    }
    return false;
  };
  std::vector<char> pre(static_cast<std::size_t>(np) * np, 0);
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      pre[i * np + j] = preceq(i, j);
    }
  }

  // equivalence classes of mutual preceq, represented by least member
  std::vector<int> cls(np, -1);
  std::vector<int> rep;
  for (int i = 0; i < np; ++i) {
    if (cls[i] != -1) {
      continue;
    }
    cls[i] = static_cast<int>(rep.size());
    rep.push_back(i);
    for (int j = i + 1; j < np; ++j) {
      if (cls[j] == -1 && pre[i * np + j] && pre[j * np + i]) {
        cls[j] = cls[i];
      }
    }
  }
  int nc = static_cast<int>(rep.size());

  // the preorder must be class-invariant (it is transitive by construction
  // from a valid preaction; this guards against silent drift)
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      if (pre[i * np + j] != pre[rep[cls[i]] * np + rep[cls[j]]]) {
        throw Error("extend_preaction: preorder is not class-invariant");
      }
    }
  }

  // phi : Y -> classes, via (y, e_y) for an idempotent e_y covering y;
  // well-definedness: every q-preimage of y lies in the same class
  std::vector<int> phi_class(m, -1);
  for (int yy = 0; yy < m; ++yy) {
    for (int e = 0; e < nt; ++e) {
      if (t.is_idempotent(e) && q.defined(yy, e)) {
        phi_class[yy] = cls[xp_id[yy * nt + e]];
        break;
      }
    }
    if (phi_class[yy] == -1) {
      throw Error("extend_preaction: phi undefined (engine bug)");
    }
  }
  for (int yy = 0; yy < m; ++yy) {
    for (int s = 0; s < nt; ++s) {
      if (q.defined(yy, s)) {
        if (cls[xp_id[yy * nt + s]] != phi_class[q.at(yy, s)]) {
          throw Error("extend_preaction: phi is not well-defined (engine bug)");
        }
      }
    }
  }
  // phi is injective and an order embedding
  for (int y1 = 0; y1 < m; ++y1) {
    for (int y2 = 0; y2 < m; ++y2) {
      bool below = pre[rep[phi_class[y1]] * np + rep[phi_class[y2]]];
      if (q.y.leq_at(y1, y2) != below) {
        throw Error("extend_preaction: phi is not an order embedding");
      }
    }
  }

  // X: the Y copy first, then the non-image classes ordered by least member
  std::vector<int> class_to_x(nc, -1);
  for (int yy = 0; yy < m; ++yy) {
    if (class_to_x[phi_class[yy]] != -1) {
      throw Error("extend_preaction: phi is not injective");
    }
    class_to_x[phi_class[yy]] = yy;
  }
  int next = m;
  for (int c = 0; c < nc; ++c) {
    if (class_to_x[c] == -1) {
      class_to_x[c] = next++;
    }
  }
  int nx = next;

  ExtendedAction ext;
  ext.t      = t;
  ext.y_size = m;
  ext.x.size = nx;
  ext.x.leq.assign(static_cast<std::size_t>(nx) * nx, 0);
  for (int c1 = 0; c1 < nc; ++c1) {
    for (int c2 = 0; c2 < nc; ++c2) {
      ext.x.leq[class_to_x[c1] * nx + class_to_x[c2]]
          = pre[rep[c1] * np + rep[c2]];
    }
  }
  ext.x.validate();
  // conclusion (1): Y is an order ideal of X
  for (int xx = 0; xx < nx; ++xx) {
    for (int yy = 0; yy < m; ++yy) {
      if (ext.x.leq_at(xx, yy) && xx >= m) {
        throw Error("extend_preaction: Y is not an order ideal of X");
      }
    }
  }

  // the action on classes: [(y,u)] t = [(y, ut)] whenever some member has
  // u in T t^-1 and (y, ut) in X'
  ext.action.assign(static_cast<std::size_t>(nx) * nt, -1);
  std::vector<std::vector<int>> members(nc);
  for (int i = 0; i < np; ++i) {
    members[cls[i]].push_back(i);
  }
  for (int c = 0; c < nc; ++c) {
    for (int tt = 0; tt < nt; ++tt) {
      int result = -1;
      for (int i : members[c]) {
        auto [yy, u] = xp[i];
        int tti      = t.inverse(tt);
        if (t.product(u, t.product(tt, tti)) != u) {
          continue;  // u not in T t^-1
        }
        int ut = t.product(u, tt);
        int id = xp_id[yy * nt + ut];
        if (id == -1) {
          continue;
        }
        int r = class_to_x[cls[id]];
        if (result == -1) {
          result = r;
        } else if (result != r) {
          throw Error("extend_preaction: action not well-defined on classes");
        }
      }
      if (result != -1) {
        ext.action[class_to_x[c] * nt + tt] = result;
      }
    }
  }

  // the result is a genuine action by partial order isomorphisms
  for (int tt = 0; tt < nt; ++tt) {
    int tti = t.inverse(tt);
    for (int xx = 0; xx < nx; ++xx) {
      if (!ext.defined(xx, tt)) {
        continue;
      }
      int img = ext.at(xx, tt);
      if (!ext.defined(img, tti) || ext.at(img, tti) != xx) {
        throw Error("extend_preaction: action inverses fail");
      }
      for (int x2 = 0; x2 < nx; ++x2) {
        if (ext.defined(x2, tt)
            && ext.x.leq_at(xx, x2) != ext.x.leq_at(img, ext.at(x2, tt))) {
          throw Error("extend_preaction: action is not order-preserving");
        }
      }
    }
    for (int uu = 0; uu < nt; ++uu) {
      int tu = t.product(tt, uu);
      for (int xx = 0; xx < nx; ++xx) {
        int via = (ext.defined(xx, tt) && ext.defined(ext.at(xx, tt), uu))
                      ? ext.at(ext.at(xx, tt), uu)
                      : -1;
        int direct = ext.defined(xx, tu) ? ext.at(xx, tu) : -1;
        if (via != direct) {
          throw Error("extend_preaction: st != s then t");
        }
      }
    }
  }

  // conclusion (2): restriction to (Y x T) hitting Y equals q
  for (int yy = 0; yy < m; ++yy) {
    for (int tt = 0; tt < nt; ++tt) {
      bool lands_in_y = ext.defined(yy, tt) && ext.at(yy, tt) < m;
      if (lands_in_y != q.defined(yy, tt)) {
        throw Error("extend_preaction: restriction domain mismatch");
      }
      if (lands_in_y && ext.at(yy, tt) != q.at(yy, tt)) {
        throw Error("extend_preaction: restriction value mismatch");
      }
    }
  }
  // conclusion (3): a <= b iff some s in T^1 maps both into Y in order
  for (int a = 0; a < nx; ++a) {
    for (int b = 0; b < nx; ++b) {
      bool witness = a < m && b < m && ext.x.leq_at(a, b);
      for (int s = 0; s < nt && !witness; ++s) {
        witness = ext.defined(a, s) && ext.defined(b, s) && ext.at(a, s) < m
                  && ext.at(b, s) < m
                  && ext.x.leq_at(ext.at(a, s), ext.at(b, s));
      }
      if (witness != ext.x.leq_at(a, b)) {
        throw Error("extend_preaction: order characterization (3) fails");
      }
    }
  }
  return ext;
}

QSemigroupResult q_semigroup(FiniteInverseSemigroup const& t, Poset const& x,
                             int y_size, std::vector<int> const& action) {
  x.validate();
  int nx = x.size;
  int nt = t.order();
  int m  = y_size;
  if (m > nx || static_cast<int>(action.size()) != nx * nt) {
    throw Error("q_semigroup: malformed inputs");
  }
  auto act_def = [&](int xx, int tt) { return action[xx * nt + tt] >= 0; };
  auto act     = [&](int xx, int tt) { return action[xx * nt + tt]; };

  // Y must be an order ideal and meet subsemilattice of X
  for (int xx = 0; xx < nx; ++xx) {
    for (int yy = 0; yy < m; ++yy) {
      if (x.leq_at(xx, yy) && xx >= m) {
        throw Error("q_semigroup: Y is not an order ideal of X");
      }
    }
  }
  for (int y1 = 0; y1 < m; ++y1) {
    for (int y2 = 0; y2 < m; ++y2) {
      auto w = x.meet(y1, y2);
      if (!w || *w >= m) {
        throw Error("q_semigroup: Y is not a meet subsemilattice");
      }
    }
  }

  // condition (1): domains are order ideals of X
  for (int tt = 0; tt < nt; ++tt) {
    for (int x1 = 0; x1 < nx; ++x1) {
      if (!act_def(x1, tt)) {
        continue;
      }
      for (int x2 = 0; x2 < nx; ++x2) {
        if (x.leq_at(x2, x1) && !act_def(x2, tt)) {
          throw ConditionFailedError(
              1, "dom(t=" + std::to_string(tt) + ") not down-closed at x="
                     + std::to_string(x2));
        }
      }
    }
  }

  // restricted domains dom(t|_Y) = dom(t) intersected with Y (values may
  // leave Y), and condition (2)
  std::vector<std::vector<char>> dom_y(nt, std::vector<char>(m, 0));
  for (int tt = 0; tt < nt; ++tt) {
    for (int yy = 0; yy < m; ++yy) {
      dom_y[tt][yy] = act_def(yy, tt);
    }
  }
  std::vector<std::vector<char>> delta(m);
  for (int yy = 0; yy < m; ++yy) {
    std::vector<char> inter(m, 1);
    bool              any = false;
    for (int tt = 0; tt < nt; ++tt) {
      if (!dom_y[tt][yy]) {
        continue;
      }
      any = true;
      for (int z = 0; z < m; ++z) {
        inter[z] = inter[z] && dom_y[tt][z];
      }
    }
    if (!any) {
      throw ConditionFailedError(2, "y=" + std::to_string(yy)
                                        + " lies in no restricted domain");
    }
    bool realized = false;
    for (int tt = 0; tt < nt && !realized; ++tt) {
      realized = (dom_y[tt] == inter);
    }
    if (!realized) {
      throw ConditionFailedError(2, "minimal domain of y=" + std::to_string(yy)
                                        + " is not realized by any t");
    }
    delta[yy] = std::move(inter);
  }

  // condition (3): every x is moved into Y by some t
  for (int xx = 0; xx < nx; ++xx) {
    bool ok = false;
    for (int tt = 0; tt < nt && !ok; ++tt) {
      ok = act_def(xx, tt) && act(xx, tt) < m;
    }
    if (!ok) {
      throw ConditionFailedError(3, "x=" + std::to_string(xx)
                                        + " is never moved into Y");
    }
  }

  QSemigroupResult res;
  res.carrier_index.assign(static_cast<std::size_t>(m) * nt, -1);
  for (int yy = 0; yy < m; ++yy) {
    for (int tt = 0; tt < nt; ++tt) {
      // dom(t|_Y) is the minimal domain of y, and (y)t lands back in Y
      if (dom_y[tt] == delta[yy] && act_def(yy, tt) && act(yy, tt) < m) {
        res.carrier_index[yy * nt + tt]
            = static_cast<int>(res.carrier.size());
        res.carrier.emplace_back(yy, tt);
      }
    }
  }

  int n = static_cast<int>(res.carrier.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto [y1, t1] = res.carrier[i];
    for (int j = 0; j < n; ++j) {
      auto [y2, t2] = res.carrier[j];
      int y1t1      = act(y1, t1);
      auto z        = x.meet(y1t1, y2);
      if (!z) {
        throw Error("q_semigroup: meet missing during multiplication");
      }
      if (!act_def(*z, t.inverse(t1))) {
        throw Error("q_semigroup: product leaves the action domain");
      }
      int w  = act(*z, t.inverse(t1));
      int tt = t.product(t1, t2);
      int id = (w < m) ? res.carrier_index[w * nt + tt] : -1;
      if (id == -1) {
        throw Error("q_semigroup: product leaves the carrier");
      }
      table[i * n + j] = id;
    }
  }
  res.semigroup = semigroup_from_flat_table(n, std::move(table));

  // E(Q) = {(y, e) : e idempotent in T} within the carrier
  for (int i = 0; i < n; ++i) {
    auto [yy, tt] = res.carrier[i];
    if (res.semigroup.is_idempotent(i) != t.is_idempotent(tt)) {
      throw Error("q_semigroup: idempotent characterization fails");
    }
  }
  return res;
}

ReconstructResult reconstruct(FiniteInverseSemigroup const& s) {
  ReconstructResult res;
  if (s.order() == 0) {
    res.q.semigroup = semigroup_from_flat_table(0, {});
    res.verified    = true;
    return res;
  }
  ConjugationPreaction conj = conjugation_preaction(s);
  auto const&          hom  = conj.quotient.hom;
  res.quotient_order        = conj.quotient.semigroup.order();

  // psi_rho : s -> (s s^-1, s/rho) must be injective
  {
    std::map<std::pair<int, int>, int> seen;
    for (int a = 0; a < s.order(); ++a) {
      auto key = std::make_pair(s.product(a, s.inverse(a)), hom[a]);
      if (!seen.emplace(key, a).second) {
        throw Error("reconstruct: psi_rho is not injective (engine bug)");
      }
    }
  }

  ExtendedAction ext = extend_preaction(conj.q);
  res.x_size         = ext.x.size;
  res.q = q_semigroup(ext.t, ext.x, ext.y_size, ext.action);

  // the isomorphism s -> (s s^-1, s/rho)
  int nt = ext.t.order();
  res.iso.assign(s.order(), -1);
  std::vector<char> hit(res.q.semigroup.order(), 0);
  for (int a = 0; a < s.order(); ++a) {
    int yy = conj.y_of_element[s.product(a, s.inverse(a))];
    int id = res.q.carrier_index[yy * nt + hom[a]];
    if (id == -1) {
      throw Error("reconstruct: psi_rho image misses the carrier");
    }
    if (hit[id]) {
      throw Error("reconstruct: psi_rho image collides");
    }
    hit[id]    = 1;
    res.iso[a] = id;
  }
  if (res.q.semigroup.order() != s.order()) {
    throw Error("reconstruct: carrier size differs from |S|");
  }
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      if (res.iso[s.product(a, b)]
          != res.q.semigroup.product(res.iso[a], res.iso[b])) {
        throw Error("reconstruct: psi_rho is not a homomorphism");
      }
    }
  }
  res.verified = true;
  return res;
}

}  // namespace edis
