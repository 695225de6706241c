#include "wmha/groupoid.hpp"

#include <tuple>

#include "wmha/tensor.hpp"

namespace wmha {

std::optional<std::size_t> Groupoid::product(std::size_t p, std::size_t q) const {
  long r = compose[p * size() + q];
  if (r < 0) return std::nullopt;
  return static_cast<std::size_t>(r);
}

std::vector<std::size_t> Groupoid::units() const {
  std::vector<std::size_t> u;
  for (std::size_t p = 0; p < size(); ++p)
    if (is_unit(p)) u.push_back(p);
  return u;
}

void validate_groupoid(const Groupoid& g) {
  std::size_t n = g.size();
  auto fail = [](const std::string& m) { throw InvalidGroupoid(m); };
  if (g.source.size() != n || g.target.size() != n || g.inverse.size() != n ||
      g.compose.size() != n * n)
    fail("groupoid tables have inconsistent sizes");
  for (std::size_t p = 0; p < n; ++p) {
    if (g.source[p] >= n || g.target[p] >= n || g.inverse[p] >= n) fail("index out of range at arrow " + g.labels[p]);
    if (!g.is_unit(g.source[p]) || !g.is_unit(g.target[p]))
      fail("source or target of " + g.labels[p] + " is not a unit");
  }
  for (std::size_t u : g.units())
    if (g.target[u] != u) fail("unit " + g.labels[u] + " has a different target");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto r = g.product(p, q);
      bool composable = g.source[p] == g.target[q];
      if (composable != r.has_value())
        fail("composition of " + g.labels[p] + " and " + g.labels[q] + " defined iff source = target fails");
      if (r && (*r >= n || g.target[*r] != g.target[p] || g.source[*r] != g.source[q]))
        fail("product of " + g.labels[p] + " and " + g.labels[q] + " has wrong endpoints");
    }
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t pi = g.inverse[p];
    if (g.product(p, pi) != g.target[p]) fail("p p^-1 is not the target unit for " + g.labels[p]);
    if (g.product(pi, p) != g.source[p]) fail("p^-1 p is not the source unit for " + g.labels[p]);
    if (g.product(p, g.source[p]) != p || g.product(g.target[p], p) != p)
      fail("units do not act neutrally on " + g.labels[p]);
  }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto pq = g.product(p, q);
      if (!pq) continue;
      for (std::size_t r = 0; r < n; ++r) {
        auto qr = g.product(q, r);
        if (!qr) continue;
        if (g.product(*pq, r) != g.product(p, *qr))
          fail("associativity fails on " + g.labels[p] + "," + g.labels[q] + "," + g.labels[r]);
      }
    }
}

Groupoid pair_groupoid(std::size_t n) {
  Groupoid g;
  std::size_t N = n * n;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  g.compose.assign(N * N, -1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      g.labels.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      g.target.push_back(idx(i, i));
      g.source.push_back(idx(j, j));
      g.inverse.push_back(idx(j, i));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) g.compose[idx(i, j) * N + idx(j, k)] = static_cast<long>(idx(i, k));
  return g;
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

namespace {

std::size_t group_identity(const GroupTable& group) {
  for (std::size_t e = 0; e < group.size(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < group.size() && ok; ++g) ok = group[e][g] == g && group[g][e] == g;
    if (ok) return e;
  }
  throw InvalidAction("group table has no identity");
}

std::size_t group_inverse(const GroupTable& group, std::size_t g, std::size_t e) {
  for (std::size_t h = 0; h < group.size(); ++h)
    if (group[g][h] == e && group[h][g] == e) return h;
  throw InvalidAction("group element " + std::to_string(g) + " has no inverse");
}

}  // namespace

Groupoid group_as_groupoid(const GroupTable& group) {
  return action_groupoid(group, 1, std::vector<std::vector<std::size_t>>(group.size(), {0}));
}

Groupoid action_groupoid(const GroupTable& group, std::size_t set_size,
                         const std::vector<std::vector<std::size_t>>& action) {
  std::size_t m = group.size(), X = set_size;
  for (const auto& row : group)
    if (row.size() != m) throw InvalidAction("group table is not square");
  if (action.size() != m) throw InvalidAction("action table needs one row per group element");
  for (const auto& row : action)
    if (row.size() != X) throw InvalidAction("action row has wrong length");
  std::size_t e = group_identity(group);
  for (std::size_t x = 0; x < X; ++x)
    if (action[e][x] != x) throw InvalidAction("identity moves point " + std::to_string(x));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t x = 0; x < X; ++x)
        if (action[group[g][h]][x] != action[g][action[h][x]])
          throw InvalidAction("(gh).x != g.(h.x) for g=" + std::to_string(g) + ", h=" +
                              std::to_string(h) + ", x=" + std::to_string(x));
  Groupoid G;
  std::size_t N = m * X;
  auto idx = [X](std::size_t h, std::size_t x) { return h * X + x; };
  G.compose.assign(N * N, -1);
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t x = 0; x < X; ++x) {
      std::size_t y = action[h][x];
      G.labels.push_back("(" + std::to_string(y + 1) + ",h" + std::to_string(h) + "," +
                         std::to_string(x + 1) + ")");
      G.target.push_back(idx(e, y));
      G.source.push_back(idx(e, x));
      G.inverse.push_back(idx(group_inverse(group, h, e), y));
    }
  // (y,h,u)(u,k,x) = (y,hk,x)
  for (std::size_t h = 0; h < m; ++h)
    for (std::size_t u = 0; u < X; ++u)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t x = 0; x < X; ++x)
          if (action[k][x] == u) G.compose[idx(h, u) * N + idx(k, x)] = static_cast<long>(idx(group[h][k], x));
  validate_groupoid(G);
  return G;
}

FiniteAlgebra groupoid_algebra(const Groupoid& g) {
  std::size_t n = g.size();
  std::vector<SparseVec> table(n * n);
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = {{i, Rational(1)}};
  Vector one(n, Rational(1));
  return FiniteAlgebra::trusted(g.labels, std::move(table), std::optional<Vector>(one));
}

Matrix groupoid_coproduct(const Groupoid& g) {
  std::size_t n = g.size();
  Matrix d(n * n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (auto r = g.product(p, q)) d(p * n + q, *r) = 1;
  return d;
}

Vector groupoid_E(const Groupoid& g) {
  std::size_t n = g.size();
  Vector e(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (g.product(p, q)) e[p * n + q] = 1;
  return e;
}

Matrix groupoid_antipode(const Groupoid& g) {
  std::size_t n = g.size();
  Matrix s(n, n);
  for (std::size_t p = 0; p < n; ++p) s(g.inverse[p], p) = 1;
  return s;
}

Vector groupoid_counit(const Groupoid& g) {
  Vector e(g.size());
  for (std::size_t u : g.units()) e[u] = 1;
  return e;
}

Wmha groupoid_wmha(const Groupoid& g) {
  return Wmha{groupoid_algebra(g), groupoid_coproduct(g), groupoid_counit(g), groupoid_antipode(g),
              groupoid_E(g)};
}

Wmha groupoid_convolution_wmha(const Groupoid& g) {
  validate_groupoid(g);
  std::size_t N = g.size();
  std::vector<SparseVec> table;
  table.reserve(N * N);
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      auto r = g.product(p, q);
      table.push_back(r ? SparseVec{{*r, Rational(1)}} : SparseVec{});
    }
  Vector one(N);
  for (auto u : g.units()) one[u] = 1;
  Wmha w;
  w.algebra = FiniteAlgebra::trusted(g.labels, std::move(table),
                                     std::optional<std::optional<Vector>>(std::optional<Vector>(one)));
  w.delta = Matrix(N * N, N);
  w.antipode = Matrix(N, N);
  w.counit = Vector(N, Rational(1));
  for (std::size_t p = 0; p < N; ++p) {
    w.delta(p * N + p, p) = 1;
    w.antipode(g.inverse[p], p) = 1;
  }
  return w;
}

Matrix unit_embedding(const Groupoid& g) {
  auto units = g.units();
  Matrix m(g.size(), units.size());
  for (std::size_t k = 0; k < units.size(); ++k) m(units[k], k) = 1;
  return m;
}

// ---------------------------------------------------------------------------
// Lazy pair groupoid on the natural numbers.

using LPG = LazyPairGroupoid;

std::optional<LPG::Arrow> LPG::compose(const Arrow& p, const Arrow& q) {
  if (p.second != q.first) return std::nullopt;
  return Arrow{p.first, q.second};
}

namespace {

template <class M>
void prune(M& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (is_zero(it->second)) it = m.erase(it);
    else ++it;
  }
}

}  // namespace

LPG::Elem LPG::mul(const Elem& a, const Elem& b) {
  Elem r;
  for (const auto& [p, x] : a) {
    auto it = b.find(p);
    if (it != b.end()) r[p] = x * it->second;
  }
  prune(r);
  return r;
}

LPG::Elem LPG::antipode(const Elem& a) {
  Elem r;
  for (const auto& [p, x] : a) r[inverse(p)] = x;
  return r;
}

Rational LPG::counit(const Elem& a) {
  Rational s;
  for (const auto& [p, x] : a)
    if (is_unit(p)) s += x;
  return s;
}

// Delta(a)(1(x)b): terms delta_p (x) delta_q with p q = r in supp a and q in
// supp b, so p = r q^-1 is determined.
LPG::Elem2 LPG::delta_times_one_b(const Elem& a, const Elem& b) {
  Elem2 r;
  for (const auto& [ar, x] : a)
    for (const auto& [q, y] : b)
      if (auto p = compose(ar, inverse(q))) {
        if (compose(*p, q) == ar) r[{*p, q}] += x * y;
      }
  prune(r);
  return r;
}

// (a(x)1)Delta(b): p in supp a fixes q = p^-1 r.
LPG::Elem2 LPG::a_one_times_delta(const Elem& a, const Elem& b) {
  Elem2 r;
  for (const auto& [p, x] : a)
    for (const auto& [br, y] : b)
      if (auto q = compose(inverse(p), br)) {
        if (compose(p, *q) == br) r[{p, *q}] += x * y;
      }
  prune(r);
  return r;
}

LPG::Elem2 LPG::one_b_times_delta(const Elem& a, const Elem& b) { return delta_times_one_b(a, b); }

LPG::Elem2 LPG::delta_times_a_one(const Elem& a, const Elem& b) { return a_one_times_delta(a, b); }

namespace {

LPG::Elem point(const LPG::Arrow& p, const Rational& c = 1) { return LPG::Elem{{p, c}}; }

LPG::Elem2 tensor_elem(const LPG::Elem& a, const LPG::Elem& b) {
  LPG::Elem2 r;
  for (const auto& [p, x] : a)
    for (const auto& [q, y] : b) r[{p, q}] = x * y;
  prune(r);
  return r;
}

// Delta(a) X for finitely supported X: coefficient a(pq) X(p,q).
LPG::Elem2 delta_act(const LPG::Elem& a, const LPG::Elem2& x) {
  LPG::Elem2 r;
  for (const auto& [pq, c] : x) {
    auto prod = LPG::compose(pq.first, pq.second);
    if (!prod) continue;
    auto it = a.find(*prod);
    if (it != a.end()) r[pq] = it->second * c;
  }
  prune(r);
  return r;
}

// E X for finitely supported X.
LPG::Elem2 E_act(const LPG::Elem2& x) {
  LPG::Elem2 r;
  for (const auto& [pq, c] : x)
    if (LPG::compose(pq.first, pq.second)) r[pq] = c;
  return r;
}

std::string arrow_name(const LPG::Arrow& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

}  // namespace

Report check_lazy_pair_groupoid(std::size_t probe_units) {
  std::vector<LPG::Arrow> arrows;
  for (std::uint64_t i = 0; i < probe_units; ++i)
    for (std::uint64_t j = 0; j < probe_units; ++j) arrows.push_back({i, j});
  std::vector<LPG::Elem> probes;
  for (const auto& p : arrows) probes.push_back(point(p));
  // A few combined elements reaching outside the probe units.
  probes.push_back(LPG::Elem{{{0, 1}, Rational(2)}, {{probe_units + 3, 1}, Rational(-1, 3)}});
  probes.push_back(LPG::Elem{{{probe_units + 7, probe_units + 7}, Rational(5)}, {{1, 0}, Rational(1)}});

  Report r;
  std::string probe_note = "probe set: " + std::to_string(probe_units) + " units, " +
                           std::to_string(probes.size()) + " elements";

  // Element level: exact on finitely supported arguments.
  std::string wit;
  for (const auto& a : probes)
    for (const auto& b : probes) {
      LPG::Elem2 s[4] = {LPG::delta_times_one_b(a, b), LPG::a_one_times_delta(a, b),
                         LPG::one_b_times_delta(a, b), LPG::delta_times_a_one(a, b)};
      for (const auto& x : s)
        for (const auto& [pq, c] : x)
          if (!LPG::compose(pq.first, pq.second) && wit.empty())
            wit = "slice term on a non-composable pair";
    }
  r.check("lazy.regular", "regular coproduct: covered slices are finitely supported", wit.empty(), wit);

  wit.clear();
  for (const auto& a : probes)
    for (const auto& b : probes)
      for (const auto& c : probes) {
        if (!wit.empty()) break;
        LPG::Elem3 lhs, rhs;
        for (const auto& [pq, x] : LPG::delta_times_one_b(a, b))
          for (const auto& [uv, y] : LPG::a_one_times_delta(c, point(pq.first)))
            lhs[{uv.first, uv.second, pq.second}] += x * y;
        for (const auto& [pq, x] : LPG::a_one_times_delta(c, a))
          for (const auto& [uv, y] : LPG::delta_times_one_b(point(pq.second), b))
            rhs[{pq.first, uv.first, uv.second}] += x * y;
        prune(lhs);
        prune(rhs);
        if (lhs != rhs) wit = "covered coassociativity fails";
      }
  r.check("lazy.coassociative", "coassociativity in covered form", wit.empty(), wit);

  wit.clear();
  for (const auto& a : probes)
    for (const auto& b : probes) {
      LPG::Elem ab = LPG::mul(a, b);
      LPG::Elem left, right;
      for (const auto& [pq, x] : LPG::delta_times_one_b(a, b))
        if (LPG::is_unit(pq.first)) left[pq.second] += x;
      for (const auto& [pq, x] : LPG::a_one_times_delta(a, b))
        if (LPG::is_unit(pq.second)) right[pq.first] += x;
      prune(left);
      prune(right);
      if ((left != ab || right != ab) && wit.empty()) wit = "counit law fails";
    }
  r.check("lazy.counit", "counit laws", wit.empty(), wit);

  // sum a(1) S(a(2)) a(3) b: the pointwise product forces p = q^-1 = s with s in
  // supp b, so those are the only decompositions r = p q s to enumerate.
  std::string w1, w2;
  for (const auto& a : probes)
    for (const auto& b : probes) {
      LPG::Elem lhs1, lhs2;
      for (const auto& [s, y] : b) {
        LPG::Arrow p = s, q = LPG::inverse(s);
        auto pq = LPG::compose(p, q);
        auto pqs = pq ? LPG::compose(*pq, s) : std::nullopt;
        if (pqs) {
          auto it = a.find(*pqs);
          if (it != a.end()) lhs1[s] += it->second * y;
        }
        // S(a(1)) a(2) S(a(3)) b: p^-1 = q = s^-1 = t forces p = s = t^-1.
        LPG::Arrow t = s;
        auto r2 = LPG::compose(LPG::inverse(t), t);
        auto r3 = r2 ? LPG::compose(*r2, LPG::inverse(t)) : std::nullopt;
        if (r3) {
          auto it = a.find(*r3);
          if (it != a.end()) lhs2[t] += it->second * y;
        }
      }
      prune(lhs1);
      prune(lhs2);
      if (lhs1 != LPG::mul(a, b) && w1.empty()) w1 = "a(1)S(a(2))a(3)b != ab";
      if (lhs2 != LPG::mul(LPG::antipode(a), b) && w2.empty()) w2 = "S(a(1))a(2)S(a(3))b != S(a)b";
    }
  r.check("lazy.antipode_identity_aSa", "sum a(1)S(a(2))a(3) = a", w1.empty(), w1);
  r.check("lazy.antipode_identity_SaS", "sum S(a(1))a(2)S(a(3)) = S(a)", w2.empty(), w2);

  wit.clear();
  for (const auto& a : probes)
    if (LPG::antipode(LPG::antipode(a)) != a && wit.empty()) wit = "S(S(a)) != a";
  r.check("lazy.antipode_involution", "S o S = id", wit.empty(), wit);

  // Multiplier level: equalities of multipliers tested against probes only.
  auto probe_check = [&](const std::string& name, const std::string& anchor, bool ok,
                         const std::string& w) {
    r.add(name, anchor, ok ? Status::VerifiedOnProbes : Status::Fail, ok ? probe_note : w);
  };

  wit.clear();
  for (const auto& a : probes)
    for (const auto& b : probes)
      for (const auto& c : probes) {
        if (!wit.empty()) break;
        if (LPG::delta_times_one_b(LPG::mul(a, b), c) != delta_act(a, LPG::delta_times_one_b(b, c)))
          wit = "Delta(ab)(1(x)c) != Delta(a)Delta(b)(1(x)c)";
      }
  probe_check("lazy.homomorphism", "coproduct is multiplicative", wit.empty(), wit);

  wit.clear();
  for (const auto& a : probes)
    for (const auto& b : probes) {
      LPG::Elem2 x = tensor_elem(a, b);
      if (E_act(E_act(x)) != E_act(x) && wit.empty()) wit = "E E x != E x";
      LPG::Elem2 d = LPG::delta_times_one_b(a, b);
      if (E_act(d) != d && wit.empty()) wit = "E Delta(a)(1(x)b) != Delta(a)(1(x)b)";
    }
  probe_check("lazy.E_idempotent_absorbs", "E^2 = E and E Delta(a) = Delta(a)", wit.empty(), wit);

  wit.clear();
  for (const auto& p : arrows)
    for (const auto& q : arrows)
      for (const auto& s : arrows) {
        auto pq = LPG::compose(p, q);
        bool lhs = pq && LPG::compose(*pq, s);
        bool rhs = LPG::compose(p, q) && LPG::compose(q, s);
        if (lhs != rhs && wit.empty())
          wit = "at " + arrow_name(p) + "," + arrow_name(q) + "," + arrow_name(s);
      }
  probe_check("lazy.E_weak_comultiplicativity", "(Delta(x)id)E = (E(x)1)(1(x)E)", wit.empty(), wit);

  // eps_s(a) b = sum S(a(1)) a(2) b: p^-1 = q = t forces p = t^-1, r = t^-1 t.
  wit.clear();
  for (const auto& a : probes)
    for (const auto& b : probes)
      for (const auto& c : probes) {
        LPG::Elem eb, expected;
        for (const auto& [t, y] : b) {
          auto unit = LPG::compose(LPG::inverse(t), t);
          auto it = a.find(*unit);
          if (it != a.end()) eb[t] += it->second * y;
          for (const auto& [u, x] : a)
            if (LPG::is_unit(u) && u.first == t.second) expected[t] += x * y;
        }
        prune(eb);
        prune(expected);
        // Left and right actions agree (commutative) and are compatible.
        if ((eb != expected || LPG::mul(eb, c) != LPG::mul(c, eb)) && wit.empty())
          wit = "eps_s(a)b differs from the source indicator action";
      }
  probe_check("lazy.source_map_multiplier", "eps_s(a) is a multiplier: indicator of source",
              wit.empty(), wit);
  return r;
}

}  // namespace wmha
