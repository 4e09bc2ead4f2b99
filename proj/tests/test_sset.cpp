#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdkit/cat.hpp"
#include "sdkit/sset.hpp"

using namespace sdkit;

namespace {

SSetPtr share(TruncSSet x) { return std::make_shared<TruncSSet>(std::move(x)); }

// Independent nerve oracle for the action of an operator on a chain:
// vertex i of alpha^*(sigma) is vertex alpha(i) of sigma, and the arrows are
// the composites between consecutive chosen vertices.
std::vector<int> nerve_act_oracle(const FinCat& c, const std::vector<int>& chain,
                                  const OrdinalMap& alpha) {
  int k = static_cast<int>(chain.size());
  auto vertex_obj = [&](int i) {
    return i == 0 ? (k == 0 ? chain[0] : c.src(chain[0]))
                  : c.tgt(chain[static_cast<size_t>(i - 1)]);
  };
  auto arrow_between = [&](int a, int b) {
    int m = c.identity[static_cast<size_t>(vertex_obj(a))];
    for (int j = a; j < b; ++j) m = c.compose(chain[static_cast<size_t>(j)], m);
    return m;
  };
  if (alpha.dom == 0) return {vertex_obj(alpha(0))};
  std::vector<int> out;
  for (int i = 0; i < alpha.dom; ++i) out.push_back(arrow_between(alpha(i), alpha(i + 1)));
  return out;
}

Functor surjection_210() {
  Functor f2;
  f2.source = std::make_shared<FinCat>(ordinal_category(2));
  f2.target = std::make_shared<FinCat>(ordinal_category(1));
  f2.object_map = {0, 0, 1};
  const FinCat& s = *f2.source;
  const FinCat& t = *f2.target;
  for (int m = 0; m < s.num_morphisms(); ++m) {
    int a = f2.object_map[static_cast<size_t>(s.src(m))];
    int b = f2.object_map[static_cast<size_t>(s.tgt(m))];
    for (int w = 0; w < t.num_morphisms(); ++w)
      if (t.src(w) == a && t.tgt(w) == b) f2.morphism_map.push_back(w);
  }
  return f2;
}

}  // namespace

TEST_CASE("representable levels and validity") {
  auto d0 = representable(0, 2);
  CHECK(d0.level_size(0) == 1);
  CHECK(d0.level_size(1) == 1);
  CHECK(d0.level_size(2) == 1);
  CHECK(validate(d0).ok);

  auto d1 = representable(1, 1);
  CHECK(d1.level_size(0) == 2);
  CHECK(d1.level_size(1) == 3);

  auto d2 = representable(2, 2);
  CHECK(d2.level_size(0) == 3);
  CHECK(d2.level_size(1) == 6);
  CHECK(d2.level_size(2) == 10);
  CHECK(validate(d2).ok);
  CHECK(validate(representable(3, 5)).ok);
}

TEST_CASE("validate flags a constructed violation with a witness") {
  auto x = representable(1, 2);
  x.faces[2][0][0] = (x.faces[2][0][0] + 1) % x.level_size(1);
  auto rep = validate(x);
  CHECK_FALSE(rep.ok);
  CHECK(!rep.violations.empty());
}

TEST_CASE("act: identity, Yoneda action, functoriality") {
  auto d2 = representable(2, 2);
  int top = representable_index(2, OrdinalMap::identity(2));
  CHECK(act(d2, OrdinalMap::identity(2), top) == top);
  int e02 = act(d2, OrdinalMap{1, 2, {0, 2}}, top);
  CHECK(representable_elem(2, 1, e02) == OrdinalMap{1, 2, {0, 2}});

  auto d3 = representable(3, 4);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (const auto& beta : enumerate_ordinal_maps(a, b))
          for (const auto& alpha : enumerate_ordinal_maps(b, c))
            for (int e = 0; e < d3.level_size(c); ++e) {
              CHECK(act(d3, compose(alpha, beta), e) ==
                    act(d3, beta, act(d3, alpha, e)));
              CHECK(representable_elem(3, a, act(d3, beta, act(d3, alpha, e))) ==
                    compose(compose(representable_elem(3, c, e), alpha), beta));
            }
}

TEST_CASE("nerve: terminal, poset [1], free-living iso, action oracle") {
  auto t = nerve(terminal_category(), 3);
  for (int k = 0; k <= 3; ++k) CHECK(t.level_size(k) == 1);
  CHECK(validate(t).ok);

  auto n1 = nerve(ordinal_category(1), 3);
  auto r1 = representable(1, 3);
  CHECK(find_isomorphism(n1, r1).has_value());

  auto e1 = nerve(free_living_iso(), 2);
  CHECK(e1.level_size(0) == 2);
  CHECK(e1.level_size(1) == 4);
  CHECK(e1.level_size(2) == 8);
  CHECK(validate(e1).ok);

  auto c = ordinal_category(2);
  auto n2 = nerve(c, 4);
  CHECK(validate(n2).ok);
  for (int k = 1; k <= 3; ++k)
    for (int m = 0; m <= k; ++m)
      for (const auto& alpha : enumerate_ordinal_maps(m, k))
        for (int e = 0; e < n2.level_size(k); ++e) {
          auto chain = nerve_chain(c, k, e);
          auto expect = nerve_act_oracle(c, chain, alpha);
          int got = act(n2, alpha, e);
          CHECK(nerve_chain(c, m, got) == expect);
        }
}

TEST_CASE("nerve 2-chain: the (0,2) edge is the composite") {
  auto c = ordinal_category(2);
  auto n = nerve(c, 3);
  int m01 = -1, m12 = -1, m02 = -1;
  for (int m = 0; m < c.num_morphisms(); ++m) {
    if (c.src(m) == 0 && c.tgt(m) == 1) m01 = m;
    if (c.src(m) == 1 && c.tgt(m) == 2) m12 = m;
    if (c.src(m) == 0 && c.tgt(m) == 2) m02 = m;
  }
  int chain = nerve_index(c, {m01, m12}, -1);
  int edge = act(n, OrdinalMap{1, 2, {0, 2}}, chain);
  CHECK(nerve_chain(c, 1, edge) == std::vector<int>{m02});
}

TEST_CASE("sd: level counts, point, nerve(twisted arrow) comparison") {
  auto s = sd(representable(1, 3));
  CHECK(s.dim == 1);
  CHECK(s.level_size(0) == 3);
  CHECK(s.level_size(1) == 5);
  CHECK(validate(s).ok);

  auto pt = sd(representable(0, 3));
  CHECK(pt.level_size(0) == 1);
  CHECK(pt.level_size(1) == 1);

  for (auto base : {ordinal_category(1), ordinal_category(2), cospan_category(),
                    parallel_pair(), free_living_iso()}) {
    int dprime = 2;
    auto snc = sd(nerve(base, 2 * dprime + 1));
    auto ntw = nerve(twisted_arrow(base), dprime);
    CHECK(validate(snc).ok);
    CHECK(validate(ntw).ok);
    CHECK(find_isomorphism(snc, ntw).has_value());
  }
}

TEST_CASE("sd_of_map: identity and last-vertex inclusion") {
  auto x = share(representable(1, 3));
  CHECK(is_levelwise_bijection(sd_of_map(identity_smap(x))));

  SMap incl;
  incl.source = share(representable(0, 3));
  incl.target = x;
  incl.components.resize(4);
  for (int k = 0; k <= 3; ++k) {
    auto cst = OrdinalMap{k, 1, std::vector<int>(static_cast<size_t>(k) + 1, 1)};
    incl.components[static_cast<size_t>(k)] = {representable_index(1, cst)};
  }
  require_smap(incl);
  auto sincl = sd_of_map(incl);
  require_smap(sincl);
  CHECK(representable_elem(1, 1, sincl.at(0, 0)) == OrdinalMap{1, 1, {1, 1}});
}

TEST_CASE("pullback: identity, disjoint fibers, fiber count oracle") {
  auto x = share(representable(1, 2));
  auto idx = identity_smap(x);
  auto pb = pullback(idx, idx);
  CHECK(find_isomorphism(*pb.object, *x).has_value());
  require_smap(pb.proj_first);
  require_smap(pb.proj_second);

  SMap v0, v1;
  v0.source = share(representable(0, 2));
  v1.source = v0.source;
  v0.target = x;
  v1.target = x;
  v0.components.resize(3);
  v1.components.resize(3);
  for (int k = 0; k <= 2; ++k) {
    v0.components[static_cast<size_t>(k)] = {representable_index(
        1, OrdinalMap{k, 1, std::vector<int>(static_cast<size_t>(k) + 1, 0)})};
    v1.components[static_cast<size_t>(k)] = {representable_index(
        1, OrdinalMap{k, 1, std::vector<int>(static_cast<size_t>(k) + 1, 1)})};
  }
  auto empty = pullback(v0, v1);
  for (int k = 0; k <= 2; ++k) CHECK(empty.object->level_size(k) == 0);

  auto f = nerve_of_functor(surjection_210(), 3);
  auto pb2 = pullback(f, f);
  require_smap(pb2.proj_first);
  for (int k = 0; k <= 3; ++k) {
    long long expect = 0;
    std::vector<int> count(static_cast<size_t>(f.target->level_size(k)), 0);
    for (int e = 0; e < f.source->level_size(k); ++e)
      ++count[static_cast<size_t>(f.at(k, e))];
    for (int v : count) expect += static_cast<long long>(v) * v;
    CHECK(pb2.object->level_size(k) == expect);
  }
}

TEST_CASE("decalage: point, chains of [1], commutation") {
  auto dt = dec_top(representable(0, 2));
  CHECK(find_isomorphism(dt, representable(0, 1)).has_value());

  auto n1 = nerve(ordinal_category(1), 3);
  auto d = dec_top(n1);
  CHECK(d.level_size(0) == 3);
  CHECK(d.level_size(1) == 4);
  CHECK(d.level_size(2) == 5);
  CHECK(validate(d).ok);

  for (auto base : {nerve(ordinal_category(2), 4), representable(2, 4)}) {
    auto ab = dec_bot(dec_top(base));
    auto ba = dec_top(dec_bot(base));
    CHECK(ab.faces == ba.faces);
    CHECK(ab.degens == ba.degens);
    CHECK(validate(ab).ok);
  }
}

TEST_CASE("slice: representable, nerve vs 1-categorical slice, point") {
  auto r = slice(representable(1, 3), 1);
  CHECK(r.object->level_size(0) == 2);
  CHECK(r.object->level_size(1) == 3);
  CHECK(validate(*r.object).ok);
  require_smap(r.projection);

  auto s2 = slice(nerve(ordinal_category(2), 4), 2);
  CHECK(find_isomorphism(*s2.object, nerve(ordinal_category(2), 3)).has_value());
  auto s0 = slice(nerve(ordinal_category(2), 4), 0);
  CHECK(find_isomorphism(*s0.object, nerve(terminal_category(), 3)).has_value());

  auto sp = slice(representable(0, 2), 0);
  CHECK(find_isomorphism(*sp.object, representable(0, 1)).has_value());
}

TEST_CASE("interval: factorization counts in nerves") {
  auto c1 = ordinal_category(1);
  auto n1 = nerve(c1, 4);
  int a01 = -1;
  for (int m = 0; m < c1.num_morphisms(); ++m)
    if (c1.src(m) == 0 && c1.tgt(m) == 1) a01 = m;
  auto iv = interval(n1, nerve_index(c1, {a01}, -1));
  CHECK(iv.object->level_size(0) == 2);
  CHECK(validate(*iv.object).ok);
  CHECK(iv.initial_vertex != iv.terminal_vertex);

  auto c2 = ordinal_category(2);
  auto n2 = nerve(c2, 4);
  int m02 = -1;
  for (int m = 0; m < c2.num_morphisms(); ++m)
    if (c2.src(m) == 0 && c2.tgt(m) == 2) m02 = m;
  auto iv2 = interval(n2, nerve_index(c2, {m02}, -1));
  CHECK(iv2.object->level_size(0) == 3);

  int sdeg = n2.degen(0, 0, 1);
  auto iv3 = interval(n2, sdeg);
  CHECK(iv3.object->level_size(0) == 1);
}

TEST_CASE("Yoneda: maps from representables correspond to simplices") {
  auto objs = std::vector<TruncSSet>{nerve(cospan_category(), 3), representable(2, 3),
                                     nerve(parallel_pair(), 3)};
  for (const auto& xo : objs) {
    auto xp = share(xo);
    for (int n = 0; n <= 2; ++n) {
      auto dn = share(representable(n, xo.dim));
      int found = 0;
      for (int sigma = 0; sigma < xo.level_size(n); ++sigma) {
        SMap f;
        f.source = dn;
        f.target = xp;
        f.components.resize(static_cast<size_t>(xo.dim) + 1);
        for (int k = 0; k <= xo.dim; ++k) {
          f.components[static_cast<size_t>(k)].resize(
              static_cast<size_t>(dn->level_size(k)));
          for (int e = 0; e < dn->level_size(k); ++e)
            f.components[static_cast<size_t>(k)][static_cast<size_t>(e)] =
                act(xo, representable_elem(n, k, e), sigma);
        }
        if (smap_commutes(f)) ++found;
      }
      CHECK(found == xo.level_size(n));
    }
  }
}

TEST_CASE("builder: horn, boundary, and a full simplex from cells") {
  SSetBuilder b;
  int v0 = b.add_cell(0, {}, "v0");
  int v1 = b.add_cell(0, {}, "v1");
  int v2 = b.add_cell(0, {}, "v2");
  auto vert = [&](int v) { return SSetBuilder::FormalElem{OrdinalMap::identity(0), v}; };
  b.add_cell(1, {vert(v1), vert(v0)}, "e01");  // d0 = target, d1 = source
  b.add_cell(1, {vert(v2), vert(v1)}, "e12");
  auto horn = b.build(2);
  CHECK(validate(horn).ok);
  CHECK(horn.level_size(0) == 3);
  CHECK(horn.level_size(1) == 5);
  int nondeg2 = 0;
  for (int e = 0; e < horn.level_size(2); ++e)
    if (!is_degenerate(horn, 2, e)) ++nondeg2;
  CHECK(nondeg2 == 0);

  SSetBuilder bb;
  int w0 = bb.add_cell(0, {}, "0");
  int w1 = bb.add_cell(0, {}, "1");
  int w2 = bb.add_cell(0, {}, "2");
  auto wv = [&](int v) { return SSetBuilder::FormalElem{OrdinalMap::identity(0), v}; };
  bb.add_cell(1, {wv(w1), wv(w0)}, "e01");
  bb.add_cell(1, {wv(w2), wv(w1)}, "e12");
  bb.add_cell(1, {wv(w2), wv(w0)}, "e02");
  auto bd = bb.build(3);
  CHECK(validate(bd).ok);
  CHECK(bd.level_size(0) == 3);
  CHECK(bd.level_size(1) == 6);

  SSetBuilder bt;
  int u0 = bt.add_cell(0, {}, "0");
  int u1 = bt.add_cell(0, {}, "1");
  int u2 = bt.add_cell(0, {}, "2");
  auto uv = [&](int v) { return SSetBuilder::FormalElem{OrdinalMap::identity(0), v}; };
  int e01 = bt.add_cell(1, {uv(u1), uv(u0)}, "e01");
  int e12 = bt.add_cell(1, {uv(u2), uv(u1)}, "e12");
  int e02 = bt.add_cell(1, {uv(u2), uv(u0)}, "e02");
  auto ed = [&](int e) { return SSetBuilder::FormalElem{OrdinalMap::identity(1), e}; };
  bt.add_cell(2, {ed(e12), ed(e02), ed(e01)}, "t");
  auto full = bt.build(4);
  CHECK(validate(full).ok);
  CHECK(find_isomorphism(full, representable(2, 4)).has_value());
}

TEST_CASE("isomorphism search: positive and negative cases") {
  CHECK(find_isomorphism(representable(2, 3), representable(2, 3)).has_value());
  CHECK_FALSE(find_isomorphism(representable(2, 3), representable(1, 3)).has_value());
  auto a = nerve(free_living_iso(), 2);
  auto b = nerve(product_category(cyclic_group_2(), discrete_category(2)), 2);
  CHECK(a.level_size(0) == b.level_size(0));
  CHECK(a.level_size(1) == b.level_size(1));
  CHECK_FALSE(find_isomorphism(a, b).has_value());
}

TEST_CASE("empty simplicial set behaves") {
  auto e = empty_sset(3);
  CHECK(validate(e).ok);
  auto se = sd(e);
  CHECK(se.level_size(0) == 0);
}
