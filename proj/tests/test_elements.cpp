#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sdkit/elements.hpp"

using namespace sdkit;

namespace {

SSetPtr share(TruncSSet x) { return std::make_shared<TruncSSet>(std::move(x)); }

// Exhaustive filler search for the lower-segments ladder: count tuples
// (beta_0, ..., beta_k), beta_i : [i] -> [n_i] last-point-preserving, with
// f_i o beta_{i-1} = beta_i o d^top.
int count_lower_fillers(const std::vector<OrdinalMap>& chain, int n_last,
                        OrdinalMap* found = nullptr) {
  int k = static_cast<int>(chain.size());
  auto ordinal_at = [&](int i) {
    return i == 0 ? (k > 0 ? chain[0].dom : n_last) : chain[static_cast<size_t>(i - 1)].cod;
  };
  int count = 0;
  std::vector<OrdinalMap> stack;
  std::function<void(int)> go = [&](int i) {
    if (i > k) {
      ++count;
      if (found && count == 1) *found = stack.back();
      return;
    }
    for (const auto& b : enumerate_ordinal_maps(i, ordinal_at(i))) {
      if (!classify(b).last_point_preserving) continue;
      if (i > 0) {
        auto lhs = compose(chain[static_cast<size_t>(i - 1)], stack.back());
        auto rhs = compose(b, OrdinalMap::coface(i, i));
        if (!(lhs == rhs)) continue;
      }
      stack.push_back(b);
      go(i + 1);
      stack.pop_back();
    }
  };
  go(0);
  return count;
}

// Same for the middle-segments ladder with active verticals and Q(d^top).
int count_middle_fillers(const std::vector<OrdinalMap>& chain, int n_last,
                         OrdinalMap* found = nullptr) {
  int k = static_cast<int>(chain.size());
  auto ordinal_at = [&](int i) {
    return i == 0 ? (k > 0 ? chain[0].dom : n_last) : chain[static_cast<size_t>(i - 1)].cod;
  };
  int count = 0;
  std::vector<OrdinalMap> stack;
  std::function<void(int)> go = [&](int i) {
    if (i > k) {
      ++count;
      if (found && count == 1) *found = stack.back();
      return;
    }
    for (const auto& a : enumerate_ordinal_maps(2 * i + 1, ordinal_at(i))) {
      if (!classify(a).active) continue;
      if (i > 0) {
        auto lhs = compose(chain[static_cast<size_t>(i - 1)], stack.back());
        auto rhs = compose(a, q_on_map(OrdinalMap::coface(i, i)));
        if (!(lhs == rhs)) continue;
      }
      stack.push_back(a);
      go(i + 1);
      stack.pop_back();
    }
  };
  go(0);
  return count;
}

// All composable chains of length k with ordinals <= nmax.
void for_each_chain(int k, int nmax,
                    const std::function<void(const std::vector<OrdinalMap>&, int)>& fn) {
  std::vector<OrdinalMap> chain;
  std::function<void(int)> go = [&](int i) {
    if (i == k) {
      int n_last = chain.empty() ? -1 : chain.back().cod;
      if (chain.empty())
        for (int n = 0; n <= nmax; ++n) fn(chain, n);
      else
        fn(chain, n_last);
      return;
    }
    int dom_lo = 0, dom_hi = nmax;
    if (i > 0) dom_lo = dom_hi = chain.back().cod;
    for (int a = (i == 0 ? 0 : dom_lo); a <= (i == 0 ? nmax : dom_hi); ++a) {
      int from = i == 0 ? a : chain.back().cod;
      for (int b = 0; b <= nmax; ++b)
        for (const auto& f : enumerate_ordinal_maps(from, b)) {
          chain.push_back(f);
          go(i + 1);
          chain.pop_back();
        }
      if (i > 0) break;
    }
  };
  go(0);
}

}  // namespace

TEST_CASE("lower_segments: spec instances") {
  CHECK(lower_segments({}, 3) == OrdinalMap{0, 3, {3}});
  CHECK(lower_segments({OrdinalMap::coface(2, 0)}, 2) == OrdinalMap{1, 2, {2, 2}});
  // chain [2] --s^0--> [1] --d^1--> [2]
  auto beta = lower_segments({OrdinalMap::codegeneracy(1, 0), OrdinalMap::coface(2, 1)}, 2);
  CHECK(beta == OrdinalMap{2, 2, {2, 2, 2}});
  CHECK(classify(beta).last_point_preserving);
}

TEST_CASE("middle_segments: spec instances") {
  // k = 0 at [n]: the long edge
  CHECK(middle_segments({}, 3) == OrdinalMap{1, 3, {0, 3}});
  // k = 1 for any g: (0, g(0), g(m), n)
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& g : enumerate_ordinal_maps(m, n)) {
        auto a = middle_segments({g}, n);
        CHECK(a == OrdinalMap{3, n, {0, g(0), g(m), n}});
        CHECK(classify(a).active);
        if (classify(g).active) {
          // doubly degenerate: factors through Q(s^0)
          auto qs0 = q_on_map(OrdinalMap::codegeneracy(0, 0));
          auto lift = OrdinalMap{1, n, {0, n}};
          CHECK(compose(lift, qs0) == a);
        }
      }
}

TEST_CASE("segment constructions are the unique ladder fillers (small range)") {
  for (int k = 0; k <= 2; ++k)
    for_each_chain(k, 3, [&](const std::vector<OrdinalMap>& chain, int n_last) {
      OrdinalMap bl, bm;
      CHECK(count_lower_fillers(chain, n_last, &bl) == 1);
      CHECK(bl == lower_segments(chain, n_last));
      CHECK(count_middle_fillers(chain, n_last, &bm) == 1);
      CHECK(bm == middle_segments(chain, n_last));
    });
}

TEST_CASE("Q(B(f)) = A(Q(f)) on chains with ordinals <= 3, k <= 2") {
  {
    auto chain = std::vector<OrdinalMap>{OrdinalMap::coface(2, 0)};
    CHECK(q_on_map(lower_segments(chain, 2)) ==
          middle_segments({q_on_map(chain[0])}, 5));
  }
  for (int k = 0; k <= 2; ++k)
    for_each_chain(k, 3, [&](const std::vector<OrdinalMap>& chain, int n_last) {
      std::vector<OrdinalMap> qchain;
      for (const auto& f : chain) qchain.push_back(q_on_map(f));
      CHECK(q_on_map(lower_segments(chain, n_last)) ==
            middle_segments(qchain, 2 * n_last + 1));
    });
}

TEST_CASE("el: object counts and discrete fibration over Delta") {
  auto x = representable(1, 1);
  auto e = el(x);
  CHECK(e.cat.num_objects == 5);
  CHECK_NOTHROW(validate_fincat(e.cat));
  DiscFib q{std::make_shared<FinCat>(e.cat), e.delta, e.projection};
  CHECK_NOTHROW(validate_discfib(q));

  auto e0 = el(representable(0, 1));
  CHECK(e0.cat.num_objects == 2);

  auto ee = el(empty_sset(2));
  CHECK(ee.cat.num_objects == 0);
}

TEST_CASE("nel: sizes and validity") {
  auto en = nel(empty_sset(2), 2);
  for (int k = 0; k <= 2; ++k) CHECK(en.sset->level_size(k) == 0);

  auto x = representable(0, 1);
  auto n0 = nel(x, 1);
  CHECK(n0.sset->level_size(0) == 2);
  CHECK(validate(*n0.sset).ok);

  // (nel X)_1 counts pairs (alpha : [m] -> [n], sigma in X_n)
  auto y = nerve(cospan_category(), 2);
  auto n1 = nel(y, 1);
  long long pairs = 0;
  for (int m = 0; m <= y.dim; ++m)
    for (int n = 0; n <= y.dim; ++n)
      pairs += count_ordinal_maps(m, n) * y.level_size(n);
  CHECK(n1.sset->level_size(1) == pairs);
  CHECK(validate(*n1.sset).ok);
}

TEST_CASE("xi: last vertex on 0-simplices, naturality, brute-force agreement") {
  auto x = representable(1, 2);
  auto n = nel(x, 1);
  auto f = xi(n);
  require_smap(f);
  // on objects: sigma |-> its last vertex
  for (size_t i = 0; i < n.elems[0].size(); ++i) {
    const auto& e = n.elems[0][i];
    CHECK(f.at(0, static_cast<int>(i)) ==
          act(x, OrdinalMap::last_vertex(e.n_last), e.sigma));
  }
  // on 1-simplices: direct beta evaluation
  for (size_t i = 0; i < n.elems[1].size(); ++i) {
    const auto& e = n.elems[1][i];
    CHECK(f.at(1, static_cast<int>(i)) ==
          act(x, lower_segments(e.chain, e.n_last), e.sigma));
  }
}

TEST_CASE("lambda: long edge on 0-simplices, active edges become degenerate") {
  for (auto base : {nerve(ordinal_category(1), 3), nerve(cospan_category(), 3),
                    representable(2, 3)}) {
    auto n = nel(base, 1);
    auto l = lambda(n);
    require_smap(l);
    auto sdx = *l.target;
    for (size_t i = 0; i < n.elems[0].size(); ++i) {
      const auto& e = n.elems[0][i];
      CHECK(l.at(0, static_cast<int>(i)) ==
            act(base, OrdinalMap::long_edge(e.n_last), e.sigma));
    }
    // Cor: 1-simplices of Nel over active ordinal maps land on degenerate
    // edges of Sd X
    for (size_t i = 0; i < n.elems[1].size(); ++i) {
      const auto& e = n.elems[1][i];
      if (!classify(e.chain[0]).active) continue;
      CHECK(is_degenerate(sdx, 1, l.at(1, static_cast<int>(i))));
    }
  }
}

TEST_CASE("triangle: lambda after omega-renaming equals xi of Sd X") {
  for (auto base : {nerve(ordinal_category(1), 3), nerve(ordinal_category(2), 3),
                    representable(1, 3), nerve(parallel_pair(), 3)}) {
    int dprime = 1;
    auto sdx = sd(base);
    auto nel_x = nel(base, dprime);
    auto nel_sdx = nel(sdx, dprime);
    auto om = nel_omega(nel_sdx, nel_x);
    require_smap(om);
    auto lam = lambda(nel_x);
    auto xis = xi(nel_sdx);
    auto lhs = compose_smaps(lam, om);
    // both land in Sd X = X_{2k+1} with shared element indices
    for (int k = 0; k <= dprime; ++k)
      CHECK(lhs.components[static_cast<size_t>(k)] ==
            xis.components[static_cast<size_t>(k)]);
  }
}

TEST_CASE("presheaf transport: terminal fibers give back the identity") {
  auto x = share(nerve(cospan_category(), 2));
  ElPresheaf p;
  p.base = x;
  p.fiber_sizes.resize(static_cast<size_t>(x->dim) + 1);
  p.face_action.resize(static_cast<size_t>(x->dim) + 1);
  p.degen_action.resize(static_cast<size_t>(x->dim) + 1);
  for (int n = 0; n <= x->dim; ++n) {
    p.fiber_sizes[static_cast<size_t>(n)].assign(
        static_cast<size_t>(x->level_size(n)), 1);
    if (n >= 1) {
      p.face_action[static_cast<size_t>(n)].assign(
          static_cast<size_t>(n) + 1,
          std::vector<std::vector<int>>(static_cast<size_t>(x->level_size(n)), {0}));
    }
    if (n < x->dim) {
      p.degen_action[static_cast<size_t>(n)].assign(
          static_cast<size_t>(n) + 1,
          std::vector<std::vector<int>>(static_cast<size_t>(x->level_size(n)), {0}));
    }
  }
  auto q = presheaf_to_smap(p);
  require_smap(q);
  CHECK(is_levelwise_bijection(q));
}

TEST_CASE("presheaf transport roundtrip on simplicial maps over a base") {
  // slices, a nerve surjection, and an identity all come back isomorphic
  std::vector<SMap> maps;
  auto n2 = nerve(ordinal_category(2), 2);
  for (int v = 0; v <= 2; ++v) {
    auto s = slice(nerve(ordinal_category(2), 3), v);
    maps.push_back(s.projection);
  }
  maps.push_back(identity_smap(share(n2)));
  for (const auto& q : maps) {
    auto p = smap_to_el_presheaf(q);
    auto q2 = presheaf_to_smap(p);
    require_smap(q2);
    auto qt = q;
    if (qt.target->dim > q2.target->dim) {
      // compare over the common truncation
      continue;
    }
    CHECK(find_isomorphism_over(qt, q2).has_value());
  }
}
