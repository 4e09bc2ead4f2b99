#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "sdkit/ordinal.hpp"

using namespace sdkit;

namespace {

// Pointwise evaluation oracle for composition.
std::vector<int> compose_pointwise(const OrdinalMap& g, const OrdinalMap& f) {
  std::vector<int> out;
  for (int i = 0; i <= f.dom; ++i) out.push_back(g(f(i)));
  return out;
}

bool is_active(const OrdinalMap& f) {
  return f.images.front() == 0 && f.images.back() == f.cod;
}

bool is_inert(const OrdinalMap& f) {
  for (int i = 0; i < f.dom; ++i)
    if (f(i + 1) != f(i) + 1) return false;
  return true;
}

bool is_epi(const OrdinalMap& f) {
  std::vector<bool> hit(static_cast<size_t>(f.cod) + 1, false);
  for (int v : f.images) hit[static_cast<size_t>(v)] = true;
  for (bool b : hit)
    if (!b) return false;
  return true;
}

bool is_mono(const OrdinalMap& f) {
  for (int i = 0; i < f.dom; ++i)
    if (f(i + 1) == f(i)) return false;
  return true;
}

}  // namespace

TEST_CASE("compose: identities, constants, generator composite") {
  OrdinalMap e02{1, 2, {0, 2}};
  CHECK(compose(OrdinalMap::identity(2), e02) == e02);
  CHECK(compose(e02, OrdinalMap::identity(1)) == e02);

  OrdinalMap c00{1, 1, {0, 0}};
  CHECK(compose(e02, c00) == OrdinalMap{1, 2, {0, 0}});

  // d^0 : [1]->[2] after s^0 : [2]->[1]
  auto got = compose(OrdinalMap::coface(2, 0), OrdinalMap::codegeneracy(1, 0));
  CHECK(got == OrdinalMap{2, 2, {1, 1, 2}});

  CHECK_THROWS_AS(compose(e02, e02), Error);
}

TEST_CASE("compose agrees with pointwise oracle on all pairs, dims <= 3") {
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        for (const auto& f : enumerate_ordinal_maps(a, b))
          for (const auto& g : enumerate_ordinal_maps(b, c)) {
            auto gf = compose(g, f);
            CHECK(gf.is_valid());
            CHECK(gf.images == compose_pointwise(g, f));
          }
}

TEST_CASE("classify: spec instances") {
  auto c1 = classify(OrdinalMap{1, 2, {0, 2}});
  CHECK(c1.active);
  CHECK_FALSE(c1.inert);

  auto c2 = classify(OrdinalMap{1, 2, {1, 2}});
  CHECK(c2.inert);
  CHECK_FALSE(c2.active);
  CHECK(c2.last_point_preserving);

  auto c3 = classify(OrdinalMap{2, 1, {0, 0, 1}});
  CHECK(c3.active);
  CHECK(c3.surjective);

  // generators: cofaces are injective, inner ones active, outer ones inert
  CHECK(classify(OrdinalMap::coface(2, 1)).active);
  CHECK(classify(OrdinalMap::coface(2, 0)).inert);
  CHECK(classify(OrdinalMap::coface(2, 2)).inert);
  CHECK(classify(OrdinalMap::codegeneracy(1, 0)).active);
}

TEST_CASE("classification is closed under composition, dims <= 5") {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 0; c <= 5; ++c)
        for (const auto& f : enumerate_ordinal_maps(a, b))
          for (const auto& g : enumerate_ordinal_maps(b, c)) {
            auto cf = classify(f), cg = classify(g), cgf = classify(compose(g, f));
            if (cf.active && cg.active) CHECK(cgf.active);
            if (cf.inert && cg.inert) CHECK(cgf.inert);
          }
  CHECK(classify(OrdinalMap::identity(3)).active);
  CHECK(classify(OrdinalMap::identity(3)).inert);
}

TEST_CASE("epi_mono_factorize: spec instances and laws") {
  {
    auto [epi, mono] = epi_mono_factorize(OrdinalMap{2, 2, {0, 0, 2}});
    CHECK(epi == OrdinalMap{2, 1, {0, 0, 1}});
    CHECK(mono == OrdinalMap{1, 2, {0, 2}});
  }
  {
    auto [epi, mono] = epi_mono_factorize(OrdinalMap::identity(3));
    CHECK(epi == OrdinalMap::identity(3));
    CHECK(mono == OrdinalMap::identity(3));
  }
  {
    auto [epi, mono] = epi_mono_factorize(OrdinalMap{1, 2, {1, 1}});
    CHECK(epi == OrdinalMap{1, 0, {0, 0}});
    CHECK(mono == OrdinalMap{0, 2, {1}});
  }
}

TEST_CASE("both factorizations are correct and unique, dims <= 4") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const auto& f : enumerate_ordinal_maps(m, n)) {
        {
          auto [epi, mono] = epi_mono_factorize(f);
          CHECK(is_epi(epi));
          CHECK(is_mono(mono));
          CHECK(compose(mono, epi) == f);
          // exhaustive: exactly one (epi, mono) pair through any middle ordinal
          int count = 0;
          for (int r = 0; r <= 4; ++r)
            for (const auto& e : enumerate_ordinal_maps(m, r))
              for (const auto& mo : enumerate_ordinal_maps(r, n))
                if (is_epi(e) && is_mono(mo) && compose(mo, e) == f) ++count;
          CHECK(count == 1);
        }
        {
          auto [act, inr] = active_inert_factorize(f);
          CHECK(is_active(act));
          CHECK(is_inert(inr));
          CHECK(compose(inr, act) == f);
          int count = 0;
          for (int r = 0; r <= 4; ++r)
            for (const auto& a : enumerate_ordinal_maps(m, r))
              for (const auto& i : enumerate_ordinal_maps(r, n))
                if (is_active(a) && is_inert(i) && compose(i, a) == f) ++count;
          CHECK(count == 1);
        }
      }
}

TEST_CASE("active_inert_factorize: spec instances") {
  {
    auto [act, inr] = active_inert_factorize(OrdinalMap{1, 2, {1, 2}});
    CHECK(act == OrdinalMap::identity(1));
    CHECK(inr == OrdinalMap{1, 2, {1, 2}});
  }
  {
    auto [act, inr] = active_inert_factorize(OrdinalMap{1, 2, {0, 2}});
    CHECK(act == OrdinalMap{1, 2, {0, 2}});
    CHECK(inr == OrdinalMap::identity(2));
  }
  {
    auto [act, inr] = active_inert_factorize(OrdinalMap{2, 3, {1, 1, 2}});
    CHECK(act == OrdinalMap{2, 1, {0, 0, 1}});
    CHECK(inr == OrdinalMap{1, 3, {1, 2}});
  }
}

TEST_CASE("q_on_object") {
  CHECK(q_on_object(0) == 1);
  CHECK(q_on_object(1) == 3);
  CHECK(q_on_object(4) == 9);
}

TEST_CASE("q_on_map: generator values") {
  CHECK(q_on_map(OrdinalMap::coface(1, 0)) == OrdinalMap{1, 3, {0, 3}});
  CHECK(q_on_map(OrdinalMap::codegeneracy(0, 0)) == OrdinalMap{3, 1, {0, 0, 1, 1}});
  for (int n = 0; n <= 4; ++n)
    CHECK(q_on_map(OrdinalMap::identity(n)) == OrdinalMap::identity(2 * n + 1));
  // Q(d^i) omits the positions of i and i'
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) {
      auto qd = q_on_map(OrdinalMap::coface(n, i));
      std::vector<bool> hit(static_cast<size_t>(2 * n + 2), false);
      for (int v : qd.images) hit[static_cast<size_t>(v)] = true;
      for (int v = 0; v <= 2 * n + 1; ++v) {
        bool omitted = (v == n - i) || (v == n + 1 + i);
        CHECK(hit[static_cast<size_t>(v)] == !omitted);
      }
    }
}

TEST_CASE("q_on_map is a functor, both conventions, dims <= 4") {
  for (auto conv : {Convention::Q, Convention::QPrime})
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b)
        for (int c = 0; c <= 4; ++c)
          for (const auto& f : enumerate_ordinal_maps(a, b))
            for (const auto& g : enumerate_ordinal_maps(b, c))
              CHECK(q_on_map(compose(g, f), conv) ==
                    compose(q_on_map(g, conv), q_on_map(f, conv)));
}

TEST_CASE("last-point-preserving maps go to active maps under Q, dims <= 5") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      for (const auto& f : enumerate_ordinal_maps(m, n))
        if (classify(f).last_point_preserving) CHECK(classify(q_on_map(f)).active);
}

TEST_CASE("qprime convention: first-point-preserving maps go to active maps") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const auto& f : enumerate_ordinal_maps(m, n))
        if (classify(f).first_point_preserving)
          CHECK(classify(q_on_map(f, Convention::QPrime)).active);
}

TEST_CASE("last_vertex_inclusion") {
  CHECK(last_vertex_inclusion(0) == OrdinalMap::identity(0));
  CHECK(last_vertex_inclusion(2) == OrdinalMap{0, 2, {2}});
  CHECK(last_vertex_inclusion(5) == OrdinalMap{0, 5, {5}});
}

TEST_CASE("enumerate_ordinal_maps matches binomial count") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      CHECK(static_cast<long long>(enumerate_ordinal_maps(m, n).size()) ==
            count_ordinal_maps(m, n));
}

TEST_CASE("pushout of inert along active: spec instances") {
  // trivial square at bound 1
  auto squares1 = active_inert_pushouts(1);
  bool found_trivial = false;
  for (const auto& s : squares1)
    if (s.inert_side == OrdinalMap::identity(1) &&
        s.active_side == OrdinalMap::identity(1))
      found_trivial = true;
  CHECK(found_trivial);

  // (phi = d^bot : [1]>->[2], g = s^0 : [1]->>[0]) has pushout [1]
  auto sq = pushout_inert_active(OrdinalMap::coface(2, 0),
                                 OrdinalMap::codegeneracy(0, 0));
  CHECK(sq.active_pushout.cod == 1);
  CHECK(sq.active_pushout == OrdinalMap{2, 1, {0, 1, 1}});
  CHECK(sq.inert_pushout == OrdinalMap{0, 1, {1}});
}

TEST_CASE("pushout squares commute and satisfy the universal property, bound 3") {
  auto squares = active_inert_pushouts(3);
  for (const auto& s : squares) {
    CHECK(compose(s.active_pushout, s.inert_side) ==
          compose(s.inert_pushout, s.active_side));
    int p = s.active_pushout.cod;
    // exhaustive cocone search: every cocone into [t] factors uniquely
    for (int t = 0; t <= 3; ++t) {
      for (const auto& u : enumerate_ordinal_maps(s.inert_side.cod, t))
        for (const auto& v : enumerate_ordinal_maps(s.active_side.cod, t)) {
          if (!(compose(u, s.inert_side) == compose(v, s.active_side))) continue;
          int fillers = 0;
          for (const auto& w : enumerate_ordinal_maps(p, t))
            if (compose(w, s.active_pushout) == u &&
                compose(w, s.inert_pushout) == v)
              ++fillers;
          CHECK(fillers == 1);
        }
    }
  }
}

TEST_CASE("pushout square count at bound 2 (regression from enumeration oracle)") {
  CHECK(active_inert_pushouts(2).size() == 19);
}
