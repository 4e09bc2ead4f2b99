#include "sdkit/factorization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sdkit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
};

}  // namespace

// --- comprehensive factorization -------------------------------------------------

int groth_object_index(const Presheaf& p, int c, int x) {
  int idx = 0;
  for (int o = 0; o < c; ++o) idx += p.fiber_sizes[static_cast<size_t>(o)];
  return idx + x;
}

int groth_morphism_index(const Presheaf& p, int alpha, int x) {
  const FinCat& b = *p.base;
  int idx = 0;
  for (int a = 0; a < alpha; ++a) idx += p.fiber_sizes[static_cast<size_t>(b.tgt(a))];
  return idx + x;
}

FunctorFactorization comprehensive_factorize_functor(const Functor& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  // components of the commas d0 | F, with deterministic renumbering
  std::vector<std::map<std::pair<int, int>, int>> comp(static_cast<size_t>(d.num_objects));
  Presheaf p;
  p.base = f.target;
  p.fiber_sizes.resize(static_cast<size_t>(d.num_objects));
  for (int d0 = 0; d0 < d.num_objects; ++d0) {
    std::vector<std::pair<int, int>> objs;  // (x, alpha : d0 -> F x)
    std::map<std::pair<int, int>, int> oidx;
    for (int x = 0; x < c.num_objects; ++x)
      for (int alpha = 0; alpha < d.num_morphisms(); ++alpha)
        if (d.src(alpha) == d0 && d.tgt(alpha) == f.object_map[static_cast<size_t>(x)]) {
          oidx[{x, alpha}] = static_cast<int>(objs.size());
          objs.push_back({x, alpha});
        }
    UnionFind uf(objs.size());
    for (size_t i = 0; i < objs.size(); ++i) {
      auto [x, alpha] = objs[i];
      for (int gamma = 0; gamma < c.num_morphisms(); ++gamma) {
        if (c.src(gamma) != x) continue;
        int alpha2 = d.compose(f.morphism_map[static_cast<size_t>(gamma)], alpha);
        uf.unite(static_cast<int>(i), oidx.at({c.tgt(gamma), alpha2}));
      }
    }
    std::map<int, int> renumber;
    for (size_t i = 0; i < objs.size(); ++i) {
      int root = uf.find(static_cast<int>(i));
      auto it = renumber.find(root);
      if (it == renumber.end())
        it = renumber.emplace(root, static_cast<int>(renumber.size())).first;
      comp[static_cast<size_t>(d0)][objs[i]] = it->second;
    }
    p.fiber_sizes[static_cast<size_t>(d0)] = static_cast<int>(renumber.size());
  }
  // contravariant action by precomposition
  p.action.resize(static_cast<size_t>(d.num_morphisms()));
  for (int delta = 0; delta < d.num_morphisms(); ++delta) {
    int dsrc = d.src(delta), dtgt = d.tgt(delta);
    auto& act = p.action[static_cast<size_t>(delta)];
    act.assign(static_cast<size_t>(p.fiber_sizes[static_cast<size_t>(dtgt)]), -1);
    for (const auto& [key, cid] : comp[static_cast<size_t>(dtgt)]) {
      auto [x, alpha] = key;
      int cid2 = comp[static_cast<size_t>(dsrc)].at({x, d.compose(alpha, delta)});
      act[static_cast<size_t>(cid)] = cid2;
    }
    // fibers with no comma objects have size 0; nothing to fill
    for (int v : act)
      if (v < 0) throw Error(ErrorKind::InvalidCategory, "comprehensive: action gap");
  }
  validate_presheaf(p);
  FunctorFactorization out;
  out.rfib_part = grothendieck(p);
  out.final_part.source = f.source;
  out.final_part.target = out.rfib_part.total;
  for (int x = 0; x < c.num_objects; ++x) {
    int fx = f.object_map[static_cast<size_t>(x)];
    int cid = comp[static_cast<size_t>(fx)].at({x, d.identity[static_cast<size_t>(fx)]});
    out.final_part.object_map.push_back(groth_object_index(p, fx, cid));
  }
  for (int gamma = 0; gamma < c.num_morphisms(); ++gamma) {
    int x2 = c.tgt(gamma);
    int fx2 = f.object_map[static_cast<size_t>(x2)];
    int cid = comp[static_cast<size_t>(fx2)].at({x2, d.identity[static_cast<size_t>(fx2)]});
    out.final_part.morphism_map.push_back(
        groth_morphism_index(p, f.morphism_map[static_cast<size_t>(gamma)], cid));
  }
  return out;
}

long long count_functor_fillers(const Functor& l, const Functor& u, const DiscFib& d,
                                const Functor& v) {
  const FinCat& e = *l.target;
  const FinCat& t = *d.total;
  std::vector<int> omap(static_cast<size_t>(e.num_objects), -1);
  std::vector<int> mmap(static_cast<size_t>(e.num_morphisms()), -1);
  // forced values along l
  for (int x = 0; x < l.source->num_objects; ++x) {
    int eo = l.object_map[static_cast<size_t>(x)];
    int want = u.object_map[static_cast<size_t>(x)];
    if (omap[static_cast<size_t>(eo)] >= 0 && omap[static_cast<size_t>(eo)] != want)
      return 0;
    omap[static_cast<size_t>(eo)] = want;
  }
  std::vector<std::pair<int, int>> forced_m;
  for (int m = 0; m < l.source->num_morphisms(); ++m)
    forced_m.push_back({l.morphism_map[static_cast<size_t>(m)],
                        u.morphism_map[static_cast<size_t>(m)]});
  long long count = 0;
  std::function<void(int)> dfs_m;
  std::function<void(int)> dfs_o = [&](int o) {
    if (o == e.num_objects) {
      for (auto [em, wanted] : forced_m) {
        if (mmap[static_cast<size_t>(em)] >= 0 && mmap[static_cast<size_t>(em)] != wanted)
          return;
        mmap[static_cast<size_t>(em)] = wanted;
      }
      for (int x = 0; x < e.num_objects; ++x) {
        int id = e.identity[static_cast<size_t>(x)];
        int tid = t.identity[static_cast<size_t>(omap[static_cast<size_t>(x)])];
        if (mmap[static_cast<size_t>(id)] >= 0 && mmap[static_cast<size_t>(id)] != tid) {
          for (auto [em, w] : forced_m) (void)em, (void)w;
          // reset handled below by full clear
        }
      }
      dfs_m(0);
      for (auto [em, wanted] : forced_m) (void)wanted, mmap[static_cast<size_t>(em)] = -1;
      return;
    }
    if (omap[static_cast<size_t>(o)] >= 0) {
      if (d.projection.object_map[static_cast<size_t>(omap[static_cast<size_t>(o)])] ==
          v.object_map[static_cast<size_t>(o)])
        dfs_o(o + 1);
      return;
    }
    for (int to = 0; to < t.num_objects; ++to) {
      if (d.projection.object_map[static_cast<size_t>(to)] !=
          v.object_map[static_cast<size_t>(o)])
        continue;
      omap[static_cast<size_t>(o)] = to;
      dfs_o(o + 1);
      omap[static_cast<size_t>(o)] = -1;
    }
  };
  dfs_m = [&](int m) {
    if (m == e.num_morphisms()) {
      // functor laws: identities and composition
      for (int x = 0; x < e.num_objects; ++x)
        if (mmap[static_cast<size_t>(e.identity[static_cast<size_t>(x)])] !=
            t.identity[static_cast<size_t>(omap[static_cast<size_t>(x)])])
          return;
      for (int g = 0; g < e.num_morphisms(); ++g)
        for (int h = 0; h < e.num_morphisms(); ++h)
          if (e.composable(g, h))
            if (mmap[static_cast<size_t>(e.compose(g, h))] !=
                t.compose(mmap[static_cast<size_t>(g)], mmap[static_cast<size_t>(h)]))
              return;
      ++count;
      return;
    }
    if (mmap[static_cast<size_t>(m)] >= 0) {
      int tm = mmap[static_cast<size_t>(m)];
      if (d.projection.morphism_map[static_cast<size_t>(tm)] ==
              v.morphism_map[static_cast<size_t>(m)] &&
          t.src(tm) == omap[static_cast<size_t>(e.src(m))] &&
          t.tgt(tm) == omap[static_cast<size_t>(e.tgt(m))])
        dfs_m(m + 1);
      return;
    }
    for (int tm = 0; tm < t.num_morphisms(); ++tm) {
      if (d.projection.morphism_map[static_cast<size_t>(tm)] !=
          v.morphism_map[static_cast<size_t>(m)])
        continue;
      if (t.src(tm) != omap[static_cast<size_t>(e.src(m))] ||
          t.tgt(tm) != omap[static_cast<size_t>(e.tgt(m))])
        continue;
      mmap[static_cast<size_t>(m)] = tm;
      dfs_m(m + 1);
      mmap[static_cast<size_t>(m)] = -1;
    }
  };
  dfs_o(0);
  return count;
}

// --- rfib reflection ---------------------------------------------------------------

RfibReflection rfib_reflection(const SMap& g, long long budget) {
  const TruncSSet& w = *g.source;
  const TruncSSet& z = *g.target;
  auto fc = fundamental_category(z, budget);
  const FinCat& t1 = fc.cat;
  // pairs (w0 in W_0, m in tau1 with tgt(m) = g(w0)); classes via union-find
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pidx;
  for (int w0 = 0; w0 < w.level_size(0); ++w0) {
    int gw = g.at(0, w0);
    for (int m = 0; m < t1.num_morphisms(); ++m)
      if (t1.tgt(m) == gw) {
        pidx[{w0, m}] = static_cast<int>(pairs.size());
        pairs.push_back({w0, m});
      }
  }
  UnionFind uf(pairs.size());
  auto wsrc = w.dim >= 1 ? act_table(w, OrdinalMap::first_vertex(1)) : std::vector<int>{};
  auto wtgt = w.dim >= 1 ? act_table(w, OrdinalMap::last_vertex(1)) : std::vector<int>{};
  for (int e = 0; e < (w.dim >= 1 ? w.level_size(1) : 0); ++e) {
    int ws = wsrc[static_cast<size_t>(e)];
    int wt = wtgt[static_cast<size_t>(e)];
    int me = fc.edge_to_morphism[static_cast<size_t>(g.at(1, e))];
    for (int m = 0; m < t1.num_morphisms(); ++m)
      if (t1.tgt(m) == g.at(0, ws))
        uf.unite(pidx.at({ws, m}), pidx.at({wt, t1.compose(me, m)}));
  }
  // class lists per tau1 object (= Z_0 vertex), deterministic order
  std::vector<std::vector<int>> classes_at(static_cast<size_t>(z.level_size(0)));
  std::vector<int> class_id(pairs.size(), -1);
  std::vector<int> class_pos(pairs.size(), -1);
  for (size_t i = 0; i < pairs.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    if (class_id[static_cast<size_t>(root)] < 0) {
      int zv = t1.src(pairs[static_cast<size_t>(root)].second);
      class_id[static_cast<size_t>(root)] = root;
      class_pos[static_cast<size_t>(root)] =
          static_cast<int>(classes_at[static_cast<size_t>(zv)].size());
      classes_at[static_cast<size_t>(zv)].push_back(root);
    }
  }
  auto pos_of_pair = [&](int w0, int m) {
    int root = uf.find(pidx.at({w0, m}));
    return class_pos[static_cast<size_t>(root)];
  };
  // presheaf on el(Z): fiber at (n, sigma) = classes at lastvert(sigma)
  ElPresheaf p;
  p.base = g.target;
  int d = z.dim;
  p.fiber_sizes.resize(static_cast<size_t>(d) + 1);
  p.face_action.resize(static_cast<size_t>(d) + 1);
  p.degen_action.resize(static_cast<size_t>(d) + 1);
  std::vector<std::vector<int>> lastv(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    lastv[static_cast<size_t>(n)] = act_table(z, OrdinalMap::last_vertex(n));
    for (int s = 0; s < z.level_size(n); ++s)
      p.fiber_sizes[static_cast<size_t>(n)].push_back(static_cast<int>(
          classes_at[static_cast<size_t>(lastv[static_cast<size_t>(n)][static_cast<size_t>(s)])]
              .size()));
  }
  for (int n = 1; n <= d; ++n) {
    p.face_action[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    auto last_edge = act_table(z, OrdinalMap{1, n, {n - 1, n}});
    for (int i = 0; i <= n; ++i) {
      auto& tbl = p.face_action[static_cast<size_t>(n)][static_cast<size_t>(i)];
      tbl.resize(static_cast<size_t>(z.level_size(n)));
      for (int s = 0; s < z.level_size(n); ++s) {
        int fsz = p.fiber_sizes[static_cast<size_t>(n)][static_cast<size_t>(s)];
        auto& row = tbl[static_cast<size_t>(s)];
        if (i < n) {
          row.resize(static_cast<size_t>(fsz));
          std::iota(row.begin(), row.end(), 0);
        } else {
          int zv = lastv[static_cast<size_t>(n)][static_cast<size_t>(s)];
          int me = fc.edge_to_morphism[static_cast<size_t>(
              last_edge[static_cast<size_t>(s)])];
          for (int root : classes_at[static_cast<size_t>(zv)]) {
            auto [w0, m] = pairs[static_cast<size_t>(root)];
            row.push_back(pos_of_pair(w0, t1.compose(m, me)));
          }
        }
      }
    }
  }
  for (int n = 0; n < d; ++n) {
    p.degen_action[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      auto& tbl = p.degen_action[static_cast<size_t>(n)][static_cast<size_t>(i)];
      tbl.resize(static_cast<size_t>(z.level_size(n)));
      for (int s = 0; s < z.level_size(n); ++s) {
        auto& row = tbl[static_cast<size_t>(s)];
        row.resize(static_cast<size_t>(
            p.fiber_sizes[static_cast<size_t>(n)][static_cast<size_t>(s)]));
        std::iota(row.begin(), row.end(), 0);
      }
    }
  }
  RfibReflection out;
  out.reflection = presheaf_to_smap(p);
  // unit over w: class of (last vertex of w, identity path)
  std::vector<std::vector<int>> offsets(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    offsets[static_cast<size_t>(n)].assign(static_cast<size_t>(z.level_size(n)) + 1, 0);
    for (int s = 0; s < z.level_size(n); ++s)
      offsets[static_cast<size_t>(n)][static_cast<size_t>(s + 1)] =
          offsets[static_cast<size_t>(n)][static_cast<size_t>(s)] +
          p.fiber_sizes[static_cast<size_t>(n)][static_cast<size_t>(s)];
  }
  out.unit.source = g.source;
  out.unit.target = out.reflection.source;
  int du = std::min(g.dim(), d);
  out.unit.components.resize(static_cast<size_t>(du) + 1);
  for (int n = 0; n <= du; ++n)
    for (int e = 0; e < w.level_size(n); ++e) {
      int wv = act(w, OrdinalMap::last_vertex(n), e);
      int sigma = g.at(n, e);
      int zv = lastv[static_cast<size_t>(n)][static_cast<size_t>(sigma)];
      int posv = pos_of_pair(wv, t1.identity[static_cast<size_t>(zv)]);
      out.unit.components[static_cast<size_t>(n)].push_back(
          offsets[static_cast<size_t>(n)][static_cast<size_t>(sigma)] + posv);
    }
  return out;
}

// --- untwist -------------------------------------------------------------------------

SMap untwist(const SMap& p, const TruncSSet& x, Convention conv) {
  auto sdx = sd(x, conv);
  if (!same_structure(*p.target, sdx))
    throw Error(ErrorKind::BadInput, "untwist: target of p is not Sd of the base");
  const TruncSSet& r = *p.source;
  if (p.dim() < 1 || r.dim < 1)
    throw Error(ErrorKind::OutOfTruncation, "untwist: need at least one Sd level");
  // unique-lift table: R_1 = (Sd X)_1 x_{(Sd X)_0} R_0 via (p_1, d_0)
  std::map<std::pair<int, int>, int> lift;
  for (int e = 0; e < r.level_size(1); ++e) {
    auto key = std::make_pair(p.at(1, e), r.face(1, 0, e));
    if (!lift.emplace(key, e).second)
      throw Error(ErrorKind::NotRightFibration,
                  "untwist: two lifts of an Sd edge with the same target");
  }
  auto transport = [&](int sd_edge, int r0) {
    auto it = lift.find({sd_edge, r0});
    if (it == lift.end())
      throw Error(ErrorKind::NotRightFibration, "untwist: missing edge lift");
    return r.face(1, 1, it->second);
  };
  // fibers of p over (Sd X)_0 = X_1
  std::vector<std::vector<int>> fiber(static_cast<size_t>(x.level_size(1)));
  std::vector<int> pos(static_cast<size_t>(r.level_size(0)));
  for (int r0 = 0; r0 < r.level_size(0); ++r0) {
    pos[static_cast<size_t>(r0)] =
        static_cast<int>(fiber[static_cast<size_t>(p.at(0, r0))].size());
    fiber[static_cast<size_t>(p.at(0, r0))].push_back(r0);
  }
  ElPresheaf pres;
  pres.base = std::make_shared<TruncSSet>(x);
  int d = x.dim;
  pres.fiber_sizes.resize(static_cast<size_t>(d) + 1);
  pres.face_action.resize(static_cast<size_t>(d) + 1);
  pres.degen_action.resize(static_cast<size_t>(d) + 1);
  std::vector<std::vector<int>> longe(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    longe[static_cast<size_t>(n)] = act_table(x, OrdinalMap::long_edge(n));
    for (int s = 0; s < x.level_size(n); ++s)
      pres.fiber_sizes[static_cast<size_t>(n)].push_back(static_cast<int>(
          fiber[static_cast<size_t>(longe[static_cast<size_t>(n)][static_cast<size_t>(s)])]
              .size()));
  }
  auto fill = [&](int n, const OrdinalMap& gen, std::vector<std::vector<int>>& tbl) {
    // gen : [n'] -> [n]; transport along the middle-segment edge of gen
    auto mid = middle_segments({gen}, n);
    auto sd_edges = act_table(x, mid);  // elements of X_3 = (Sd X)_1
    tbl.resize(static_cast<size_t>(x.level_size(n)));
    for (int s = 0; s < x.level_size(n); ++s) {
      int le = longe[static_cast<size_t>(n)][static_cast<size_t>(s)];
      int sd_e = sd_edges[static_cast<size_t>(s)];
      auto& row = tbl[static_cast<size_t>(s)];
      for (int r0 : fiber[static_cast<size_t>(le)])
        row.push_back(pos[static_cast<size_t>(transport(sd_e, r0))]);
    }
  };
  for (int n = 1; n <= d; ++n) {
    pres.face_action[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
      fill(n, OrdinalMap::coface(n, i),
           pres.face_action[static_cast<size_t>(n)][static_cast<size_t>(i)]);
  }
  for (int n = 0; n < d; ++n) {
    pres.degen_action[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
      fill(n, OrdinalMap::codegeneracy(n, i),
           pres.degen_action[static_cast<size_t>(n)][static_cast<size_t>(i)]);
  }
  auto q = presheaf_to_smap(pres);
  require_smap(q);
  return q;
}

// --- culf reflection ----------------------------------------------------------------

CulfFactorization culf_reflection(const SMap& f, long long budget, Convention conv) {
  auto sdf = sd_of_map(f, conv);
  auto rr = rfib_reflection(sdf, budget);
  CulfFactorization out;
  out.culf_part = untwist(rr.reflection, *f.target, conv);
  // the ambifinal part sends y to (f y, unit of the long edge of y)
  const TruncSSet& x = *f.target;
  const TruncSSet& y = *f.source;
  const TruncSSet& r = *rr.reflection.source;
  // positions of R_0 elements within the fibers over X_1, as used by untwist
  std::vector<int> pos(static_cast<size_t>(r.level_size(0)));
  std::vector<std::vector<int>> fiber(static_cast<size_t>(x.level_size(1)));
  for (int r0 = 0; r0 < r.level_size(0); ++r0) {
    pos[static_cast<size_t>(r0)] = static_cast<int>(
        fiber[static_cast<size_t>(rr.reflection.at(0, r0))].size());
    fiber[static_cast<size_t>(rr.reflection.at(0, r0))].push_back(r0);
  }
  std::vector<std::vector<int>> offsets(static_cast<size_t>(x.dim) + 1);
  for (int n = 0; n <= x.dim; ++n) {
    auto le = act_table(x, OrdinalMap::long_edge(n));
    offsets[static_cast<size_t>(n)].assign(static_cast<size_t>(x.level_size(n)) + 1, 0);
    for (int s = 0; s < x.level_size(n); ++s)
      offsets[static_cast<size_t>(n)][static_cast<size_t>(s + 1)] =
          offsets[static_cast<size_t>(n)][static_cast<size_t>(s)] +
          static_cast<int>(fiber[static_cast<size_t>(le[static_cast<size_t>(s)])].size());
  }
  out.ambifinal_part.source = f.source;
  out.ambifinal_part.target = out.culf_part.source;
  int du = std::min({f.dim(), x.dim, y.dim});
  out.ambifinal_part.components.resize(static_cast<size_t>(du) + 1);
  for (int n = 0; n <= du; ++n)
    for (int e = 0; e < y.level_size(n); ++e) {
      int ledge = act(y, OrdinalMap::long_edge(n), e);  // (Sd Y)_0 element
      int r0 = rr.unit.at(0, ledge);
      out.ambifinal_part.components[static_cast<size_t>(n)].push_back(
          offsets[static_cast<size_t>(n)][static_cast<size_t>(f.at(n, e))] +
          pos[static_cast<size_t>(r0)]);
    }
  require_smap(out.ambifinal_part);
  return out;
}

// --- Q_! ------------------------------------------------------------------------------

int QShriek::class_of(int m, int k, int sigma, const OrdinalMap& gamma) const {
  std::vector<int> key{k, sigma};
  key.insert(key.end(), gamma.images.begin(), gamma.images.end());
  auto it = triple_class[static_cast<size_t>(m)].find(key);
  if (it == triple_class[static_cast<size_t>(m)].end())
    throw Error(ErrorKind::BadInput, "q_shriek: triple not found");
  return it->second;
}

QShriek q_shriek(const TruncSSet& x, int out_dim, Convention conv) {
  QShriek out;
  out.triple_class.resize(static_cast<size_t>(out_dim) + 1);
  // representative triples per class per level
  std::vector<std::vector<std::tuple<int, int, OrdinalMap>>> reps(
      static_cast<size_t>(out_dim) + 1);
  std::vector<std::vector<std::tuple<int, int, OrdinalMap>>> triples(
      static_cast<size_t>(out_dim) + 1);
  std::vector<std::map<std::vector<int>, int>> tindex(static_cast<size_t>(out_dim) + 1);
  auto key_of = [](int k, int sigma, const OrdinalMap& gamma) {
    std::vector<int> key{k, sigma};
    key.insert(key.end(), gamma.images.begin(), gamma.images.end());
    return key;
  };
  for (int m = 0; m <= out_dim; ++m)
    for (int k = 0; k <= x.dim; ++k)
      for (int sigma = 0; sigma < x.level_size(k); ++sigma)
        for (const auto& gamma : enumerate_ordinal_maps(m, 2 * k + 1)) {
          tindex[static_cast<size_t>(m)][key_of(k, sigma, gamma)] =
              static_cast<int>(triples[static_cast<size_t>(m)].size());
          triples[static_cast<size_t>(m)].push_back({k, sigma, gamma});
        }
  std::vector<UnionFind> uf;
  for (int m = 0; m <= out_dim; ++m)
    uf.emplace_back(triples[static_cast<size_t>(m)].size());
  // generator zig-zags: u : [k] -> [k'] a coface or codegeneracy
  for (int m = 0; m <= out_dim; ++m) {
    auto relate = [&](const OrdinalMap& u) {
      if (u.cod > x.dim || u.dom > x.dim) return;
      auto qu = q_on_map(u, conv);
      auto tbl = act_table(x, u);
      for (int sig2 = 0; sig2 < x.level_size(u.cod); ++sig2)
        for (const auto& gamma : enumerate_ordinal_maps(m, 2 * u.dom + 1)) {
          int a = tindex[static_cast<size_t>(m)].at(
              key_of(u.dom, tbl[static_cast<size_t>(sig2)], gamma));
          int b = tindex[static_cast<size_t>(m)].at(
              key_of(u.cod, sig2, compose(qu, gamma)));
          uf[static_cast<size_t>(m)].unite(a, b);
        }
    };
    for (int k = 1; k <= x.dim; ++k)
      for (int i = 0; i <= k; ++i) relate(OrdinalMap::coface(k, i));
    for (int k = 0; k < x.dim; ++k)
      for (int i = 0; i <= k; ++i) relate(OrdinalMap::codegeneracy(k, i));
  }
  out.sset.init_levels(out_dim);
  std::vector<std::vector<int>> class_of_triple(static_cast<size_t>(out_dim) + 1);
  for (int m = 0; m <= out_dim; ++m) {
    class_of_triple[static_cast<size_t>(m)].assign(
        triples[static_cast<size_t>(m)].size(), -1);
    for (size_t i = 0; i < triples[static_cast<size_t>(m)].size(); ++i) {
      int root = uf[static_cast<size_t>(m)].find(static_cast<int>(i));
      if (class_of_triple[static_cast<size_t>(m)][static_cast<size_t>(root)] < 0) {
        class_of_triple[static_cast<size_t>(m)][static_cast<size_t>(root)] =
            static_cast<int>(reps[static_cast<size_t>(m)].size());
        reps[static_cast<size_t>(m)].push_back(
            triples[static_cast<size_t>(m)][static_cast<size_t>(root)]);
      }
      class_of_triple[static_cast<size_t>(m)][i] =
          class_of_triple[static_cast<size_t>(m)][static_cast<size_t>(root)];
    }
    for (size_t i = 0; i < triples[static_cast<size_t>(m)].size(); ++i) {
      const auto& [k, sigma, gamma] = triples[static_cast<size_t>(m)][i];
      out.triple_class[static_cast<size_t>(m)][key_of(k, sigma, gamma)] =
          class_of_triple[static_cast<size_t>(m)][i];
    }
    for (const auto& [k, sigma, gamma] : reps[static_cast<size_t>(m)])
      out.sset.labels[static_cast<size_t>(m)].push_back(
          "(" + std::to_string(k) + "," + std::to_string(sigma) + "," + gamma.str() + ")");
  }
  for (int m = 1; m <= out_dim; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& tbl = out.sset.faces[static_cast<size_t>(m)][static_cast<size_t>(i)];
      for (const auto& [k, sigma, gamma] : reps[static_cast<size_t>(m)])
        tbl.push_back(out.class_of(m - 1, k, sigma,
                                   compose(gamma, OrdinalMap::coface(m, i))));
    }
  for (int m = 0; m < out_dim; ++m)
    for (int i = 0; i <= m; ++i) {
      auto& tbl = out.sset.degens[static_cast<size_t>(m)][static_cast<size_t>(i)];
      for (const auto& [k, sigma, gamma] : reps[static_cast<size_t>(m)])
        tbl.push_back(out.class_of(m + 1, k, sigma,
                                   compose(gamma, OrdinalMap::codegeneracy(m, i))));
    }
  return out;
}

SMap counit_q_shriek_rep(int n, int rep_dim, int out_dim, Convention conv) {
  auto sdn = sd(representable(n, 2 * rep_dim + 1), conv);
  auto qs = q_shriek(sdn, out_dim, conv);
  SMap out;
  out.source = std::make_shared<TruncSSet>(qs.sset);
  out.target = std::make_shared<TruncSSet>(representable(n, out_dim));
  out.components.resize(static_cast<size_t>(out_dim) + 1);
  // recompute class representatives by scanning the stored triple classes
  std::vector<std::vector<std::pair<std::vector<int>, int>>> by_class(
      static_cast<size_t>(out_dim) + 1);
  for (int m = 0; m <= out_dim; ++m) {
    int nclasses = qs.sset.level_size(m);
    std::vector<std::vector<int>> rep_key(static_cast<size_t>(nclasses));
    for (const auto& [key, cls] : qs.triple_class[static_cast<size_t>(m)])
      if (rep_key[static_cast<size_t>(cls)].empty()) rep_key[static_cast<size_t>(cls)] = key;
    for (int cls = 0; cls < nclasses; ++cls) {
      const auto& key = rep_key[static_cast<size_t>(cls)];
      int k = key[0], sigma = key[1];
      OrdinalMap gamma{m, 2 * k + 1, std::vector<int>(key.begin() + 2, key.end())};
      // sigma is a map [2k+1] -> [n]; the counit composes
      auto smap = representable_elem(n, 2 * k + 1, sigma);
      out.components[static_cast<size_t>(m)].push_back(
          representable_index(n, compose(smap, gamma)));
    }
  }
  require_smap(out);
  return out;
}

SMap eta_rep_smap(int n, int out_dim, Convention conv) {
  SMap out;
  out.source = std::make_shared<TruncSSet>(representable(n, out_dim));
  out.target = std::make_shared<TruncSSet>(
      sd(representable(2 * n + 1, 2 * out_dim + 1), conv));
  out.components.resize(static_cast<size_t>(out_dim) + 1);
  for (int k = 0; k <= out_dim; ++k)
    for (const auto& gamma : enumerate_ordinal_maps(k, n))
      out.components[static_cast<size_t>(k)].push_back(
          representable_index(2 * n + 1, q_on_map(gamma, conv)));
  require_smap(out);
  return out;
}

Functor eta_rep_functor(int n) {
  auto src = std::make_shared<FinCat>(ordinal_category(n));
  auto tw = std::make_shared<FinCat>(twisted_arrow(ordinal_category(2 * n + 1)));
  const FinCat& base = ordinal_category(2 * n + 1);
  // object of Tw underlying arrow (a, b) of [2n+1]
  auto arrow_obj = [&](int a, int b) {
    for (int m = 0; m < base.num_morphisms(); ++m)
      if (base.src(m) == a && base.tgt(m) == b) return m;
    throw Error(ErrorKind::BadInput, "eta_rep_functor: arrow not found");
  };
  Functor f;
  f.source = src;
  f.target = tw;
  for (int i = 0; i <= n; ++i) f.object_map.push_back(arrow_obj(n - i, n + i + 1));
  for (int m = 0; m < src->num_morphisms(); ++m) {
    int i = src->src(m), j = src->tgt(m);
    int from = f.object_map[static_cast<size_t>(i)];
    int to = f.object_map[static_cast<size_t>(j)];
    int found = -1;
    for (int tm = 0; tm < tw->num_morphisms(); ++tm)
      if (tw->src(tm) == from && tw->tgt(tm) == to) {
        found = tm;
        break;  // poset target: at most one
      }
    if (found < 0) throw Error(ErrorKind::BadInput, "eta_rep_functor: no Tw morphism");
    f.morphism_map.push_back(found);
  }
  validate_functor(f);
  return f;
}

// --- Q_* ------------------------------------------------------------------------------

int QStar::index_of(int n, const std::vector<std::vector<int>>& comp) const {
  const auto& lv = elems[static_cast<size_t>(n)];
  for (size_t i = 0; i < lv.size(); ++i)
    if (lv[i] == comp) return static_cast<int>(i);
  throw Error(ErrorKind::BadInput, "q_star: mapping family not found");
}

QStar q_star(const TruncSSet& w, int n_max, Convention conv) {
  QStar out;
  out.w = std::make_shared<TruncSSet>(w);
  out.conv = conv;
  out.elems.resize(static_cast<size_t>(n_max) + 1);
  int dw = w.dim;
  for (int n = 0; n <= n_max; ++n) {
    // source: levels S_k = Hom([2k+1], [n]) with generator actions
    std::vector<std::vector<OrdinalMap>> s_lv(static_cast<size_t>(dw) + 1);
    for (int k = 0; k <= dw; ++k) s_lv[static_cast<size_t>(k)] = enumerate_ordinal_maps(2 * k + 1, n);
    auto s_index = [&](int, const OrdinalMap& g) { return representable_index(n, g); };
    // face targets and degeneracy preimage constraints
    std::vector<std::vector<std::vector<int>>> face_to(static_cast<size_t>(dw) + 1);
    for (int k = 1; k <= dw; ++k) {
      face_to[static_cast<size_t>(k)].resize(static_cast<size_t>(k) + 1);
      for (int i = 0; i <= k; ++i) {
        auto qd = q_on_map(OrdinalMap::coface(k, i), conv);
        for (const auto& g : s_lv[static_cast<size_t>(k)])
          face_to[static_cast<size_t>(k)][static_cast<size_t>(i)].push_back(
              s_index(k - 1, compose(g, qd)));
      }
    }
    // forced degeneracies: element at level k that equals g' o q(s^j)
    // for g' at level k-1
    std::vector<std::vector<std::vector<std::pair<int, int>>>> forced(
        static_cast<size_t>(dw) + 1);
    for (int k = 1; k <= dw; ++k) {
      forced[static_cast<size_t>(k)].resize(s_lv[static_cast<size_t>(k)].size());
      for (int j = 0; j <= k - 1; ++j) {
        auto qs = q_on_map(OrdinalMap::codegeneracy(k - 1, j), conv);
        for (size_t ep = 0; ep < s_lv[static_cast<size_t>(k - 1)].size(); ++ep) {
          int e = s_index(k, compose(s_lv[static_cast<size_t>(k - 1)][ep], qs));
          forced[static_cast<size_t>(k)][static_cast<size_t>(e)].push_back(
              {j, static_cast<int>(ep)});
        }
      }
    }
    std::vector<std::vector<int>> assign(static_cast<size_t>(dw) + 1);
    for (int k = 0; k <= dw; ++k)
      assign[static_cast<size_t>(k)].assign(s_lv[static_cast<size_t>(k)].size(), -1);
    std::function<void(int, int)> dfs = [&](int k, int e) {
      if (k > dw) {
        out.elems[static_cast<size_t>(n)].push_back(assign);
        return;
      }
      if (e == static_cast<int>(s_lv[static_cast<size_t>(k)].size())) {
        dfs(k + 1, 0);
        return;
      }
      int lo = 0, hi = w.level_size(k) - 1;
      if (!forced[static_cast<size_t>(k)].empty() &&
          !forced[static_cast<size_t>(k)][static_cast<size_t>(e)].empty()) {
        auto [j, ep] = forced[static_cast<size_t>(k)][static_cast<size_t>(e)][0];
        int v = w.degen(k - 1, j, assign[static_cast<size_t>(k - 1)][static_cast<size_t>(ep)]);
        lo = hi = v;
      }
      for (int v = lo; v <= hi; ++v) {
        bool ok = true;
        if (k >= 1)
          for (int i = 0; i <= k && ok; ++i)
            if (w.face(k, i, v) !=
                assign[static_cast<size_t>(k - 1)][static_cast<size_t>(
                    face_to[static_cast<size_t>(k)][static_cast<size_t>(i)]
                           [static_cast<size_t>(e)])])
              ok = false;
        if (!forced[static_cast<size_t>(k)].empty())
          for (auto [j, ep] : forced[static_cast<size_t>(k)][static_cast<size_t>(e)])
            if (w.degen(k - 1, j, assign[static_cast<size_t>(k - 1)][static_cast<size_t>(ep)]) != v)
              ok = false;
        if (!ok) continue;
        assign[static_cast<size_t>(k)][static_cast<size_t>(e)] = v;
        dfs(k, e + 1);
        assign[static_cast<size_t>(k)][static_cast<size_t>(e)] = -1;
      }
    };
    if (dw >= 0) {
      // level 0 has no constraints beyond later levels; forced[0] empty
      forced[0].resize(s_lv[0].size());
      dfs(0, 0);
    }
  }
  // assemble the simplicial set
  auto ss = std::make_shared<TruncSSet>();
  ss->init_levels(n_max);
  for (int n = 0; n <= n_max; ++n)
    for (size_t i = 0; i < out.elems[static_cast<size_t>(n)].size(); ++i)
      ss->labels[static_cast<size_t>(n)].push_back("phi" + std::to_string(i));
  auto precompose = [&](int n2, int n, const OrdinalMap& alpha,
                        const std::vector<std::vector<int>>& phi) {
    // alpha : [n2] -> [n]; result at level k: gamma |-> phi_k(alpha o gamma)
    std::vector<std::vector<int>> res(static_cast<size_t>(dw) + 1);
    for (int k = 0; k <= dw; ++k) {
      for (const auto& g : enumerate_ordinal_maps(2 * k + 1, n2))
        res[static_cast<size_t>(k)].push_back(
            phi[static_cast<size_t>(k)][static_cast<size_t>(
                representable_index(n, compose(alpha, g)))]);
    }
    return res;
  };
  for (int n = 1; n <= n_max; ++n)
    for (int i = 0; i <= n; ++i) {
      auto& tbl = ss->faces[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& phi : out.elems[static_cast<size_t>(n)])
        tbl.push_back(out.index_of(n - 1, precompose(n - 1, n, OrdinalMap::coface(n, i), phi)));
    }
  for (int n = 0; n < n_max; ++n)
    for (int i = 0; i <= n; ++i) {
      auto& tbl = ss->degens[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& phi : out.elems[static_cast<size_t>(n)])
        tbl.push_back(
            out.index_of(n + 1, precompose(n + 1, n, OrdinalMap::codegeneracy(n, i), phi)));
    }
  out.sset = ss;
  return out;
}

SMap eta_prime(const TruncSSet& x, const QStar& qsw) {
  auto sdx = sd(x, qsw.conv);
  if (!same_structure(*qsw.w, sdx))
    throw Error(ErrorKind::BadInput, "eta_prime: q_star target is not Sd of the base");
  int n_max = static_cast<int>(qsw.elems.size()) - 1;
  int d = std::min(n_max, x.dim);
  SMap out;
  out.source = std::make_shared<TruncSSet>(truncate(x, d));
  out.target = qsw.sset;
  out.components.resize(static_cast<size_t>(d) + 1);
  int dw = qsw.w->dim;
  for (int n = 0; n <= d; ++n)
    for (int sigma = 0; sigma < x.level_size(n); ++sigma) {
      std::vector<std::vector<int>> comp(static_cast<size_t>(dw) + 1);
      for (int k = 0; k <= dw; ++k)
        for (const auto& g : enumerate_ordinal_maps(2 * k + 1, n))
          comp[static_cast<size_t>(k)].push_back(act(x, g, sigma));
      out.components[static_cast<size_t>(n)].push_back(qsw.index_of(n, comp));
    }
  require_smap(out);
  return out;
}

SMap eps_prime(const QStar& qsw) {
  int n_max = static_cast<int>(qsw.elems.size()) - 1;
  if (n_max < 1)
    throw Error(ErrorKind::OutOfTruncation, "eps_prime: need q_star to degree >= 1");
  auto src = sd(*qsw.sset);
  int d = std::min(src.dim, qsw.w->dim);
  SMap out;
  out.source = std::make_shared<TruncSSet>(truncate(src, d));
  out.target = qsw.w;
  out.components.resize(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    int lvl = 2 * n + 1;  // source level n is (Q_* W)_{2n+1}
    for (const auto& phi : qsw.elems[static_cast<size_t>(lvl)])
      out.components[static_cast<size_t>(n)].push_back(
          phi[static_cast<size_t>(n)][static_cast<size_t>(
              representable_index(lvl, OrdinalMap::identity(lvl)))]);
  }
  require_smap(out);
  return out;
}

}  // namespace sdkit
