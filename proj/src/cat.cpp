#include "sdkit/cat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "sdkit/sset.hpp"

namespace sdkit {

int FinCat::compose(int g, int f) const {
  int r = compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)];
  if (r < 0)
    throw Error(ErrorKind::InvalidCategory,
                "compose: morphisms " + std::to_string(g) + ", " + std::to_string(f) +
                    " not composable");
  return r;
}

void FinCat::default_labels() {
  if (object_labels.size() != static_cast<size_t>(num_objects)) {
    object_labels.resize(static_cast<size_t>(num_objects));
    for (int o = 0; o < num_objects; ++o)
      if (object_labels[static_cast<size_t>(o)].empty())
        object_labels[static_cast<size_t>(o)] = std::to_string(o);
  }
  if (morphism_labels.size() != morphisms.size()) {
    morphism_labels.resize(morphisms.size());
    for (size_t m = 0; m < morphisms.size(); ++m)
      if (morphism_labels[m].empty()) morphism_labels[m] = "m" + std::to_string(m);
  }
}

void validate_fincat(const FinCat& c) {
  int nm = c.num_morphisms();
  if (c.identity.size() != static_cast<size_t>(c.num_objects))
    throw Error(ErrorKind::InvalidCategory, "identity table size mismatch");
  if (c.compose_table.size() != static_cast<size_t>(nm))
    throw Error(ErrorKind::InvalidCategory, "composition table size mismatch");
  for (const auto& row : c.compose_table)
    if (row.size() != static_cast<size_t>(nm))
      throw Error(ErrorKind::InvalidCategory, "composition table row size mismatch");
  for (int m = 0; m < nm; ++m)
    if (c.src(m) < 0 || c.src(m) >= c.num_objects || c.tgt(m) < 0 ||
        c.tgt(m) >= c.num_objects)
      throw Error(ErrorKind::InvalidCategory, "morphism endpoints out of range");
  for (int o = 0; o < c.num_objects; ++o) {
    int id = c.identity[static_cast<size_t>(o)];
    if (id < 0 || id >= nm || c.src(id) != o || c.tgt(id) != o)
      throw Error(ErrorKind::InvalidCategory, "bad identity for object " + std::to_string(o));
  }
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f) {
      int r = c.compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)];
      if (c.composable(g, f)) {
        if (r < 0 || r >= nm)
          throw Error(ErrorKind::InvalidCategory, "missing composite");
        if (c.src(r) != c.src(f) || c.tgt(r) != c.tgt(g))
          throw Error(ErrorKind::InvalidCategory, "composite endpoints wrong");
      } else if (r != -1) {
        throw Error(ErrorKind::InvalidCategory, "composite of non-composable pair");
      }
    }
  for (int f = 0; f < nm; ++f) {
    if (c.compose(c.identity[static_cast<size_t>(c.tgt(f))], f) != f)
      throw Error(ErrorKind::InvalidCategory, "left unit law fails");
    if (c.compose(f, c.identity[static_cast<size_t>(c.src(f))]) != f)
      throw Error(ErrorKind::InvalidCategory, "right unit law fails");
  }
  for (int h = 0; h < nm; ++h)
    for (int g = 0; g < nm; ++g) {
      if (!c.composable(h, g)) continue;
      for (int f = 0; f < nm; ++f) {
        if (!c.composable(g, f)) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
          throw Error(ErrorKind::InvalidCategory, "associativity fails");
      }
    }
}

void validate_functor(const Functor& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  if (f.object_map.size() != static_cast<size_t>(c.num_objects) ||
      f.morphism_map.size() != static_cast<size_t>(c.num_morphisms()))
    throw Error(ErrorKind::InvalidCategory, "functor table size mismatch");
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int fm = f.morphism_map[static_cast<size_t>(m)];
    if (d.src(fm) != f.object_map[static_cast<size_t>(c.src(m))] ||
        d.tgt(fm) != f.object_map[static_cast<size_t>(c.tgt(m))])
      throw Error(ErrorKind::InvalidCategory, "functor does not preserve endpoints");
  }
  for (int o = 0; o < c.num_objects; ++o)
    if (f.morphism_map[static_cast<size_t>(c.identity[static_cast<size_t>(o)])] !=
        d.identity[static_cast<size_t>(f.object_map[static_cast<size_t>(o)])])
      throw Error(ErrorKind::InvalidCategory, "functor does not preserve identities");
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int m = 0; m < c.num_morphisms(); ++m)
      if (c.composable(g, m))
        if (f.morphism_map[static_cast<size_t>(c.compose(g, m))] !=
            d.compose(f.morphism_map[static_cast<size_t>(g)],
                      f.morphism_map[static_cast<size_t>(m)]))
          throw Error(ErrorKind::InvalidCategory, "functor does not preserve composition");
}

Functor identity_functor(std::shared_ptr<const FinCat> c) {
  Functor f;
  f.source = c;
  f.target = c;
  f.object_map.resize(static_cast<size_t>(c->num_objects));
  std::iota(f.object_map.begin(), f.object_map.end(), 0);
  f.morphism_map.resize(static_cast<size_t>(c->num_morphisms()));
  std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
  return f;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  Functor h;
  h.source = f.source;
  h.target = g.target;
  for (int v : f.object_map) h.object_map.push_back(g.object_map[static_cast<size_t>(v)]);
  for (int v : f.morphism_map)
    h.morphism_map.push_back(g.morphism_map[static_cast<size_t>(v)]);
  return h;
}

void validate_presheaf(const Presheaf& p) {
  const FinCat& c = *p.base;
  if (p.fiber_sizes.size() != static_cast<size_t>(c.num_objects) ||
      p.action.size() != static_cast<size_t>(c.num_morphisms()))
    throw Error(ErrorKind::InvalidCategory, "presheaf table size mismatch");
  for (int m = 0; m < c.num_morphisms(); ++m) {
    const auto& a = p.action[static_cast<size_t>(m)];
    if (a.size() != static_cast<size_t>(p.fiber_sizes[static_cast<size_t>(c.tgt(m))]))
      throw Error(ErrorKind::InvalidCategory, "presheaf action size mismatch");
    for (int v : a)
      if (v < 0 || v >= p.fiber_sizes[static_cast<size_t>(c.src(m))])
        throw Error(ErrorKind::InvalidCategory, "presheaf action out of range");
  }
  for (int o = 0; o < c.num_objects; ++o) {
    const auto& a = p.action[static_cast<size_t>(c.identity[static_cast<size_t>(o)])];
    for (size_t x = 0; x < a.size(); ++x)
      if (a[x] != static_cast<int>(x))
        throw Error(ErrorKind::InvalidCategory, "presheaf identity action not identity");
  }
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int f = 0; f < c.num_morphisms(); ++f) {
      if (!c.composable(g, f)) continue;
      const auto& ag = p.action[static_cast<size_t>(g)];
      const auto& af = p.action[static_cast<size_t>(f)];
      const auto& agf = p.action[static_cast<size_t>(c.compose(g, f))];
      for (size_t x = 0; x < ag.size(); ++x)
        if (agf[x] != af[static_cast<size_t>(ag[x])])
          throw Error(ErrorKind::InvalidCategory, "presheaf not functorial");
    }
}

void validate_discfib(const DiscFib& q) {
  validate_functor(q.projection);
  const FinCat& t = *q.total;
  const FinCat& b = *q.base;
  for (int e = 0; e < t.num_objects; ++e) {
    int pe = q.projection.object_map[static_cast<size_t>(e)];
    for (int alpha = 0; alpha < b.num_morphisms(); ++alpha) {
      if (b.tgt(alpha) != pe) continue;
      int lifts = 0;
      for (int m = 0; m < t.num_morphisms(); ++m)
        if (t.tgt(m) == e && q.projection.morphism_map[static_cast<size_t>(m)] == alpha)
          ++lifts;
      if (lifts != 1)
        throw Error(ErrorKind::NotDiscFib,
                    "object " + std::to_string(e) + " has " + std::to_string(lifts) +
                        " lifts of base morphism " + std::to_string(alpha));
    }
  }
}

// --- constructions ------------------------------------------------------------

FinCat terminal_category() {
  FinCat c;
  c.num_objects = 1;
  c.morphisms = {{0, 0}};
  c.identity = {0};
  c.compose_table = {{0}};
  c.object_labels = {"*"};
  c.morphism_labels = {"id"};
  return c;
}

FinCat discrete_category(int n) {
  FinCat c;
  c.num_objects = n;
  for (int o = 0; o < n; ++o) {
    c.morphisms.push_back({o, o});
    c.identity.push_back(o);
    c.object_labels.push_back(std::to_string(o));
    c.morphism_labels.push_back("id" + std::to_string(o));
  }
  c.compose_table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
  for (int o = 0; o < n; ++o)
    c.compose_table[static_cast<size_t>(o)][static_cast<size_t>(o)] = o;
  return c;
}

FinCat preorder_category(const std::vector<std::vector<bool>>& leq) {
  int n = static_cast<int>(leq.size());
  FinCat c;
  c.num_objects = n;
  std::map<std::pair<int, int>, int> mor;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
        mor[{a, b}] = c.num_morphisms();
        c.morphisms.push_back({a, b});
        c.morphism_labels.push_back(std::to_string(a) + "<=" + std::to_string(b));
      }
  for (int a = 0; a < n; ++a) {
    if (!leq[static_cast<size_t>(a)][static_cast<size_t>(a)])
      throw Error(ErrorKind::BadInput, "preorder not reflexive");
    c.identity.push_back(mor.at({a, a}));
    c.object_labels.push_back(std::to_string(a));
  }
  int nm = c.num_morphisms();
  c.compose_table.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (c.composable(g, f)) {
        auto it = mor.find({c.src(f), c.tgt(g)});
        if (it == mor.end()) throw Error(ErrorKind::BadInput, "preorder not transitive");
        c.compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)] = it->second;
      }
  return c;
}

FinCat ordinal_category(int n) {
  std::vector<std::vector<bool>> leq(static_cast<size_t>(n) + 1,
                                     std::vector<bool>(static_cast<size_t>(n) + 1, false));
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) leq[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  return preorder_category(leq);
}

FinCat free_living_iso() {
  // objects a, b; morphisms id_a, id_b, u : a -> b, v : b -> a with vu = id_a, uv = id_b
  FinCat c;
  c.num_objects = 2;
  c.morphisms = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  c.identity = {0, 1};
  c.object_labels = {"a", "b"};
  c.morphism_labels = {"id_a", "id_b", "u", "v"};
  c.compose_table = {
      {0, -1, -1, 3},
      {-1, 1, 2, -1},
      {2, -1, -1, 1},
      {-1, 3, 0, -1},
  };
  return c;
}

FinCat parallel_pair() {
  FinCat c;
  c.num_objects = 2;
  c.morphisms = {{0, 0}, {1, 1}, {0, 1}, {0, 1}};
  c.identity = {0, 1};
  c.object_labels = {"a", "b"};
  c.morphism_labels = {"id_a", "id_b", "f", "g"};
  c.compose_table = {
      {0, -1, -1, -1},
      {-1, 1, 2, 3},
      {2, -1, -1, -1},
      {3, -1, -1, -1},
  };
  return c;
}

FinCat cospan_category() {
  // L -> M <- R: objects L = 0, M = 1, R = 2
  FinCat c;
  c.num_objects = 3;
  c.morphisms = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {2, 1}};
  c.identity = {0, 1, 2};
  c.object_labels = {"L", "M", "R"};
  c.morphism_labels = {"id_L", "id_M", "id_R", "l", "r"};
  int nm = 5;
  c.compose_table.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  auto set = [&](int g, int f, int r) {
    c.compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)] = r;
  };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 2, 2);
  set(3, 0, 3);
  set(1, 3, 3);
  set(4, 2, 4);
  set(1, 4, 4);
  return c;
}

FinCat span_category() { return opposite_category(cospan_category()); }

FinCat cyclic_group_2() {
  FinCat c;
  c.num_objects = 1;
  c.morphisms = {{0, 0}, {0, 0}};
  c.identity = {0};
  c.object_labels = {"*"};
  c.morphism_labels = {"e", "g"};
  c.compose_table = {{0, 1}, {1, 0}};
  return c;
}

FinCat product_category(const FinCat& a, const FinCat& b) {
  FinCat c;
  c.num_objects = a.num_objects * b.num_objects;
  auto obj = [&](int x, int y) { return x * b.num_objects + y; };
  for (int x = 0; x < a.num_objects; ++x)
    for (int y = 0; y < b.num_objects; ++y)
      c.object_labels.push_back("(" + (x < (int)a.object_labels.size()
                                           ? a.object_labels[static_cast<size_t>(x)]
                                           : std::to_string(x)) +
                                "," +
                                (y < (int)b.object_labels.size()
                                     ? b.object_labels[static_cast<size_t>(y)]
                                     : std::to_string(y)) +
                                ")");
  auto mor = [&](int m, int n) { return m * b.num_morphisms() + n; };
  for (int m = 0; m < a.num_morphisms(); ++m)
    for (int n = 0; n < b.num_morphisms(); ++n) {
      c.morphisms.push_back({obj(a.src(m), b.src(n)), obj(a.tgt(m), b.tgt(n))});
      c.morphism_labels.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  for (int x = 0; x < a.num_objects; ++x)
    for (int y = 0; y < b.num_objects; ++y)
      c.identity.push_back(mor(a.identity[static_cast<size_t>(x)],
                               b.identity[static_cast<size_t>(y)]));
  int nm = c.num_morphisms();
  c.compose_table.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (c.composable(g, f)) {
        int ga = g / b.num_morphisms(), gb = g % b.num_morphisms();
        int fa = f / b.num_morphisms(), fb = f % b.num_morphisms();
        c.compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)] =
            mor(a.compose(ga, fa), b.compose(gb, fb));
      }
  return c;
}

FinCat opposite_category(const FinCat& c) {
  FinCat o = c;
  for (auto& m : o.morphisms) std::swap(m.src, m.tgt);
  int nm = o.num_morphisms();
  o.compose_table.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (o.composable(g, f))
        o.compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)] =
            c.compose_table[static_cast<size_t>(f)][static_cast<size_t>(g)];
  return o;
}

FinCat delta_trunc(int d) {
  FinCat c;
  c.num_objects = d + 1;
  std::map<std::pair<std::pair<int, int>, std::vector<int>>, int> idx;
  for (int m = 0; m <= d; ++m) c.object_labels.push_back("[" + std::to_string(m) + "]");
  for (int m = 0; m <= d; ++m)
    for (int n = 0; n <= d; ++n)
      for (const auto& f : enumerate_ordinal_maps(m, n)) {
        idx[{{m, n}, f.images}] = c.num_morphisms();
        c.morphisms.push_back({m, n});
        c.morphism_labels.push_back(f.str());
      }
  for (int m = 0; m <= d; ++m)
    c.identity.push_back(idx.at({{m, m}, OrdinalMap::identity(m).images}));
  int nm = c.num_morphisms();
  c.compose_table.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  std::vector<OrdinalMap> maps;
  maps.reserve(static_cast<size_t>(nm));
  for (int m = 0; m <= d; ++m)
    for (int n = 0; n <= d; ++n)
      for (const auto& f : enumerate_ordinal_maps(m, n)) maps.push_back(f);
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (c.composable(g, f)) {
        auto gf = compose(maps[static_cast<size_t>(g)], maps[static_cast<size_t>(f)]);
        c.compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)] =
            idx.at({{gf.dom, gf.cod}, gf.images});
      }
  return c;
}

OrdinalMap delta_trunc_map(const FinCat& delta, int mor) {
  std::istringstream is;
  // reconstruct from label "(a,b,..):[m]->[n]"
  const std::string& lbl = delta.morphism_labels[static_cast<size_t>(mor)];
  std::vector<int> imgs;
  size_t p = 1;
  while (p < lbl.size() && lbl[p] != ')') {
    int v = 0;
    while (p < lbl.size() && lbl[p] >= '0' && lbl[p] <= '9') v = v * 10 + (lbl[p++] - '0');
    imgs.push_back(v);
    if (lbl[p] == ',') ++p;
  }
  return {delta.src(mor), delta.tgt(mor), imgs};
}

int delta_trunc_index(const FinCat& delta, const OrdinalMap& f) {
  for (int m = 0; m < delta.num_morphisms(); ++m)
    if (delta.src(m) == f.dom && delta.tgt(m) == f.cod &&
        delta_trunc_map(delta, m) == f)
      return m;
  throw Error(ErrorKind::BadInput, "ordinal map not in truncation");
}

FinCat comma_into(const Functor& f, int d) {
  const FinCat& c = *f.source;
  const FinCat& t = *f.target;
  FinCat out;
  std::map<std::pair<int, int>, int> obj;  // (c, alpha)
  for (int x = 0; x < c.num_objects; ++x)
    for (int alpha = 0; alpha < t.num_morphisms(); ++alpha) {
      if (t.src(alpha) != d || t.tgt(alpha) != f.object_map[static_cast<size_t>(x)])
        continue;
      obj[{x, alpha}] = out.num_objects++;
      out.object_labels.push_back("(" + std::to_string(x) + "," + std::to_string(alpha) + ")");
    }
  std::vector<std::pair<int, int>> objs(static_cast<size_t>(out.num_objects));
  for (const auto& [k, v] : obj) objs[static_cast<size_t>(v)] = k;
  std::map<std::pair<std::pair<int, int>, int>, int> mor;  // (src obj, gamma)
  for (int s = 0; s < out.num_objects; ++s) {
    auto [x, alpha] = objs[static_cast<size_t>(s)];
    for (int gamma = 0; gamma < c.num_morphisms(); ++gamma) {
      if (c.src(gamma) != x) continue;
      int alpha2 = t.compose(f.morphism_map[static_cast<size_t>(gamma)], alpha);
      auto it = obj.find({c.tgt(gamma), alpha2});
      if (it == obj.end()) continue;
      mor[{{x, alpha}, gamma}] = out.num_morphisms();
      out.morphisms.push_back({s, it->second});
      out.morphism_labels.push_back("g" + std::to_string(gamma));
    }
  }
  out.identity.resize(static_cast<size_t>(out.num_objects));
  for (int s = 0; s < out.num_objects; ++s) {
    auto [x, alpha] = objs[static_cast<size_t>(s)];
    out.identity[static_cast<size_t>(s)] =
        mor.at({{x, alpha}, c.identity[static_cast<size_t>(x)]});
  }
  int nm = out.num_morphisms();
  std::vector<std::pair<std::pair<int, int>, int>> mors(static_cast<size_t>(nm));
  for (const auto& [k, v] : mor) mors[static_cast<size_t>(v)] = k;
  out.compose_table.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  for (int g = 0; g < nm; ++g)
    for (int fm = 0; fm < nm; ++fm)
      if (out.composable(g, fm)) {
        auto [sf, gamma_f] = mors[static_cast<size_t>(fm)];
        auto [sg, gamma_g] = mors[static_cast<size_t>(g)];
        out.compose_table[static_cast<size_t>(g)][static_cast<size_t>(fm)] =
            mor.at({sf, c.compose(gamma_g, gamma_f)});
      }
  return out;
}

Pi0 pi0(const FinCat& c) {
  Pi0 r;
  std::vector<int> parent(static_cast<size_t>(c.num_objects));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int m = 0; m < c.num_morphisms(); ++m) {
    int a = find(c.src(m)), b = find(c.tgt(m));
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
  std::map<int, int> renumber;
  r.component.resize(static_cast<size_t>(c.num_objects));
  for (int o = 0; o < c.num_objects; ++o) {
    int root = find(o);
    auto it = renumber.find(root);
    if (it == renumber.end()) it = renumber.emplace(root, r.count++).first;
    r.component[static_cast<size_t>(o)] = it->second;
  }
  return r;
}

DiscFib grothendieck(const Presheaf& p) {
  const FinCat& b = *p.base;
  auto total = std::make_shared<FinCat>();
  std::map<std::pair<int, int>, int> obj;  // (c, x)
  for (int c = 0; c < b.num_objects; ++c)
    for (int x = 0; x < p.fiber_sizes[static_cast<size_t>(c)]; ++x) {
      obj[{c, x}] = total->num_objects++;
      total->object_labels.push_back("(" + std::to_string(c) + "," + std::to_string(x) + ")");
    }
  // morphism = (alpha, x in fiber(tgt alpha)): src (src a, P(a)(x)), tgt (tgt a, x)
  std::map<std::pair<int, int>, int> mor;
  std::vector<std::pair<int, int>> mors;
  for (int a = 0; a < b.num_morphisms(); ++a)
    for (int x = 0; x < p.fiber_sizes[static_cast<size_t>(b.tgt(a))]; ++x) {
      mor[{a, x}] = static_cast<int>(mors.size());
      mors.push_back({a, x});
      total->morphisms.push_back(
          {obj.at({b.src(a), p.action[static_cast<size_t>(a)][static_cast<size_t>(x)]}),
           obj.at({b.tgt(a), x})});
      total->morphism_labels.push_back("(" + std::to_string(a) + "," + std::to_string(x) + ")");
    }
  total->identity.resize(static_cast<size_t>(total->num_objects));
  for (const auto& [key, o] : obj)
    total->identity[static_cast<size_t>(o)] =
        mor.at({b.identity[static_cast<size_t>(key.first)], key.second});
  int nm = total->num_morphisms();
  total->compose_table.assign(static_cast<size_t>(nm),
                              std::vector<int>(static_cast<size_t>(nm), -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (total->composable(g, f)) {
        auto [ag, xg] = mors[static_cast<size_t>(g)];
        auto [af, xf] = mors[static_cast<size_t>(f)];
        total->compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)] =
            mor.at({b.compose(ag, af), xg});
      }
  DiscFib q;
  q.total = total;
  q.base = p.base;
  q.projection.source = total;
  q.projection.target = p.base;
  for (const auto& [key, o] : obj) (void)o, (void)key;
  q.projection.object_map.resize(static_cast<size_t>(total->num_objects));
  for (const auto& [key, o] : obj)
    q.projection.object_map[static_cast<size_t>(o)] = key.first;
  q.projection.morphism_map.resize(static_cast<size_t>(nm));
  for (int m = 0; m < nm; ++m)
    q.projection.morphism_map[static_cast<size_t>(m)] = mors[static_cast<size_t>(m)].first;
  return q;
}

Presheaf fiber_presheaf(const DiscFib& q) {
  const FinCat& t = *q.total;
  const FinCat& b = *q.base;
  Presheaf p;
  p.base = q.base;
  std::vector<std::vector<int>> fibers(static_cast<size_t>(b.num_objects));
  std::vector<int> pos_in_fiber(static_cast<size_t>(t.num_objects), -1);
  for (int e = 0; e < t.num_objects; ++e) {
    int c = q.projection.object_map[static_cast<size_t>(e)];
    pos_in_fiber[static_cast<size_t>(e)] = static_cast<int>(fibers[static_cast<size_t>(c)].size());
    fibers[static_cast<size_t>(c)].push_back(e);
  }
  for (const auto& f : fibers) p.fiber_sizes.push_back(static_cast<int>(f.size()));
  p.action.resize(static_cast<size_t>(b.num_morphisms()));
  for (int a = 0; a < b.num_morphisms(); ++a) {
    auto& act = p.action[static_cast<size_t>(a)];
    for (int e : fibers[static_cast<size_t>(b.tgt(a))]) {
      int lift = -1;
      for (int m = 0; m < t.num_morphisms(); ++m)
        if (t.tgt(m) == e && q.projection.morphism_map[static_cast<size_t>(m)] == a) {
          if (lift != -1)
            throw Error(ErrorKind::NotDiscFib, "multiple lifts");
          lift = m;
        }
      if (lift == -1) throw Error(ErrorKind::NotDiscFib, "no lift");
      act.push_back(pos_in_fiber[static_cast<size_t>(t.src(lift))]);
    }
  }
  return p;
}

FinCat twisted_arrow(const FinCat& c) {
  FinCat out;
  out.num_objects = c.num_morphisms();
  for (int f = 0; f < c.num_morphisms(); ++f)
    out.object_labels.push_back("tw(" + std::to_string(f) + ")");
  // morphism with source f: (a, b) with cod a = src f, src b... f' = b o f o a
  std::map<std::tuple<int, int, int>, int> mor;  // (f, a, b)
  std::vector<std::tuple<int, int, int>> mors;
  for (int f = 0; f < c.num_morphisms(); ++f)
    for (int a = 0; a < c.num_morphisms(); ++a) {
      if (c.tgt(a) != c.src(f)) continue;
      for (int b = 0; b < c.num_morphisms(); ++b) {
        if (c.src(b) != c.tgt(f)) continue;
        int f2 = c.compose(b, c.compose(f, a));
        mor[{f, a, b}] = static_cast<int>(mors.size());
        mors.push_back({f, a, b});
        out.morphisms.push_back({f, f2});
        out.morphism_labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  out.identity.resize(static_cast<size_t>(out.num_objects));
  for (int f = 0; f < c.num_morphisms(); ++f)
    out.identity[static_cast<size_t>(f)] =
        mor.at({f, c.identity[static_cast<size_t>(c.src(f))],
                c.identity[static_cast<size_t>(c.tgt(f))]});
  int nm = out.num_morphisms();
  out.compose_table.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (out.composable(g, f)) {
        auto [of, af, bf] = mors[static_cast<size_t>(f)];
        auto [og, ag, bg] = mors[static_cast<size_t>(g)];
        out.compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)] =
            mor.at({of, c.compose(af, ag), c.compose(bg, bf)});
      }
  return out;
}

// --- fundamental category ------------------------------------------------------

namespace {

// Shortlex word rewriting over composable edge paths. All rule left sides
// have length <= 2, so completion stays inside a finite rule universe.
struct Rewriter {
  long long budget;
  long long steps = 0;
  std::map<std::vector<int>, std::vector<int>> rules;

  static bool shortlex_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }

  std::vector<int> nf(std::vector<int> w) {
    size_t i = 0;
    while (i < w.size()) {
      bool reduced = false;
      if (i + 1 < w.size()) {
        auto it = rules.find({w[i], w[i + 1]});
        if (it != rules.end()) {
          std::vector<int> nw(w.begin(), w.begin() + static_cast<long>(i));
          nw.insert(nw.end(), it->second.begin(), it->second.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 2, w.end());
          w = std::move(nw);
          reduced = true;
        }
      }
      if (!reduced) {
        auto it = rules.find({w[i]});
        if (it != rules.end()) {
          std::vector<int> nw(w.begin(), w.begin() + static_cast<long>(i));
          nw.insert(nw.end(), it->second.begin(), it->second.end());
          nw.insert(nw.end(), w.begin() + static_cast<long>(i) + 1, w.end());
          w = std::move(nw);
          reduced = true;
        }
      }
      if (reduced) {
        if (++steps > budget)
          throw Error(ErrorKind::BudgetExceeded, "rewrite budget exhausted");
        i = i > 0 ? i - 1 : 0;
      } else {
        ++i;
      }
    }
    return w;
  }

  // Record the relation a = b; returns true if a new rule was added.
  bool add_relation(std::vector<int> a, std::vector<int> b) {
    a = nf(std::move(a));
    b = nf(std::move(b));
    if (a == b) return false;
    if (shortlex_less(a, b)) std::swap(a, b);
    auto it = rules.find(a);
    if (it != rules.end()) return add_relation(it->second, b);
    rules.emplace(std::move(a), std::move(b));
    return true;
  }

  void complete() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<std::vector<int>, std::vector<int>>> snapshot(rules.begin(),
                                                                          rules.end());
      for (const auto& [u, ru] : snapshot)
        for (const auto& [v, rv] : snapshot) {
          if (++steps > budget)
            throw Error(ErrorKind::BudgetExceeded, "completion budget exhausted");
          if (u.size() == 2 && v.size() == 2 && u[1] == v[0]) {
            // overlap (u0 u1 v1)
            std::vector<int> left = ru;
            left.push_back(v[1]);
            std::vector<int> right{u[0]};
            right.insert(right.end(), rv.begin(), rv.end());
            if (add_relation(left, right)) changed = true;
          }
          if (u.size() == 1 && v.size() == 2) {
            if (v[0] == u[0]) {
              std::vector<int> left = ru;
              left.push_back(v[1]);
              if (add_relation(left, rv)) changed = true;
            }
            if (v[1] == u[0]) {
              std::vector<int> left{v[0]};
              left.insert(left.end(), ru.begin(), ru.end());
              if (add_relation(left, rv)) changed = true;
            }
          }
        }
    }
  }
};

}  // namespace

FundamentalCategory fundamental_category(const TruncSSet& x, long long budget) {
  if (x.dim < 2)
    throw Error(ErrorKind::OutOfTruncation, "fundamental_category needs dim >= 2");
  int ne = x.level_size(1);
  auto esrc = act_table(x, OrdinalMap::first_vertex(1));  // d_1
  auto etgt = act_table(x, OrdinalMap::last_vertex(1));   // d_0
  Rewriter rw;
  rw.budget = budget;
  // degenerate edges are identities
  for (int v = 0; v < x.level_size(0); ++v)
    rw.add_relation({x.degen(0, 0, v)}, {});
  // 2-simplices give composition relations: [d2 t ; d0 t] = [d1 t]
  for (int t = 0; t < x.level_size(2); ++t)
    rw.add_relation({x.face(2, 2, t), x.face(2, 0, t)}, {x.face(2, 1, t)});
  rw.complete();

  // irreducible edges and the composability digraph avoiding rule left sides
  std::vector<int> irr;
  for (int e = 0; e < ne; ++e)
    if (!rw.rules.count({e})) irr.push_back(e);
  // finiteness: any cycle in the digraph gives infinitely many normal forms
  {
    std::map<int, int> state;  // 0 unseen, 1 in stack, 2 done
    std::function<void(int)> dfs = [&](int e) {
      state[e] = 1;
      for (int e2 : irr) {
        if (etgt[static_cast<size_t>(e)] != esrc[static_cast<size_t>(e2)]) continue;
        if (rw.rules.count({e, e2})) continue;
        int s = state.count(e2) ? state[e2] : 0;
        if (s == 1)
          throw Error(ErrorKind::BudgetExceeded,
                      "fundamental category is infinite: irreducible cycle through edge " +
                          std::to_string(e2));
        if (s == 0) dfs(e2);
      }
      state[e] = 2;
    };
    for (int e : irr)
      if ((state.count(e) ? state[e] : 0) == 0) dfs(e);
  }
  // enumerate all irreducible words (paths in the DAG)
  std::vector<std::vector<int>> words;
  {
    std::vector<std::vector<int>> frontier;
    for (int e : irr) frontier.push_back({e});
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (auto& w : frontier) {
        words.push_back(w);
        if (++rw.steps > budget)
          throw Error(ErrorKind::BudgetExceeded, "word enumeration budget exhausted");
        for (int e2 : irr) {
          if (etgt[static_cast<size_t>(w.back())] != esrc[static_cast<size_t>(e2)]) continue;
          if (rw.rules.count({w.back(), e2})) continue;
          auto w2 = w;
          w2.push_back(e2);
          next.push_back(std::move(w2));
        }
      }
      frontier = std::move(next);
    }
    std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
      return Rewriter::shortlex_less(a, b);
    });
  }

  FundamentalCategory out;
  FinCat& c = out.cat;
  c.num_objects = x.level_size(0);
  for (int v = 0; v < c.num_objects; ++v)
    c.object_labels.push_back(x.labels[0][static_cast<size_t>(v)]);
  std::map<std::vector<int>, int> word_index;
  // identities first
  for (int v = 0; v < c.num_objects; ++v) {
    c.identity.push_back(c.num_morphisms());
    c.morphisms.push_back({v, v});
    c.morphism_labels.push_back("id:" + x.labels[0][static_cast<size_t>(v)]);
  }
  for (const auto& w : words) {
    word_index[w] = c.num_morphisms();
    c.morphisms.push_back({esrc[static_cast<size_t>(w.front())],
                           etgt[static_cast<size_t>(w.back())]});
    std::string lbl;
    for (size_t i = 0; i < w.size(); ++i)
      lbl += (i ? ";" : "") + x.labels[1][static_cast<size_t>(w[i])];
    c.morphism_labels.push_back(lbl);
  }
  auto index_of_word = [&](const std::vector<int>& w, int obj_if_empty) {
    if (w.empty()) return c.identity[static_cast<size_t>(obj_if_empty)];
    return word_index.at(w);
  };
  int nm = c.num_morphisms();
  c.compose_table.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  auto word_of = [&](int m) -> std::vector<int> {
    if (m < c.num_objects) return {};
    return words[static_cast<size_t>(m - c.num_objects)];
  };
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (c.composable(g, f)) {
        auto wf = word_of(f);
        auto wg = word_of(g);
        wf.insert(wf.end(), wg.begin(), wg.end());
        c.compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)] =
            index_of_word(rw.nf(std::move(wf)), c.src(f));
      }
  out.edge_to_morphism.resize(static_cast<size_t>(ne));
  for (int e = 0; e < ne; ++e)
    out.edge_to_morphism[static_cast<size_t>(e)] =
        index_of_word(rw.nf({e}), esrc[static_cast<size_t>(e)]);
  return out;
}

// --- enumeration ---------------------------------------------------------------

namespace {

// Non-identity morphisms ordered so composites tend to come after their
// factors; ties broken by index.
std::vector<int> assignment_order(const FinCat& c) {
  std::vector<int> nonid;
  std::vector<int> nfac(static_cast<size_t>(c.num_morphisms()), 0);
  std::vector<bool> isid(static_cast<size_t>(c.num_morphisms()), false);
  for (int o = 0; o < c.num_objects; ++o)
    isid[static_cast<size_t>(c.identity[static_cast<size_t>(o)])] = true;
  for (int g = 0; g < c.num_morphisms(); ++g)
    for (int f = 0; f < c.num_morphisms(); ++f)
      if (!isid[static_cast<size_t>(g)] && !isid[static_cast<size_t>(f)] &&
          c.composable(g, f))
        ++nfac[static_cast<size_t>(c.compose(g, f))];
  for (int m = 0; m < c.num_morphisms(); ++m)
    if (!isid[static_cast<size_t>(m)]) nonid.push_back(m);
  std::stable_sort(nonid.begin(), nonid.end(),
                   [&](int a, int b) { return nfac[static_cast<size_t>(a)] < nfac[static_cast<size_t>(b)]; });
  return nonid;
}

struct PresheafEnum {
  const FinCat& c;
  int max_fiber;
  std::vector<int> order;
  std::vector<int> pos_in_order;  // morphism -> order position or -1
  // triples (g, f, gf) of non-identity morphisms
  std::vector<std::tuple<int, int, int>> triples;

  std::vector<int> sizes;
  std::vector<std::vector<int>> action;
  std::vector<bool> assigned;
  std::vector<std::vector<int>> encodings;

  explicit PresheafEnum(const FinCat& cat, int mf) : c(cat), max_fiber(mf) {
    order = assignment_order(c);
    pos_in_order.assign(static_cast<size_t>(c.num_morphisms()), -1);
    for (size_t i = 0; i < order.size(); ++i)
      pos_in_order[static_cast<size_t>(order[i])] = static_cast<int>(i);
    std::vector<bool> isid(static_cast<size_t>(c.num_morphisms()), false);
    for (int o = 0; o < c.num_objects; ++o)
      isid[static_cast<size_t>(c.identity[static_cast<size_t>(o)])] = true;
    for (int g = 0; g < c.num_morphisms(); ++g)
      for (int f = 0; f < c.num_morphisms(); ++f)
        if (c.composable(g, f) && !isid[static_cast<size_t>(g)] && !isid[static_cast<size_t>(f)])
          triples.emplace_back(g, f, c.compose(g, f));
  }

  bool check_triples(int just_assigned) {
    for (const auto& [g, f, gf] : triples) {
      if (g != just_assigned && f != just_assigned && gf != just_assigned) continue;
      bool g_ok = assigned[static_cast<size_t>(g)];
      bool f_ok = assigned[static_cast<size_t>(f)];
      bool gf_ok = isid_or_assigned(gf);
      if (!(g_ok && f_ok && gf_ok)) continue;
      const auto& ag = action[static_cast<size_t>(g)];
      const auto& af = action[static_cast<size_t>(f)];
      const auto& agf = action[static_cast<size_t>(gf)];
      for (size_t x = 0; x < ag.size(); ++x)
        if (agf[x] != af[static_cast<size_t>(ag[x])]) return false;
    }
    return true;
  }

  bool isid_or_assigned(int m) { return assigned[static_cast<size_t>(m)]; }

  void dfs(size_t i) {
    if (i == order.size()) {
      emit();
      return;
    }
    int m = order[static_cast<size_t>(i)];
    int ns = sizes[static_cast<size_t>(c.src(m))];
    int nt = sizes[static_cast<size_t>(c.tgt(m))];
    if (nt == 0) {
      action[static_cast<size_t>(m)] = {};
      assigned[static_cast<size_t>(m)] = true;
      if (check_triples(m)) dfs(i + 1);
      assigned[static_cast<size_t>(m)] = false;
      return;
    }
    if (ns == 0) return;  // no function from nonempty to empty
    std::vector<int> a(static_cast<size_t>(nt), 0);
    while (true) {
      action[static_cast<size_t>(m)] = a;
      assigned[static_cast<size_t>(m)] = true;
      if (check_triples(m)) dfs(i + 1);
      assigned[static_cast<size_t>(m)] = false;
      int p = nt - 1;
      while (p >= 0 && a[static_cast<size_t>(p)] == ns - 1) a[static_cast<size_t>(p--)] = 0;
      if (p < 0) break;
      ++a[static_cast<size_t>(p)];
    }
  }

  std::vector<int> encode(const std::vector<std::vector<int>>& act) const {
    std::vector<int> e = sizes;
    for (int m = 0; m < c.num_morphisms(); ++m)
      for (int v : act[static_cast<size_t>(m)]) e.push_back(v);
    return e;
  }

  void emit() {
    // canonical form: minimize encoding over per-object fiber permutations
    std::vector<std::vector<std::vector<int>>> perms(static_cast<size_t>(c.num_objects));
    for (int o = 0; o < c.num_objects; ++o) {
      std::vector<int> p(static_cast<size_t>(sizes[static_cast<size_t>(o)]));
      std::iota(p.begin(), p.end(), 0);
      do perms[static_cast<size_t>(o)].push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<size_t> choice(static_cast<size_t>(c.num_objects), 0);
    std::vector<int> best;
    while (true) {
      std::vector<std::vector<int>> act2(action.size());
      for (int m = 0; m < c.num_morphisms(); ++m) {
        const auto& ps = perms[static_cast<size_t>(c.src(m))]
                              [choice[static_cast<size_t>(c.src(m))]];
        const auto& pt = perms[static_cast<size_t>(c.tgt(m))]
                              [choice[static_cast<size_t>(c.tgt(m))]];
        // conjugated action: x |-> ps[a[pt^{-1}(x)]]
        std::vector<int> pti(pt.size());
        for (size_t x = 0; x < pt.size(); ++x) pti[static_cast<size_t>(pt[x])] = static_cast<int>(x);
        auto& a2 = act2[static_cast<size_t>(m)];
        a2.resize(pt.size());
        for (size_t x = 0; x < pt.size(); ++x)
          a2[x] = ps[static_cast<size_t>(
              action[static_cast<size_t>(m)][static_cast<size_t>(pti[x])])];
      }
      auto e = encode(act2);
      if (best.empty() || e < best) best = std::move(e);
      int o = c.num_objects - 1;
      while (o >= 0 && choice[static_cast<size_t>(o)] + 1 == perms[static_cast<size_t>(o)].size())
        choice[static_cast<size_t>(o--)] = 0;
      if (o < 0) break;
      ++choice[static_cast<size_t>(o)];
    }
    encodings.push_back(std::move(best));
  }

  void run() {
    sizes.assign(static_cast<size_t>(c.num_objects), 0);
    while (true) {
      action.assign(static_cast<size_t>(c.num_morphisms()), {});
      assigned.assign(static_cast<size_t>(c.num_morphisms()), false);
      for (int o = 0; o < c.num_objects; ++o) {
        int id = c.identity[static_cast<size_t>(o)];
        auto& a = action[static_cast<size_t>(id)];
        a.resize(static_cast<size_t>(sizes[static_cast<size_t>(o)]));
        std::iota(a.begin(), a.end(), 0);
        assigned[static_cast<size_t>(id)] = true;
      }
      dfs(0);
      int o = c.num_objects - 1;
      while (o >= 0 && sizes[static_cast<size_t>(o)] == max_fiber)
        sizes[static_cast<size_t>(o--)] = 0;
      if (o < 0) break;
      ++sizes[static_cast<size_t>(o)];
    }
  }
};

}  // namespace

std::vector<Presheaf> enumerate_presheaves(std::shared_ptr<const FinCat> c,
                                           int max_fiber) {
  PresheafEnum pe(*c, max_fiber);
  pe.run();
  std::sort(pe.encodings.begin(), pe.encodings.end());
  pe.encodings.erase(std::unique(pe.encodings.begin(), pe.encodings.end()),
                     pe.encodings.end());
  std::vector<Presheaf> out;
  for (const auto& e : pe.encodings) {
    Presheaf p;
    p.base = c;
    size_t pos = 0;
    for (int o = 0; o < c->num_objects; ++o) p.fiber_sizes.push_back(e[pos++]);
    p.action.resize(static_cast<size_t>(c->num_morphisms()));
    for (int m = 0; m < c->num_morphisms(); ++m) {
      int nt = p.fiber_sizes[static_cast<size_t>(c->tgt(m))];
      for (int x = 0; x < nt; ++x)
        p.action[static_cast<size_t>(m)].push_back(e[pos++]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Functor> enumerate_functors(std::shared_ptr<const FinCat> c,
                                        std::shared_ptr<const FinCat> d,
                                        long long cap) {
  std::vector<Functor> out;
  const FinCat& C = *c;
  const FinCat& D = *d;
  auto order = assignment_order(C);
  std::vector<std::tuple<int, int, int>> triples;
  std::vector<bool> isid(static_cast<size_t>(C.num_morphisms()), false);
  for (int o = 0; o < C.num_objects; ++o)
    isid[static_cast<size_t>(C.identity[static_cast<size_t>(o)])] = true;
  for (int g = 0; g < C.num_morphisms(); ++g)
    for (int f = 0; f < C.num_morphisms(); ++f)
      if (C.composable(g, f) && !isid[static_cast<size_t>(g)] && !isid[static_cast<size_t>(f)])
        triples.emplace_back(g, f, C.compose(g, f));

  std::vector<int> omap(static_cast<size_t>(C.num_objects), 0);
  std::vector<int> mmap(static_cast<size_t>(C.num_morphisms()), -1);

  std::function<void(size_t)> dfs_m = [&](size_t i) {
    if (cap >= 0 && static_cast<long long>(out.size()) >= cap) return;
    if (i == order.size()) {
      Functor f;
      f.source = c;
      f.target = d;
      f.object_map = omap;
      f.morphism_map = mmap;
      out.push_back(std::move(f));
      return;
    }
    int m = order[static_cast<size_t>(i)];
    for (int fm = 0; fm < D.num_morphisms(); ++fm) {
      if (D.src(fm) != omap[static_cast<size_t>(C.src(m))] ||
          D.tgt(fm) != omap[static_cast<size_t>(C.tgt(m))])
        continue;
      mmap[static_cast<size_t>(m)] = fm;
      bool ok = true;
      for (const auto& [g, ff, gf] : triples) {
        if (g != m && ff != m && gf != m) continue;
        if (mmap[static_cast<size_t>(g)] < 0 || mmap[static_cast<size_t>(ff)] < 0 ||
            mmap[static_cast<size_t>(gf)] < 0)
          continue;
        if (D.compose(mmap[static_cast<size_t>(g)], mmap[static_cast<size_t>(ff)]) !=
            mmap[static_cast<size_t>(gf)]) {
          ok = false;
          break;
        }
      }
      if (ok) dfs_m(i + 1);
      mmap[static_cast<size_t>(m)] = -1;
    }
  };

  std::function<void(int)> dfs_o = [&](int o) {
    if (cap >= 0 && static_cast<long long>(out.size()) >= cap) return;
    if (o == C.num_objects) {
      for (int x = 0; x < C.num_objects; ++x)
        mmap[static_cast<size_t>(C.identity[static_cast<size_t>(x)])] =
            D.identity[static_cast<size_t>(omap[static_cast<size_t>(x)])];
      dfs_m(0);
      return;
    }
    for (int t = 0; t < D.num_objects; ++t) {
      omap[static_cast<size_t>(o)] = t;
      dfs_o(o + 1);
    }
  };
  if (C.num_objects == 0) {
    Functor f;
    f.source = c;
    f.target = d;
    out.push_back(std::move(f));
    return out;
  }
  dfs_o(0);
  return out;
}

std::optional<Functor> find_cat_isomorphism(std::shared_ptr<const FinCat> c,
                                            std::shared_ptr<const FinCat> d) {
  const FinCat& C = *c;
  const FinCat& D = *d;
  if (C.num_objects != D.num_objects || C.num_morphisms() != D.num_morphisms())
    return std::nullopt;
  for (auto f : enumerate_functors(c, d)) {
    std::vector<bool> ohit(static_cast<size_t>(D.num_objects), false);
    std::vector<bool> mhit(static_cast<size_t>(D.num_morphisms()), false);
    bool bij = true;
    for (int v : f.object_map) {
      if (ohit[static_cast<size_t>(v)]) bij = false;
      ohit[static_cast<size_t>(v)] = true;
    }
    for (int v : f.morphism_map) {
      if (v < 0 || mhit[static_cast<size_t>(v)]) bij = false;
      else mhit[static_cast<size_t>(v)] = true;
    }
    if (bij) return f;
  }
  return std::nullopt;
}

std::vector<bool> iso_morphisms(const FinCat& c) {
  std::vector<bool> out(static_cast<size_t>(c.num_morphisms()), false);
  for (int m = 0; m < c.num_morphisms(); ++m)
    for (int w = 0; w < c.num_morphisms(); ++w) {
      if (c.src(w) != c.tgt(m) || c.tgt(w) != c.src(m)) continue;
      if (c.compose(w, m) == c.identity[static_cast<size_t>(c.src(m))] &&
          c.compose(m, w) == c.identity[static_cast<size_t>(c.tgt(m))]) {
        out[static_cast<size_t>(m)] = true;
        break;
      }
    }
  return out;
}

bool is_functor_iso(const Functor& f) {
  const FinCat& C = *f.source;
  const FinCat& D = *f.target;
  if (C.num_objects != D.num_objects || C.num_morphisms() != D.num_morphisms())
    return false;
  std::vector<bool> ohit(static_cast<size_t>(D.num_objects), false);
  for (int v : f.object_map) {
    if (ohit[static_cast<size_t>(v)]) return false;
    ohit[static_cast<size_t>(v)] = true;
  }
  std::vector<bool> mhit(static_cast<size_t>(D.num_morphisms()), false);
  for (int v : f.morphism_map) {
    if (mhit[static_cast<size_t>(v)]) return false;
    mhit[static_cast<size_t>(v)] = true;
  }
  return true;
}

}  // namespace sdkit
