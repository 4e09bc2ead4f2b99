#include "sdkit/sset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace sdkit {

void TruncSSet::init_levels(int d) {
  dim = d;
  labels.assign(static_cast<size_t>(d) + 1, {});
  faces.assign(static_cast<size_t>(d) + 1, {});
  degens.assign(static_cast<size_t>(d) + 1, {});
  for (int n = 1; n <= d; ++n)
    faces[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, {});
  for (int n = 0; n < d; ++n)
    degens[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, {});
}

void TruncSSet::default_labels() {
  for (int n = 0; n <= dim; ++n)
    for (size_t k = 0; k < labels[static_cast<size_t>(n)].size(); ++k)
      if (labels[static_cast<size_t>(n)][k].empty())
        labels[static_cast<size_t>(n)][k] =
            std::to_string(n) + ":" + std::to_string(k);
}

bool TruncSSet::structurally_complete() const {
  if (dim < 0) return false;
  if (labels.size() != static_cast<size_t>(dim) + 1) return false;
  if (faces.size() != static_cast<size_t>(dim) + 1) return false;
  if (degens.size() != static_cast<size_t>(dim) + 1) return false;
  for (int n = 1; n <= dim; ++n) {
    const auto& fs = faces[static_cast<size_t>(n)];
    if (fs.size() != static_cast<size_t>(n) + 1) return false;
    for (const auto& f : fs) {
      if (f.size() != static_cast<size_t>(level_size(n))) return false;
      for (int v : f)
        if (v < 0 || v >= level_size(n - 1)) return false;
    }
  }
  for (int n = 0; n < dim; ++n) {
    const auto& ss = degens[static_cast<size_t>(n)];
    if (ss.size() != static_cast<size_t>(n) + 1) return false;
    for (const auto& s : ss) {
      if (s.size() != static_cast<size_t>(level_size(n))) return false;
      for (int v : s)
        if (v < 0 || v >= level_size(n + 1)) return false;
    }
  }
  return true;
}

ValidationReport validate(const TruncSSet& x) {
  ValidationReport rep;
  if (!x.structurally_complete())
    throw Error(ErrorKind::InvalidSSet, "generator tables incomplete or out of range");
  auto fail = [&](std::string id, int level, int elem, int lhs, int rhs) {
    rep.ok = false;
    rep.violations.push_back({std::move(id), level, elem, lhs, rhs});
  };
  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= x.dim; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (int e = 0; e < x.level_size(n); ++e) {
          int lhs = x.face(n - 1, i, x.face(n, j, e));
          int rhs = x.face(n - 1, j - 1, x.face(n, i, e));
          if (lhs != rhs)
            fail("d" + std::to_string(i) + " d" + std::to_string(j) + " = d" +
                     std::to_string(j - 1) + " d" + std::to_string(i),
                 n, e, lhs, rhs);
        }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 2 <= x.dim; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (int e = 0; e < x.level_size(n); ++e) {
          int lhs = x.degen(n + 1, i, x.degen(n, j, e));
          int rhs = x.degen(n + 1, j + 1, x.degen(n, i, e));
          if (lhs != rhs)
            fail("s" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                     std::to_string(j + 1) + " s" + std::to_string(i),
                 n, e, lhs, rhs);
        }
  // d_i s_j relations
  for (int n = 0; n < x.dim; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (int e = 0; e < x.level_size(n); ++e) {
          int lhs = x.face(n + 1, i, x.degen(n, j, e));
          int rhs;
          std::string id;
          if (i == j || i == j + 1) {
            rhs = e;
            id = "d" + std::to_string(i) + " s" + std::to_string(j) + " = id";
          } else if (i < j) {
            rhs = x.degen(n - 1, j - 1, x.face(n, i, e));
            id = "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                 std::to_string(j - 1) + " d" + std::to_string(i);
          } else {
            rhs = x.degen(n - 1, j, x.face(n, i - 1, e));
            id = "d" + std::to_string(i) + " s" + std::to_string(j) + " = s" +
                 std::to_string(j) + " d" + std::to_string(i - 1);
          }
          if (lhs != rhs) fail(id, n, e, lhs, rhs);
        }
  return rep;
}

void require_valid(const TruncSSet& x) {
  auto rep = validate(x);
  if (!rep.ok) {
    const auto& v = rep.violations.front();
    throw Error(ErrorKind::InvalidSSet,
                "simplicial identity " + v.identity + " fails at level " +
                    std::to_string(v.level) + " element " + std::to_string(v.element));
  }
}

bool smap_commutes(const SMap& f) {
  int d = f.dim();
  if (d < 0) return false;
  for (int n = 0; n <= d; ++n)
    if (f.components[static_cast<size_t>(n)].size() !=
        static_cast<size_t>(f.source->level_size(n)))
      return false;
  for (int n = 1; n <= d; ++n)
    for (int i = 0; i <= n; ++i)
      for (int e = 0; e < f.source->level_size(n); ++e)
        if (f.at(n - 1, f.source->face(n, i, e)) != f.target->face(n, i, f.at(n, e)))
          return false;
  for (int n = 0; n < d; ++n)
    for (int i = 0; i <= n; ++i)
      for (int e = 0; e < f.source->level_size(n); ++e)
        if (f.at(n + 1, f.source->degen(n, i, e)) != f.target->degen(n, i, f.at(n, e)))
          return false;
  return true;
}

void require_smap(const SMap& f) {
  if (!smap_commutes(f))
    throw Error(ErrorKind::InvalidSSet, "simplicial map does not commute with operators");
}

SMap identity_smap(SSetPtr x) {
  SMap f;
  f.source = x;
  f.target = x;
  f.components.resize(static_cast<size_t>(x->dim) + 1);
  for (int n = 0; n <= x->dim; ++n) {
    f.components[static_cast<size_t>(n)].resize(static_cast<size_t>(x->level_size(n)));
    std::iota(f.components[static_cast<size_t>(n)].begin(),
              f.components[static_cast<size_t>(n)].end(), 0);
  }
  return f;
}

SMap compose_smaps(const SMap& g, const SMap& f) {
  SMap h;
  h.source = f.source;
  h.target = g.target;
  int d = std::min(f.dim(), g.dim());
  h.components.resize(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    h.components[static_cast<size_t>(n)].resize(
        f.components[static_cast<size_t>(n)].size());
    for (size_t e = 0; e < f.components[static_cast<size_t>(n)].size(); ++e)
      h.components[static_cast<size_t>(n)][e] =
          g.at(n, f.components[static_cast<size_t>(n)][e]);
  }
  return h;
}

int act(const TruncSSet& x, const OrdinalMap& alpha, int elem) {
  if (alpha.cod > x.dim || alpha.dom > x.dim)
    throw Error(ErrorKind::OutOfTruncation,
                "operator " + alpha.str() + " exceeds truncation " +
                    std::to_string(x.dim));
  if (elem < 0 || elem >= x.level_size(alpha.cod))
    throw Error(ErrorKind::BadInput, "act: element out of range");
  int cur = elem;
  int lvl = alpha.cod;
  // faces at the values missing from the image, largest first
  std::vector<bool> hit(static_cast<size_t>(alpha.cod) + 1, false);
  for (int v : alpha.images) hit[static_cast<size_t>(v)] = true;
  for (int v = alpha.cod; v >= 0; --v)
    if (!hit[static_cast<size_t>(v)]) {
      cur = x.face(lvl, v, cur);
      --lvl;
    }
  // degeneracies at repeated positions, smallest first
  for (int i = 0; i < alpha.dom; ++i)
    if (alpha(i) == alpha(i + 1)) {
      cur = x.degen(lvl, i, cur);
      ++lvl;
    }
  return cur;
}

std::vector<int> act_table(const TruncSSet& x, const OrdinalMap& alpha) {
  std::vector<int> out(static_cast<size_t>(x.level_size(alpha.cod)));
  for (int e = 0; e < x.level_size(alpha.cod); ++e)
    out[static_cast<size_t>(e)] = act(x, alpha, e);
  return out;
}

TruncSSet empty_sset(int d) {
  TruncSSet x;
  x.init_levels(d);
  return x;
}

// --- representables ----------------------------------------------------------

static long long rank_monotone(int n, const std::vector<int>& images) {
  // lexicographic rank among weakly increasing tuples with values in [0, n]
  long long rank = 0;
  int m = static_cast<int>(images.size()) - 1;
  int low = 0;
  for (int p = 0; p <= m; ++p) {
    for (int v = low; v < images[static_cast<size_t>(p)]; ++v)
      rank += count_ordinal_maps(m - p - 1, n - v);
    low = images[static_cast<size_t>(p)];
  }
  return rank;
}

int representable_index(int n, const OrdinalMap& f) {
  return static_cast<int>(rank_monotone(n, f.images));
}

OrdinalMap representable_elem(int n, int k, int idx) {
  auto maps = enumerate_ordinal_maps(k, n);
  return maps[static_cast<size_t>(idx)];
}

TruncSSet representable(int n, int d) {
  if (n < 0 || d < 0) throw Error(ErrorKind::BadInput, "representable: negative input");
  TruncSSet x;
  x.init_levels(d);
  std::vector<std::vector<OrdinalMap>> lv(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    lv[static_cast<size_t>(k)] = enumerate_ordinal_maps(k, n);
    for (const auto& f : lv[static_cast<size_t>(k)]) {
      std::string s;
      for (size_t i = 0; i < f.images.size(); ++i)
        s += (i ? "," : "") + std::to_string(f.images[i]);
      x.labels[static_cast<size_t>(k)].push_back(s);
    }
  }
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = x.faces[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (const auto& f : lv[static_cast<size_t>(k)])
        tbl.push_back(static_cast<int>(
            rank_monotone(n, compose(f, OrdinalMap::coface(k, i)).images)));
    }
  for (int k = 0; k < d; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = x.degens[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (const auto& f : lv[static_cast<size_t>(k)])
        tbl.push_back(static_cast<int>(
            rank_monotone(n, compose(f, OrdinalMap::codegeneracy(k, i)).images)));
    }
  return x;
}

// --- nerves ------------------------------------------------------------------

namespace {

struct NerveData {
  // chains[k][idx]: for k = 0 a single object index, else k morphism indices
  std::vector<std::vector<std::vector<int>>> chains;
  std::vector<std::map<std::vector<int>, int>> index;

  int lookup(int k, const std::vector<int>& ch) const {
    auto it = index[static_cast<size_t>(k)].find(ch);
    if (it == index[static_cast<size_t>(k)].end())
      throw Error(ErrorKind::BadInput, "nerve chain not found");
    return it->second;
  }
};

NerveData build_nerve_data(const FinCat& c, int d) {
  NerveData nd;
  nd.chains.resize(static_cast<size_t>(d) + 1);
  nd.index.resize(static_cast<size_t>(d) + 1);
  for (int o = 0; o < c.num_objects; ++o) nd.chains[0].push_back({o});
  for (int k = 1; k <= d; ++k)
    for (const auto& prev : nd.chains[static_cast<size_t>(k - 1)]) {
      int last_tgt = k == 1 ? prev[0] : c.tgt(prev.back());
      for (int m = 0; m < c.num_morphisms(); ++m) {
        if (c.src(m) != last_tgt) continue;
        std::vector<int> ch;
        if (k > 1) ch = prev;
        ch.push_back(m);
        nd.chains[static_cast<size_t>(k)].push_back(std::move(ch));
      }
    }
  for (int k = 0; k <= d; ++k) {
    std::sort(nd.chains[static_cast<size_t>(k)].begin(),
              nd.chains[static_cast<size_t>(k)].end());
    for (size_t i = 0; i < nd.chains[static_cast<size_t>(k)].size(); ++i)
      nd.index[static_cast<size_t>(k)][nd.chains[static_cast<size_t>(k)][i]] =
          static_cast<int>(i);
  }
  return nd;
}

std::vector<int> nerve_face(const FinCat& c, const std::vector<int>& ch, int k, int i) {
  if (k == 1) return {i == 0 ? c.tgt(ch[0]) : c.src(ch[0])};
  std::vector<int> out;
  out.reserve(static_cast<size_t>(k) - 1);
  if (i == 0) {
    out.assign(ch.begin() + 1, ch.end());
  } else if (i == k) {
    out.assign(ch.begin(), ch.end() - 1);
  } else {
    for (int j = 0; j < k; ++j) {
      if (j == i - 1) continue;
      if (j == i)
        out.push_back(
            c.compose(ch[static_cast<size_t>(i)], ch[static_cast<size_t>(i - 1)]));
      else
        out.push_back(ch[static_cast<size_t>(j)]);
    }
  }
  return out;
}

std::vector<int> nerve_degen(const FinCat& c, const std::vector<int>& ch, int k, int i) {
  if (k == 0) return {c.identity[static_cast<size_t>(ch[0])]};
  std::vector<int> out;
  out.reserve(static_cast<size_t>(k) + 1);
  int vertex_obj = i == 0 ? c.src(ch[0]) : c.tgt(ch[static_cast<size_t>(i - 1)]);
  for (int j = 0; j < i; ++j) out.push_back(ch[static_cast<size_t>(j)]);
  out.push_back(c.identity[static_cast<size_t>(vertex_obj)]);
  for (int j = i; j < k; ++j) out.push_back(ch[static_cast<size_t>(j)]);
  return out;
}

std::string chain_label(const FinCat& c, const std::vector<int>& ch, int k) {
  std::ostringstream os;
  if (k == 0) {
    os << (ch[0] < static_cast<int>(c.object_labels.size())
               ? c.object_labels[static_cast<size_t>(ch[0])]
               : std::to_string(ch[0]));
  } else {
    for (size_t j = 0; j < ch.size(); ++j) {
      if (j) os << ";";
      os << (ch[j] < static_cast<int>(c.morphism_labels.size())
                 ? c.morphism_labels[static_cast<size_t>(ch[j])]
                 : std::to_string(ch[j]));
    }
  }
  return os.str();
}

}  // namespace

TruncSSet nerve(const FinCat& c, int d) {
  auto nd = build_nerve_data(c, d);
  TruncSSet x;
  x.init_levels(d);
  for (int k = 0; k <= d; ++k)
    for (const auto& ch : nd.chains[static_cast<size_t>(k)])
      x.labels[static_cast<size_t>(k)].push_back(chain_label(c, ch, k));
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = x.faces[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (const auto& ch : nd.chains[static_cast<size_t>(k)])
        tbl.push_back(nd.lookup(k - 1, nerve_face(c, ch, k, i)));
    }
  for (int k = 0; k < d; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = x.degens[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (const auto& ch : nd.chains[static_cast<size_t>(k)])
        tbl.push_back(nd.lookup(k + 1, nerve_degen(c, ch, k, i)));
    }
  return x;
}

std::vector<int> nerve_chain(const FinCat& c, int k, int idx) {
  auto nd = build_nerve_data(c, k);
  return nd.chains[static_cast<size_t>(k)][static_cast<size_t>(idx)];
}

int nerve_index(const FinCat& c, const std::vector<int>& chain, int object_if_empty) {
  int k = static_cast<int>(chain.size());
  auto nd = build_nerve_data(c, k);
  if (chain.empty()) return nd.lookup(0, {object_if_empty});
  return nd.lookup(k, chain);
}

SMap nerve_of_functor(const Functor& f, int d) {
  auto nds = build_nerve_data(*f.source, d);
  auto ndt = build_nerve_data(*f.target, d);
  SMap m;
  m.source = std::make_shared<TruncSSet>(nerve(*f.source, d));
  m.target = std::make_shared<TruncSSet>(nerve(*f.target, d));
  m.components.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    for (const auto& ch : nds.chains[static_cast<size_t>(k)]) {
      std::vector<int> img;
      img.reserve(ch.size());
      for (int v : ch)
        img.push_back(k == 0 ? f.object_map[static_cast<size_t>(v)]
                             : f.morphism_map[static_cast<size_t>(v)]);
      m.components[static_cast<size_t>(k)].push_back(ndt.lookup(k, img));
    }
  return m;
}

// --- edgewise subdivision ------------------------------------------------------

TruncSSet sd(const TruncSSet& x, Convention conv) {
  if (x.dim < 1) throw Error(ErrorKind::OutOfTruncation, "sd needs dim >= 1");
  int d = (x.dim - 1) / 2;
  TruncSSet y;
  y.init_levels(d);
  for (int k = 0; k <= d; ++k)
    y.labels[static_cast<size_t>(k)] = x.labels[static_cast<size_t>(2 * k + 1)];
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i <= k; ++i)
      y.faces[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          act_table(x, q_on_map(OrdinalMap::coface(k, i), conv));
  for (int k = 0; k < d; ++k)
    for (int i = 0; i <= k; ++i)
      y.degens[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          act_table(x, q_on_map(OrdinalMap::codegeneracy(k, i), conv));
  return y;
}

SMap sd_of_map(const SMap& f, Convention conv) {
  SMap g;
  g.source = std::make_shared<TruncSSet>(sd(*f.source, conv));
  g.target = std::make_shared<TruncSSet>(sd(*f.target, conv));
  int d = std::min({g.source->dim, g.target->dim, (f.dim() - 1) / 2});
  g.components.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    g.components[static_cast<size_t>(k)] = f.components[static_cast<size_t>(2 * k + 1)];
  return g;
}

// --- limits and friends ----------------------------------------------------------

bool same_structure(const TruncSSet& a, const TruncSSet& b) {
  if (a.dim != b.dim) return false;
  for (int n = 0; n <= a.dim; ++n)
    if (a.level_size(n) != b.level_size(n)) return false;
  return a.faces == b.faces && a.degens == b.degens;
}

static bool sset_equal_structure(const TruncSSet& a, const TruncSSet& b) {
  return same_structure(a, b);
}

int PullbackResult::index_of(int n, int a, int b) const {
  const auto& ps = pairs[static_cast<size_t>(n)];
  auto it = std::lower_bound(ps.begin(), ps.end(), std::make_pair(a, b));
  if (it == ps.end() || *it != std::make_pair(a, b))
    throw Error(ErrorKind::BadInput, "pullback: pair not present");
  return static_cast<int>(it - ps.begin());
}

PullbackResult pullback(const SMap& f, const SMap& g) {
  if (f.target.get() != g.target.get() && !sset_equal_structure(*f.target, *g.target))
    throw Error(ErrorKind::DimensionMismatch, "pullback: targets differ");
  int d = std::min(f.dim(), g.dim());
  PullbackResult r;
  auto obj = std::make_shared<TruncSSet>();
  obj->init_levels(d);
  r.pairs.resize(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    for (int a = 0; a < f.source->level_size(n); ++a)
      for (int b = 0; b < g.source->level_size(n); ++b)
        if (f.at(n, a) == g.at(n, b)) r.pairs[static_cast<size_t>(n)].push_back({a, b});
    for (auto [a, b] : r.pairs[static_cast<size_t>(n)])
      obj->labels[static_cast<size_t>(n)].push_back(
          "(" + f.source->labels[static_cast<size_t>(n)][static_cast<size_t>(a)] + "|" +
          g.source->labels[static_cast<size_t>(n)][static_cast<size_t>(b)] + ")");
  }
  for (int n = 1; n <= d; ++n)
    for (int i = 0; i <= n; ++i) {
      auto& tbl = obj->faces[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (auto [a, b] : r.pairs[static_cast<size_t>(n)])
        tbl.push_back(
            r.index_of(n - 1, f.source->face(n, i, a), g.source->face(n, i, b)));
    }
  for (int n = 0; n < d; ++n)
    for (int i = 0; i <= n; ++i) {
      auto& tbl = obj->degens[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (auto [a, b] : r.pairs[static_cast<size_t>(n)])
        tbl.push_back(
            r.index_of(n + 1, f.source->degen(n, i, a), g.source->degen(n, i, b)));
    }
  r.object = obj;
  r.proj_first.source = obj;
  r.proj_first.target = f.source;
  r.proj_second.source = obj;
  r.proj_second.target = g.source;
  r.proj_first.components.resize(static_cast<size_t>(d) + 1);
  r.proj_second.components.resize(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n)
    for (auto [a, b] : r.pairs[static_cast<size_t>(n)]) {
      r.proj_first.components[static_cast<size_t>(n)].push_back(a);
      r.proj_second.components[static_cast<size_t>(n)].push_back(b);
    }
  return r;
}

TruncSSet dec_top(const TruncSSet& x) {
  if (x.dim < 1) throw Error(ErrorKind::OutOfTruncation, "dec_top needs dim >= 1");
  TruncSSet y;
  y.init_levels(x.dim - 1);
  for (int k = 0; k < x.dim; ++k)
    y.labels[static_cast<size_t>(k)] = x.labels[static_cast<size_t>(k + 1)];
  for (int k = 1; k < x.dim; ++k)
    for (int i = 0; i <= k; ++i)
      y.faces[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          x.faces[static_cast<size_t>(k + 1)][static_cast<size_t>(i)];
  for (int k = 0; k + 1 < x.dim; ++k)
    for (int i = 0; i <= k; ++i)
      y.degens[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          x.degens[static_cast<size_t>(k + 1)][static_cast<size_t>(i)];
  return y;
}

TruncSSet dec_bot(const TruncSSet& x) {
  if (x.dim < 1) throw Error(ErrorKind::OutOfTruncation, "dec_bot needs dim >= 1");
  TruncSSet y;
  y.init_levels(x.dim - 1);
  for (int k = 0; k < x.dim; ++k)
    y.labels[static_cast<size_t>(k)] = x.labels[static_cast<size_t>(k + 1)];
  for (int k = 1; k < x.dim; ++k)
    for (int i = 0; i <= k; ++i)
      y.faces[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          x.faces[static_cast<size_t>(k + 1)][static_cast<size_t>(i + 1)];
  for (int k = 0; k + 1 < x.dim; ++k)
    for (int i = 0; i <= k; ++i)
      y.degens[static_cast<size_t>(k)][static_cast<size_t>(i)] =
          x.degens[static_cast<size_t>(k + 1)][static_cast<size_t>(i + 1)];
  return y;
}

TruncSSet truncate(const TruncSSet& x, int d) {
  if (d > x.dim) throw Error(ErrorKind::OutOfTruncation, "truncate: raising dim");
  TruncSSet y;
  y.init_levels(d);
  for (int n = 0; n <= d; ++n) y.labels[static_cast<size_t>(n)] = x.labels[static_cast<size_t>(n)];
  for (int n = 1; n <= d; ++n) y.faces[static_cast<size_t>(n)] = x.faces[static_cast<size_t>(n)];
  for (int n = 0; n < d; ++n) y.degens[static_cast<size_t>(n)] = x.degens[static_cast<size_t>(n)];
  return y;
}

SMap truncate_smap(const SMap& f, int d) {
  SMap g;
  g.source = std::make_shared<TruncSSet>(truncate(*f.source, d));
  g.target = std::make_shared<TruncSSet>(truncate(*f.target, d));
  g.components.assign(f.components.begin(), f.components.begin() + d + 1);
  return g;
}

SliceResult slice(const TruncSSet& x, int vertex) {
  if (x.dim < 1) throw Error(ErrorKind::OutOfTruncation, "slice needs dim >= 1");
  int d = x.dim - 1;
  SliceResult r;
  r.carrier.resize(static_cast<size_t>(d) + 1);
  std::vector<std::vector<int>> pos(static_cast<size_t>(d) + 1);
  auto obj = std::make_shared<TruncSSet>();
  obj->init_levels(d);
  for (int k = 0; k <= d; ++k) {
    pos[static_cast<size_t>(k)].assign(static_cast<size_t>(x.level_size(k + 1)), -1);
    auto lastv = act_table(x, OrdinalMap::last_vertex(k + 1));
    for (int e = 0; e < x.level_size(k + 1); ++e)
      if (lastv[static_cast<size_t>(e)] == vertex) {
        pos[static_cast<size_t>(k)][static_cast<size_t>(e)] =
            static_cast<int>(r.carrier[static_cast<size_t>(k)].size());
        r.carrier[static_cast<size_t>(k)].push_back(e);
        obj->labels[static_cast<size_t>(k)].push_back(
            x.labels[static_cast<size_t>(k + 1)][static_cast<size_t>(e)]);
      }
  }
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = obj->faces[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (int e : r.carrier[static_cast<size_t>(k)])
        tbl.push_back(
            pos[static_cast<size_t>(k - 1)][static_cast<size_t>(x.face(k + 1, i, e))]);
    }
  for (int k = 0; k < d; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = obj->degens[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (int e : r.carrier[static_cast<size_t>(k)])
        tbl.push_back(
            pos[static_cast<size_t>(k + 1)][static_cast<size_t>(x.degen(k + 1, i, e))]);
    }
  r.object = obj;
  r.projection.source = obj;
  r.projection.target = std::make_shared<TruncSSet>(x);
  r.projection.components.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    for (int e : r.carrier[static_cast<size_t>(k)])
      r.projection.components[static_cast<size_t>(k)].push_back(x.face(k + 1, k + 1, e));
  return r;
}

IntervalResult interval(const TruncSSet& x, int edge) {
  if (x.dim < 2) throw Error(ErrorKind::OutOfTruncation, "interval needs dim >= 2");
  int d = x.dim - 2;
  IntervalResult r;
  r.carrier.resize(static_cast<size_t>(d) + 1);
  std::vector<std::vector<int>> pos(static_cast<size_t>(d) + 1);
  auto obj = std::make_shared<TruncSSet>();
  obj->init_levels(d);
  for (int k = 0; k <= d; ++k) {
    pos[static_cast<size_t>(k)].assign(static_cast<size_t>(x.level_size(k + 2)), -1);
    auto longe = act_table(x, OrdinalMap::long_edge(k + 2));
    for (int e = 0; e < x.level_size(k + 2); ++e)
      if (longe[static_cast<size_t>(e)] == edge) {
        pos[static_cast<size_t>(k)][static_cast<size_t>(e)] =
            static_cast<int>(r.carrier[static_cast<size_t>(k)].size());
        r.carrier[static_cast<size_t>(k)].push_back(e);
        obj->labels[static_cast<size_t>(k)].push_back(
            x.labels[static_cast<size_t>(k + 2)][static_cast<size_t>(e)]);
      }
  }
  for (int k = 1; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = obj->faces[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (int e : r.carrier[static_cast<size_t>(k)])
        tbl.push_back(
            pos[static_cast<size_t>(k - 1)][static_cast<size_t>(x.face(k + 2, i + 1, e))]);
    }
  for (int k = 0; k < d; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = obj->degens[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (int e : r.carrier[static_cast<size_t>(k)])
        tbl.push_back(
            pos[static_cast<size_t>(k + 1)][static_cast<size_t>(x.degen(k + 2, i + 1, e))]);
    }
  r.object = obj;
  r.initial_vertex = pos[0][static_cast<size_t>(x.degen(1, 0, edge))];
  r.terminal_vertex = pos[0][static_cast<size_t>(x.degen(1, 1, edge))];
  return r;
}

// --- isomorphism search ----------------------------------------------------------

namespace {

struct IsoSearch {
  const TruncSSet& a;
  const TruncSSet& b;
  const SMap* over_a = nullptr;
  const SMap* over_b = nullptr;
  int d;
  std::vector<std::vector<int>> phi;
  std::vector<std::vector<bool>> used;

  IsoSearch(const TruncSSet& a_, const TruncSSet& b_) : a(a_), b(b_), d(a_.dim) {}

  bool candidate_ok(int n, int x, int y) const {
    if (over_a && over_a->at(n, x) != over_b->at(n, y)) return false;
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        if (phi[static_cast<size_t>(n - 1)][static_cast<size_t>(a.face(n, i, x))] !=
            b.face(n, i, y))
          return false;
    return true;
  }

  bool degens_consistent(int n) const {
    if (n == 0) return true;
    for (int i = 0; i <= n - 1; ++i)
      for (int y = 0; y < a.level_size(n - 1); ++y)
        if (phi[static_cast<size_t>(n)][static_cast<size_t>(a.degen(n - 1, i, y))] !=
            b.degen(n - 1, i, phi[static_cast<size_t>(n - 1)][static_cast<size_t>(y)]))
          return false;
    return true;
  }

  bool assign(int n, int x) {
    if (x == a.level_size(n)) {
      if (!degens_consistent(n)) return false;
      if (n == d) return true;
      return assign(n + 1, 0);
    }
    for (int y = 0; y < b.level_size(n); ++y) {
      if (used[static_cast<size_t>(n)][static_cast<size_t>(y)]) continue;
      if (!candidate_ok(n, x, y)) continue;
      phi[static_cast<size_t>(n)][static_cast<size_t>(x)] = y;
      used[static_cast<size_t>(n)][static_cast<size_t>(y)] = true;
      if (assign(n, x + 1)) return true;
      used[static_cast<size_t>(n)][static_cast<size_t>(y)] = false;
    }
    return false;
  }

  std::optional<std::vector<std::vector<int>>> run() {
    if (a.dim != b.dim) return std::nullopt;
    for (int n = 0; n <= d; ++n)
      if (a.level_size(n) != b.level_size(n)) return std::nullopt;
    phi.assign(static_cast<size_t>(d) + 1, {});
    used.assign(static_cast<size_t>(d) + 1, {});
    for (int n = 0; n <= d; ++n) {
      phi[static_cast<size_t>(n)].assign(static_cast<size_t>(a.level_size(n)), -1);
      used[static_cast<size_t>(n)].assign(static_cast<size_t>(b.level_size(n)), false);
    }
    if (assign(0, 0)) return phi;
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> find_isomorphism(const TruncSSet& a,
                                                              const TruncSSet& b) {
  IsoSearch s(a, b);
  return s.run();
}

std::optional<std::vector<std::vector<int>>> find_isomorphism_over(const SMap& q1,
                                                                   const SMap& q2) {
  if (q1.target.get() != q2.target.get() &&
      !sset_equal_structure(*q1.target, *q2.target))
    return std::nullopt;
  int d = std::min(q1.dim(), q2.dim());
  if (q1.source->dim != d || q2.source->dim != d) {
    // compare only in the common range by truncating views is not supported;
    // callers arrange equal dims
  }
  IsoSearch s(*q1.source, *q2.source);
  s.over_a = &q1;
  s.over_b = &q2;
  return s.run();
}

bool is_levelwise_bijection(const SMap& f) {
  for (int n = 0; n <= f.dim(); ++n) {
    if (f.source->level_size(n) != f.target->level_size(n)) return false;
    std::vector<bool> hit(static_cast<size_t>(f.target->level_size(n)), false);
    for (int e = 0; e < f.source->level_size(n); ++e) {
      int v = f.at(n, e);
      if (hit[static_cast<size_t>(v)]) return false;
      hit[static_cast<size_t>(v)] = true;
    }
  }
  return true;
}

bool is_degenerate(const TruncSSet& x, int n, int elem) {
  if (n == 0) return false;
  for (int i = 0; i <= n - 1; ++i)
    for (int y = 0; y < x.level_size(n - 1); ++y)
      if (x.degen(n - 1, i, y) == elem) return true;
  return false;
}

// --- free degeneracy completion -----------------------------------------------------

int SSetBuilder::add_cell(int d, std::vector<FormalElem> faces, std::string label) {
  if (static_cast<int>(cells_per_dim.size()) <= d) {
    cells_per_dim.resize(static_cast<size_t>(d) + 1, 0);
    cell_faces.resize(static_cast<size_t>(d) + 1);
    cell_labels.resize(static_cast<size_t>(d) + 1);
  }
  if (d > 0 && static_cast<int>(faces.size()) != d + 1)
    throw Error(ErrorKind::BadInput, "cell of dim d needs d+1 faces");
  int id = cells_per_dim[static_cast<size_t>(d)]++;
  cell_faces[static_cast<size_t>(d)].push_back(std::move(faces));
  cell_labels[static_cast<size_t>(d)].push_back(
      label.empty() ? "c" + std::to_string(d) + "_" + std::to_string(id) : label);
  return id;
}

namespace {

using Formal = SSetBuilder::FormalElem;

Formal eval_cell(const SSetBuilder& bld, int dim, int cell, const OrdinalMap& beta);

// mu : [r] >-> [dim] applied to a cell, peeling declared faces.
Formal reduce_mono(const SSetBuilder& bld, int dim, int cell, const OrdinalMap& mu) {
  if (mu.dom == mu.cod) return {OrdinalMap::identity(mu.dom), cell};
  std::vector<bool> hit(static_cast<size_t>(mu.cod) + 1, false);
  for (int v : mu.images) hit[static_cast<size_t>(v)] = true;
  int v = mu.cod;
  while (hit[static_cast<size_t>(v)]) --v;  // largest missing value
  const Formal& f2 = bld.cell_faces[static_cast<size_t>(dim)][static_cast<size_t>(cell)]
                                   [static_cast<size_t>(v)];
  std::vector<int> imgs;
  imgs.reserve(mu.images.size());
  for (int w : mu.images) imgs.push_back(w < v ? w : w - 1);
  OrdinalMap mu0{mu.dom, mu.cod - 1, std::move(imgs)};
  return eval_cell(bld, f2.collapse.cod, f2.cell, compose(f2.collapse, mu0));
}

Formal eval_cell(const SSetBuilder& bld, int dim, int cell, const OrdinalMap& beta) {
  auto [eta, mu] = epi_mono_factorize(beta);
  Formal g = reduce_mono(bld, dim, cell, mu);
  return {compose(g.collapse, eta), g.cell};
}

Formal eval_formal(const SSetBuilder& bld, const Formal& f, const OrdinalMap& alpha) {
  return eval_cell(bld, f.collapse.cod, f.cell, compose(f.collapse, alpha));
}

}  // namespace

TruncSSet SSetBuilder::build(int trunc_dim) const {
  TruncSSet x;
  x.init_levels(trunc_dim);
  int maxcell = static_cast<int>(cells_per_dim.size()) - 1;
  std::vector<std::vector<Formal>> lv(static_cast<size_t>(trunc_dim) + 1);
  std::vector<std::map<std::tuple<int, int, std::vector<int>>, int>> idx(
      static_cast<size_t>(trunc_dim) + 1);
  for (int n = 0; n <= trunc_dim; ++n)
    for (int k = 0; k <= std::min(n, maxcell); ++k) {
      std::vector<OrdinalMap> epis;
      for (const auto& e : enumerate_ordinal_maps(n, k))
        if (classify(e).surjective) epis.push_back(e);
      for (int c = 0; c < cells_per_dim[static_cast<size_t>(k)]; ++c)
        for (const auto& e : epis) {
          idx[static_cast<size_t>(n)][{k, c, e.images}] =
              static_cast<int>(lv[static_cast<size_t>(n)].size());
          lv[static_cast<size_t>(n)].push_back({e, c});
          std::string lbl = cell_labels[static_cast<size_t>(k)][static_cast<size_t>(c)];
          if (!e.is_identity()) lbl += "*" + e.str();
          x.labels[static_cast<size_t>(n)].push_back(lbl);
        }
    }
  auto find = [&](int n, const Formal& f) {
    auto it = idx[static_cast<size_t>(n)].find({f.collapse.cod, f.cell, f.collapse.images});
    if (it == idx[static_cast<size_t>(n)].end())
      throw Error(ErrorKind::InvalidSSet, "builder: formal element not found");
    return it->second;
  };
  for (int n = 1; n <= trunc_dim; ++n)
    for (int i = 0; i <= n; ++i) {
      auto& tbl = x.faces[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& f : lv[static_cast<size_t>(n)])
        tbl.push_back(find(n - 1, eval_formal(*this, f, OrdinalMap::coface(n, i))));
    }
  for (int n = 0; n < trunc_dim; ++n)
    for (int i = 0; i <= n; ++i) {
      auto& tbl = x.degens[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (const auto& f : lv[static_cast<size_t>(n)])
        tbl.push_back(find(n + 1, eval_formal(*this, f, OrdinalMap::codegeneracy(n, i))));
    }
  return x;
}

}  // namespace sdkit
