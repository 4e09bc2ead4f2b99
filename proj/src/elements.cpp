#include "sdkit/elements.hpp"

#include <algorithm>
#include <numeric>

namespace sdkit {

OrdinalMap lower_segments(const std::vector<OrdinalMap>& chain, int n_last) {
  int k = static_cast<int>(chain.size());
  for (int i = 0; i + 1 < k; ++i)
    if (chain[static_cast<size_t>(i)].cod != chain[static_cast<size_t>(i + 1)].dom)
      throw Error(ErrorKind::DimensionMismatch, "lower_segments: chain not composable");
  if (k > 0 && chain.back().cod != n_last)
    throw Error(ErrorKind::DimensionMismatch, "lower_segments: chain does not end at n_last");
  std::vector<int> imgs(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    // f_k ... f_{i+1} applied to the top of [n_i]
    int v = i == 0 ? (k > 0 ? chain[0].dom : n_last) : chain[static_cast<size_t>(i - 1)].cod;
    for (int j = i; j < k; ++j) v = chain[static_cast<size_t>(j)](v);
    imgs[static_cast<size_t>(i)] = v;
  }
  return {k, n_last, std::move(imgs)};
}

OrdinalMap middle_segments(const std::vector<OrdinalMap>& chain, int n_last) {
  int k = static_cast<int>(chain.size());
  for (int i = 0; i + 1 < k; ++i)
    if (chain[static_cast<size_t>(i)].cod != chain[static_cast<size_t>(i + 1)].dom)
      throw Error(ErrorKind::DimensionMismatch, "middle_segments: chain not composable");
  if (k > 0 && chain.back().cod != n_last)
    throw Error(ErrorKind::DimensionMismatch, "middle_segments: chain does not end at n_last");
  auto push_through = [&](int i, int v) {
    for (int j = i; j < k; ++j) v = chain[static_cast<size_t>(j)](v);
    return v;
  };
  auto ordinal_at = [&](int i) {
    return i == 0 ? (k > 0 ? chain[0].dom : n_last) : chain[static_cast<size_t>(i - 1)].cod;
  };
  std::vector<int> imgs(static_cast<size_t>(2 * k + 2));
  // position j <= k holds element (k-j)', position j > k holds j-k-1
  for (int j = 0; j <= k; ++j) imgs[static_cast<size_t>(j)] = push_through(k - j, 0);
  for (int j = k + 1; j <= 2 * k + 1; ++j) {
    int i = j - k - 1;
    imgs[static_cast<size_t>(j)] = push_through(i, ordinal_at(i));
  }
  return {2 * k + 1, n_last, std::move(imgs)};
}

// --- el ------------------------------------------------------------------------

ElCat el(const TruncSSet& x) {
  ElCat out;
  auto delta = std::make_shared<FinCat>(delta_trunc(x.dim));
  out.delta = delta;
  FinCat& c = out.cat;
  std::map<std::pair<int, int>, int> oidx;
  for (int n = 0; n <= x.dim; ++n)
    for (int e = 0; e < x.level_size(n); ++e) {
      oidx[{n, e}] = c.num_objects++;
      out.objects.push_back({n, e});
      c.object_labels.push_back("(" + std::to_string(n) + "," +
                                x.labels[static_cast<size_t>(n)][static_cast<size_t>(e)] +
                                ")");
    }
  // morphism = (delta morphism alpha : [m] -> [n], sigma in X_n)
  std::map<std::pair<int, int>, int> midx;
  std::vector<std::pair<int, int>> mors;
  std::vector<int> proj_m;
  for (int a = 0; a < delta->num_morphisms(); ++a) {
    auto alpha = delta_trunc_map(*delta, a);
    auto tbl = act_table(x, alpha);
    for (int sigma = 0; sigma < x.level_size(alpha.cod); ++sigma) {
      midx[{a, sigma}] = static_cast<int>(mors.size());
      mors.push_back({a, sigma});
      c.morphisms.push_back({oidx.at({alpha.dom, tbl[static_cast<size_t>(sigma)]}),
                             oidx.at({alpha.cod, sigma})});
      c.morphism_labels.push_back(alpha.str());
      proj_m.push_back(a);
    }
  }
  c.identity.resize(static_cast<size_t>(c.num_objects));
  for (int o = 0; o < c.num_objects; ++o) {
    auto [n, e] = out.objects[static_cast<size_t>(o)];
    c.identity[static_cast<size_t>(o)] =
        midx.at({delta->identity[static_cast<size_t>(n)], e});
  }
  int nm = c.num_morphisms();
  c.compose_table.assign(static_cast<size_t>(nm), std::vector<int>(static_cast<size_t>(nm), -1));
  for (int g = 0; g < nm; ++g)
    for (int f = 0; f < nm; ++f)
      if (c.composable(g, f)) {
        auto [ag, sg] = mors[static_cast<size_t>(g)];
        auto [af, sf] = mors[static_cast<size_t>(f)];
        (void)sf;
        c.compose_table[static_cast<size_t>(g)][static_cast<size_t>(f)] =
            midx.at({delta->compose(ag, af), sg});
      }
  out.projection.source = std::make_shared<FinCat>(c);
  out.projection.target = delta;
  for (auto [n, e] : out.objects) {
    (void)e;
    out.projection.object_map.push_back(n);
  }
  out.projection.morphism_map = proj_m;
  return out;
}

// --- nel -----------------------------------------------------------------------

std::vector<int> Nel::key(const NelElem& e) {
  std::vector<int> k{e.n_last, e.sigma};
  for (const auto& f : e.chain) {
    k.push_back(f.dom);
    k.push_back(f.cod);
    k.insert(k.end(), f.images.begin(), f.images.end());
  }
  return k;
}

int Nel::index_of(const NelElem& e) const {
  int k = static_cast<int>(e.chain.size());
  auto it = index[static_cast<size_t>(k)].find(key(e));
  if (it == index[static_cast<size_t>(k)].end())
    throw Error(ErrorKind::BadInput, "nel element not found");
  return it->second;
}

Nel nel(const TruncSSet& x, int d_prime) {
  Nel out;
  out.base = std::make_shared<TruncSSet>(x);
  out.elems.resize(static_cast<size_t>(d_prime) + 1);
  out.index.resize(static_cast<size_t>(d_prime) + 1);
  // level 0: objects of el(X)
  for (int n = 0; n <= x.dim; ++n)
    for (int e = 0; e < x.level_size(n); ++e)
      out.elems[0].push_back({{}, n, e});
  // level k: extend chains on the left (prepend [n_0] -> dom of current first)
  for (int k = 1; k <= d_prime; ++k)
    for (const auto& prev : out.elems[static_cast<size_t>(k - 1)]) {
      int first_dom = prev.chain.empty() ? prev.n_last : prev.chain.front().dom;
      for (int n0 = 0; n0 <= x.dim; ++n0)
        for (const auto& f : enumerate_ordinal_maps(n0, first_dom)) {
          NelElem e;
          e.chain.reserve(prev.chain.size() + 1);
          e.chain.push_back(f);
          e.chain.insert(e.chain.end(), prev.chain.begin(), prev.chain.end());
          e.n_last = prev.n_last;
          e.sigma = prev.sigma;
          out.elems[static_cast<size_t>(k)].push_back(std::move(e));
        }
    }
  for (int k = 0; k <= d_prime; ++k) {
    auto& lv = out.elems[static_cast<size_t>(k)];
    std::sort(lv.begin(), lv.end(), [](const NelElem& a, const NelElem& b) {
      return Nel::key(a) < Nel::key(b);
    });
    for (size_t i = 0; i < lv.size(); ++i)
      out.index[static_cast<size_t>(k)][Nel::key(lv[i])] = static_cast<int>(i);
  }

  auto sset = std::make_shared<TruncSSet>();
  sset->init_levels(d_prime);
  for (int k = 0; k <= d_prime; ++k)
    for (const auto& e : out.elems[static_cast<size_t>(k)]) {
      std::string lbl;
      for (const auto& f : e.chain) lbl += f.str() + "|";
      lbl += "[" + std::to_string(e.n_last) + "]:" +
             x.labels[static_cast<size_t>(e.n_last)][static_cast<size_t>(e.sigma)];
      sset->labels[static_cast<size_t>(k)].push_back(lbl);
    }
  auto face_of = [&](const NelElem& e, int i) {
    int k = static_cast<int>(e.chain.size());
    NelElem r;
    r.n_last = e.n_last;
    r.sigma = e.sigma;
    if (i == k) {
      r.chain.assign(e.chain.begin(), e.chain.end() - 1);
      r.n_last = e.chain.back().dom;
      r.sigma = act(x, e.chain.back(), e.sigma);
    } else if (i == 0) {
      r.chain.assign(e.chain.begin() + 1, e.chain.end());
    } else {
      for (int j = 0; j < k; ++j) {
        if (j == i - 1) continue;
        if (j == i)
          r.chain.push_back(
              compose(e.chain[static_cast<size_t>(i)], e.chain[static_cast<size_t>(i - 1)]));
        else
          r.chain.push_back(e.chain[static_cast<size_t>(j)]);
      }
    }
    return r;
  };
  auto degen_of = [&](const NelElem& e, int i) {
    NelElem r = e;
    int obj = i == static_cast<int>(e.chain.size())
                  ? e.n_last
                  : e.chain[static_cast<size_t>(i)].dom;
    r.chain.insert(r.chain.begin() + i, OrdinalMap::identity(obj));
    return r;
  };
  for (int k = 1; k <= d_prime; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = sset->faces[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (const auto& e : out.elems[static_cast<size_t>(k)])
        tbl.push_back(out.index_of(face_of(e, i)));
    }
  for (int k = 0; k < d_prime; ++k)
    for (int i = 0; i <= k; ++i) {
      auto& tbl = sset->degens[static_cast<size_t>(k)][static_cast<size_t>(i)];
      for (const auto& e : out.elems[static_cast<size_t>(k)])
        tbl.push_back(out.index_of(degen_of(e, i)));
    }
  out.sset = sset;
  return out;
}

SMap xi(const Nel& n) {
  const TruncSSet& x = *n.base;
  int d = static_cast<int>(n.elems.size()) - 1;
  if (d > x.dim)
    throw Error(ErrorKind::OutOfTruncation, "xi: nel bound exceeds base truncation");
  SMap f;
  f.source = n.sset;
  f.target = n.base;
  f.components.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    for (const auto& e : n.elems[static_cast<size_t>(k)])
      f.components[static_cast<size_t>(k)].push_back(
          act(x, lower_segments(e.chain, e.n_last), e.sigma));
  return f;
}

SMap lambda(const Nel& n) {
  const TruncSSet& x = *n.base;
  int d = static_cast<int>(n.elems.size()) - 1;
  if (2 * d + 1 > x.dim)
    throw Error(ErrorKind::OutOfTruncation, "lambda: base truncation below 2k+1");
  SMap f;
  f.source = n.sset;
  f.target = std::make_shared<TruncSSet>(sd(x));
  f.components.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    for (const auto& e : n.elems[static_cast<size_t>(k)])
      f.components[static_cast<size_t>(k)].push_back(
          act(x, middle_segments(e.chain, e.n_last), e.sigma));
  return f;
}

SMap nel_omega(const Nel& nel_sdx, const Nel& nel_x) {
  int d = static_cast<int>(nel_sdx.elems.size()) - 1;
  SMap f;
  f.source = nel_sdx.sset;
  f.target = nel_x.sset;
  f.components.resize(static_cast<size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    for (const auto& e : nel_sdx.elems[static_cast<size_t>(k)]) {
      NelElem img;
      img.n_last = 2 * e.n_last + 1;
      img.sigma = e.sigma;  // (Sd X)_n = X_{2n+1} shares element indices
      for (const auto& a : e.chain) img.chain.push_back(q_on_map(a));
      f.components[static_cast<size_t>(k)].push_back(nel_x.index_of(img));
    }
  return f;
}

// --- transport -------------------------------------------------------------------

ElFib smap_to_discfib(const SMap& q) { return {q}; }

SMap presheaf_to_smap(const ElPresheaf& p) {
  const TruncSSet& x = *p.base;
  int d = static_cast<int>(p.fiber_sizes.size()) - 1;
  auto y = std::make_shared<TruncSSet>();
  y->init_levels(d);
  // pairs (sigma, r) ordered by sigma then r
  std::vector<std::vector<int>> offset(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    offset[static_cast<size_t>(n)].assign(static_cast<size_t>(x.level_size(n)) + 1, 0);
    for (int s = 0; s < x.level_size(n); ++s) {
      offset[static_cast<size_t>(n)][static_cast<size_t>(s + 1)] =
          offset[static_cast<size_t>(n)][static_cast<size_t>(s)] +
          p.fiber_sizes[static_cast<size_t>(n)][static_cast<size_t>(s)];
      for (int r = 0; r < p.fiber_sizes[static_cast<size_t>(n)][static_cast<size_t>(s)]; ++r)
        y->labels[static_cast<size_t>(n)].push_back(
            x.labels[static_cast<size_t>(n)][static_cast<size_t>(s)] + "#" +
            std::to_string(r));
    }
  }
  for (int n = 1; n <= d; ++n)
    for (int i = 0; i <= n; ++i) {
      auto& tbl = y->faces[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (int s = 0; s < x.level_size(n); ++s) {
        int ds = x.face(n, i, s);
        for (int r = 0; r < p.fiber_sizes[static_cast<size_t>(n)][static_cast<size_t>(s)]; ++r)
          tbl.push_back(offset[static_cast<size_t>(n - 1)][static_cast<size_t>(ds)] +
                        p.face_action[static_cast<size_t>(n)][static_cast<size_t>(i)]
                                     [static_cast<size_t>(s)][static_cast<size_t>(r)]);
      }
    }
  for (int n = 0; n < d; ++n)
    for (int i = 0; i <= n; ++i) {
      auto& tbl = y->degens[static_cast<size_t>(n)][static_cast<size_t>(i)];
      for (int s = 0; s < x.level_size(n); ++s) {
        int ss = x.degen(n, i, s);
        for (int r = 0; r < p.fiber_sizes[static_cast<size_t>(n)][static_cast<size_t>(s)]; ++r)
          tbl.push_back(offset[static_cast<size_t>(n + 1)][static_cast<size_t>(ss)] +
                        p.degen_action[static_cast<size_t>(n)][static_cast<size_t>(i)]
                                      [static_cast<size_t>(s)][static_cast<size_t>(r)]);
      }
    }
  SMap f;
  f.source = y;
  f.target = p.base;
  f.components.resize(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n)
    for (int s = 0; s < x.level_size(n); ++s)
      for (int r = 0; r < p.fiber_sizes[static_cast<size_t>(n)][static_cast<size_t>(s)]; ++r)
        f.components[static_cast<size_t>(n)].push_back(s);
  return f;
}

ElPresheaf smap_to_el_presheaf(const SMap& q) {
  const TruncSSet& x = *q.target;
  const TruncSSet& y = *q.source;
  int d = std::min(q.dim(), x.dim);
  ElPresheaf p;
  p.base = q.target;
  p.fiber_sizes.resize(static_cast<size_t>(d) + 1);
  // fibers listed in source element order; pos_in_fiber for transport tables
  std::vector<std::vector<std::vector<int>>> fibers(static_cast<size_t>(d) + 1);
  std::vector<std::vector<int>> pos(static_cast<size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) {
    fibers[static_cast<size_t>(n)].resize(static_cast<size_t>(x.level_size(n)));
    pos[static_cast<size_t>(n)].assign(static_cast<size_t>(y.level_size(n)), -1);
    for (int e = 0; e < y.level_size(n); ++e) {
      int s = q.at(n, e);
      pos[static_cast<size_t>(n)][static_cast<size_t>(e)] =
          static_cast<int>(fibers[static_cast<size_t>(n)][static_cast<size_t>(s)].size());
      fibers[static_cast<size_t>(n)][static_cast<size_t>(s)].push_back(e);
    }
    for (const auto& f : fibers[static_cast<size_t>(n)])
      p.fiber_sizes[static_cast<size_t>(n)].push_back(static_cast<int>(f.size()));
  }
  p.face_action.resize(static_cast<size_t>(d) + 1);
  p.degen_action.resize(static_cast<size_t>(d) + 1);
  for (int n = 1; n <= d; ++n) {
    p.face_action[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      auto& tbl = p.face_action[static_cast<size_t>(n)][static_cast<size_t>(i)];
      tbl.resize(static_cast<size_t>(x.level_size(n)));
      for (int s = 0; s < x.level_size(n); ++s)
        for (int e : fibers[static_cast<size_t>(n)][static_cast<size_t>(s)])
          tbl[static_cast<size_t>(s)].push_back(
              pos[static_cast<size_t>(n - 1)][static_cast<size_t>(y.face(n, i, e))]);
    }
  }
  for (int n = 0; n < d; ++n) {
    p.degen_action[static_cast<size_t>(n)].resize(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      auto& tbl = p.degen_action[static_cast<size_t>(n)][static_cast<size_t>(i)];
      tbl.resize(static_cast<size_t>(x.level_size(n)));
      for (int s = 0; s < x.level_size(n); ++s)
        for (int e : fibers[static_cast<size_t>(n)][static_cast<size_t>(s)])
          tbl[static_cast<size_t>(s)].push_back(
              pos[static_cast<size_t>(n + 1)][static_cast<size_t>(y.degen(n, i, e))]);
    }
  }
  return p;
}

}  // namespace sdkit
