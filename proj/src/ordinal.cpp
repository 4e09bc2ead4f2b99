#include "sdkit/ordinal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sdkit {

OrdinalMap OrdinalMap::identity(int n) {
  std::vector<int> imgs(static_cast<size_t>(n) + 1);
  std::iota(imgs.begin(), imgs.end(), 0);
  return {n, n, std::move(imgs)};
}

OrdinalMap OrdinalMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n)
    throw Error(ErrorKind::BadInput, "coface: need n >= 1 and 0 <= i <= n");
  std::vector<int> imgs;
  imgs.reserve(static_cast<size_t>(n));
  for (int v = 0; v <= n; ++v)
    if (v != i) imgs.push_back(v);
  return {n - 1, n, std::move(imgs)};
}

OrdinalMap OrdinalMap::codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n)
    throw Error(ErrorKind::BadInput, "codegeneracy: need 0 <= i <= n");
  std::vector<int> imgs;
  imgs.reserve(static_cast<size_t>(n) + 2);
  for (int v = 0; v <= n + 1; ++v) imgs.push_back(v <= i ? std::min(v, i) : v - 1);
  return {n + 1, n, std::move(imgs)};
}

OrdinalMap OrdinalMap::last_vertex(int n) { return {0, n, {n}}; }

OrdinalMap OrdinalMap::first_vertex(int n) { return {0, n, {0}}; }

OrdinalMap OrdinalMap::long_edge(int n) { return {1, n, {0, n}}; }

bool OrdinalMap::is_identity() const {
  if (dom != cod) return false;
  for (int i = 0; i <= dom; ++i)
    if (images[static_cast<size_t>(i)] != i) return false;
  return true;
}

bool OrdinalMap::is_valid() const {
  if (dom < 0 || cod < 0) return false;
  if (images.size() != static_cast<size_t>(dom) + 1) return false;
  int prev = 0;
  for (size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 0 || v > cod) return false;
    if (i > 0 && v < prev) return false;
    prev = v;
  }
  return true;
}

std::string OrdinalMap::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < images.size(); ++i) {
    if (i) os << ",";
    os << images[i];
  }
  os << "):[" << dom << "]->[" << cod << "]";
  return os.str();
}

OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f) {
  if (f.cod != g.dom)
    throw Error(ErrorKind::DimensionMismatch,
                "compose: cod " + std::to_string(f.cod) + " != dom " +
                    std::to_string(g.dom));
  std::vector<int> imgs(f.images.size());
  for (size_t i = 0; i < f.images.size(); ++i)
    imgs[i] = g.images[static_cast<size_t>(f.images[i])];
  return {f.dom, g.cod, std::move(imgs)};
}

MapClass classify(const OrdinalMap& f) {
  MapClass c;
  c.first_point_preserving = f.images.front() == 0;
  c.last_point_preserving = f.images.back() == f.cod;
  c.active = c.first_point_preserving && c.last_point_preserving;
  c.inert = true;
  c.injective = true;
  for (int i = 0; i < f.dom; ++i) {
    int step = f(i + 1) - f(i);
    if (step != 1) c.inert = false;
    if (step == 0) c.injective = false;
  }
  std::vector<bool> hit(static_cast<size_t>(f.cod) + 1, false);
  for (int v : f.images) hit[static_cast<size_t>(v)] = true;
  c.surjective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return c;
}

std::pair<OrdinalMap, OrdinalMap> epi_mono_factorize(const OrdinalMap& f) {
  std::vector<int> distinct;
  for (int v : f.images)
    if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
  int r = static_cast<int>(distinct.size()) - 1;
  std::vector<int> epi_imgs(f.images.size());
  {
    int j = 0;
    for (size_t i = 0; i < f.images.size(); ++i) {
      while (distinct[static_cast<size_t>(j)] != f.images[i]) ++j;
      epi_imgs[i] = j;
    }
  }
  OrdinalMap epi{f.dom, r, std::move(epi_imgs)};
  OrdinalMap mono{r, f.cod, std::move(distinct)};
  return {epi, mono};
}

std::pair<OrdinalMap, OrdinalMap> active_inert_factorize(const OrdinalMap& f) {
  int lo = f.images.front(), hi = f.images.back();
  std::vector<int> act_imgs(f.images.size());
  for (size_t i = 0; i < f.images.size(); ++i) act_imgs[i] = f.images[i] - lo;
  OrdinalMap act{f.dom, hi - lo, std::move(act_imgs)};
  std::vector<int> inr_imgs(static_cast<size_t>(hi - lo) + 1);
  std::iota(inr_imgs.begin(), inr_imgs.end(), lo);
  OrdinalMap inr{hi - lo, f.cod, std::move(inr_imgs)};
  return {act, inr};
}

int q_on_object(int n) {
  if (n < 0) throw Error(ErrorKind::BadInput, "q_on_object: n < 0");
  return 2 * n + 1;
}

OrdinalMap q_on_map(const OrdinalMap& f, Convention conv) {
  int m = f.dom, n = f.cod;
  std::vector<int> imgs(static_cast<size_t>(2 * m + 2));
  if (conv == Convention::Q) {
    // position j <= m holds element (m-j)', position j > m holds j-m-1
    for (int j = 0; j <= m; ++j) imgs[static_cast<size_t>(j)] = n - f(m - j);
    for (int j = m + 1; j <= 2 * m + 1; ++j)
      imgs[static_cast<size_t>(j)] = n + 1 + f(j - m - 1);
  } else {
    // [n] * [n]^op: position j <= m holds element j, j > m holds (2m+1-j)'
    for (int j = 0; j <= m; ++j) imgs[static_cast<size_t>(j)] = f(j);
    for (int j = m + 1; j <= 2 * m + 1; ++j)
      imgs[static_cast<size_t>(j)] = 2 * n + 1 - f(2 * m + 1 - j);
  }
  return {2 * m + 1, 2 * n + 1, std::move(imgs)};
}

OrdinalMap last_vertex_inclusion(int n) { return OrdinalMap::last_vertex(n); }

std::vector<OrdinalMap> enumerate_ordinal_maps(int m, int n) {
  std::vector<OrdinalMap> out;
  if (m < 0 || n < 0) return out;
  std::vector<int> cur(static_cast<size_t>(m) + 1, 0);
  while (true) {
    out.push_back({m, n, cur});
    int i = m;
    while (i >= 0 && cur[static_cast<size_t>(i)] == n) --i;
    if (i < 0) break;
    int v = ++cur[static_cast<size_t>(i)];
    for (int j = i + 1; j <= m; ++j) cur[static_cast<size_t>(j)] = v;
  }
  return out;
}

long long count_ordinal_maps(int m, int n) {
  // binomial(n + m + 1, m + 1)
  long long r = 1;
  for (int i = 1; i <= m + 1; ++i) r = r * (n + i) / i;
  return r;
}

PushoutSquare pushout_inert_active(const OrdinalMap& inert_side,
                                   const OrdinalMap& active_side) {
  if (inert_side.dom != active_side.dom)
    throw Error(ErrorKind::DimensionMismatch, "pushout: domains differ");
  if (!classify(inert_side).inert || !classify(active_side).active)
    throw Error(ErrorKind::BadInput, "pushout: need (inert, active) pair");
  int m = inert_side.dom, n = inert_side.cod, k = active_side.cod;
  int off = inert_side.images.front();
  int p = n - m + k;
  std::vector<int> gp(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (i < off)
      gp[static_cast<size_t>(i)] = i;
    else if (i <= off + m)
      gp[static_cast<size_t>(i)] = off + active_side(i - off);
    else
      gp[static_cast<size_t>(i)] = i - m + k;
  }
  std::vector<int> ip(static_cast<size_t>(k) + 1);
  std::iota(ip.begin(), ip.end(), off);
  return {inert_side, active_side, OrdinalMap{n, p, std::move(gp)},
          OrdinalMap{k, p, std::move(ip)}};
}

std::vector<PushoutSquare> active_inert_pushouts(int bound) {
  if (bound < 1) throw Error(ErrorKind::BadInput, "active_inert_pushouts: bound < 1");
  std::vector<PushoutSquare> out;
  for (int m = 0; m <= bound; ++m) {
    for (int n = m; n <= bound; ++n) {
      for (int k = 0; n - m + k <= bound; ++k) {
        if (m == 0 && k != 0) break;  // no active [0] -> [k] for k > 0
        for (int off = 0; off <= n - m; ++off) {
          std::vector<int> phi(static_cast<size_t>(m) + 1);
          std::iota(phi.begin(), phi.end(), off);
          OrdinalMap inert_side{m, n, std::move(phi)};
          for (const auto& g : enumerate_ordinal_maps(m, k)) {
            if (!classify(g).active) continue;
            out.push_back(pushout_inert_active(inert_side, g));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace sdkit
