#include "sdkit/checkers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sdkit {

Verdict is_pullback_square(const SquareData& s) {
  size_t pn = s.p_to_a.size();
  if (s.p_to_b.size() != pn)
    throw Error(ErrorKind::BadInput, "square: leg sizes differ");
  for (size_t e = 0; e < pn; ++e)
    if (s.a_to_c[static_cast<size_t>(s.p_to_a[e])] !=
        s.b_to_c[static_cast<size_t>(s.p_to_b[e])])
      throw Error(ErrorKind::NonCommuting, "square does not commute at element " +
                                               std::to_string(e));
  // multiplicity of each (a, b) pair in the fiber product
  std::map<std::pair<int, int>, int> mult;
  for (size_t e = 0; e < pn; ++e) ++mult[{s.p_to_a[e], s.p_to_b[e]}];
  Verdict v;
  v.route = "pullback";
  for (size_t a = 0; a < s.a_to_c.size(); ++a)
    for (size_t b = 0; b < s.b_to_c.size(); ++b) {
      if (s.a_to_c[a] != s.b_to_c[b]) continue;
      auto it = mult.find({static_cast<int>(a), static_cast<int>(b)});
      int m = it == mult.end() ? 0 : it->second;
      if (m != 1) {
        v.holds = false;
        v.witness = SquareWitness{s, static_cast<int>(a), static_cast<int>(b), m,
                                  "fiber-product element with multiplicity " +
                                      std::to_string(m)};
        return v;
      }
    }
  v.holds = true;
  return v;
}

namespace {

// The naturality square of p on the operator alpha : [m] -> [n]:
// Y_n = X_n x_{X_m} Y_m.
Verdict operator_square(const SMap& p, const OrdinalMap& alpha, const char* route) {
  SquareData s;
  s.p_to_a = act_table(*p.source, alpha);
  s.p_to_b = p.components[static_cast<size_t>(alpha.cod)];
  s.a_to_c = p.components[static_cast<size_t>(alpha.dom)];
  s.b_to_c = act_table(*p.target, alpha);
  auto v = is_pullback_square(s);
  v.route = route;
  if (v.witness) v.witness->note += " (operator " + alpha.str() + ")";
  return v;
}

}  // namespace

Verdict is_right_fibration(const SMap& p) {
  int d = std::min({p.dim(), p.source->dim, p.target->dim});
  Verdict out;
  out.verified_dim = d;
  out.route = "rfib:last-point-inclusions";
  for (int n = 1; n <= d; ++n) {
    auto v = operator_square(p, OrdinalMap::last_vertex(n), out.route.c_str());
    if (!v.holds) {
      v.verified_dim = d;
      return v;
    }
  }
  out.holds = true;
  return out;
}

Verdict is_left_fibration(const SMap& p) {
  int d = std::min({p.dim(), p.source->dim, p.target->dim});
  Verdict out;
  out.verified_dim = d;
  out.route = "lfib:first-point-inclusions";
  for (int n = 1; n <= d; ++n) {
    auto v = operator_square(p, OrdinalMap::first_vertex(n), out.route.c_str());
    if (!v.holds) {
      v.verified_dim = d;
      return v;
    }
  }
  out.holds = true;
  return out;
}

Verdict is_culf(const SMap& p) {
  int d = std::min({p.dim(), p.source->dim, p.target->dim});
  Verdict out;
  out.verified_dim = d;
  out.route = "culf:active-long-edges";
  for (int n = 2; n <= d; ++n) {
    auto v = operator_square(p, OrdinalMap::long_edge(n), out.route.c_str());
    if (!v.holds) {
      v.verified_dim = d;
      return v;
    }
  }
  out.holds = true;
  return out;
}

Verdict culf_degeneracy_square(const SMap& p) {
  auto v = operator_square(p, OrdinalMap::codegeneracy(0, 0), "culf:degeneracy-square");
  v.verified_dim = std::min({p.dim(), p.source->dim, p.target->dim});
  return v;
}

Verdict is_segal(const TruncSSet& x) {
  if (x.dim < 2) throw Error(ErrorKind::OutOfTruncation, "is_segal needs dim >= 2");
  Verdict out;
  out.verified_dim = x.dim;
  out.route = "segal:principal-edge-squares";
  for (int n = 2; n <= x.dim; ++n) {
    // X_n = X_{n-1} x_{X_0} X_1 along (front face, last edge)
    std::vector<int> front(static_cast<size_t>(n));
    std::iota(front.begin(), front.end(), 0);
    SquareData s;
    s.p_to_a = act_table(x, OrdinalMap{n - 1, n, front});          // front face
    s.p_to_b = act_table(x, OrdinalMap{1, n, {n - 1, n}});         // last edge
    s.a_to_c = act_table(x, OrdinalMap::last_vertex(n - 1));       // its last vertex
    s.b_to_c = act_table(x, OrdinalMap::first_vertex(1));          // edge source
    auto v = is_pullback_square(s);
    if (!v.holds) {
      v.verified_dim = x.dim;
      v.route = out.route;
      if (v.witness) v.witness->note += " (Segal square at n = " + std::to_string(n) + ")";
      return v;
    }
  }
  out.holds = true;
  return out;
}

Verdict is_decomposition(const TruncSSet& x, Convention conv) {
  if (x.dim < 3)
    throw Error(ErrorKind::OutOfTruncation, "is_decomposition needs dim >= 3");
  int sd_dim = (x.dim - 1) / 2;
  // route A over all pushout squares within the truncation
  Verdict route_a;
  route_a.holds = true;
  // the sub-verdict over the range route B also sees
  bool comparable_a = true;
  std::optional<SquareWitness> wit_a;
  for (const auto& sq : active_inert_pushouts(x.dim)) {
    SquareData s;
    s.p_to_a = act_table(x, sq.active_pushout);
    s.p_to_b = act_table(x, sq.inert_pushout);
    s.a_to_c = act_table(x, sq.inert_side);
    s.b_to_c = act_table(x, sq.active_side);
    auto v = is_pullback_square(s);
    if (!v.holds) {
      if (route_a.holds) {
        route_a.holds = false;
        wit_a = v.witness;
        if (wit_a)
          wit_a->note += " (pushout square " + sq.inert_side.str() + " along " +
                         sq.active_side.str() + ")";
      }
      int corners = std::max({sq.inert_side.cod, sq.active_pushout.cod});
      if (corners <= 2 * sd_dim + 1) comparable_a = false;
    }
  }
  Verdict out;
  out.verified_dim = x.dim;
  if (sd_dim >= 2) {
    auto route_b = is_segal(sd(x, conv));
    if (route_b.holds != comparable_a)
      throw Error(ErrorKind::RouteDisagreement,
                  std::string("decomposition routes disagree within common range: ") +
                      "pushout route says " + (comparable_a ? "true" : "false") +
                      ", Segal-of-Sd route says " + (route_b.holds ? "true" : "false"));
    out.holds = route_a.holds && route_b.holds;
    out.route = "decomposition:pushouts+segal-of-sd";
    out.witness = route_a.holds ? route_b.witness : wit_a;
  } else {
    out.holds = route_a.holds;
    out.route = "decomposition:pushouts-only(sd-truncation-below-segal-range)";
    out.witness = wit_a;
  }
  return out;
}

Verdict is_final_functor(const Functor& f) {
  Verdict out;
  out.verified_dim = 0;
  out.route = "final:nonempty-connected-commas";
  for (int d = 0; d < f.target->num_objects; ++d) {
    auto cm = comma_into(f, d);
    auto comp = pi0(cm);
    if (cm.num_objects == 0 || comp.count != 1) {
      out.holds = false;
      out.witness = SquareWitness{};
      out.witness->note = "comma at object " + std::to_string(d) + " has " +
                          std::to_string(cm.num_objects) + " objects in " +
                          std::to_string(comp.count) + " components";
      return out;
    }
  }
  out.holds = true;
  return out;
}

std::vector<bool> equivalences(const TruncSSet& x) {
  if (x.dim < 2) throw Error(ErrorKind::OutOfTruncation, "equivalences needs dim >= 2");
  int ne = x.level_size(1);
  std::vector<bool> out(static_cast<size_t>(ne), false);
  for (int f = 0; f < ne; ++f) {
    int src = x.face(1, 1, f), tgt = x.face(1, 0, f);
    bool right_wit = false, left_wit = false;
    for (int s = 0; s < x.level_size(2) && !(right_wit && left_wit); ++s) {
      if (!right_wit && x.face(2, 2, s) == f &&
          x.face(2, 1, s) == x.degen(0, 0, src))
        right_wit = true;
      if (!left_wit && x.face(2, 0, s) == f && x.face(2, 1, s) == x.degen(0, 0, tgt))
        left_wit = true;
    }
    out[static_cast<size_t>(f)] = right_wit && left_wit;
  }
  return out;
}

Verdict is_rezk_complete(const TruncSSet& x) {
  auto eq = equivalences(x);
  Verdict out;
  out.verified_dim = x.dim;
  out.route = "rezk:s0-bijective-onto-equivalences";
  std::vector<int> hit(eq.size(), 0);
  for (int v = 0; v < x.level_size(0); ++v) {
    int e = x.degen(0, 0, v);
    if (!eq[static_cast<size_t>(e)]) {
      out.holds = false;
      out.witness = SquareWitness{};
      out.witness->note = "degenerate edge not an equivalence at vertex " +
                          std::to_string(v);
      return out;
    }
    ++hit[static_cast<size_t>(e)];
  }
  for (size_t e = 0; e < eq.size(); ++e) {
    int expect = eq[e] ? 1 : 0;
    if (hit[e] != expect) {
      out.holds = false;
      out.witness = SquareWitness{};
      out.witness->note = "edge " + std::to_string(e) + " hit " +
                          std::to_string(hit[e]) + " times by s_0, expected " +
                          std::to_string(expect);
      return out;
    }
  }
  out.holds = true;
  return out;
}

Verdict is_dk_equivalence(const Functor& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  Verdict out;
  out.verified_dim = 0;
  out.route = "dk:essentially-surjective+fully-faithful";
  auto isos = iso_morphisms(d);
  for (int y = 0; y < d.num_objects; ++y) {
    bool hit = false;
    for (int x = 0; x < c.num_objects && !hit; ++x) {
      int fx = f.object_map[static_cast<size_t>(x)];
      if (fx == y) hit = true;
      for (int m = 0; m < d.num_morphisms() && !hit; ++m)
        if (isos[static_cast<size_t>(m)] && d.src(m) == fx && d.tgt(m) == y) hit = true;
    }
    if (!hit) {
      out.holds = false;
      out.witness = SquareWitness{};
      out.witness->note = "object " + std::to_string(y) + " not hit up to isomorphism";
      return out;
    }
  }
  for (int a = 0; a < c.num_objects; ++a)
    for (int b = 0; b < c.num_objects; ++b) {
      std::vector<int> image_count(static_cast<size_t>(d.num_morphisms()), 0);
      int hom_size = 0;
      for (int m = 0; m < c.num_morphisms(); ++m)
        if (c.src(m) == a && c.tgt(m) == b) {
          ++hom_size;
          ++image_count[static_cast<size_t>(f.morphism_map[static_cast<size_t>(m)])];
        }
      int target_hom = 0;
      bool injective = true;
      int fa = f.object_map[static_cast<size_t>(a)];
      int fb = f.object_map[static_cast<size_t>(b)];
      for (int m = 0; m < d.num_morphisms(); ++m)
        if (d.src(m) == fa && d.tgt(m) == fb) {
          ++target_hom;
          if (image_count[static_cast<size_t>(m)] > 1) injective = false;
        }
      if (!injective || hom_size != target_hom) {
        out.holds = false;
        out.witness = SquareWitness{};
        out.witness->note = "hom(" + std::to_string(a) + "," + std::to_string(b) +
                            ") not bijective onto hom of images";
        return out;
      }
    }
  out.holds = true;
  return out;
}

RelativeCompleteParts relative_complete_parts(const Functor& f) {
  const FinCat& c = *f.source;
  const FinCat& d = *f.target;
  auto isos_c = iso_morphisms(c);
  auto isos_d = iso_morphisms(d);
  RelativeCompleteParts parts;
  parts.source_direction = true;
  parts.target_direction = true;
  for (int e = 0; e < c.num_objects; ++e) {
    int fe = f.object_map[static_cast<size_t>(e)];
    for (int phi = 0; phi < d.num_morphisms(); ++phi) {
      if (!isos_d[static_cast<size_t>(phi)]) continue;
      if (d.src(phi) == fe) {
        int lifts = 0;
        for (int m = 0; m < c.num_morphisms(); ++m)
          if (isos_c[static_cast<size_t>(m)] && c.src(m) == e &&
              f.morphism_map[static_cast<size_t>(m)] == phi)
            ++lifts;
        if (lifts != 1) parts.source_direction = false;
      }
      if (d.tgt(phi) == fe) {
        int lifts = 0;
        for (int m = 0; m < c.num_morphisms(); ++m)
          if (isos_c[static_cast<size_t>(m)] && c.tgt(m) == e &&
              f.morphism_map[static_cast<size_t>(m)] == phi)
            ++lifts;
        if (lifts != 1) parts.target_direction = false;
      }
    }
  }
  return parts;
}

Verdict is_relative_complete(const Functor& f) {
  auto parts = relative_complete_parts(f);
  Verdict out;
  out.verified_dim = 0;
  out.route = std::string("relative-complete:source=") +
              (parts.source_direction ? "true" : "false") +
              ",target=" + (parts.target_direction ? "true" : "false");
  out.holds = parts.source_direction && parts.target_direction;
  if (!out.holds) {
    out.witness = SquareWitness{};
    out.witness->note = "isomorphism lift not unique";
  }
  return out;
}

namespace {

// Left-fibration condition on el(Y) -> el(X) after restriction to a class of
// ordinal maps: unique opposite lifts, enumerated fiberwise per operator.
Verdict el_left_fibration_on_class(const ElFib& q, bool active_class,
                                   const char* route) {
  const SMap& p = q.map;
  const TruncSSet& y = *p.source;
  const TruncSSet& x = *p.target;
  int d = std::min({p.dim(), y.dim, x.dim});
  Verdict out;
  out.verified_dim = d;
  out.route = route;
  for (int m = 0; m <= d; ++m)
    for (int n = 0; n <= d; ++n)
      for (const auto& alpha : enumerate_ordinal_maps(m, n)) {
        auto cls = classify(alpha);
        if (active_class ? !cls.active : !cls.last_point_preserving) continue;
        auto tx = act_table(x, alpha);
        auto ty = act_table(y, alpha);
        // for each sigma_x in X_n and each y-element over alpha^* sigma_x,
        // count lifts in the fiber over sigma_x
        std::vector<std::vector<int>> fiber_n(static_cast<size_t>(x.level_size(n)));
        for (int e = 0; e < y.level_size(n); ++e)
          fiber_n[static_cast<size_t>(p.at(n, e))].push_back(e);
        std::vector<std::vector<int>> fiber_m(static_cast<size_t>(x.level_size(m)));
        for (int e = 0; e < y.level_size(m); ++e)
          fiber_m[static_cast<size_t>(p.at(m, e))].push_back(e);
        std::vector<int> hits(static_cast<size_t>(y.level_size(m)));
        for (int sx = 0; sx < x.level_size(n); ++sx) {
          int sxp = tx[static_cast<size_t>(sx)];
          for (int e : fiber_n[static_cast<size_t>(sx)])
            ++hits[static_cast<size_t>(ty[static_cast<size_t>(e)])];
          for (int ep : fiber_m[static_cast<size_t>(sxp)]) {
            if (hits[static_cast<size_t>(ep)] != 1) {
              out.holds = false;
              out.witness = SquareWitness{};
              out.witness->note =
                  "element " + std::to_string(ep) + " at level " + std::to_string(m) +
                  " has " + std::to_string(hits[static_cast<size_t>(ep)]) +
                  " opposite lifts along " + alpha.str() + " over target element " +
                  std::to_string(sx) + " at level " + std::to_string(n);
              return out;
            }
          }
          for (int e : fiber_n[static_cast<size_t>(sx)])
            hits[static_cast<size_t>(ty[static_cast<size_t>(e)])] = 0;
        }
      }
  out.holds = true;
  return out;
}

}  // namespace

Verdict is_culfy(const ElFib& q) {
  return el_left_fibration_on_class(q, true, "culfy:left-fib-on-active");
}

Verdict is_righteous(const ElFib& q) {
  return el_left_fibration_on_class(q, false, "righteous:left-fib-on-last-point");
}

}  // namespace sdkit
