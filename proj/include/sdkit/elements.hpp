#pragma once

#include <map>
#include <memory>
#include <vector>

#include "sdkit/cat.hpp"
#include "sdkit/ordinal.hpp"
#include "sdkit/sset.hpp"

namespace sdkit {

// beta(f) : [k] -> [n_last] for a composable chain f_1, ..., f_k starting
// anywhere and ending at [n_last]; i |-> f_k ... f_{i+1}(n_i). The empty
// chain at [n] gives the last-vertex inclusion. Always last-point-preserving,
// and the unique filler of the ladder diagram with d^top maps on top.
OrdinalMap lower_segments(const std::vector<OrdinalMap>& chain, int n_last);

// alpha(f) : [2k+1] -> [n_last]; position encoding as in q_on_object.
// i |-> f_k ... f_{i+1}(n_i), i' |-> f_k ... f_{i+1}(0). Always active, and
// the unique filler of the ladder diagram with Q(d^top) maps on top.
OrdinalMap middle_segments(const std::vector<OrdinalMap>& chain, int n_last);

// The category of elements of X: objects (n, sigma), morphisms
// (m, alpha^* sigma) -> (n, sigma) for ordinal maps alpha : [m] -> [n].
// Materialized with its explicit composition table; meant for small X.
struct ElCat {
  FinCat cat;
  std::vector<std::pair<int, int>> objects;  // (level, element)
  std::shared_ptr<const FinCat> delta;       // delta_trunc(X.dim)
  Functor projection;                        // cat -> delta
};

ElCat el(const TruncSSet& x);

// One k-simplex of Nel(X): a chain of composable ordinal maps with all
// ordinals <= X.dim, together with sigma in X_{n_last}.
struct NelElem {
  std::vector<OrdinalMap> chain;
  int n_last = 0;
  int sigma = 0;
};

struct Nel {
  SSetPtr sset;
  SSetPtr base;
  std::vector<std::vector<NelElem>> elems;
  std::vector<std::map<std::vector<int>, int>> index;

  int index_of(const NelElem& e) const;
  static std::vector<int> key(const NelElem& e);
};

// Nerve of el(X) materialized to simplicial degree d_prime.
Nel nel(const TruncSSet& x, int d_prime);

// Last-vertex map Nel(X) -> X; degree k sends (f, sigma) to beta(f)^* sigma.
SMap xi(const Nel& n);

// lambda : Nel(X) -> Sd(X); degree k sends (f, sigma) to alpha(f)^* sigma,
// an element of X_{2k+1} = (Sd X)_k. Requires X.dim >= 2 d_prime + 1.
SMap lambda(const Nel& n);

// The renaming of Nel(Sd X) along the identification of el(Sd X) with the
// Q-pullback of el(X): chains map by q_on_map, elements are reinterpreted
// one level up. Target is nel(X, d_prime).
SMap nel_omega(const Nel& nel_sdx, const Nel& nel_x);

// The el-level discrete fibration el(Y) -> el(X) induced by a simplicial
// map, presented by the map itself; lifts are enumerated on demand by the
// checkers.
struct ElFib {
  SMap map;
};

ElFib smap_to_discfib(const SMap& q);

// A set-valued presheaf on el(X), stored on generator morphisms.
// face_action[n][i][sigma] : fiber(n, sigma) -> fiber(n-1, d_i sigma);
// degen_action[n][i][sigma] : fiber(n, sigma) -> fiber(n+1, s_i sigma).
struct ElPresheaf {
  SSetPtr base;
  std::vector<std::vector<int>> fiber_sizes;
  std::vector<std::vector<std::vector<std::vector<int>>>> face_action;
  std::vector<std::vector<std::vector<std::vector<int>>>> degen_action;
};

// Grothendieck total space: Y_n = sum over sigma of the fiber, with the
// operator action pairing the base action with the presheaf transport.
SMap presheaf_to_smap(const ElPresheaf& p);

ElPresheaf smap_to_el_presheaf(const SMap& q);

}  // namespace sdkit
