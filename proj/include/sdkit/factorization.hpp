#pragma once

#include <map>
#include <memory>
#include <vector>

#include "sdkit/cat.hpp"
#include "sdkit/elements.hpp"
#include "sdkit/sset.hpp"

namespace sdkit {

// (final, discrete fibration) factorization of a functor, computed by the
// component formula P(d) = pi0(d | F) with contravariant action by
// precomposition. Validated against the orthogonality oracle in tests.
struct FunctorFactorization {
  Functor final_part;  // C -> middle
  DiscFib rfib_part;   // middle -> D
};

FunctorFactorization comprehensive_factorize_functor(const Functor& f);

// Object and morphism indices of a Grothendieck total category, matching
// the construction order used by grothendieck().
int groth_object_index(const Presheaf& p, int c, int x);
int groth_morphism_index(const Presheaf& p, int alpha, int x);

// Count functors j : E -> T with j o l = u and d.projection o j = v.
long long count_functor_fillers(const Functor& l, const Functor& u, const DiscFib& d,
                                const Functor& v);

// Reflection of an arbitrary simplicial map into right fibrations over its
// target: fibers are path classes in tau_1 of the target, quotiented by the
// edge relation of the source.
struct RfibReflection {
  SMap reflection;  // R -> Z
  SMap unit;        // W -> R over Z
};

RfibReflection rfib_reflection(const SMap& g, long long budget);

// The inverse equivalence: a right fibration p : R -> Sd(X) is turned into
// a culf map over X. Fibers over sigma are the p-fibers over the long edge
// of sigma; faces transport along the unique p-lifts of the middle-segment
// edges (pullback along lambda, computed summandwise).
SMap untwist(const SMap& p, const TruncSSet& x, Convention conv = Convention::Q);

// (ambifinal, culf) factorization: culf part = untwist of the rfib
// reflection of Sd(f); the ambifinal part is the induced unit.
struct CulfFactorization {
  SMap ambifinal_part;  // Y -> middle
  SMap culf_part;       // middle -> X
};

CulfFactorization culf_reflection(const SMap& f, long long budget,
                                  Convention conv = Convention::Q);

// Left Kan extension along Q on a truncated simplicial set, by the coend
// formula with generator zig-zag identifications.
struct QShriek {
  TruncSSet sset;
  // class index of a triple (k, sigma in X_k, gamma : [m] -> [2k+1])
  int class_of(int m, int k, int sigma, const OrdinalMap& gamma) const;
  // internal: per level, map from encoded triples to class
  std::vector<std::map<std::vector<int>, int>> triple_class;
};

QShriek q_shriek(const TruncSSet& x, int out_dim, Convention conv = Convention::Q);

// The counit Q_! Sd(Delta^n) -> Delta^n on representables, materialized to
// out_dim. rep_dim controls the truncation of Sd(Delta^n) fed into Q_!.
SMap counit_q_shriek_rep(int n, int rep_dim, int out_dim,
                         Convention conv = Convention::Q);

// The unit Delta^n -> Sd(Delta^{2n+1}) of Q_! -| Q^*; on a k-simplex gamma
// it is q_on_map(gamma); on vertices i |-> (n-i, n+i+1).
SMap eta_rep_smap(int n, int out_dim, Convention conv = Convention::Q);
// The same map as a functor of posets [n] -> Tw([2n+1]).
Functor eta_rep_functor(int n);

// Right adjoint to edgewise subdivision, computed in degrees 0..n_max where
// the mapping-set enumeration is exact for the stored truncation of w:
// (Q_* W)_n = simplicial maps Sd(Delta^n)|_{<= w.dim} -> W.
struct QStar {
  SSetPtr sset;
  SSetPtr w;
  Convention conv = Convention::Q;
  // elems[n][i][k][e]: image in W_k of the e-th map [2k+1] -> [n] (lex order)
  std::vector<std::vector<std::vector<std::vector<int>>>> elems;
  int index_of(int n, const std::vector<std::vector<int>>& comp) const;
};

QStar q_star(const TruncSSet& w, int n_max, Convention conv = Convention::Q);

// Unit X -> Q_* Sd X of Sd -| Q_*: sigma goes to Sd of its Yoneda map.
// qsw must be q_star(sd(x)) at a compatible bound.
SMap eta_prime(const TruncSSet& x, const QStar& qsw);

// Counit Sd(Q_* W) -> W in the degrees both sides carry: evaluation of a
// stored mapping family at the identity of [2n+1].
SMap eps_prime(const QStar& qsw);

}  // namespace sdkit
