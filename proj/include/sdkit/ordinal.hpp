#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sdkit/error.hpp"

namespace sdkit {

// Which join convention the subdivision functor uses:
//   Q      : [n] |-> [n]^op * [n]   (primes first, reversed)
//   QPrime : [n] |-> [n] * [n]^op
// All dualities downstream (left vs right fibrations) flip with the flag.
enum class Convention { Q, QPrime };

// A monotone map [m] -> [n] between finite nonempty ordinals
// [m] = {0,...,m}, stored as its image tuple. This is the single currency
// for all operator arithmetic; cofaces and codegeneracies are derived
// constructors, not a separate representation.
struct OrdinalMap {
  int dom = 0;              // m
  int cod = 0;              // n
  std::vector<int> images;  // size m+1, weakly increasing, values in [0, n]

  OrdinalMap() = default;
  OrdinalMap(int m, int n, std::vector<int> imgs)
      : dom(m), cod(n), images(std::move(imgs)) {}

  static OrdinalMap identity(int n);
  // d^i : [n-1] -> [n], the injection omitting i (requires n >= 1).
  static OrdinalMap coface(int n, int i);
  // s^i : [n+1] -> [n], the surjection repeating i.
  static OrdinalMap codegeneracy(int n, int i);
  // [0] -> [n], 0 |-> n.
  static OrdinalMap last_vertex(int n);
  // [0] -> [n], 0 |-> 0.
  static OrdinalMap first_vertex(int n);
  // the unique active [1] -> [n]: 0 |-> 0, 1 |-> n.
  static OrdinalMap long_edge(int n);

  int operator()(int i) const { return images[static_cast<size_t>(i)]; }
  bool operator==(const OrdinalMap&) const = default;
  bool is_identity() const;
  bool is_valid() const;
  std::string str() const;
};

struct MapClass {
  bool active = false;                 // endpoint preserving
  bool inert = false;                  // distance preserving
  bool last_point_preserving = false;  // f(m) = n
  bool first_point_preserving = false; // f(0) = 0
  bool injective = false;
  bool surjective = false;
};

// g o f; throws DimensionMismatch unless f.cod == g.dom.
OrdinalMap compose(const OrdinalMap& g, const OrdinalMap& f);

MapClass classify(const OrdinalMap& f);

// Unique factorization f = mono o epi with epi surjective, mono injective.
std::pair<OrdinalMap, OrdinalMap> epi_mono_factorize(const OrdinalMap& f);

// Unique factorization f = inr o act with act active, inr inert.
std::pair<OrdinalMap, OrdinalMap> active_inert_factorize(const OrdinalMap& f);

// [n] |-> [2n+1]. Position encoding of Q[n] (fixed project-wide):
// element i' sits at position n - i, element i at position n + 1 + i.
int q_on_object(int n);

// Q(f) = f^op * f : [2m+1] -> [2n+1] (or the primed variant f * f^op).
// Functorial: q_on_map(g o f) = q_on_map(g) o q_on_map(f).
OrdinalMap q_on_map(const OrdinalMap& f, Convention conv = Convention::Q);

OrdinalMap last_vertex_inclusion(int n);

// All monotone maps [m] -> [n] in lexicographic image order.
std::vector<OrdinalMap> enumerate_ordinal_maps(int m, int n);

// The number of monotone maps [m] -> [n].
long long count_ordinal_maps(int m, int n);

// A pushout square of an inert map along an active map:
//
//            inert_side
//     [m]  >-----------> [n]
//      |                  |
//  active_side       active_pushout
//      |                  |
//      v                  v
//     [k]  >-----------> [p]      p = n - m + k
//           inert_pushout
//
// computed by substituting the image segment of the inert side according
// to the active side.
struct PushoutSquare {
  OrdinalMap inert_side;     // phi : [m] >-> [n]
  OrdinalMap active_side;    // g : [m] ->> [k]
  OrdinalMap active_pushout; // g' : [n] ->> [p]
  OrdinalMap inert_pushout;  // phi' : [k] >-> [p]
};

PushoutSquare pushout_inert_active(const OrdinalMap& inert_side,
                                   const OrdinalMap& active_side);

// All squares with every corner ordinal <= bound, in deterministic order.
std::vector<PushoutSquare> active_inert_pushouts(int bound);

}  // namespace sdkit
