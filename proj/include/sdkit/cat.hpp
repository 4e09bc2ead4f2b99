#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdkit/error.hpp"
#include "sdkit/ordinal.hpp"

namespace sdkit {

struct TruncSSet;  // sset.hpp

// A finite category with explicit composition table. Objects and morphisms
// are dense indices; labels are carried for I/O only.
struct FinCat {
  struct Mor {
    int src = 0;
    int tgt = 0;
  };

  int num_objects = 0;
  std::vector<Mor> morphisms;
  std::vector<int> identity;                    // object -> morphism index
  std::vector<std::vector<int>> compose_table;  // [g][f] = g o f, -1 if not composable
  std::vector<std::string> object_labels;
  std::vector<std::string> morphism_labels;

  int num_morphisms() const { return static_cast<int>(morphisms.size()); }
  int src(int m) const { return morphisms[static_cast<size_t>(m)].src; }
  int tgt(int m) const { return morphisms[static_cast<size_t>(m)].tgt; }
  bool composable(int g, int f) const { return tgt(f) == src(g); }
  // g o f
  int compose(int g, int f) const;
  void default_labels();
};

// Checks unit and associativity laws over all composable pairs/triples.
// Throws InvalidCategory with a witness description on failure.
void validate_fincat(const FinCat& c);

struct Functor {
  std::shared_ptr<const FinCat> source;
  std::shared_ptr<const FinCat> target;
  std::vector<int> object_map;
  std::vector<int> morphism_map;
};

void validate_functor(const Functor& f);
Functor identity_functor(std::shared_ptr<const FinCat> c);
Functor compose_functors(const Functor& g, const Functor& f);

// Set-valued presheaf on a FinCat: fibers by object, contravariant action
// by morphism. action[m] maps fiber(tgt m) -> fiber(src m).
struct Presheaf {
  std::shared_ptr<const FinCat> base;
  std::vector<int> fiber_sizes;
  std::vector<std::vector<int>> action;
};

void validate_presheaf(const Presheaf& p);

// A discrete fibration: for every object e of total and every base morphism
// alpha into proj(e), exactly one morphism of total with target e over alpha.
struct DiscFib {
  std::shared_ptr<const FinCat> total;
  std::shared_ptr<const FinCat> base;
  Functor projection;
};

// Verifies the unique-lifting invariant; throws NotDiscFib otherwise.
void validate_discfib(const DiscFib& q);

// --- constructions -------------------------------------------------------

FinCat terminal_category();
FinCat discrete_category(int n);
// Category of a finite preorder: leq[a][b] true iff a <= b (must be
// reflexive and transitive); at most one morphism between objects.
FinCat preorder_category(const std::vector<std::vector<bool>>& leq);
// The poset [n] as a category.
FinCat ordinal_category(int n);
// Strict nerve data of the contractible groupoid on two objects.
FinCat free_living_iso();
// Two objects a, b with parallel arrows f, g : a -> b.
FinCat parallel_pair();
FinCat cospan_category();  // L -> M <- R
FinCat span_category();    // L <- M -> R
FinCat cyclic_group_2();   // one object, Z/2
FinCat product_category(const FinCat& a, const FinCat& b);
FinCat opposite_category(const FinCat& c);

// The full subcategory of Delta on ordinals [0..D]; morphisms are all
// OrdinalMaps. Object i is the ordinal [i].
FinCat delta_trunc(int d);
// Recovers the OrdinalMap of a delta_trunc morphism index, and vice versa.
OrdinalMap delta_trunc_map(const FinCat& delta, int mor);
int delta_trunc_index(const FinCat& delta, const OrdinalMap& f);

// d | F for F : C -> D and d an object of D: objects are pairs
// (c, alpha : d -> F c), morphisms are gamma : c -> c' with F(gamma) o alpha = alpha'.
FinCat comma_into(const Functor& f, int d);

// Connected components of the underlying graph, via union-find.
// Returns component index per object plus the component count.
struct Pi0 {
  std::vector<int> component;
  int count = 0;
};
Pi0 pi0(const FinCat& c);

DiscFib grothendieck(const Presheaf& p);
Presheaf fiber_presheaf(const DiscFib& q);

// Objects are the morphisms f : x -> y; a morphism f -> f' is a pair
// (a : x' -> x, b : y -> y') with f' = b o f o a.
FinCat twisted_arrow(const FinCat& c);
// Per twisted-arrow morphism, the defining triple (source object f, a, b),
// in construction order.
std::vector<std::tuple<int, int, int>> twisted_arrow_morphism_data(const FinCat& c);

// Finitely presented quotient category of a truncated simplicial set:
// objects X_0, morphisms generated by X_1 modulo s_0(x) = id and
// d_1(t) = d_0(t) o d_2(t). Saturation is Knuth-Bendix style with an
// explicit rewrite-step budget; throws BudgetExceeded when the
// presentation does not visibly terminate.
struct FundamentalCategory {
  FinCat cat;
  // edge index in X_1 -> morphism index (degenerate edges -> identities)
  std::vector<int> edge_to_morphism;
};
FundamentalCategory fundamental_category(const TruncSSet& x, long long budget);

// All presheaves with fibers of size <= max_fiber, up to isomorphism,
// in deterministic order.
std::vector<Presheaf> enumerate_presheaves(std::shared_ptr<const FinCat> c,
                                           int max_fiber);

// All functors C -> D in deterministic order, optionally capped.
std::vector<Functor> enumerate_functors(std::shared_ptr<const FinCat> c,
                                        std::shared_ptr<const FinCat> d,
                                        long long cap = -1);

// Isomorphism search between finite categories (backtracking).
std::optional<Functor> find_cat_isomorphism(std::shared_ptr<const FinCat> c,
                                            std::shared_ptr<const FinCat> d);

// Morphisms m with a two-sided inverse.
std::vector<bool> iso_morphisms(const FinCat& c);

bool is_functor_iso(const Functor& f);

}  // namespace sdkit
