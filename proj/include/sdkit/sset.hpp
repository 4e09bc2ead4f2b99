#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sdkit/cat.hpp"
#include "sdkit/error.hpp"
#include "sdkit/ordinal.hpp"

namespace sdkit {

// A finite simplicial set truncated at dimension `dim`. Elements of each
// level are dense indices with a stable canonical ordering; labels are
// carried for I/O and debugging. Generator tables:
//   faces[n][i]  : level n -> level n-1   (1 <= n <= dim, 0 <= i <= n)
//   degens[n][i] : level n -> level n+1   (0 <= n <  dim, 0 <= i <= n)
// Verdicts about a TruncSSet are only ever "verified up to dim".
struct TruncSSet {
  int dim = 0;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<std::vector<int>>> degens;

  int level_size(int n) const {
    return n >= 0 && n <= dim ? static_cast<int>(labels[static_cast<size_t>(n)].size())
                              : 0;
  }
  int face(int n, int i, int x) const {
    return faces[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(x)];
  }
  int degen(int n, int i, int x) const {
    return degens[static_cast<size_t>(n)][static_cast<size_t>(i)][static_cast<size_t>(x)];
  }
  void init_levels(int d);       // sizes all zero
  void default_labels();         // "n:k" per level element
  bool structurally_complete() const;
};

using SSetPtr = std::shared_ptr<const TruncSSet>;

struct SMap {
  SSetPtr source;
  SSetPtr target;
  std::vector<std::vector<int>> components;  // levels 0..dim()

  int dim() const { return static_cast<int>(components.size()) - 1; }
  int at(int n, int x) const {
    return components[static_cast<size_t>(n)][static_cast<size_t>(x)];
  }
};

struct IdentityViolation {
  std::string identity;  // e.g. "d0 d2 = d1 d0"
  int level = 0;
  int element = 0;
  int lhs = 0;
  int rhs = 0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<IdentityViolation> violations;
};

// Confirms all simplicial identities among stored generators within the
// truncation; the report lists each violated identity with a witness.
ValidationReport validate(const TruncSSet& x);
// validate() that throws InvalidSSet on failure.
void require_valid(const TruncSSet& x);

// Checks that components commute with every face and degeneracy.
bool smap_commutes(const SMap& f);
void require_smap(const SMap& f);

SMap identity_smap(SSetPtr x);
SMap compose_smaps(const SMap& g, const SMap& f);

// alpha^*(x) for an arbitrary operator alpha : [m] -> [n], evaluated via
// the epi-mono factorization and generator tables.
int act(const TruncSSet& x, const OrdinalMap& alpha, int elem);
// Full table of alpha^* on level alpha.cod.
std::vector<int> act_table(const TruncSSet& x, const OrdinalMap& alpha);

TruncSSet empty_sset(int d);
// Delta^n truncated at D; level k lists Hom([k],[n]) in lex order.
TruncSSet representable(int n, int d);
// Index of a monotone map in representable's level ordering.
int representable_index(int n, const OrdinalMap& f);
OrdinalMap representable_elem(int n, int k, int idx);

// Nerve of a finite category: level k = composable k-chains.
TruncSSet nerve(const FinCat& c, int d);
// Chain of morphism indices for a nerve element (empty chain = object index).
std::vector<int> nerve_chain(const FinCat& c, int k, int idx);
int nerve_index(const FinCat& c, const std::vector<int>& chain, int object_if_empty);
// Levelwise map of nerves induced by a functor.
SMap nerve_of_functor(const Functor& f, int d);

// Edgewise subdivision: (Sd X)_k = X_{2k+1}, operators via q_on_map.
TruncSSet sd(const TruncSSet& x, Convention conv = Convention::Q);
SMap sd_of_map(const SMap& f, Convention conv = Convention::Q);

struct PullbackResult {
  SSetPtr object;
  SMap proj_first;   // to f.source
  SMap proj_second;  // to g.source
  // element of the fiber product at level n with coordinates (a, b)
  std::vector<std::vector<std::pair<int, int>>> pairs;
  int index_of(int n, int a, int b) const;
};

// Levelwise fiber product of f and g over their common target.
PullbackResult pullback(const SMap& f, const SMap& g);

TruncSSet dec_top(const TruncSSet& x);
TruncSSet dec_bot(const TruncSSet& x);

// Forget levels above d.
TruncSSet truncate(const TruncSSet& x, int d);
SMap truncate_smap(const SMap& f, int d);

struct SliceResult {
  SSetPtr object;
  SMap projection;             // to x (levelwise last face)
  std::vector<std::vector<int>> carrier;  // slice level k -> element of X_{k+1}
};

// (X_/x)_k = simplices of X_{k+1} whose last vertex is x, with dec_top
// operators.
SliceResult slice(const TruncSSet& x, int vertex);

struct IntervalResult {
  SSetPtr object;
  std::vector<std::vector<int>> carrier;  // level k -> element of X_{k+2}
  int initial_vertex = -1;                // s_0(f)
  int terminal_vertex = -1;               // s_1(f)
};

// I(f)_k = simplices of X_{k+2} with long edge f, with double-decalage
// operators; marked initial/terminal vertices s_0(f), s_1(f).
IntervalResult interval(const TruncSSet& x, int edge);

// Backtracking search for a levelwise bijection commuting with all
// generators. Returns components per level if one exists.
std::optional<std::vector<std::vector<int>>> find_isomorphism(const TruncSSet& a,
                                                              const TruncSSet& b);
// Isomorphism over a common base: requires q2 o iso = q1.
std::optional<std::vector<std::vector<int>>> find_isomorphism_over(const SMap& q1,
                                                                   const SMap& q2);

bool is_levelwise_bijection(const SMap& f);

// Same dim, levelwise sizes, and identical generator tables.
bool same_structure(const TruncSSet& a, const TruncSSet& b);

// Is x in the image of some degeneracy from the level below?
bool is_degenerate(const TruncSSet& x, int n, int elem);

// --- free degeneracy completion ------------------------------------------
//
// Builds a TruncSSet from nondegenerate cells and their face attachments.
// A formal element is a degeneracy-collapse (epi in Delta) applied to a
// cell; faces of cells may themselves be formal elements.
struct SSetBuilder {
  struct FormalElem {
    OrdinalMap collapse;  // epi [n] ->> [k]
    int cell = 0;         // cell of dimension k
  };
  // cells[d] = list of cells in dimension d; cell_faces[d][c][i] is the
  // i-th face of cell c (a formal element of dimension d-1).
  std::vector<int> cells_per_dim;
  std::vector<std::vector<std::vector<FormalElem>>> cell_faces;
  std::vector<std::vector<std::string>> cell_labels;

  int add_cell(int d, std::vector<FormalElem> faces, std::string label = {});
  static FormalElem nondeg(int cell) { return {OrdinalMap::identity(0), cell}; }
  TruncSSet build(int trunc_dim) const;
};

}  // namespace sdkit
