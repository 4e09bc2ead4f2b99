#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdkit/cat.hpp"
#include "sdkit/elements.hpp"
#include "sdkit/sset.hpp"

namespace sdkit {

// A reified commutative square of finite sets
//
//        p_to_a
//      P ------> A
//      |         |
//  p_to_b        a_to_c
//      v         v
//      B ------> C
//        b_to_c
//
// tested for being a pullback: the canonical map P -> A x_C B must be a
// bijection.
struct SquareData {
  std::vector<int> p_to_a;
  std::vector<int> p_to_b;
  std::vector<int> a_to_c;
  std::vector<int> b_to_c;
};

// Witness of a failed check, re-checkable by is_pullback_square: the square
// itself plus the offending element of A x_C B (no preimage or several).
struct SquareWitness {
  SquareData square;
  int offend_a = -1;
  int offend_b = -1;
  int multiplicity = 0;
  std::string note;
};

struct Verdict {
  bool holds = false;
  int verified_dim = -1;
  std::string route;
  std::optional<SquareWitness> witness;
};

// Core certificate check; throws NonCommuting if the square does not commute.
Verdict is_pullback_square(const SquareData& s);

// Cartesian on last-point inclusions [0] -> [n] for 1 <= n <= D.
Verdict is_right_fibration(const SMap& p);
// Dual: first-point inclusions.
Verdict is_left_fibration(const SMap& p);

// Cartesian on the active maps [1] -> [n] for 2 <= n <= D. The degeneracy
// square [1] -> [0] is implied (ulf implies culf) and is exposed separately
// below for the invariant tests, not gated here.
Verdict is_culf(const SMap& p);
Verdict culf_degeneracy_square(const SMap& p);

// Segal condition via the principal-edge decomposition squares
// X_n = X_{n-1} x_{X_0} X_1, for 2 <= n <= D.
Verdict is_segal(const TruncSSet& x);

// Route A: active-inert pushout squares up to the truncation go to pullbacks.
// Route B: Sd(X) is Segal. Both run; disagreement inside the range both
// routes cover raises RouteDisagreement.
Verdict is_decomposition(const TruncSSet& x, Convention conv = Convention::Q);

// Nonempty connected commas d | F for every object d of the target.
Verdict is_final_functor(const Functor& f);

// The subset of X_1 admitting both invertibility witnesses in X_2.
std::vector<bool> equivalences(const TruncSSet& x);

// s_0 : X_0 -> X_1^eq is a bijection.
Verdict is_rezk_complete(const TruncSSet& x);

// Essentially surjective and fully faithful on hom sets.
Verdict is_dk_equivalence(const Functor& f);

// Unique lifting of isomorphisms; both endpoint directions are computed,
// their agreement is a tested invariant.
struct RelativeCompleteParts {
  bool source_direction = false;
  bool target_direction = false;
};
RelativeCompleteParts relative_complete_parts(const Functor& f);
Verdict is_relative_complete(const Functor& f);

// The el-level reformulations: el(Y) -> el(X) becomes a left fibration after
// restriction to the active maps (culfy), respectively the last-point-
// preserving maps (righteous). Checked by unique-opposite-lift enumeration.
Verdict is_culfy(const ElFib& q);
Verdict is_righteous(const ElFib& q);

}  // namespace sdkit
