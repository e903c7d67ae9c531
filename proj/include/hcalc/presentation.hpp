#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "hcalc/word.hpp"

namespace hcalc {

// A group presentation (x_1, ..., x_k | r_1, ..., r_l). Relators are
// freely reduced words over the alphabet; the list may be empty.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  int generator_count() const { return alphabet.generator_count(); }
  int relator_count() const { return static_cast<int>(relators.size()); }
  bool balanced() const { return generator_count() == relator_count(); }

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Throws if any relator uses a letter outside the alphabet.
void check_presentation(const Presentation& p);

// One 2-handle: the word its attaching circle traces in the 1-skeleton
// (relator) and the word its meridian traces in the dual 1-skeleton
// (dual relator).
struct HandlePair {
  Word relator;
  Word dual_relator;

  friend bool operator==(const HandlePair&, const HandlePair&) = default;
};

// Presentation-with-duals bookkeeping: relators live over the primary
// alphabet (1-handle generators), dual relators over the dual alphabet
// (dual 1-handle generators plus optional boundary letters).
struct BiPresentation {
  Alphabet primary;
  Alphabet dual;
  std::vector<HandlePair> pairs;

  int pair_count() const { return static_cast<int>(pairs.size()); }

  // The primary-side presentation (all relators, in pair order).
  Presentation primary_presentation() const;

  friend bool operator==(const BiPresentation&, const BiPresentation&) = default;
};

void check_bipresentation(const BiPresentation& bp);

// Slide path data: the projections of a guiding arc to the two sides.
struct SlidePath {
  Word c;
  Word c_star;

  friend bool operator==(const SlidePath&, const SlidePath&) = default;
};

enum class MoveKind {
  InvertRelator,
  MultiplyRelator,
  GeneratorInvert,
  GeneratorMultiply,
  Stabilize,
  Destabilize,
  AddCancellingPairPrimary,
  AddCancellingPairDual,
  SingleSlide,
  DoubleSlide,
  GeneralSlide,
  SwapRelators,
  SwapGenerators,
};

// A serializable move application. Indices are 0-based here; the text
// format renders them 1-based. `sign` selects a move or its inverse for
// the kinds that come in inverse pairs (multiplications and slides).
struct MoveToken {
  MoveKind kind = MoveKind::InvertRelator;
  int i = 0;
  int j = 0;
  int sign = 1;
  Word c;
  Word c_star;

  friend bool operator==(const MoveToken&, const MoveToken&) = default;
};

using MoveScript = std::vector<MoveToken>;

// --- Andrews-Curtis moves on presentations ---------------------------------

// r_i <- r_i^-1. Involution.
Presentation invert_relator(const Presentation& p, int i);

// r_i <- reduce(r_i (c r_j c^-1)^sign), i != j.
Presentation multiply_relator(const Presentation& p, int i, int j, const Word& c, int sign = 1);

// Replace generator x_i by its inverse: relators rewritten by x_i -> x_i^-1.
Presentation invert_generator(const Presentation& p, int i);

// Replace x_i by x_i x_j^sign: relators rewritten by x_i -> x_i x_j^-sign,
// so the letter x_i afterwards denotes the product generator. i != j.
Presentation multiply_generator(const Presentation& p, int i, int j, int sign = 1);

// Appends a fresh generator together with a relator equal to it.
Presentation stabilize(const Presentation& p);

// Removes relator i and its generator. Requires the relator to be exactly
// one positive generator letter that occurs in no other relator.
Presentation destabilize(const Presentation& p, int i);

Presentation swap_relators(const Presentation& p, int i, int j);
Presentation swap_generators(const Presentation& p, int i, int j);

// --- moves on bi-presentations ---------------------------------------------

enum class Side { Primary, Dual };

// Inverts relator and dual relator of pair i.
BiPresentation invert_relator(const BiPresentation& bp, int i);

// Primary: appends generator x_new and pair (x_new, empty)  -- a 1/2-pair.
// Dual:    appends dual generator t_new and pair (empty, t_new) -- a 2/3-pair.
BiPresentation add_cancelling_pair(const BiPresentation& bp, Side side);

// Removes pair i, which must be a cancelling pair as produced by
// add_cancelling_pair (fresh generator on one side, empty on the other).
BiPresentation remove_cancelling_pair(const BiPresentation& bp, int i);

// Slide handle i over handle j along (c, c*):
//   r_i  <- reduce(r_i c r_j^sign c^-1)
//   r*_j <- reduce(r*_j c*^-1 r*_i^-sign c*)
// Everything else is untouched. i != j.
BiPresentation general_slide(const BiPresentation& bp, int i, int j, const SlidePath& path,
                             int sign = 1);

// general_slide with c* = empty.
BiPresentation single_slide(const BiPresentation& bp, int i, int j, const Word& c, int sign = 1);

// r_i <- reduce(r_i [c, r_j]^sign); all dual relators and all other
// relators are bit-identical. i != j.
BiPresentation double_slide(const BiPresentation& bp, int i, int j, const Word& c, int sign = 1);

BiPresentation swap_relators(const BiPresentation& bp, int i, int j);
BiPresentation swap_generators(const BiPresentation& bp, int i, int j);

// --- AC structure recognition ----------------------------------------------

struct AcStructure {
  bool type1 = false;  // 2-handles cancel a subset of the 1-handles (k >= l)
  bool type2 = false;  // a subset of the 2-handles cancels the 1-handles (k <= l)
  // Witness pairing (relator index, generator index), present when either
  // type holds; covers all relators for type 1, all generators for type 2.
  std::optional<std::vector<std::pair<int, int>>> matching;
};

// Relator i is matchable to generator g iff its cyclic core is g or g^-1.
AcStructure is_ac_structure(const Presentation& p);

bool relator_matches_generator(const Word& relator, int generator);

// --- token dispatch ----------------------------------------------------------

Presentation apply_move(const Presentation& p, const MoveToken& t);
BiPresentation apply_move(const BiPresentation& bp, const MoveToken& t);

Presentation apply_script(Presentation p, const MoveScript& script);
BiPresentation apply_script(BiPresentation bp, const MoveScript& script);

// Token undoing t when applied after it; `before` is the value t was
// applied to (needed to resolve indices for Stabilize/AddCancellingPair).
// Destabilize has no token inverse: the removed name and position are gone.
MoveToken inverse_of(const MoveToken& t, const Presentation& before);
MoveToken inverse_of(const MoveToken& t, const BiPresentation& before);

}  // namespace hcalc
