#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hcalc/corkcalc.hpp"
#include "hcalc/presentation.hpp"

namespace hcalc {

// Canonical representative of a presentation up to relator reordering,
// relator inversion, conjugation of relators, and generator renaming:
// every relator is replaced by the lexicographically least rotation of
// its cyclic core or the core's inverse, the list is sorted, and letters
// are renumbered by the minimum over generator relabelings (exhaustive up
// to 8 generators, first-use refinement beyond that).
struct CanonicalForm {
  int generator_count = 0;
  std::vector<Word> relators;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b);

  std::size_t hash() const;
};

CanonicalForm canonical_form(const Presentation& p);

// Total cyclically reduced relator length, the beam heuristic.
std::size_t cyclic_length(const Presentation& p);

struct SearchBudget {
  int max_depth = 6;
  std::uint64_t max_nodes = 20'000;
  std::uint64_t beam_width = 1'000;
  int conjugator_length_cap = 2;
  std::uint64_t rng_seed = 0;
};

// Move vocabulary switches beyond the budget: stable search may add
// generators (stabilize/destabilize) up to max_generators.
struct SearchOptions {
  bool allow_stable = false;
  int max_generators = 0;  // 0: input generator count + 2 when stable
  int workers = 1;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t nodes_stored = 0;
  std::uint64_t nodes_generated = 0;
  bool budget_exhausted = false;
};

struct ScrambleOptions {
  int conjugator_length_cap = 2;
  bool allow_stable = false;
  // Resample moves that would push the total relator length beyond this
  // bound (0 = unbounded).
  std::size_t max_total_length = 0;
};

struct ScrambleResult {
  Presentation scrambled;
  MoveScript inverse;  // folds over `scrambled` back to the input, bit for bit
  MoveScript forward;  // the moves that were applied, in order
};

// Applies `count` uniformly sampled legal invertible moves. Deterministic
// for a fixed seed.
ScrambleResult scramble(const Presentation& p, int count, std::uint64_t seed,
                        const ScrambleOptions& opts = {});

// Standard trivial presentation (x_1 ... x_k | x_1 ... x_k) on fresh names.
Presentation trivial_presentation(int k);

bool is_canonically_trivial(const Presentation& p);

// Breadth-first search over the Andrews-Curtis move graph (relator
// inversions and multiplications, generator inversions and
// multiplications, optional stabilization), deduplicated by canonical
// form, switching to beam search once a wave exceeds beam_width. Returns
// a script folding `p` to a presentation canonically equal to the trivial
// one, or nullopt on budget exhaustion. Deterministic for fixed
// (input, budget, options), independent of the worker count.
std::optional<MoveScript> trivialization_search(const Presentation& p, const SearchBudget& budget,
                                                const SearchOptions& opts = {},
                                                SearchStats* stats = nullptr);

// Breadth-first search for `target` as a product of conjugates of p's
// relators, with factor count bounded by max_depth and conjugator length
// by the cap; partial products are deduplicated by their reduced word.
std::optional<NormalClosureCertificate> certificate_search(const Presentation& p,
                                                           const Word& target,
                                                           const SearchBudget& budget,
                                                           SearchStats* stats = nullptr);

}  // namespace hcalc
