#pragma once

// Deterministic random data for the property tests.

#include <cstdint>
#include <string>
#include <vector>

#include "hcalc/presentation.hpp"
#include "hcalc/word.hpp"

namespace gen {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed * 2 + 1) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
};

inline std::vector<hcalc::Letter> raw_letters(Rng& rng, int alphabet_size, int max_len) {
  int len = rng.range(0, max_len);
  std::vector<hcalc::Letter> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out.emplace_back(rng.range(0, alphabet_size - 1), rng.below(2) == 0 ? +1 : -1);
  }
  return out;
}

// A random reduced word (raw letters put through the reducing ctor).
inline hcalc::Word word(Rng& rng, int alphabet_size, int max_len) {
  return hcalc::Word(raw_letters(rng, alphabet_size, max_len));
}

inline hcalc::Alphabet alphabet(int k) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) names.push_back("g" + std::to_string(i + 1));
  return hcalc::Alphabet::make(std::move(names));
}

inline hcalc::Presentation presentation(Rng& rng, int max_gens, int max_rels, int max_len) {
  hcalc::Presentation p;
  int k = rng.range(1, max_gens);
  p.alphabet = alphabet(k);
  int l = rng.range(0, max_rels);
  for (int i = 0; i < l; ++i) p.relators.push_back(word(rng, k, max_len));
  return p;
}

inline hcalc::Presentation balanced_presentation(Rng& rng, int max_gens, int max_len) {
  hcalc::Presentation p;
  int k = rng.range(1, max_gens);
  p.alphabet = alphabet(k);
  for (int i = 0; i < k; ++i) p.relators.push_back(word(rng, k, max_len));
  return p;
}

inline hcalc::BiPresentation bipresentation(Rng& rng, int max_gens, int max_pairs, int max_len) {
  hcalc::BiPresentation bp;
  int k = rng.range(1, max_gens);
  int m = rng.range(1, max_gens);
  bp.primary = alphabet(k);
  std::vector<std::string> duals;
  for (int i = 0; i < m; ++i) duals.push_back("d" + std::to_string(i + 1));
  std::vector<std::string> bnd;
  if (rng.below(3) == 0) bnd.push_back("b1");
  bp.dual = hcalc::Alphabet::make(std::move(duals), std::move(bnd));
  int pairs = rng.range(2, max_pairs);
  for (int i = 0; i < pairs; ++i) {
    hcalc::HandlePair hp;
    hp.relator = word(rng, k, max_len);
    hp.dual_relator = word(rng, bp.dual.size(), max_len);
    bp.pairs.push_back(std::move(hp));
  }
  return bp;
}

// Balanced presentation whose relators are conjugates of distinct signed
// generators: an AC structure of both types by construction.
inline hcalc::Presentation ac_presentation(Rng& rng, int max_gens, int conj_len) {
  int k = rng.range(1, max_gens);
  hcalc::Presentation p;
  p.alphabet = alphabet(k);
  std::vector<int> target(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) target[static_cast<std::size_t>(i)] = i;
  for (int i = k - 1; i > 0; --i) {
    int j = rng.range(0, i);
    std::swap(target[static_cast<std::size_t>(i)], target[static_cast<std::size_t>(j)]);
  }
  for (int i = 0; i < k; ++i) {
    hcalc::Word core{hcalc::Letter(target[static_cast<std::size_t>(i)], rng.below(2) == 0 ? +1 : -1)};
    p.relators.push_back(conjugate(core, word(rng, k, conj_len)));
  }
  return p;
}

}  // namespace gen
