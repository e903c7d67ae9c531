#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcalc {

// A signed occurrence of a generator. Packed into one int so that the
// natural ordering is (index ascending, positive before negative); that
// ordering is what canonical forms and deterministic sorts rely on.
class Letter {
 public:
  Letter() = default;
  Letter(int index, int sign) : code_(static_cast<std::int32_t>(index) * 2 + (sign < 0 ? 1 : 0)) {}

  int index() const { return code_ >> 1; }
  int sign() const { return (code_ & 1) ? -1 : +1; }
  Letter inverse() const { return from_code(code_ ^ 1); }
  std::int32_t code() const { return code_; }

  static Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  friend auto operator<=>(Letter, Letter) = default;

 private:
  std::int32_t code_ = 0;
};

// Ordered generator names plus an optional disjoint list of boundary
// letters (free letters standing in for the fundamental group of the
// boundary on the dual side). Letter indices run over the generators
// first, then the boundary letters.
class Alphabet {
 public:
  Alphabet() = default;

  // Validates identifier syntax and global distinctness; throws hcalc::error.
  static Alphabet make(std::vector<std::string> names, std::vector<std::string> boundary = {});

  int generator_count() const { return static_cast<int>(names_.size()); }
  int boundary_count() const { return static_cast<int>(boundary_.size()); }
  int size() const { return generator_count() + boundary_count(); }
  bool is_boundary(int index) const { return index >= generator_count(); }
  const std::string& name(int index) const;
  std::span<const std::string> generator_names() const { return names_; }
  std::span<const std::string> boundary_names() const { return boundary_; }
  std::optional<int> find(std::string_view name) const;

  // Appends a generator (never a boundary letter); name must be fresh.
  void add_generator(std::string name);
  // Removes generator `index`, shifting the indices of everything after it.
  void remove_generator(int index);
  // Swaps the storage positions of two generators.
  void swap_generators(int i, int j);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::string> boundary_;
};

// Generator identifiers: [A-Za-z][A-Za-z0-9_]* with optional @<digits>
// suffixes appended by boundary sums.
bool valid_identifier(std::string_view s);

// Smallest-numbered name base1, base2, ... that is unused in `a`.
std::string fresh_name(const Alphabet& a, std::string_view base);

// A freely reduced word. Construction reduces eagerly, so every Word in
// the system satisfies the no-adjacent-inverse invariant; the empty word
// is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> raw) : letters_(reduce(std::move(raw))) {}
  explicit Word(Letter l) : letters_{l} {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }

  friend bool operator==(const Word&, const Word&) = default;
  // Shortlex: length first, then letter codes.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

  static std::vector<Letter> reduce(std::vector<Letter> raw);

 private:
  std::vector<Letter> letters_;
};

Word invert(const Word& w);
Word operator*(const Word& a, const Word& b);

// reduce(c w c^-1)
Word conjugate(const Word& w, const Word& c);

// [a, b] = reduce(a b a^-1 b^-1)
Word commutator(const Word& a, const Word& b);

struct CyclicReduction {
  Word core;        // cyclically reduced: first letter is not the inverse of the last
  Word conjugator;  // w == conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

// Image of w under the endomorphism sending generator g to images[g];
// images must cover every generator index. Boundary letters are fixed.
Word substitute(const Word& w, std::span<const Word> images, int generator_count);

// Exponent sum of generator `index` in w.
long long exponent_sum(const Word& w, int index);

// All letter indices in range for `a`.
bool fits_alphabet(const Word& w, const Alphabet& a);

// Remaps every letter index through `table` (table[old] = new index).
Word remap_letters(const Word& w, std::span<const int> table);

}  // namespace hcalc
