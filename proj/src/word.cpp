#include "hcalc/word.hpp"

#include <algorithm>
#include <cctype>

#include "hcalc/errors.hpp"

namespace hcalc {

bool valid_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  std::size_t i = 1;
  while (i < s.size()) {
    char c = s[i];
    if (c == '@') {
      // component tag: @ followed by at least one digit
      ++i;
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) return false;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      continue;
    }
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    ++i;
  }
  return true;
}

Alphabet Alphabet::make(std::vector<std::string> names, std::vector<std::string> boundary) {
  Alphabet a;
  a.names_ = std::move(names);
  a.boundary_ = std::move(boundary);
  for (const auto& list : {a.names_, a.boundary_}) {
    for (const auto& n : list) {
      if (!valid_identifier(n)) throw error("invalid identifier '" + n + "'");
    }
  }
  for (int i = 0; i < a.size(); ++i) {
    for (int j = i + 1; j < a.size(); ++j) {
      if (a.name(i) == a.name(j)) throw error("duplicate identifier '" + a.name(i) + "'");
    }
  }
  return a;
}

const std::string& Alphabet::name(int index) const {
  if (index < generator_count()) return names_[static_cast<std::size_t>(index)];
  return boundary_[static_cast<std::size_t>(index - generator_count())];
}

std::optional<int> Alphabet::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (this->name(i) == name) return i;
  }
  return std::nullopt;
}

void Alphabet::add_generator(std::string name) {
  if (!valid_identifier(name)) throw error("invalid identifier '" + name + "'");
  if (find(name)) throw error("duplicate identifier '" + name + "'");
  names_.push_back(std::move(name));
}

void Alphabet::remove_generator(int index) {
  if (index < 0 || index >= generator_count()) throw error("generator index out of range");
  names_.erase(names_.begin() + index);
}

void Alphabet::swap_generators(int i, int j) {
  if (i < 0 || i >= generator_count() || j < 0 || j >= generator_count())
    throw error("generator index out of range");
  std::swap(names_[static_cast<std::size_t>(i)], names_[static_cast<std::size_t>(j)]);
}

std::string fresh_name(const Alphabet& a, std::string_view base) {
  for (int n = 1;; ++n) {
    std::string candidate = std::string(base) + std::to_string(n);
    if (!a.find(candidate)) return candidate;
  }
}

std::vector<Letter> Word::reduce(std::vector<Letter> raw) {
  std::size_t top = 0;  // raw[0..top) is the reduced prefix, edited in place
  for (Letter l : raw) {
    if (top > 0 && raw[top - 1] == l.inverse()) {
      --top;
    } else {
      raw[top++] = l;
    }
  }
  raw.resize(top);
  return raw;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a.letters()[i] <=> b.letters()[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));  // already reduced, but the ctor keeps the invariant
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out = a.letters();
  for (Letter l : b.letters()) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word conjugate(const Word& w, const Word& c) { return c * w * invert(c); }

Word commutator(const Word& a, const Word& b) { return a * b * invert(a) * invert(b); }

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.front() != w.back().inverse();
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Letter> conj;
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w.letters()[lo] == w.letters()[hi - 1].inverse()) {
    conj.push_back(w.letters()[lo]);
    ++lo;
    --hi;
  }
  CyclicReduction out;
  out.core = Word(std::vector<Letter>(w.letters().begin() + static_cast<long>(lo),
                                      w.letters().begin() + static_cast<long>(hi)));
  out.conjugator = Word(std::move(conj));
  return out;
}

Word substitute(const Word& w, std::span<const Word> images, int generator_count) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) {
    if (l.index() >= generator_count) {  // boundary letter, fixed
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
      continue;
    }
    const Word& image = images[static_cast<std::size_t>(l.index())];
    if (l.sign() > 0) {
      for (Letter m : image.letters()) {
        if (!out.empty() && out.back() == m.inverse()) {
          out.pop_back();
        } else {
          out.push_back(m);
        }
      }
    } else {
      for (auto it = image.letters().rbegin(); it != image.letters().rend(); ++it) {
        Letter m = it->inverse();
        if (!out.empty() && out.back() == m.inverse()) {
          out.pop_back();
        } else {
          out.push_back(m);
        }
      }
    }
  }
  return Word(std::move(out));
}

long long exponent_sum(const Word& w, int index) {
  long long sum = 0;
  for (Letter l : w.letters()) {
    if (l.index() == index) sum += l.sign();
  }
  return sum;
}

bool fits_alphabet(const Word& w, const Alphabet& a) {
  for (Letter l : w.letters()) {
    if (l.index() < 0 || l.index() >= a.size()) return false;
  }
  return true;
}

Word remap_letters(const Word& w, std::span<const int> table) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w.letters()) out.emplace_back(table[static_cast<std::size_t>(l.index())], l.sign());
  return Word(std::move(out));
}

}  // namespace hcalc
