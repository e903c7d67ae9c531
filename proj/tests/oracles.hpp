#pragma once

// Independent brute-force oracles for the test suites. These deliberately
// avoid the library's algorithms: reduction rescans from scratch, Smith
// invariants come from gcds of minors, matchings from permutation
// enumeration.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "hcalc/invariants.hpp"
#include "hcalc/presentation.hpp"
#include "hcalc/word.hpp"

namespace oracle {

// Free reduction by repeated full scans.
inline std::vector<hcalc::Letter> brute_reduce(std::vector<hcalc::Letter> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i] == letters[i + 1].inverse()) {
        letters.erase(letters.begin() + static_cast<long>(i), letters.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

inline hcalc::Word brute_concat(std::initializer_list<hcalc::Word> words) {
  std::vector<hcalc::Letter> raw;
  for (const auto& w : words) {
    raw.insert(raw.end(), w.letters().begin(), w.letters().end());
  }
  raw = brute_reduce(std::move(raw));
  // construct through the normal ctor; the input is already reduced
  return hcalc::Word(std::move(raw));
}

inline hcalc::Word brute_invert(const hcalc::Word& w) {
  std::vector<hcalc::Letter> raw;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) raw.push_back(it->inverse());
  return hcalc::Word(brute_reduce(std::move(raw)));
}

// Determinant by cofactor expansion (small matrices only).
inline long long brute_det(const hcalc::IntMat& m) {
  if (m.rows() != m.cols()) std::abort();
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  long long det = 0;
  for (int c = 0; c < n; ++c) {
    hcalc::IntMat minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == c) continue;
        minor.at(r - 1, cc++) = m.at(r, k);
      }
    }
    long long term = m.at(0, c) * brute_det(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

// Invariant factors from determinantal divisors: d_t = gcd of all t x t
// minors, invariant_t = d_t / d_{t-1}.
inline std::vector<long long> brute_invariant_factors(const hcalc::IntMat& m) {
  int n = std::min(m.rows(), m.cols());
  std::vector<long long> divisors;  // d_1, d_2, ...
  for (int t = 1; t <= n; ++t) {
    // all t-subsets of rows and of columns
    std::vector<int> rs(static_cast<std::size_t>(t));
    std::iota(rs.begin(), rs.end(), 0);
    long long g = 0;
    auto next_subset = [](std::vector<int>& s, int limit) {
      int t2 = static_cast<int>(s.size());
      int i = t2 - 1;
      while (i >= 0 && s[static_cast<std::size_t>(i)] == limit - t2 + i) --i;
      if (i < 0) return false;
      ++s[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t2; ++j) s[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    };
    do {
      std::vector<int> cs(static_cast<std::size_t>(t));
      std::iota(cs.begin(), cs.end(), 0);
      do {
        hcalc::IntMat sub(t, t);
        for (int a = 0; a < t; ++a) {
          for (int b = 0; b < t; ++b) {
            sub.at(a, b) = m.at(rs[static_cast<std::size_t>(a)], cs[static_cast<std::size_t>(b)]);
          }
        }
        g = std::gcd(g, brute_det(sub));
      } while (next_subset(cs, m.cols()));
    } while (next_subset(rs, m.rows()));
    divisors.push_back(std::abs(g));
  }
  std::vector<long long> invariants;
  long long prev = 1;
  for (long long d : divisors) {
    if (d == 0) break;  // rank reached
    invariants.push_back(d / prev);
    prev = d;
  }
  return invariants;
}

// Exhaustive AC-structure recognition: try every injective assignment of
// the smaller side.
inline std::pair<bool, bool> brute_ac_structure(const hcalc::Presentation& p) {
  int k = p.generator_count();
  int l = p.relator_count();
  std::vector<std::vector<char>> ok(static_cast<std::size_t>(l), std::vector<char>(static_cast<std::size_t>(k), 0));
  for (int r = 0; r < l; ++r) {
    for (int g = 0; g < k; ++g) {
      ok[static_cast<std::size_t>(r)][static_cast<std::size_t>(g)] =
          hcalc::relator_matches_generator(p.relators[static_cast<std::size_t>(r)], g) ? 1 : 0;
    }
  }
  // type 1: injective relator -> generator covering all relators
  auto exists_injection = [&](int from, int to, auto matches) {
    if (from > to) return false;
    std::vector<int> perm(static_cast<std::size_t>(to));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool all = true;
      for (int i = 0; i < from; ++i) {
        if (!matches(i, perm[static_cast<std::size_t>(i)])) {
          all = false;
          break;
        }
      }
      if (all) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };
  bool type1 = exists_injection(l, k, [&](int r, int g) { return ok[static_cast<std::size_t>(r)][static_cast<std::size_t>(g)] != 0; });
  bool type2 = exists_injection(k, l, [&](int g, int r) { return ok[static_cast<std::size_t>(r)][static_cast<std::size_t>(g)] != 0; });
  return {type1, type2};
}

}  // namespace oracle
