#include "hcalc/invariants.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>

#include "hcalc/errors.hpp"

namespace hcalc {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

void IntMat::swap_rows(int a, int b) {
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMat::swap_cols(int a, int b) {
  for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMat::negate_row(int a) {
  for (int c = 0; c < cols_; ++c) at(a, c) = -at(a, c);
}

void IntMat::negate_col(int a) {
  for (int r = 0; r < rows_; ++r) at(r, a) = -at(r, a);
}

void IntMat::add_row_multiple(int dst, int src, long long m) {
  for (int c = 0; c < cols_; ++c) at(dst, c) += m * at(src, c);
}

void IntMat::add_col_multiple(int dst, int src, long long m) {
  for (int r = 0; r < rows_; ++r) at(r, dst) += m * at(r, src);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  IntMat out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      long long v = a.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += v * b.at(k, j);
    }
  }
  return out;
}

IntMat abelianization_matrix(const Presentation& p) {
  IntMat m(p.relator_count(), p.generator_count());
  for (int i = 0; i < p.relator_count(); ++i) {
    for (Letter l : p.relators[static_cast<std::size_t>(i)].letters()) {
      if (l.index() < p.generator_count()) m.at(i, l.index()) += l.sign();
    }
  }
  return m;
}

Snf smith_normal_form(const IntMat& m) {
  Snf out;
  out.diagonal = m;
  out.left = IntMat::identity(m.rows());
  out.right = IntMat::identity(m.cols());
  IntMat& d = out.diagonal;

  int n = std::min(m.rows(), m.cols());
  for (int t = 0; t < n; ++t) {
    // move a minimal nonzero entry of the trailing block to (t, t) and
    // shrink it until it divides its whole row and column
    for (;;) {
      int pr = -1, pc = -1;
      for (int r = t; r < d.rows(); ++r) {
        for (int c = t; c < d.cols(); ++c) {
          if (d.at(r, c) != 0 &&
              (pr == -1 || std::abs(d.at(r, c)) < std::abs(d.at(pr, pc)))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == -1) {
        t = n;  // trailing block is zero
        break;
      }
      if (pr != t) {
        d.swap_rows(t, pr);
        out.left.swap_rows(t, pr);
      }
      if (pc != t) {
        d.swap_cols(t, pc);
        out.right.swap_cols(t, pc);
      }
      bool clean = true;
      for (int r = t + 1; r < d.rows(); ++r) {
        long long q = d.at(r, t) / d.at(t, t);
        if (q != 0) {
          d.add_row_multiple(r, t, -q);
          out.left.add_row_multiple(r, t, -q);
        }
        if (d.at(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < d.cols(); ++c) {
        long long q = d.at(t, c) / d.at(t, t);
        if (q != 0) {
          d.add_col_multiple(c, t, -q);
          out.right.add_col_multiple(c, t, -q);
        }
        if (d.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // entry must also divide the rest of the block for the divisibility
      // chain; if not, fold an offending row in and retry
      long long pivot = d.at(t, t);
      int bad_row = -1;
      for (int r = t + 1; r < d.rows() && bad_row == -1; ++r) {
        for (int c = t + 1; c < d.cols(); ++c) {
          if (d.at(r, c) % pivot != 0) {
            bad_row = r;
            break;
          }
        }
      }
      if (bad_row == -1) break;
      d.add_row_multiple(t, bad_row, 1);
      out.left.add_row_multiple(t, bad_row, 1);
    }
    if (t >= n) break;
  }

  for (int t = 0; t < n; ++t) {
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      out.left.negate_row(t);
    }
    if (d.at(t, t) != 0) out.invariants.push_back(d.at(t, t));
  }
  return out;
}

bool first_homology_trivial(const IntMat& abelianization) {
  Snf s = smith_normal_form(abelianization);
  if (static_cast<int>(s.invariants.size()) != abelianization.cols()) return false;
  return std::all_of(s.invariants.begin(), s.invariants.end(),
                     [](long long d) { return d == 1; });
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<int> table) {
  FiniteGroup g;
  g.name_ = std::move(name);
  int n = 0;
  while (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) < table.size()) ++n;
  if (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) != table.size() || n == 0)
    throw error("multiplication table is not square");
  for (int v : table) {
    if (v < 0 || v >= n) throw error("multiplication table entry out of range");
  }
  g.order_ = n;
  g.table_ = std::move(table);

  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id == -1) throw error("multiplication table has no identity");
  g.identity_ = id;

  g.inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == id && g.mul(b, a) == id) {
        g.inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (g.inverse_[static_cast<std::size_t>(a)] == -1)
      throw error("multiplication table has a non-invertible element");
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw error("multiplication table is not associative");
      }
    }
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n <= 0) throw error("cyclic group order must be positive");
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = (a + b) % n;
    }
  }
  return from_table("Z" + std::to_string(n), std::move(table));
}

namespace {

// Group of permutations given as images arrays, composed right-to-left;
// elements are enumerated in lexicographic order for determinism.
FiniteGroup permutation_group(std::string name, std::vector<std::vector<int>> elements) {
  std::sort(elements.begin(), elements.end());
  int n = static_cast<int>(elements.size());
  auto index_of = [&](const std::vector<int>& p) {
    auto it = std::lower_bound(elements.begin(), elements.end(), p);
    return static_cast<int>(it - elements.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::vector<int> ab(elements[static_cast<std::size_t>(a)].size());
      for (std::size_t x = 0; x < ab.size(); ++x)
        ab[x] = elements[static_cast<std::size_t>(a)][static_cast<std::size_t>(
            elements[static_cast<std::size_t>(b)][x])];
      table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = index_of(ab);
    }
  }
  return FiniteGroup::from_table(std::move(name), std::move(table));
}

std::vector<std::vector<int>> permutations_of(int n, bool even_only) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (even_only) {
      int inversions = 0;
      for (std::size_t i = 0; i < base.size(); ++i) {
        for (std::size_t j = i + 1; j < base.size(); ++j) {
          if (base[i] > base[j]) ++inversions;
        }
      }
      if (inversions % 2 != 0) continue;
    }
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric3() { return permutation_group("S3", permutations_of(3, false)); }

FiniteGroup FiniteGroup::alternating4() { return permutation_group("A4", permutations_of(4, true)); }

const std::vector<FiniteGroup>& default_group_set() {
  static const std::vector<FiniteGroup> groups = {
      FiniteGroup::cyclic(2),
      FiniteGroup::cyclic(3),
      FiniteGroup::symmetric3(),
      FiniteGroup::alternating4(),
  };
  return groups;
}

std::uint64_t count_homomorphisms(const Presentation& p, const FiniteGroup& g,
                                  std::uint64_t budget) {
  int letters = p.alphabet.size();
  std::uint64_t total = 1;
  for (int i = 0; i < letters; ++i) {
    if (total > budget / static_cast<std::uint64_t>(g.order()))
      throw budget_error("homomorphism enumeration budget exceeded");
    total *= static_cast<std::uint64_t>(g.order());
  }

  std::vector<int> image(static_cast<std::size_t>(letters), 0);
  std::uint64_t count = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (int i = 0; i < letters; ++i) {
      image[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(g.order()));
      rest /= static_cast<std::uint64_t>(g.order());
    }
    bool ok = true;
    for (const Word& r : p.relators) {
      int v = g.identity();
      for (Letter l : r.letters()) {
        int x = image[static_cast<std::size_t>(l.index())];
        v = g.mul(v, l.sign() > 0 ? x : g.inverse(x));
      }
      if (v != g.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace hcalc
