#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hcalc/presentation.hpp"

namespace hcalc {

// Dense row-major integer matrix, just big enough for abelianization and
// Smith normal form bookkeeping.
class IntMat {
 public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0) {}

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long& at(int r, int c) { return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }
  long long at(int r, int c) const { return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)]; }

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void negate_row(int a);
  void negate_col(int a);
  void add_row_multiple(int dst, int src, long long m);  // row dst += m * row src
  void add_col_multiple(int dst, int src, long long m);

  friend bool operator==(const IntMat&, const IntMat&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);

// Entry (i, g) is the exponent sum of generator g in relator i
// (relators x generators; boundary letters contribute no column).
IntMat abelianization_matrix(const Presentation& p);

struct Snf {
  std::vector<long long> invariants;  // nonzero invariant factors d_1 | d_2 | ...
  IntMat left;                        // unimodular
  IntMat right;                       // unimodular
  IntMat diagonal;                    // left * input * right
};

// Smith normal form by integer row/column reduction. Invariant factors are
// the nonzero diagonal entries, each dividing the next, all positive.
Snf smith_normal_form(const IntMat& m);

// All invariant factors 1 and rank equal to the column count, i.e. the
// cokernel of the row lattice is trivial.
bool first_homology_trivial(const IntMat& abelianization);

// A finite group as a multiplication table: table[a*n + b] = ab. Identity
// and inverses are derived; construction validates the group axioms.
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::string name, std::vector<int> table);

  static FiniteGroup cyclic(int n);       // Z_n
  static FiniteGroup symmetric3();        // S_3
  static FiniteGroup alternating4();      // A_4

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int identity() const { return identity_; }
  const std::vector<int>& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.name_ == b.name_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

// The default invariant-oracle group set {Z_2, Z_3, S_3, A_4}.
const std::vector<FiniteGroup>& default_group_set();

// Number of maps {letters of p.alphabet} -> G under which every relator
// evaluates to the identity, by exhaustive enumeration. Boundary letters
// count as free letters. Throws budget_error if |G|^letters > budget.
std::uint64_t count_homomorphisms(const Presentation& p, const FiniteGroup& g,
                                  std::uint64_t budget = 100'000'000);

}  // namespace hcalc
