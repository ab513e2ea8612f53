#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spl/graph.hpp"
#include "spl/paths.hpp"

namespace spl {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  bool is_diagonal() const;
  /// Fraction-free Gaussian elimination. Requires a square matrix.
  BigInt determinant() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

std::string format_matrix(const IntegerMatrix& m);

/// Rows and columns indexed by the non-sink vertices in canonical order:
/// L[v][w] = (v == w ? out-degree(v) : 0) - (number of edges v -> w).
/// A loop at v thus lowers the diagonal entry.
IntegerMatrix reduced_laplacian(const SandpileGraph& g);

/// d_1 | d_2 | ... | d_r, every d_i >= 2, and the order of the group they
/// describe.
struct InvariantFactors {
  std::vector<BigInt> factors;
  BigInt order = 1;
  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

std::string format_factors(const InvariantFactors& f);

struct SmithNormalForm {
  IntegerMatrix diagonal;  // D
  IntegerMatrix left;      // U
  IntegerMatrix right;     // V, with U * M * V == D
  std::vector<BigInt> diagonal_entries;
  /// Entries of D other than 1 (zero entries become free summands and are
  /// reported as 0 at the end).
  InvariantFactors nontrivial;
  /// U * M * V recomputed equals D, D is diagonal with a nonnegative
  /// divisibility chain, det U and det V are +-1.
  bool certified = false;
};

/// Smallest-nonzero pivot elimination with exact integers.
SmithNormalForm smith_normal_form(const IntegerMatrix& m);

}  // namespace spl
