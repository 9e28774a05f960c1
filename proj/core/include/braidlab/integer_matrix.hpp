#pragma once

#include <string>
#include <vector>

namespace braidlab {

// Dense integer matrix. Arithmetic is overflow-checked and throws Error on
// overflow.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols);
  IntegerMatrix(std::vector<std::vector<long long>> rows);
  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  long long at(int i, int j) const { return data_[index(i, j)]; }
  long long& at(int i, int j) { return data_[index(i, j)]; }
  std::vector<std::vector<long long>> to_rows() const;
  std::string to_string() const;

  IntegerMatrix transpose() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  // Exact determinant (fraction-free elimination); square matrices only.
  long long determinant() const;
  // Inverse of a matrix with determinant +-1.
  IntegerMatrix unimodular_inverse() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row[dst] += k * row[src]
  void add_row_multiple(int dst, int src, long long k);
  void add_col_multiple(int dst, int src, long long k);
  void negate_row(int r);

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<long long> data_;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

// D = U M V with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntegerMatrix d;
  IntegerMatrix u;
  IntegerMatrix v;
  std::vector<long long> diagonal;  // min(rows, cols) entries
  int rank() const;
};
SmithForm smith_normal_form(const IntegerMatrix& m);

// Torsion coefficients greater than one, then one zero per free factor of
// Z^cols / rowspace(m).
std::vector<long long> abelian_invariants(const SmithForm& s, int generators);

int matrix_rank(const IntegerMatrix& m);

}  // namespace braidlab
