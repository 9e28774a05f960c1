#include "braidlab/integer_matrix.hpp"

#include <cstdlib>
#include <sstream>

#include "braidlab/error.hpp"

namespace braidlab {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in matrix arithmetic");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in matrix arithmetic");
  return r;
}

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
}

IntegerMatrix::IntegerMatrix(std::vector<std::vector<long long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw PreconditionError("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<std::vector<long long>> IntegerMatrix::to_rows() const {
  std::vector<std::vector<long long>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back(at(i, j));
  }
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix shapes do not compose");
  IntegerMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const long long x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        c.at(i, j) = checked_add(c.at(i, j), checked_mul(x, b.at(k, j)));
      }
    }
  }
  return c;
}

long long IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw PreconditionError("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        // Bareiss step; the division is exact.
        const long long num = checked_add(checked_mul(a.at(i, j), a.at(k, k)),
                                          -checked_mul(a.at(i, k), a.at(k, j)));
        a.at(i, j) = num / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

IntegerMatrix IntegerMatrix::unimodular_inverse() const {
  const SmithForm s = smith_normal_form(*this);
  if (rows_ != cols_) throw PreconditionError("inverse of a non-square matrix");
  for (long long d : s.diagonal) {
    if (d != 1) throw PreconditionError("matrix is not unimodular");
  }
  // I = U M V, so M^-1 = V U.
  return s.v * s.u;
}

void IntegerMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row_multiple(int dst, int src, long long k) {
  if (k == 0) return;
  for (int j = 0; j < cols_; ++j) at(dst, j) = checked_add(at(dst, j), checked_mul(k, at(src, j)));
}

void IntegerMatrix::add_col_multiple(int dst, int src, long long k) {
  if (k == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, dst) = checked_add(at(i, dst), checked_mul(k, at(i, src)));
}

void IntegerMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

int SmithForm::rank() const {
  int r = 0;
  for (long long x : diagonal) r += x != 0 ? 1 : 0;
  return r;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm s{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols()), {}};
  IntegerMatrix& d = s.d;
  const int rows = m.rows();
  const int cols = m.cols();
  const int steps = std::min(rows, cols);

  // Floor-style quotient so remainders shrink toward zero in absolute value.
  auto quotient = [](long long a, long long b) { return a / b; };

  for (int t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pi = -1, pj = -1;
      long long best = 0;
      for (int i = t; i < rows; ++i) {
        for (int j = t; j < cols; ++j) {
          const long long v = std::llabs(d.at(i, j));
          if (v != 0 && (pi < 0 || v < best)) {
            best = v;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) break;
      d.swap_rows(t, pi);
      s.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      s.v.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        const long long q = quotient(d.at(i, t), d.at(t, t));
        d.add_row_multiple(i, t, -q);
        s.u.add_row_multiple(i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        const long long q = quotient(d.at(t, j), d.at(t, t));
        d.add_col_multiple(j, t, -q);
        s.v.add_col_multiple(j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility of the trailing block by the pivot.
      int bad_row = -1;
      for (int i = t + 1; i < rows && bad_row < 0; ++i) {
        for (int j = t + 1; j < cols; ++j) {
          if (d.at(i, j) % d.at(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      d.add_row_multiple(t, bad_row, 1);
      s.u.add_row_multiple(t, bad_row, 1);
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      s.u.negate_row(t);
    }
  }
  for (int t = 0; t < steps; ++t) s.diagonal.push_back(d.at(t, t));
  return s;
}

std::vector<long long> abelian_invariants(const SmithForm& s, int generators) {
  std::vector<long long> out;
  int rank = 0;
  for (long long x : s.diagonal) {
    if (x != 0) ++rank;
    if (x > 1) out.push_back(x);
  }
  out.insert(out.end(), static_cast<std::size_t>(generators - rank), 0);
  return out;
}

int matrix_rank(const IntegerMatrix& m) { return smith_normal_form(m).rank(); }

}  // namespace braidlab
