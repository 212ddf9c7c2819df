#pragma once

#include <vector>

#include "eos/error.hpp"
#include "eos/number.hpp"

namespace eos {

// Dense symmetric matrix, row-major storage. Symmetry is enforced on
// construction and preserved by set().
template <typename T>
class SymMatrix {
 public:
  explicit SymMatrix(int dim = 0) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, T(0)) {}

  // Throws NonSymmetric unless entries[i][j] == entries[j][i] exactly.
  SymMatrix(int dim, std::vector<T> row_major) : dim_(dim), data_(std::move(row_major)) {
    if (data_.size() != static_cast<std::size_t>(dim) * dim) {
      throw Error(ErrorCode::InvalidSequence, "matrix data does not match dimension");
    }
    for (int i = 0; i < dim_; ++i) {
      for (int j = i + 1; j < dim_; ++j) {
        if (!((*this)(i, j) == (*this)(j, i))) {
          throw Error(ErrorCode::NonSymmetric, "entry (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") differs from its transpose");
        }
      }
    }
  }

  int dim() const { return dim_; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, const T& v) {
    data_[static_cast<std::size_t>(i) * dim_ + j] = v;
    data_[static_cast<std::size_t>(j) * dim_ + i] = v;
  }
  const std::vector<T>& data() const { return data_; }

  // Leading principal block of order k.
  SymMatrix leading(int k) const {
    SymMatrix out(k);
    for (int i = 0; i < k; ++i)
      for (int j = i; j < k; ++j) out.set(i, j, (*this)(i, j));
    return out;
  }

  friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  int dim_;
  std::vector<T> data_;
};

inline SymMatrix<double> to_double(const SymMatrix<Rational>& m) {
  SymMatrix<double> out(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j) out.set(i, j, m(i, j).get_d());
  return out;
}

inline const SymMatrix<double>& to_double(const SymMatrix<double>& m) { return m; }

// Hankel matrix (s[offset + i + j])_{i,j < size}.
template <typename T>
SymMatrix<T> hankel_block(const std::vector<T>& s, int size, int offset = 0) {
  SymMatrix<T> out(size);
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) out.set(i, j, s.at(static_cast<std::size_t>(offset + i + j)));
  return out;
}

}  // namespace eos
