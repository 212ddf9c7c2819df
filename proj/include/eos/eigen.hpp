#pragma once

#include <vector>

#include "eos/sym_matrix.hpp"

namespace eos {

struct SymEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column k (stride dim) is the unit eigenvector of values[k]
  int dim = 0;
  int sweeps = 0;

  double vector(int row, int k) const { return vectors[static_cast<std::size_t>(row) * dim + k]; }
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// 1e-14 * ||M||_F (or 100 sweeps).
SymEigen jacobi_eigen(const SymMatrix<double>& m);

}  // namespace eos
