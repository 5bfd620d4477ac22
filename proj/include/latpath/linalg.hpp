#ifndef LATPATH_LINALG_HPP
#define LATPATH_LINALG_HPP

#include "latpath/numeric.hpp"

namespace latpath {

/// Small dense helpers for the rank <= 3 matrices this project handles.

double dot(const Vec& a, const Vec& b);

/// Gaussian elimination with partial pivoting.
Vec solveLinear(Mat a, Vec b);

double determinant(Mat a);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi, ascending order.
Vec symmetricEigenvalues(Mat a);

double minEigenvalue(const Mat& a);

}  // namespace latpath

#endif
