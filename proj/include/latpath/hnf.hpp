#ifndef LATPATH_HNF_HPP
#define LATPATH_HNF_HPP

#include "latpath/numeric.hpp"

#include <optional>
#include <vector>

namespace latpath {

/// Square integer matrix stored row-major; mat[i][j] is row i, column j.
using IntMat = std::vector<std::vector<BigInt>>;

/// Column-style Hermite normal form of the lattice spanned by the given
/// generators (each generator a vector of length dim). Returns a
/// lower-triangular dim x dim basis with positive diagonal and entries
/// below the diagonal reduced into [0, diag). Returns std::nullopt when the
/// generators do not span a full-rank sublattice.
std::optional<IntMat> hermiteBasis(int dim, const std::vector<std::vector<BigInt>>& generators);

/// |det| of a lower-triangular basis: product of the diagonal.
BigInt latticeIndex(const IntMat& hnfBasis);

/// Does v lie in the lattice spanned by the columns of the HNF basis?
bool inLattice(const IntMat& hnfBasis, const std::vector<BigInt>& v);

/// Integer solution z of hnfBasis * z = v, if one exists.
std::optional<std::vector<BigInt>> solveLattice(const IntMat& hnfBasis,
                                                const std::vector<BigInt>& v);

}  // namespace latpath

#endif
