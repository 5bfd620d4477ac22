#include "latpath/hnf.hpp"

namespace latpath {

namespace {

// extended gcd: returns g, sets u, v with u*a + v*b = g, g >= 0
BigInt extGcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v) {
  if (b == 0) {
    u = (a < 0) ? -1 : 1;
    v = 0;
    return abs(a);
  }
  BigInt u1, v1;
  BigInt g = extGcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

BigInt floorDiv(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::optional<IntMat> hermiteBasis(int dim, const std::vector<std::vector<BigInt>>& generators) {
  std::vector<std::vector<BigInt>> cols = generators;
  const int k = static_cast<int>(cols.size());
  if (k < dim) return std::nullopt;

  for (int i = 0; i < dim; ++i) {
    // gcd-combine row-i entries of columns i..k-1 into a single pivot
    int pivot = -1;
    for (int j = i; j < k; ++j) {
      if (cols[j][i] == 0) continue;
      if (pivot < 0) {
        pivot = j;
        continue;
      }
      BigInt u, v;
      BigInt x = cols[pivot][i], y = cols[j][i];
      BigInt g = extGcd(x, y, u, v);
      std::vector<BigInt> combo(dim), other(dim);
      for (int r = 0; r < dim; ++r) {
        combo[r] = u * cols[pivot][r] + v * cols[j][r];
        other[r] = (x / g) * cols[j][r] - (y / g) * cols[pivot][r];
      }
      cols[pivot] = std::move(combo);
      cols[j] = std::move(other);
    }
    if (pivot < 0) return std::nullopt;  // rank deficient
    std::swap(cols[i], cols[pivot]);
    if (cols[i][i] < 0)
      for (auto& e : cols[i]) e = -e;
  }

  // canonical reduction: 0 <= H[i][j] < H[i][i] for j < i
  for (int i = 1; i < dim; ++i) {
    for (int j = 0; j < i; ++j) {
      BigInt q = floorDiv(cols[j][i], cols[i][i]);
      if (q == 0) continue;
      for (int r = 0; r < dim; ++r) cols[j][r] -= q * cols[i][r];
    }
  }

  IntMat h(dim, std::vector<BigInt>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) h[i][j] = cols[j][i];
  return h;
}

BigInt latticeIndex(const IntMat& hnfBasis) {
  BigInt d = 1;
  for (size_t i = 0; i < hnfBasis.size(); ++i) d *= hnfBasis[i][i];
  return abs(d);
}

std::optional<std::vector<BigInt>> solveLattice(const IntMat& hnfBasis,
                                                const std::vector<BigInt>& v) {
  const int dim = static_cast<int>(hnfBasis.size());
  std::vector<BigInt> z(dim);
  for (int i = 0; i < dim; ++i) {
    BigInt rem = v[i];
    for (int j = 0; j < i; ++j) rem -= hnfBasis[i][j] * z[j];
    if (rem % hnfBasis[i][i] != 0) return std::nullopt;
    z[i] = rem / hnfBasis[i][i];
  }
  return z;
}

bool inLattice(const IntMat& hnfBasis, const std::vector<BigInt>& v) {
  return solveLattice(hnfBasis, v).has_value();
}

}  // namespace latpath
