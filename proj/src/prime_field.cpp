#include "gruler/prime_field.hpp"

#include <utility>

#include "gruler/error.hpp"

namespace gruler {

PrimeField::PrimeField(unsigned q) : q_(q) {
  if (q != 2 && q != 3 && q != 5 && q != 7) {
    throw Error(ErrorCode::InvalidArgument,
                "field order must be a prime <= 7, got " + std::to_string(q));
  }
  inverse_.assign(q, 0);
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b) {
      if (a * b % q == 1) inverse_[a] = static_cast<Elem>(b);
    }
  }
}

CoeffMatrix CoeffMatrix::identity(std::size_t n) {
  auto m = zero(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

CoeffMatrix multiply(const CoeffMatrix& x, const CoeffMatrix& y, const PrimeField& f) {
  const std::size_t n = x.n;
  auto out = CoeffMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(xik, y.at(k, j)));
    }
  }
  return out;
}

PrimeField::Elem determinant(CoeffMatrix m, const PrimeField& f) {
  const std::size_t n = m.n;
  PrimeField::Elem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(col, col));
    const auto inv = f.inv(m.at(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const auto factor = f.mul(m.at(r, col), inv);
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(col, j)));
      }
    }
  }
  return det;
}

}  // namespace gruler
