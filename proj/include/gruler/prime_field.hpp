#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace gruler {

/// F_q for a prime q <= 7.
class PrimeField {
 public:
  using Elem = std::uint8_t;

  /// Throws InvalidArgument unless q is 2, 3, 5 or 7.
  explicit PrimeField(unsigned q);

  unsigned order() const noexcept { return q_; }
  Elem add(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + b) % q_); }
  Elem sub(Elem a, Elem b) const noexcept { return static_cast<Elem>((a + q_ - b) % q_); }
  Elem mul(Elem a, Elem b) const noexcept { return static_cast<Elem>((a * b) % q_); }
  Elem neg(Elem a) const noexcept { return static_cast<Elem>((q_ - a) % q_); }
  /// Multiplicative inverse of a nonzero element.
  Elem inv(Elem a) const noexcept { return inverse_[a]; }

 private:
  unsigned q_;
  std::vector<Elem> inverse_;
};

/// Dense n x n matrix over a prime field, row-major.
struct CoeffMatrix {
  std::size_t n = 0;
  std::vector<PrimeField::Elem> a;

  static CoeffMatrix zero(std::size_t n) { return {n, std::vector<PrimeField::Elem>(n * n, 0)}; }
  static CoeffMatrix identity(std::size_t n);

  PrimeField::Elem& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  PrimeField::Elem at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  friend bool operator==(const CoeffMatrix&, const CoeffMatrix&) = default;
};

CoeffMatrix multiply(const CoeffMatrix& x, const CoeffMatrix& y, const PrimeField& f);
PrimeField::Elem determinant(CoeffMatrix m, const PrimeField& f);

}  // namespace gruler
