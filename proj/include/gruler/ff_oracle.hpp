#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "gruler/error.hpp"
#include "gruler/prime_field.hpp"
#include "gruler/shift_block.hpp"
#include "gruler/shift_calculus.hpp"

// Exhaustive verifier for small shifted matrix algebras over F_q and
// F_q[x^m, x^-m]. Homogeneous elements of a Laurent block are stored as
// coefficient matrices; the power of x at each entry is forced by the degree
// and the shifts, so products are plain coefficient-matrix products.

namespace gruler {

struct HomogeneousMatrix {
  std::int64_t degree = 0;
  CoeffMatrix coeffs;
};

struct OracleOptions {
  /// Largest support (number of free entries) a component may have.
  std::size_t max_support = 16;

  /// Reads GRULER_MAX_SUPPORT when set.
  static OracleOptions from_environment();
};

class ComponentTooLarge : public Error {
 public:
  ComponentTooLarge(std::int64_t degree, std::size_t support_size, std::size_t cap);

  std::int64_t degree() const noexcept { return degree_; }
  std::size_t support_size() const noexcept { return support_size_; }

 private:
  std::int64_t degree_;
  std::size_t support_size_;
};

/// The q^|support| elements of one homogeneous component, in lexicographic
/// order of their coefficient vectors (support positions row-major, first
/// position most significant).
class Component {
 public:
  Component(const ShiftBlock& b, std::int64_t degree, const PrimeField& field,
            const OracleOptions& opts = {});

  std::uint64_t size() const noexcept { return size_; }
  std::int64_t degree() const noexcept { return support_.degree; }
  const ComponentSupport& support() const noexcept { return support_; }
  std::size_t dim() const noexcept { return support_.n; }

  HomogeneousMatrix at(std::uint64_t index) const;
  /// Coordinates of element `index` along the support positions.
  void coords(std::uint64_t index, std::vector<std::uint8_t>& out) const;

  class iterator {
   public:
    using value_type = HomogeneousMatrix;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator(const Component* c, std::uint64_t i) : c_(c), i_(i) {}
    HomogeneousMatrix operator*() const { return c_->at(i_); }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    bool operator==(const iterator& o) const noexcept { return i_ == o.i_; }

   private:
    const Component* c_;
    std::uint64_t i_;
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size_}; }

 private:
  ComponentSupport support_;
  unsigned q_;
  std::uint64_t size_;
};

/// Throws ComponentTooLarge when the support exceeds the cap.
Component enumerate_component(const ShiftBlock& b, std::int64_t degree, unsigned q,
                              const OracleOptions& opts = {});

bool is_invertible_hom(const HomogeneousMatrix& x, const PrimeField& field);

struct OracleVerdict {
  bool holds = true;
  /// First failing x in (degree, lexicographic) order.
  std::optional<HomogeneousMatrix> counterexample;
  /// For direct finiteness: the y with xy = 1 but yx != 1.
  std::optional<HomogeneousMatrix> partner;
};

/// Degrees the oracle visits: every nonzero component (one period for
/// Laurent blocks).
std::vector<std::int64_t> oracle_degrees(const ShiftBlock& b);
/// Degree of the partner component, -d (reduced into [0, m) for Laurent).
std::int64_t partner_degree(const ShiftBlock& b, std::int64_t degree);

/// Throws ComponentTooLarge if any visited component exceeds the cap.
void check_caps(const ShiftBlock& b, const OracleOptions& opts);

/// Every homogeneous x has a homogeneous y with xyx = x.
OracleVerdict check_graded_regular(const ShiftBlock& b, unsigned q, const OracleOptions& opts = {});
/// Every homogeneous x has an invertible homogeneous u with xux = x.
OracleVerdict check_graded_unit_regular(const ShiftBlock& b, unsigned q,
                                        const OracleOptions& opts = {});
/// xy = 1 implies yx = 1 for homogeneous x, y.
OracleVerdict check_graded_directly_finite(const ShiftBlock& b, unsigned q,
                                           const OracleOptions& opts = {});

}  // namespace gruler
