#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gruler {

enum class BlockKind { GroundField, Laurent };

/// M_n(K)(shifts) or M_n(K[x^m, x^-m])(shifts). The grading puts entry
/// (i, j) of a degree-d matrix in degree d - shifts[i] + shifts[j] of the
/// coefficient ring.
struct ShiftBlock {
  BlockKind kind = BlockKind::GroundField;
  /// Laurent period m; always 1 for GroundField blocks.
  std::int64_t period = 1;
  std::vector<std::int64_t> shifts;

  static ShiftBlock ground_field(std::vector<std::int64_t> shifts);
  static ShiftBlock laurent(std::int64_t m, std::vector<std::int64_t> shifts);

  std::size_t size() const noexcept { return shifts.size(); }
  bool is_laurent() const noexcept { return kind == BlockKind::Laurent; }

  friend bool operator==(const ShiftBlock&, const ShiftBlock&) = default;
};

/// `M_2(K)(0,1)`, `M_4(K[x^2,x^-2])(0,1,1,2)`.
std::string notation(const ShiftBlock& b);

/// Mathematical remainder in [0, m).
constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace gruler
