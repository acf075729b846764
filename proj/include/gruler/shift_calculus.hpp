#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gruler/rep_builder.hpp"
#include "gruler/shift_block.hpp"

namespace gruler {

/// Normal form of a block under permutation of shifts, common translation,
/// and (Laurent only) moving a single shift by a multiple of m.
struct CanonicalBlock {
  BlockKind kind = BlockKind::GroundField;
  std::int64_t period = 1;
  std::vector<std::int64_t> shifts;

  std::size_t size() const noexcept { return shifts.size(); }
  friend auto operator<=>(const CanonicalBlock&, const CanonicalBlock&) = default;
};

CanonicalBlock canonicalize_block(const ShiftBlock& b);
ShiftBlock to_shift_block(const CanonicalBlock& c);

/// Equality of the multisets of canonical blocks.
bool reps_graded_isomorphic(std::span<const ShiftBlock> a, std::span<const ShiftBlock> b);
bool reps_graded_isomorphic(const GradedMatricialRep& a, const GradedMatricialRep& b);

struct Position {
  std::size_t row;
  std::size_t col;
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Positions (0-based, row-major) a degree-`degree` matrix may occupy. For
/// Laurent blocks `exponents[k]` is the power of x carried by positions[k].
struct ComponentSupport {
  std::int64_t degree = 0;
  std::size_t n = 0;
  std::vector<Position> positions;
  std::vector<std::int64_t> exponents;

  bool empty() const noexcept { return positions.empty(); }
  bool contains(std::size_t row, std::size_t col) const noexcept;
};

ComponentSupport component_support(const ShiftBlock& b, std::int64_t degree);

/// True iff some permutation matrix fits inside the support, i.e. a matrix
/// with that support can have nonzero determinant. Decided by bipartite
/// perfect matching.
bool support_has_invertible(const ComponentSupport& s, std::size_t n);
bool support_has_invertible(std::span<const Position> positions, std::size_t n);

/// Degrees whose component is nonzero: {shift_i - shift_j} for GroundField,
/// the residues 0..m-1 with nonempty support for Laurent. Sorted ascending.
std::vector<std::int64_t> nonzero_degrees(const ShiftBlock& b);

/// Least degree of a nonzero component that has no invertible element.
std::optional<std::int64_t> find_blocking_degree(const ShiftBlock& b);

/// Graded unit-regularity of M_n(K)(shifts): n = 1 or all shifts equal.
/// Throws WrongKind.
bool k_block_graded_ur(const ShiftBlock& b);

enum class UrVerdict { True, False, Undetermined };
const char* to_string(UrVerdict v) noexcept;

/// True iff every residue 0..m-1 occurs among the shifts modulo m.
bool all_residues_present(const ShiftBlock& b);

/// Graded unit-regularity of M_n(K[x^m, x^-m])(shifts). Decided by the
/// residue-multiplicity criterion when every residue occurs; otherwise False
/// if a nonzero component lacks invertibles, else Undetermined.
/// Throws WrongKind.
UrVerdict laurent_block_graded_ur(const ShiftBlock& b);

/// Dispatches on kind; GroundField maps to True/False.
UrVerdict block_graded_ur(const ShiftBlock& b);

}  // namespace gruler
