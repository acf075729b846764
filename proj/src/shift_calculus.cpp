#include "gruler/shift_calculus.hpp"

#include <algorithm>
#include <functional>

#include "gruler/error.hpp"

namespace gruler {

CanonicalBlock canonicalize_block(const ShiftBlock& b) {
  CanonicalBlock c{b.kind, b.is_laurent() ? b.period : 1, b.shifts};
  if (c.shifts.empty()) return c;
  if (!b.is_laurent()) {
    std::sort(c.shifts.begin(), c.shifts.end());
    const auto lo = c.shifts.front();
    for (auto& s : c.shifts) s -= lo;
    return c;
  }
  const std::int64_t m = b.period;
  for (auto& s : c.shifts) s = floor_mod(s, m);
  std::sort(c.shifts.begin(), c.shifts.end());
  std::vector<std::int64_t> best = c.shifts, trial(c.shifts.size());
  for (std::int64_t t = 1; t < m; ++t) {
    std::transform(c.shifts.begin(), c.shifts.end(), trial.begin(),
                   [&](std::int64_t s) { return floor_mod(s + t, m); });
    std::sort(trial.begin(), trial.end());
    if (trial < best) best = trial;
  }
  c.shifts = std::move(best);
  return c;
}

ShiftBlock to_shift_block(const CanonicalBlock& c) {
  return c.kind == BlockKind::Laurent ? ShiftBlock::laurent(c.period, c.shifts)
                                      : ShiftBlock::ground_field(c.shifts);
}

bool reps_graded_isomorphic(std::span<const ShiftBlock> a, std::span<const ShiftBlock> b) {
  if (a.size() != b.size()) return false;
  auto canon = [](std::span<const ShiftBlock> blocks) {
    std::vector<CanonicalBlock> out;
    out.reserve(blocks.size());
    for (const auto& blk : blocks) out.push_back(canonicalize_block(blk));
    std::sort(out.begin(), out.end());
    return out;
  };
  return canon(a) == canon(b);
}

bool reps_graded_isomorphic(const GradedMatricialRep& a, const GradedMatricialRep& b) {
  const auto sa = a.shift_blocks();
  const auto sb = b.shift_blocks();
  return reps_graded_isomorphic(sa, sb);
}

bool ComponentSupport::contains(std::size_t row, std::size_t col) const noexcept {
  return std::binary_search(positions.begin(), positions.end(), Position{row, col});
}

ComponentSupport component_support(const ShiftBlock& b, std::int64_t degree) {
  ComponentSupport s;
  s.degree = degree;
  s.n = b.size();
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      // Entry (i, j) lives in ring degree  degree - shift_i + shift_j.
      const std::int64_t ring_degree = degree - b.shifts[i] + b.shifts[j];
      const bool allowed =
          b.is_laurent() ? floor_mod(ring_degree, b.period) == 0 : ring_degree == 0;
      if (!allowed) continue;
      s.positions.push_back({i, j});
      if (b.is_laurent()) s.exponents.push_back(ring_degree);
    }
  }
  return s;
}

bool support_has_invertible(std::span<const Position> positions, std::size_t n) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& p : positions) {
    if (p.row < n && p.col < n) adj[p.row].push_back(p.col);
  }
  // Kuhn's augmenting paths; n is tiny.
  std::vector<std::ptrdiff_t> match_col(n, -1);
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t row) {
    for (std::size_t col : adj[row]) {
      if (visited[col]) continue;
      visited[col] = true;
      if (match_col[col] < 0 || augment(static_cast<std::size_t>(match_col[col]))) {
        match_col[col] = static_cast<std::ptrdiff_t>(row);
        return true;
      }
    }
    return false;
  };
  for (std::size_t row = 0; row < n; ++row) {
    visited.assign(n, false);
    if (!augment(row)) return false;
  }
  return true;
}

bool support_has_invertible(const ComponentSupport& s, std::size_t n) {
  return support_has_invertible(s.positions, n);
}

std::vector<std::int64_t> nonzero_degrees(const ShiftBlock& b) {
  std::vector<std::int64_t> out;
  if (b.is_laurent()) {
    for (std::int64_t d = 0; d < b.period; ++d) {
      if (!component_support(b, d).empty()) out.push_back(d);
    }
    return out;
  }
  for (auto gi : b.shifts) {
    for (auto gj : b.shifts) out.push_back(gi - gj);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::int64_t> find_blocking_degree(const ShiftBlock& b) {
  for (auto d : nonzero_degrees(b)) {
    if (!support_has_invertible(component_support(b, d), b.size())) return d;
  }
  return std::nullopt;
}

bool k_block_graded_ur(const ShiftBlock& b) {
  if (b.is_laurent()) throw Error(ErrorCode::WrongKind, "expected a ground-field block");
  return b.size() == 1 ||
         std::adjacent_find(b.shifts.begin(), b.shifts.end(), std::not_equal_to<>()) ==
             b.shifts.end();
}

const char* to_string(UrVerdict v) noexcept {
  switch (v) {
    case UrVerdict::True: return "true";
    case UrVerdict::False: return "false";
    case UrVerdict::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

std::vector<std::size_t> residue_multiplicities(const ShiftBlock& b) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(b.period), 0);
  for (auto s : b.shifts) ++counts[static_cast<std::size_t>(floor_mod(s, b.period))];
  return counts;
}

}  // namespace

bool all_residues_present(const ShiftBlock& b) {
  const auto counts = residue_multiplicities(b);
  return std::none_of(counts.begin(), counts.end(), [](std::size_t c) { return c == 0; });
}

UrVerdict laurent_block_graded_ur(const ShiftBlock& b) {
  if (!b.is_laurent()) throw Error(ErrorCode::WrongKind, "expected a Laurent block");
  const auto counts = residue_multiplicities(b);
  const bool covered =
      std::none_of(counts.begin(), counts.end(), [](std::size_t c) { return c == 0; });
  if (covered) {
    // n = km with each residue appearing k times is the same as all counts equal.
    const bool equal = std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) ==
                       counts.end();
    return equal ? UrVerdict::True : UrVerdict::False;
  }
  return find_blocking_degree(b) ? UrVerdict::False : UrVerdict::Undetermined;
}

UrVerdict block_graded_ur(const ShiftBlock& b) {
  if (b.is_laurent()) return laurent_block_graded_ur(b);
  return k_block_graded_ur(b) ? UrVerdict::True : UrVerdict::False;
}

}  // namespace gruler
