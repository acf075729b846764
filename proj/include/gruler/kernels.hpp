#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

// Batched modular linear tests used by the finite-field oracle.
//
// The oracle repeatedly asks "which candidate matrices U satisfy L*U*R == T
// over F_q" for fixed L, R, T. The product is linear in the entries of U, so
// each candidate reduces to a handful of dot products against a coefficient
// table; candidates are stored structure-of-arrays so one vector register
// holds the same coordinate of kLanes candidates.

namespace gruler::kernels {

inline constexpr std::size_t kLanes = 32;
inline constexpr unsigned kMaxModulus = 7;

/// Candidate c matches iff for every output o:
///   sum_p coeff[o * terms + p] * coord_p(c)  ==  target[o]   (mod q)
/// Coefficients and targets are stored reduced mod q; q <= kMaxModulus.
struct LinearCheck {
  std::uint8_t q = 2;
  std::size_t terms = 0;
  std::vector<std::uint8_t> coeff;
  std::vector<std::uint8_t> target;

  std::size_t outputs() const noexcept { return target.size(); }
};

/// Structure-of-arrays candidate storage: coordinate p of candidate c lives
/// at plane(p)[c]. Zero-padded to a multiple of kLanes. Coordinates are field
/// elements, i.e. < q.
class CandidatePlanes {
 public:
  explicit CandidatePlanes(std::size_t terms) : terms_(terms) {}

  void push_back(std::span<const std::uint8_t> coords);

  std::size_t size() const noexcept { return count_; }
  std::size_t terms() const noexcept { return terms_; }
  std::size_t chunks() const noexcept { return (count_ + kLanes - 1) / kLanes; }
  const std::uint8_t* plane(std::size_t p) const noexcept { return data_.data() + p * stride_; }
  std::uint8_t at(std::size_t candidate, std::size_t p) const { return plane(p)[candidate]; }

 private:
  std::size_t terms_;
  std::size_t count_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint8_t> data_;
};

struct ChunkHit {
  std::size_t chunk;
  /// Bit i set iff candidate chunk*kLanes + i matches. Padding lanes are
  /// evaluated like real candidates; callers mask them.
  std::uint32_t mask;
};

/// First chunk in [first_chunk, end_chunk) with at least one matching lane.
using ScanKernel = std::optional<ChunkHit> (*)(const LinearCheck&, const CandidatePlanes&,
                                               std::size_t first_chunk, std::size_t end_chunk);

std::optional<ChunkHit> scan_scalar(const LinearCheck& check, const CandidatePlanes& cand,
                                    std::size_t first_chunk, std::size_t end_chunk);
#if defined(__x86_64__) || defined(__i386__)
std::optional<ChunkHit> scan_avx2(const LinearCheck& check, const CandidatePlanes& cand,
                                  std::size_t first_chunk, std::size_t end_chunk);
#endif

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b) noexcept;
bool backend_available(Backend b) noexcept;
/// Widest backend the running CPU supports, unless GRULER_SIMD=scalar|avx2
/// overrides it.
Backend default_backend();
Backend active_backend() noexcept;
/// Throws InvalidArgument if the backend is not available on this CPU.
void set_backend(Backend b);
ScanKernel kernel_for(Backend b);

/// Lowest candidate index >= begin satisfying the check.
std::optional<std::size_t> first_match(const LinearCheck& check, const CandidatePlanes& cand,
                                       std::size_t begin = 0);
std::vector<std::size_t> all_matches(const LinearCheck& check, const CandidatePlanes& cand);

}  // namespace gruler::kernels
