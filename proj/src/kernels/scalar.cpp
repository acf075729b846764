#include "gruler/kernels.hpp"

namespace gruler::kernels {

void CandidatePlanes::push_back(std::span<const std::uint8_t> coords) {
  if (count_ == stride_) {
    // Grow every plane at once, keeping the planes contiguous.
    const std::size_t new_stride = stride_ == 0 ? kLanes : 2 * stride_;
    std::vector<std::uint8_t> grown(terms_ * new_stride, 0);
    for (std::size_t p = 0; p < terms_; ++p) {
      std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(p * stride_), count_,
                  grown.begin() + static_cast<std::ptrdiff_t>(p * new_stride));
    }
    data_ = std::move(grown);
    stride_ = new_stride;
  }
  for (std::size_t p = 0; p < terms_; ++p) data_[p * stride_ + count_] = coords[p];
  ++count_;
}

std::optional<ChunkHit> scan_scalar(const LinearCheck& check, const CandidatePlanes& cand,
                                    std::size_t first_chunk, std::size_t end_chunk) {
  for (std::size_t chunk = first_chunk; chunk < end_chunk; ++chunk) {
    std::uint32_t mask = 0;
    for (std::size_t lane = 0; lane < kLanes; ++lane) {
      const std::size_t c = chunk * kLanes + lane;
      bool ok = true;
      for (std::size_t o = 0; o < check.outputs() && ok; ++o) {
        unsigned acc = 0;
        for (std::size_t p = 0; p < check.terms; ++p) {
          acc += unsigned{check.coeff[o * check.terms + p]} * cand.plane(p)[c];
        }
        ok = acc % check.q == check.target[o];
      }
      if (ok) mask |= 1u << lane;
    }
    if (mask != 0) return ChunkHit{chunk, mask};
  }
  return std::nullopt;
}

}  // namespace gruler::kernels
