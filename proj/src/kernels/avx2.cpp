#include "gruler/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>


#define GRULER_AVX2 __attribute__((target("avx2")))

namespace gruler::kernels {

namespace {

struct Term {
  const std::uint8_t* plane;
  std::uint8_t coeff;
};

}  // namespace

GRULER_AVX2 std::optional<ChunkHit> scan_avx2(const LinearCheck& check,
                                              const CandidatePlanes& cand,
                                              std::size_t first_chunk, std::size_t end_chunk) {
  const unsigned q = check.q;
  // times[c][u] = c*u mod q; reduce[v] = v mod q for v < 16.
  alignas(32) std::uint8_t times[kMaxModulus][32] = {};
  alignas(32) std::uint8_t reduce_table[32];
  for (unsigned c = 1; c < q; ++c) {
    for (unsigned u = 0; u < q; ++u) {
      times[c][u] = times[c][u + 16] = static_cast<std::uint8_t>(c * u % q);
    }
  }
  for (unsigned v = 0; v < 16; ++v) {
    reduce_table[v] = reduce_table[v + 16] = static_cast<std::uint8_t>(v % q);
  }
  const __m256i reduce = _mm256_load_si256(reinterpret_cast<const __m256i*>(reduce_table));

  // Nonzero terms only, grouped per output.
  std::vector<Term> terms;
  std::vector<std::size_t> row_end;
  for (std::size_t o = 0; o < check.outputs(); ++o) {
    for (std::size_t p = 0; p < check.terms; ++p) {
      const auto c = check.coeff[o * check.terms + p];
      if (c != 0) terms.push_back({cand.plane(p), c});
    }
    row_end.push_back(terms.size());
  }

  for (std::size_t chunk = first_chunk; chunk < end_chunk; ++chunk) {
    const std::size_t base = chunk * kLanes;
    __m256i alive = _mm256_set1_epi8(-1);
    std::size_t t = 0;
    for (std::size_t o = 0; o < row_end.size(); ++o) {
      __m256i acc = _mm256_setzero_si256();
      for (; t < row_end[o]; ++t) {
        const __m256i u =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(terms[t].plane + base));
        const __m256i table =
            _mm256_load_si256(reinterpret_cast<const __m256i*>(times[terms[t].coeff]));
        const __m256i prod = _mm256_shuffle_epi8(table, u);
        acc = _mm256_shuffle_epi8(reduce, _mm256_add_epi8(acc, prod));
      }
      alive = _mm256_and_si256(alive, _mm256_cmpeq_epi8(acc, _mm256_set1_epi8(static_cast<char>(check.target[o]))));
      if (_mm256_testz_si256(alive, alive)) break;
    }
    const auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(alive));
    if (mask != 0) return ChunkHit{chunk, mask};
  }
  return std::nullopt;
}

}  // namespace gruler::kernels

#endif
