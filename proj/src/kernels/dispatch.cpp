#include <cstdlib>
#include <string>

#include "gruler/error.hpp"
#include "gruler/kernels.hpp"

namespace gruler::kernels {

std::string_view to_string(Backend b) noexcept {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) noexcept {
  if (b == Backend::Scalar) return true;
#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend default_backend() {
  if (const char* env = std::getenv("GRULER_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return Backend::Scalar;
    if (want == "avx2" && backend_available(Backend::Avx2)) return Backend::Avx2;
  }
  return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

namespace {

Backend& current() {
  static Backend b = default_backend();
  return b;
}

}  // namespace

Backend active_backend() noexcept { return current(); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string("backend ") + std::string(to_string(b)) + " unavailable on this CPU");
  }
  current() = b;
}

ScanKernel kernel_for(Backend b) {
#if defined(__x86_64__) || defined(__i386__)
  if (b == Backend::Avx2 && backend_available(b)) return &scan_avx2;
#endif
  (void)b;
  return &scan_scalar;
}

namespace {

std::uint32_t valid_lanes(const CandidatePlanes& cand, std::size_t chunk) {
  const std::size_t left = cand.size() - chunk * kLanes;
  return left >= kLanes ? 0xFFFFFFFFu : (1u << left) - 1u;
}

}  // namespace

std::optional<std::size_t> first_match(const LinearCheck& check, const CandidatePlanes& cand,
                                       std::size_t begin) {
  const ScanKernel scan = kernel_for(active_backend());
  std::size_t chunk = begin / kLanes;
  std::uint32_t skip = (1u << (begin % kLanes)) - 1u;  // lanes below `begin`
  while (chunk < cand.chunks()) {
    const auto hit = scan(check, cand, chunk, cand.chunks());
    if (!hit) return std::nullopt;
    std::uint32_t mask = hit->mask & valid_lanes(cand, hit->chunk);
    if (hit->chunk == begin / kLanes) mask &= ~skip;
    if (mask != 0) return hit->chunk * kLanes + static_cast<std::size_t>(__builtin_ctz(mask));
    chunk = hit->chunk + 1;
    skip = 0;
  }
  return std::nullopt;
}

std::vector<std::size_t> all_matches(const LinearCheck& check, const CandidatePlanes& cand) {
  const ScanKernel scan = kernel_for(active_backend());
  std::vector<std::size_t> out;
  std::size_t chunk = 0;
  while (chunk < cand.chunks()) {
    const auto hit = scan(check, cand, chunk, cand.chunks());
    if (!hit) break;
    std::uint32_t mask = hit->mask & valid_lanes(cand, hit->chunk);
    while (mask != 0) {
      out.push_back(hit->chunk * kLanes + static_cast<std::size_t>(__builtin_ctz(mask)));
      mask &= mask - 1;
    }
    chunk = hit->chunk + 1;
  }
  return out;
}

}  // namespace gruler::kernels
