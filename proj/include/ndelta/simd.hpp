#pragma once

// Data-parallel kernels used by the hot loops of the membership scans and the
// factor-graph computations. Every kernel has a scalar reference version and,
// on x86-64, an AVX2 version; the public entry points dispatch once at startup
// on the CPU's capabilities. The variants are interchangeable bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace ndelta::simd {

enum class Backend { Scalar, Avx2 };

/// True when the running CPU supports AVX2 and the build has the AVX2 kernels.
bool avx2_available();
Backend active_backend();
std::string_view backend_name(Backend b);

/// popcount(a & b) over the common prefix of the two word arrays.
std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Whether two strictly ascending arrays share an element.
bool sorted_intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

namespace scalar {
std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
bool sorted_intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace scalar

// Callable only when avx2_available().
namespace avx2 {
std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
bool sorted_intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace avx2

}  // namespace ndelta::simd
