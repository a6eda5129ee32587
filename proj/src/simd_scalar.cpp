#include <algorithm>
#include <bit>

#include "ndelta/simd.hpp"

namespace ndelta::simd::scalar {

std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    const std::size_t n = std::min(a.size(), b.size());
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return count;
}

bool sorted_intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

}  // namespace ndelta::simd::scalar
