#include "ndelta/simd.hpp"

namespace ndelta::simd {

namespace {

struct Kernels {
    Backend backend;
    std::size_t (*and_popcount)(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
    bool (*sorted_intersects)(std::span<const std::uint64_t>, std::span<const std::uint64_t>);
};

bool detect_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

const Kernels& kernels() {
    static const Kernels k = detect_avx2()
                                 ? Kernels{Backend::Avx2, &avx2::and_popcount, &avx2::sorted_intersects}
                                 : Kernels{Backend::Scalar, &scalar::and_popcount, &scalar::sorted_intersects};
    return k;
}

}  // namespace

bool avx2_available() {
    static const bool available = detect_avx2();
    return available;
}

Backend active_backend() { return kernels().backend; }

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return kernels().and_popcount(a, b);
}

bool sorted_intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return kernels().sorted_intersects(a, b);
}

}  // namespace ndelta::simd
