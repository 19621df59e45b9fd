#include "wigner/rng.hpp"

namespace wigner::rng {
namespace {

constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Stream named_stream(std::uint64_t seed, std::string_view name, std::uint64_t index) noexcept {
    std::uint64_t key = mix(seed + 0x9e3779b97f4a7c15ULL);
    key = mix(key ^ fnv1a(name));
    key = mix(key ^ (index * 0xd1342543de82ef95ULL + 1));
    return Stream(key);
}

}  // namespace wigner::rng
