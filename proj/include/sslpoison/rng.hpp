#pragma once

#include <cstdint>

namespace sslpoison {

// splitmix64 finalizer; derive_seed gives independent per-item streams from
// a base seed so per-sample work can be reordered or parallelized.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept
{
    return mix64(mix64(base) ^ (stream * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull));
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) noexcept
{
    return derive_seed(derive_seed(base, a), b);
}

} // namespace sslpoison
