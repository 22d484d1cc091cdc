#ifndef SLSPEC_RNG_HPP
#define SLSPEC_RNG_HPP

#include <cstdint>

namespace slspec::rng {

// splitmix64 finalizer
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based generator: the value depends only on (seed, stream, counter),
// never on call order, so parallel sweeps are reproducible for any thread count.
inline std::uint64_t bits(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    return mix64(mix64(seed ^ 0x8536f3c91a2b44d1ULL) + mix64(stream) * 0xd1342543de82ef95ULL + counter);
}

inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    return (double)(bits(seed, stream, counter) >> 11) * 0x1.0p-53;
}

// +1 or -1
inline double sign(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter)
{
    return (bits(seed, stream, counter) & 1u) ? 1.0 : -1.0;
}

} // namespace slspec::rng

#endif
