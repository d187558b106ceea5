#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hestonlab {

// Identifies one replicate's randomness. Every stream used by the replicate
// is derived from (master_seed, replicate, stream tag), so a replicate's
// draws do not depend on which thread generates them or in what order.
struct SeedLineage {
    std::uint64_t master_seed = 0;
    std::uint64_t replicate = 0;

    friend bool operator==(const SeedLineage&, const SeedLineage&) = default;
};

enum class StreamTag : std::uint64_t { Eta = 0x65746131, Zeta = 0x7a657461 };

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// 64-bit engine seed for one (lineage, stream) pair.
std::uint64_t derive_stream_seed(const SeedLineage& lineage, StreamTag tag) noexcept;

// Independent standard normal sequences driving W (eta) and B (zeta).
struct GaussianDraws {
    std::vector<double> eta;
    std::vector<double> zeta;
    SeedLineage lineage;

    std::size_t size() const noexcept { return eta.size(); }
};

// Draws n values per stream from std::mt19937_64 engines seeded by
// derive_stream_seed, transformed by std::normal_distribution.
GaussianDraws make_draws(const SeedLineage& lineage, std::size_t n);

}  // namespace hestonlab
