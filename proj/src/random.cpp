#include "hestonlab/random.hpp"

#include <random>

namespace hestonlab {
namespace {

std::vector<double> normal_stream(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 engine(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> out(n);
    for (double& v : out) v = normal(engine);
    return out;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_stream_seed(const SeedLineage& lineage, StreamTag tag) noexcept {
    std::uint64_t h = splitmix64(lineage.master_seed);
    h = splitmix64(h ^ splitmix64(lineage.replicate + 0x632be59bd9b4e019ULL));
    return splitmix64(h ^ static_cast<std::uint64_t>(tag));
}

GaussianDraws make_draws(const SeedLineage& lineage, std::size_t n) {
    GaussianDraws draws;
    draws.eta = normal_stream(derive_stream_seed(lineage, StreamTag::Eta), n);
    draws.zeta = normal_stream(derive_stream_seed(lineage, StreamTag::Zeta), n);
    draws.lineage = lineage;
    return draws;
}

}  // namespace hestonlab
