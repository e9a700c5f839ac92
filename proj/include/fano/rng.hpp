#pragma once

#include <cstdint>
#include <random>
#include <string>

namespace fano {

/// Deterministic RNG stream. Streams for sub-tasks are derived from a master
/// seed and a label, so concurrent checks stay reproducible.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    static Rng derive(std::uint64_t master_seed, const std::string& label) {
        std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
        for (char ch : label) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ULL;
        }
        return Rng(splitmix(master_seed ^ h));
    }

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, p)
    std::uint32_t mod(std::uint32_t p) { return static_cast<std::uint32_t>(eng_() % p); }

    /// Uniform nonzero in [1, p)
    std::uint32_t nonzero_mod(std::uint32_t p) { return 1 + static_cast<std::uint32_t>(eng_() % (p - 1)); }

  private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }
    std::mt19937_64 eng_;
};

}  // namespace fano
