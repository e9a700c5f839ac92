#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fano {

struct GroebnerTimeout : std::runtime_error {
    GroebnerTimeout(std::uint64_t pairs_done, std::size_t basis_size)
        : std::runtime_error("groebner budget exceeded after " + std::to_string(pairs_done) +
                             " pairs (partial basis size " + std::to_string(basis_size) + ")"),
          pairs_done(pairs_done),
          basis_size(basis_size) {}
    std::uint64_t pairs_done;
    std::size_t basis_size;
};

/// Per-run resource budget. A run that exceeds it throws; partial results are
/// never reported as bases.
class Budget {
  public:
    Budget() : Budget(600.0) {}
    explicit Budget(double seconds, std::uint64_t max_pairs = UINT64_MAX)
        : deadline_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                           std::chrono::duration<double>(seconds))),
          max_pairs_(max_pairs) {}

    void check(std::uint64_t pairs_done, std::size_t basis_size) const {
        if (pairs_done > max_pairs_ || ((pairs_done & 0x3f) == 0 && std::chrono::steady_clock::now() > deadline_))
            throw GroebnerTimeout(pairs_done, basis_size);
    }

  private:
    std::chrono::steady_clock::time_point deadline_;
    std::uint64_t max_pairs_;
};

}  // namespace fano
