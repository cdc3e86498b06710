#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace chatelet {

// Primes up to and including `limit`, by plain Eratosthenes. Meant for
// small tables (trial division, root-counting oracles).
std::vector<uint32_t> primes_up_to(uint32_t limit);

// Segmented prime iterator: visits every prime p <= limit in increasing
// order using O(sqrt(limit) + segment) memory. Used for the Euler-product
// and membership-probe scans, which can run to 10^6 and beyond.
class SegmentedPrimeSieve {
public:
    explicit SegmentedPrimeSieve(uint64_t limit, uint64_t segment_size = 1u << 16);

    // Calls fn(p) for each prime p <= limit; stops early if fn returns false.
    void for_each(const std::function<bool(uint64_t)>& fn) const;

    uint64_t limit() const { return limit_; }

private:
    uint64_t limit_;
    uint64_t segment_size_;
    std::vector<uint32_t> base_primes_;  // primes up to sqrt(limit)
};

}  // namespace chatelet
