#include "chatelet/prime_sieve.hpp"

#include <algorithm>
#include <cmath>

#include "chatelet/checked.hpp"

namespace chatelet {

std::vector<uint32_t> primes_up_to(uint32_t limit) {
    std::vector<uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> comp(static_cast<size_t>(limit) + 1, false);
    for (uint64_t i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(static_cast<uint32_t>(i));
        for (uint64_t j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
}

SegmentedPrimeSieve::SegmentedPrimeSieve(uint64_t limit, uint64_t segment_size)
    : limit_(limit), segment_size_(std::max<uint64_t>(segment_size, 64)) {
    uint64_t root = isqrt_u64(limit);
    base_primes_ = primes_up_to(static_cast<uint32_t>(root));
}

void SegmentedPrimeSieve::for_each(const std::function<bool(uint64_t)>& fn) const {
    if (limit_ < 2) return;
    std::vector<bool> comp;
    for (uint64_t lo = 2; lo <= limit_; lo += segment_size_) {
        uint64_t hi = std::min(limit_, lo + segment_size_ - 1);
        comp.assign(static_cast<size_t>(hi - lo + 1), false);
        for (uint32_t p : base_primes_) {
            uint64_t pp = p;
            uint64_t start = std::max(pp * pp, (lo + pp - 1) / pp * pp);
            for (uint64_t j = start; j <= hi; j += pp) comp[j - lo] = true;
        }
        for (uint64_t n = lo; n <= hi; ++n) {
            if (!comp[n - lo]) {
                if (!fn(n)) return;
            }
        }
    }
}

}  // namespace chatelet
