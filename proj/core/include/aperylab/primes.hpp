#pragma once

#include <cstdint>
#include <vector>

namespace aperylab {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi && n >= lo; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

}  // namespace aperylab
