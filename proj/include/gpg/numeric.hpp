#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gpg {

bool is_prime(std::uint64_t n);

// (prime, exponent) pairs in increasing prime order; empty for n = 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n);

// p when n = p^k with k >= 1, otherwise nullopt.
std::optional<std::uint64_t> prime_power_base(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace gpg
