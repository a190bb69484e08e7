#include "gpg/numeric.hpp"

namespace gpg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> distinct_prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front().first;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace gpg
