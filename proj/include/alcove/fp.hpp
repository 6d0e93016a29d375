#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace alcove {

struct AlcoveError : std::runtime_error {
  explicit AlcoveError(const std::string& msg) : std::runtime_error(msg) {}
};

#define ALC_CHECK(cond, msg)                                                   \
  do {                                                                         \
    if (!(cond)) throw ::alcove::AlcoveError(msg);                             \
  } while (0)

using fp_t = uint32_t;
using FpVec = std::vector<fp_t>;

// Arithmetic in F_p for a small odd prime p. Values are kept in [0, p).
struct PrimeField {
  uint32_t p;

  explicit PrimeField(uint32_t prime) : p(prime) {
    ALC_CHECK(prime >= 2, "prime must be >= 2");
  }

  fp_t reduce(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<fp_t>(r);
  }
  fp_t add(fp_t a, fp_t b) const {
    fp_t s = a + b;
    return s >= p ? s - p : s;
  }
  fp_t sub(fp_t a, fp_t b) const { return a >= b ? a - b : a + p - b; }
  fp_t neg(fp_t a) const { return a == 0 ? 0 : p - a; }
  fp_t mul(fp_t a, fp_t b) const {
    return static_cast<fp_t>((static_cast<uint64_t>(a) * b) % p);
  }
  fp_t pow(fp_t a, uint64_t e) const {
    fp_t r = 1 % p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  fp_t inv(fp_t a) const {
    ALC_CHECK(a % p != 0, "division by zero in F_p");
    return pow(a % p, p - 2);  // p prime
  }
};

bool is_prime(uint32_t n);

}  // namespace alcove
