#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace fewcos {

// Exact reduced fraction with positive denominator.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool operator==(const Rat&) const = default;
  auto operator<=>(const Rat& o) const {
    return num * o.den <=> o.num * den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace fewcos
