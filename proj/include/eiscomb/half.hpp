#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace eiscomb {

// Exact element of (1/2)Z. Stored as twice its value.
class Half {
 public:
  constexpr Half() = default;
  constexpr Half(std::int64_t v) : twice_(2 * v) {}  // NOLINT: integers embed implicitly

  static constexpr Half from_twice(std::int64_t t) {
    Half h;
    h.twice_ = t;
    return h;
  }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  std::int64_t as_integer() const;  // throws unless integral
  double to_double() const { return static_cast<double>(twice_) / 2.0; }

  constexpr Half operator-() const { return from_twice(-twice_); }
  constexpr Half& operator+=(Half o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr Half& operator-=(Half o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr Half operator+(Half a, Half b) { return a += b; }
  friend constexpr Half operator-(Half a, Half b) { return a -= b; }
  friend constexpr Half operator*(std::int64_t k, Half a) { return from_twice(k * a.twice_); }
  friend constexpr bool operator==(Half, Half) = default;
  friend constexpr auto operator<=>(Half, Half) = default;

  std::string str() const;
  // Accepts "3", "-2", "5/2", "-1/2", "1.5".
  static Half parse(std::string_view s);

 private:
  std::int64_t twice_ = 0;
};

constexpr Half abs(Half h) { return h.twice() < 0 ? -h : h; }
// k/2 for an integer k.
constexpr Half half_of(std::int64_t k) { return Half::from_twice(k); }

}  // namespace eiscomb
