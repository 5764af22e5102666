#include "eiscomb/half.hpp"

#include <charconv>
#include <stdexcept>

namespace eiscomb {

std::int64_t Half::as_integer() const {
  if (!is_integer()) throw std::domain_error("half-integer " + str() + " is not an integer");
  return twice_ / 2;
}

std::string Half::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [p, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || first == s.data() + s.size())
    throw std::invalid_argument("not a half-integer: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Half Half::parse(std::string_view s) {
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(s.substr(0, slash), s);
    auto den = parse_int(s.substr(slash + 1), s);
    if (den == 1) return Half(num);
    if (den == 2) return from_twice(num);
    throw std::invalid_argument("denominator must be 1 or 2: '" + std::string(s) + "'");
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto frac = s.substr(dot + 1);
    auto ip = s.substr(0, dot);
    bool neg = !ip.empty() && ip.front() == '-';
    std::int64_t i = (ip.empty() || ip == "-" || ip == "+") ? 0 : parse_int(ip, s);
    std::int64_t t = 2 * (i < 0 ? -i : i);
    if (frac == "5") {
      t += 1;
    } else if (!(frac.empty() || frac.find_first_not_of('0') == std::string_view::npos)) {
      throw std::invalid_argument("not a half-integer: '" + std::string(s) + "'");
    }
    return from_twice(neg ? -t : t);
  }
  return Half(parse_int(s, s));
}

}  // namespace eiscomb
