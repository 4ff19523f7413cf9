#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtt {

// Exact coefficient field. cpp_rational keeps values in lowest terms.
using Coefficient = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Coefficient sign_power(long long exponent) {
  return (exponent % 2 == 0) ? Coefficient{1} : Coefficient{-1};
}

inline BigInt factorial(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 2; i <= k; ++i) r *= i;
  return r;
}

// Always "p/q", also for integers ("3/1", "-1/1", "0/1").
inline std::string to_fraction_string(const Coefficient& c) {
  return boost::multiprecision::numerator(c).str() + "/" +
         boost::multiprecision::denominator(c).str();
}

inline Coefficient parse_coefficient(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty coefficient");
  auto valid_int = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : trim(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed coefficient '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  BigInt p(n), q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator");
  return Coefficient(p, q);
}

}  // namespace mtt
