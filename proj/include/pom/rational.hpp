#ifndef POM_RATIONAL_HPP
#define POM_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "pom/error.hpp"

namespace pom {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "p/q" in lowest terms, q > 0, sign on p; zero is "0/1".
inline std::string to_canonical(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Inverse of to_canonical; anything else (including "2/4", "1", "+1/2",
/// "-0/1", "1/-2") is rejected.
inline Rational parse_canonical(std::string_view s) {
  auto bad = [&] { return DomainError("non-canonical rational \"" + std::string(s) + "\""); };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) throw bad();
  std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
  auto digits_ok = [](std::string_view d) {
    if (d.empty() || (d.size() > 1 && d.front() == '0')) return false;
    for (char c : d)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!digits_ok(num) || !digits_ok(den)) throw bad();
  BigInt p{std::string(num)}, q{std::string(den)};
  if (q == 0 || (negative && p == 0)) throw bad();
  if (gcd(p, q) != 1) throw bad();
  return Rational(negative ? BigInt(-p) : p, q);
}

/// 2⁻ⁿ
inline Rational dyadic(unsigned n) { return Rational(BigInt(1), BigInt(1) << n); }

}  // namespace pom

#endif  // POM_RATIONAL_HPP
