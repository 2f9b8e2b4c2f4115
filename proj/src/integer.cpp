#include "semigroup/integer.hpp"

#include "semigroup/errors.hpp"

namespace semigroup {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) throw InvalidInput("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw InvalidInput("not an integer: '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw InvalidInput("not an integer: '" + s + "'");
  }
  if (s[0] == '+') s.erase(s.begin());
  return Integer(s, 10);
}

std::string to_string(const Integer& value) { return value.get_str(10); }

std::optional<std::int64_t> to_int64(const Integer& value) {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  if (!value.fits_slong_p()) return std::nullopt;
  return static_cast<std::int64_t>(value.get_si());
}

std::optional<std::size_t> to_index(const Integer& value, std::size_t limit) {
  if (sgn(value) < 0) return std::nullopt;
  if (!value.fits_ulong_p()) return std::nullopt;
  unsigned long v = value.get_ui();
  if (v > limit) return std::nullopt;
  return static_cast<std::size_t>(v);
}

Integer gcd(const Integer& x, const Integer& y) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return out;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer floor_div(const Integer& x, const Integer& divisor) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
  return out;
}

Integer floor_mod(const Integer& x, const Integer& divisor) {
  Integer out;
  mpz_fdiv_r(out.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
  return out;
}

Integer repunit(const Integer& b, unsigned long i) {
  Integer num = pow(b, i) - 1;
  Integer den = b - 1;
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

}  // namespace semigroup
