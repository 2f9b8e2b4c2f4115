#include "semigroup/families.hpp"

#include <array>
#include <string>
#include <utility>

#include "semigroup/errors.hpp"

namespace semigroup {

namespace {

constexpr std::array<std::pair<FamilyName, std::string_view>, 8> kNames{{
    {FamilyName::mersenne, "mersenne"},
    {FamilyName::thabit, "thabit"},
    {FamilyName::gu_ze_tang, "gu-ze-tang"},
    {FamilyName::song_gt, "song-gt"},
    {FamilyName::liu_xin, "liu-xin"},
    {FamilyName::repunit, "repunit"},
    {FamilyName::gu_ze, "gu-ze"},
    {FamilyName::thabit_base_b, "thabit-base-b"},
}};

[[noreturn]] void bound_error(FamilyName name, const std::string& what) {
  throw InvalidInput(std::string(to_string(name)) + ": " + what);
}

long need(FamilyName name, const std::optional<long>& value, const char* param, long minimum) {
  if (!value) bound_error(name, std::string("missing parameter ") + param);
  if (*value < minimum) {
    bound_error(name, std::string(param) + " >= " + std::to_string(minimum) + " required, got " +
                          std::to_string(*value));
  }
  return *value;
}

Integer need_big(FamilyName name, const std::optional<Integer>& value, const char* param,
                 long minimum) {
  if (!value) bound_error(name, std::string("missing parameter ") + param);
  if (*value < minimum) {
    bound_error(name, std::string(param) + " >= " + std::to_string(minimum) + " required, got " +
                          to_string(*value));
  }
  return *value;
}

Integer two_pow(long e) { return pow(Integer(2), static_cast<unsigned long>(e)); }

FamilyParams finish(FamilyName name, FamilyParams p) {
  try {
    validate(p);
  } catch (const InvalidInput& e) {
    bound_error(name, e.what());
  }
  return p;
}

}  // namespace

std::string_view to_string(FamilyName name) {
  for (const auto& [n, text] : kNames) {
    if (n == name) return text;
  }
  return "unknown";
}

std::optional<FamilyName> parse_family_name(std::string_view text) {
  for (const auto& [n, t] : kNames) {
    if (t == text) return n;
  }
  return std::nullopt;
}

FamilyParams resolve(const FamilySpec& spec) {
  const auto name = spec.name;
  const auto& args = spec.args;
  switch (name) {
    case FamilyName::mersenne: {
      long n = need(name, args.n, "n", 2);
      return finish(name, {two_pow(n) - 1, 2, 1, static_cast<std::size_t>(n - 1)});
    }
    case FamilyName::thabit: {
      long n = need(name, args.n, "n", 1);
      return finish(name, {3 * two_pow(n) - 1, 2, 1, static_cast<std::size_t>(n + 1)});
    }
    case FamilyName::gu_ze_tang: {
      long n = need(name, args.n, "n", 1);
      long m = need(name, args.m, "m", 2);
      if (n < 62 && m > (1L << n)) {
        bound_error(name, "m <= 2^n required, got m=" + std::to_string(m) +
                              ", n=" + std::to_string(n));
      }
      return finish(name, {(two_pow(m) - 1) * two_pow(n) - 1, 2, 1,
                           static_cast<std::size_t>(n + m - 1)});
    }
    case FamilyName::song_gt: {
      long n = need(name, args.n, "n", 0);
      long m = need(name, args.m, "m", 2);
      long delta = n == 0 ? 1 : (m <= n ? m : m - 1);
      return finish(name, {(two_pow(m) + 1) * two_pow(n) - (two_pow(m) - 1), 2, two_pow(m) - 1,
                           static_cast<std::size_t>(n + delta)});
    }
    case FamilyName::liu_xin: {
      long m = need(name, args.m, "m", 1);
      long k = need(name, args.k, "k", 3);
      Integer d = args.d ? need_big(name, args.d, "d", 1) : Integer(1);
      return finish(name, {m * (two_pow(k) - 1) + two_pow(k - 1) - 1, 2, d,
                           static_cast<std::size_t>(k)});
    }
    case FamilyName::repunit: {
      Integer b = need_big(name, args.b, "b", 2);
      long n = need(name, args.n, "n", 2);
      return finish(name, {repunit(b, static_cast<unsigned long>(n)), b, 1,
                           static_cast<std::size_t>(n - 1)});
    }
    case FamilyName::gu_ze: {
      Integer b = need_big(name, args.b, "b", 2);
      long n = need(name, args.n, "n", 1);
      return finish(name, {pow(b, static_cast<unsigned long>(n + 1)) +
                               repunit(b, static_cast<unsigned long>(n)),
                           b, 1, static_cast<std::size_t>(n + 1)});
    }
    case FamilyName::thabit_base_b: {
      Integer b = need_big(name, args.b, "b", 2);
      long n = need(name, args.n, "n", 1);
      return finish(name, {(b + 1) * pow(b, static_cast<unsigned long>(n)) - 1, b, b - 1,
                           static_cast<std::size_t>(n + 1)});
    }
  }
  throw InvalidInput("unknown family");
}

const std::vector<FamilyEntry>& catalog() {
  static const std::vector<FamilyEntry> entries = [] {
    auto n_from = [](long lo) { return ParamBound{"n", lo, "", true}; };
    auto b_from = [] { return ParamBound{"b", 2, "", true}; };
    auto args = [](std::optional<long> n, std::optional<long> m, std::optional<long> k,
                   std::optional<Integer> b) {
      FamilyArgs a;
      a.n = n;
      a.m = m;
      a.k = k;
      a.b = std::move(b);
      return a;
    };
    std::vector<FamilyEntry> out;
    out.push_back({FamilyName::mersenne, "a=2^n-1, b=2, d=1, k=n-1", {n_from(2)}, args(2, {}, {}, {})});
    out.push_back({FamilyName::thabit, "a=3*2^n-1, b=2, d=1, k=n+1", {n_from(1)}, args(1, {}, {}, {})});
    out.push_back({FamilyName::gu_ze_tang,
                   "a=(2^m-1)*2^n-1, b=2, d=1, k=n+m-1",
                   {n_from(1), ParamBound{"m", 2, "m <= 2^n", true}},
                   args(1, 2, {}, {})});
    out.push_back({FamilyName::song_gt,
                   "a=(2^m+1)*2^n-(2^m-1), b=2, d=2^m-1, k=n+delta",
                   {n_from(0),
                    ParamBound{"m", 2, "delta = 1 if n = 0; m if 0 < n and m <= n; m-1 if 0 < n < m",
                               true}},
                   args(0, 2, {}, {})});
    out.push_back({FamilyName::liu_xin,
                   "a=m*(2^k-1)+2^(k-1)-1, b=2, d free (default 1), k",
                   {ParamBound{"m", 1, "", true}, ParamBound{"k", 3, "", true},
                    ParamBound{"d", 1, "gcd(a, d) = 1", false}},
                   args({}, 1, 3, {})});
    out.push_back({FamilyName::repunit,
                   "a=(b^n-1)/(b-1), b, d=1, k=n-1",
                   {b_from(), n_from(2)},
                   args(2, {}, {}, Integer(2))});
    out.push_back({FamilyName::gu_ze,
                   "a=b^(n+1)+(b^n-1)/(b-1), b, d=1, k=n+1",
                   {b_from(), n_from(1)},
                   args(1, {}, {}, Integer(2))});
    out.push_back({FamilyName::thabit_base_b,
                   "a=(b+1)*b^n-1, b, d=b-1, k=n+1",
                   {b_from(), n_from(1)},
                   args(1, {}, {}, Integer(2))});
    return out;
  }();
  return entries;
}

}  // namespace semigroup
