#pragma once

// Named literature semigroups expressed as instances of A(a,b,d,k).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semigroup/closed_forms.hpp"

namespace semigroup {

enum class FamilyName {
  mersenne,
  thabit,
  gu_ze_tang,
  song_gt,
  liu_xin,
  repunit,
  gu_ze,
  thabit_base_b,
};

/// Kebab-case identifier used on the command line, e.g. "thabit-base-b".
std::string_view to_string(FamilyName name);
std::optional<FamilyName> parse_family_name(std::string_view text);

/// Free parameters; which ones a family reads is listed in its catalog entry.
struct FamilyArgs {
  std::optional<long> n;
  std::optional<long> m;
  std::optional<long> k;
  std::optional<Integer> b;
  std::optional<Integer> d;
};

struct FamilySpec {
  FamilyName name;
  FamilyArgs args;
};

struct ParamBound {
  std::string name;
  long minimum = 0;
  std::string note;  // extra constraint, empty when none
  bool required = true;
};

struct FamilyEntry {
  FamilyName name;
  std::string generators;  // formula for (a, b, d, k)
  std::vector<ParamBound> params;
  FamilyArgs minimal;      // smallest admissible arguments
};

/// Throws InvalidInput naming the violated bound.
FamilyParams resolve(const FamilySpec& spec);

const std::vector<FamilyEntry>& catalog();

}  // namespace semigroup
