#include "semigroup/core.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>

#include "semigroup/errors.hpp"

namespace semigroup {

namespace {

// Smallest generator per non-zero residue class; larger ones in the same class
// are dominated edges.
template <typename T>
std::vector<std::pair<std::size_t, T>> residue_edges(std::span<const T> weights,
                                                     std::span<const std::size_t> classes,
                                                     std::size_t modulus) {
  std::vector<std::optional<T>> best(modulus);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    std::size_t c = classes[i];
    if (c == 0) continue;
    if (!best[c] || weights[i] < *best[c]) best[c] = weights[i];
  }
  std::vector<std::pair<std::size_t, T>> edges;
  for (std::size_t c = 1; c < modulus; ++c) {
    if (best[c]) edges.emplace_back(c, *best[c]);
  }
  return edges;
}

template <typename T>
std::vector<T> shortest_paths(std::size_t modulus,
                              const std::vector<std::pair<std::size_t, T>>& edges) {
  std::vector<std::optional<T>> dist(modulus);
  std::vector<bool> settled(modulus, false);
  using Item = std::pair<T, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = T(0);
  queue.emplace(T(0), 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (settled[r]) continue;
    settled[r] = true;
    for (const auto& [step, weight] : edges) {
      std::size_t next = r + step;
      if (next >= modulus) next -= modulus;
      if (settled[next]) continue;
      T candidate = d + weight;
      if (!dist[next] || candidate < *dist[next]) {
        dist[next] = candidate;
        queue.emplace(candidate, next);
      }
    }
  }
  std::vector<T> out(modulus);
  for (std::size_t r = 0; r < modulus; ++r) {
    if (!dist[r]) throw ConsistencyError("residue " + std::to_string(r) + " unreachable");
    out[r] = *dist[r];
  }
  return out;
}

std::size_t checked_modulus(const Integer& least, std::size_t cap) {
  auto m = to_index(least, cap);
  if (!m) {
    throw OracleInfeasible("modulus " + to_string(least) + " exceeds the residue cap of " +
                           std::to_string(cap));
  }
  return *m;
}

// Apery minima as int64 when the largest one fits comfortably, so that
// differences and sums stay in range.
std::optional<std::vector<std::int64_t>> small_minima(const AperySet& ape) {
  constexpr std::int64_t kLimit = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> out;
  out.reserve(ape.modulus());
  for (const auto& n : ape.minima()) {
    auto v = to_int64(n);
    if (!v || *v > kLimit) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

std::size_t residue_of(std::int64_t n, std::size_t a) {
  return static_cast<std::size_t>(n % static_cast<std::int64_t>(a));
}

std::size_t residue_of(const Integer& n, std::size_t a) {
  return floor_mod(n, Integer(static_cast<unsigned long>(a))).get_ui();
}

template <typename T>
std::vector<std::size_t> maximal_indices(const std::vector<T>& minima) {
  const std::size_t a = minima.size();
  auto member = [&](const T& n) { return n >= 0 && n >= minima[residue_of(n, a)]; };
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a; ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < a && maximal; ++j) {
      if (j == i || minima[j] <= minima[i]) continue;
      if (member(T(minima[j] - minima[i]))) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

}  // namespace

GeneratorList::GeneratorList(std::vector<Integer> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw InvalidInput("generator list is empty");
  for (const auto& g : elements_) {
    if (sgn(g) <= 0) throw InvalidInput("generator " + to_string(g) + " is not positive");
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  Integer g = 0;
  for (const auto& e : elements_) g = gcd(g, e);
  if (g != 1) throw InvalidInput("generators have gcd " + to_string(g) + ", expected 1");
}

GeneratorList GeneratorList::parse(std::string_view csv) {
  std::vector<Integer> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    out.push_back(parse_integer(csv.substr(start, comma - start)));
    start = comma + 1;
  }
  return GeneratorList(std::move(out));
}

AperySet::AperySet(std::size_t modulus, std::vector<Integer> minima)
    : modulus_(modulus), minima_(std::move(minima)) {
  if (modulus_ == 0 || minima_.size() != modulus_) {
    throw ConsistencyError("Apery set needs exactly one minimum per residue");
  }
  if (minima_[0] != 0) throw ConsistencyError("Apery minimum of residue 0 must be 0");
  const Integer m(static_cast<unsigned long>(modulus_));
  for (std::size_t r = 0; r < modulus_; ++r) {
    if (sgn(minima_[r]) < 0 || floor_mod(minima_[r], m) != static_cast<unsigned long>(r)) {
      throw ConsistencyError("Apery minimum " + to_string(minima_[r]) + " is not in class " +
                             std::to_string(r));
    }
  }
}

std::string_view to_string(Engine engine) {
  return engine == Engine::oracle ? "oracle" : "closed-form";
}

AperySet apery_set(const GeneratorList& gens, const OracleOptions& options) {
  const std::size_t a = checked_modulus(gens.least(), options.residue_cap);
  const Integer modulus(static_cast<unsigned long>(a));
  const auto& elems = gens.elements();

  std::vector<std::size_t> classes;
  classes.reserve(elems.size());
  for (const auto& g : elems) classes.push_back(floor_mod(g, modulus).get_ui());

  // Shortest paths use at most a-1 edges, so (a-1) * max generator bounds every minimum.
  const Integer bound = Integer(static_cast<unsigned long>(a)) * elems.back();
  if (bound.fits_slong_p()) {
    std::vector<std::int64_t> weights;
    weights.reserve(elems.size());
    for (const auto& g : elems) weights.push_back(g.get_si());
    auto dist = shortest_paths<std::int64_t>(
        a, residue_edges<std::int64_t>(weights, classes, a));
    std::vector<Integer> minima;
    minima.reserve(a);
    for (auto v : dist) minima.emplace_back(static_cast<long>(v));
    return AperySet(a, std::move(minima));
  }
  auto dist = shortest_paths<Integer>(a, residue_edges<Integer>(elems, classes, a));
  return AperySet(a, std::move(dist));
}

Integer frobenius_from_apery(const AperySet& ape) {
  const auto& m = ape.minima();
  return *std::max_element(m.begin(), m.end()) - static_cast<unsigned long>(ape.modulus());
}

Integer genus_from_apery(const AperySet& ape) {
  const Integer a(static_cast<unsigned long>(ape.modulus()));
  Integer sum = 0;
  for (const auto& n : ape.minima()) sum += n;
  // sum/a - (a-1)/2 over the common denominator 2a
  Integer numerator = 2 * sum - a * (a - 1);
  Integer denominator = 2 * a;
  if (floor_mod(numerator, denominator) != 0) {
    throw ConsistencyError("genus is not integral; Apery set is corrupted");
  }
  Integer genus = numerator / denominator;
  if (sgn(genus) < 0) throw ConsistencyError("negative genus; Apery set is corrupted");
  return genus;
}

bool contains(const AperySet& ape, const Integer& n) {
  if (sgn(n) < 0) return false;
  const Integer a(static_cast<unsigned long>(ape.modulus()));
  const auto r = floor_mod(n, a).get_ui();
  return n >= ape[r];
}

std::vector<Integer> gaps(const AperySet& ape, const OracleOptions& options) {
  const Integer genus = genus_from_apery(ape);
  if (!to_index(genus, options.gap_cap)) {
    throw OracleInfeasible("genus " + to_string(genus) + " exceeds the gap cap of " +
                           std::to_string(options.gap_cap));
  }
  const Integer a(static_cast<unsigned long>(ape.modulus()));
  std::vector<Integer> out;
  out.reserve(genus.get_ui());
  for (const auto& n : ape.minima()) {
    for (Integer gap = n - a; sgn(gap) > 0; gap -= a) out.push_back(gap);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> pseudo_frobenius_from_apery(const AperySet& ape,
                                                 const OracleOptions& options) {
  checked_modulus(Integer(static_cast<unsigned long>(ape.modulus())), options.residue_cap);
  std::vector<std::size_t> maximal;
  if (auto small = small_minima(ape)) {
    maximal = maximal_indices(*small);
  } else {
    maximal = maximal_indices(ape.minima());
  }
  std::vector<Integer> out;
  out.reserve(maximal.size());
  for (auto i : maximal) out.push_back(ape[i] - static_cast<unsigned long>(ape.modulus()));
  std::sort(out.begin(), out.end());
  return out;
}

SemigroupReport report_from_apery(const AperySet& ape, Engine engine,
                                  const OracleOptions& options) {
  SemigroupReport report;
  report.frobenius = frobenius_from_apery(ape);
  report.genus = genus_from_apery(ape);
  report.pf = pseudo_frobenius_from_apery(ape, options);
  report.type = report.pf.size();
  report.engine = engine;
  if (report.pf.empty() || report.pf.back() != report.frobenius) {
    throw ConsistencyError("Frobenius number is not the largest pseudo-Frobenius number");
  }
  return report;
}

SemigroupReport oracle_report(const GeneratorList& gens, const OracleOptions& options) {
  return report_from_apery(apery_set(gens, options), Engine::oracle, options);
}

}  // namespace semigroup
