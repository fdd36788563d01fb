#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfmin/errors.hpp"
#include "hopfmin/tolerances.hpp"

namespace hopfmin::detail {

/// Hash index over tuples of doubles quantized to 10⁻⁶ cells.  Lookups probe
/// neighbouring cells for components that sit near a rounding boundary, plus
/// the globally negated tuple (group elements are defined up to an overall
/// sign, and near-zero leading components can make the canonical sign choice
/// unstable).  Candidates must still be verified with an exact tolerance
/// comparison by the caller.
class quantized_lookup {
public:
  void insert(std::uint64_t tag, const std::vector<double>& v, int idx) {
    buckets_[hash_key(tag, round_all(v))].push_back(idx);
  }

  [[nodiscard]] std::vector<int> candidates(std::uint64_t tag, const std::vector<double>& v) const {
    std::vector<int> out;
    probe(tag, v, out);
    std::vector<double> neg(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) neg[c] = -v[c];
    probe(tag, neg, out);
    return out;
  }

private:
  static constexpr double scale = 1e6;   // six decimal digits
  static constexpr double margin = 0.2;  // boundary zone, in cells

  static std::vector<long long> round_all(const std::vector<double>& v) {
    std::vector<long long> r(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) r[c] = llround(v[c] * scale);
    return r;
  }

  static std::uint64_t hash_key(std::uint64_t tag, const std::vector<long long>& r) {
    std::uint64_t h = 1469598103934665603ull ^ tag;
    for (long long q : r) {
      h ^= static_cast<std::uint64_t>(q);
      h *= 1099511628211ull;
    }
    return h;
  }

  void probe(std::uint64_t tag, const std::vector<double>& v, std::vector<int>& out) const {
    // For each component near a cell boundary both roundings are possible;
    // enumerate every combination (capped — ambiguities are rare).
    std::vector<std::pair<long long, long long>> options(v.size());
    std::size_t combos = 1;
    for (std::size_t c = 0; c < v.size(); ++c) {
      const double s = v[c] * scale;
      const double lo = std::floor(s);
      const long long base = llround(s);
      if (std::abs(s - (lo + 0.5)) <= margin && combos <= 2048) {
        options[c] = {static_cast<long long>(lo), static_cast<long long>(lo) + 1};
        combos *= 2;
      } else {
        options[c] = {base, base};
      }
    }
    std::vector<long long> r(v.size());
    for (std::size_t mask = 0;; ++mask) {
      std::size_t bits = mask;
      bool valid = true;
      for (std::size_t c = 0; c < v.size(); ++c) {
        const bool two = options[c].first != options[c].second;
        r[c] = (two && (bits & 1)) ? options[c].second : options[c].first;
        if (two) bits >>= 1;
      }
      if (bits != 0) valid = false; // mask exceeded the ambiguous combinations
      if (valid) {
        auto it = buckets_.find(hash_key(tag, r));
        if (it != buckets_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
      }
      if (mask >= combos - 1) break;
    }
  }

  std::unordered_map<std::uint64_t, std::vector<int>> buckets_;
};

/// Breadth-first closure of the group generated by `generators`.
///
/// E must provide: default construction (identity), then(), canonical(),
/// approx_eq(other, eps).  key_fn maps an element to a (discrete tag,
/// continuous coordinates) pair for hashing; coordinates are taken from the
/// canonical representative.  Elements are stored in deterministic insertion
/// order (identity first).
/// @throws error{errc::closure_overflow} when the closure exceeds max_elements.
template <class E, class KeyFn>
std::vector<E> close_group(const std::vector<E>& generators, KeyFn&& key_fn,
                           std::size_t max_elements, double eps = tol::group) {
  std::vector<E> elements;
  quantized_lookup index;

  auto find = [&](const E& g) -> int {
    const auto [tag, v] = key_fn(g);
    for (int idx : index.candidates(tag, v))
      if (elements[static_cast<std::size_t>(idx)].approx_eq(g, eps)) return idx;
    return -1;
  };
  auto insert = [&](const E& g) {
    const auto [tag, v] = key_fn(g);
    index.insert(tag, v, static_cast<int>(elements.size()));
    elements.push_back(g);
  };

  insert(E{}.canonical());
  std::vector<std::size_t> frontier = {0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t ei : frontier) {
      for (const E& g : generators) {
        const E h = elements[ei].then(g).canonical();
        if (find(h) >= 0) continue;
        if (elements.size() >= max_elements)
          throw error(errc::closure_overflow, "group closure exceeded its element budget");
        next.push_back(elements.size());
        insert(h);
      }
    }
    frontier = std::move(next);
  }
  return elements;
}

} // namespace hopfmin::detail
