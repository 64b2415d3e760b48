#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "isingpair/classify/independence.hpp"

namespace isingpair {

/// Reduced fractions p/q in [lo, hi] with q ≤ bound, ascending.
std::vector<Rational> farey_values(int bound, const Rational& lo, const Rational& hi);

struct ScanReport {
  int bound = 0;
  std::size_t values_per_index = 0;  // grid values in [0, 1/3]
  std::size_t values_total = 0;      // grid values in [0, 1]
  std::uint64_t candidates = 0;      // sequences evaluated
  std::uint64_t filtered = 0;        // sequences with some λ_m > 1/3
  std::uint64_t violations = 0;      // det A ≤ 0
  std::uint64_t m1_negative = 0;
  std::uint64_t m2_negative = 0;
  Rational min_det;
  Rational min_m1;
  Rational min_m2;
  std::array<Rational, 6> min_det_witness{};
  std::uint64_t crosschecked = 0;
  std::uint64_t crosscheck_failures = 0;
};

/// The certificate for one grid point, or nullopt when the sequence fails
/// the λ bounds and would be counted as filtered.
std::optional<MuMatrix> scan_candidate(std::span<const Rational> lambdas);

/// Enumerates every (λ_1, …, λ_6) with entries on the Farey grid of the given
/// denominator bound. workers = 0 picks the hardware concurrency. Throws
/// std::invalid_argument when bound < 2 or bound > 28 (the 128-bit kernel's
/// range; the grid there already has ~10^14 points).
ScanReport infeasibility_scan(int bound, unsigned workers = 0);

nlohmann::json to_json(const ScanReport& report);
nlohmann::json to_json(const MuMatrix& m);

}  // namespace isingpair
