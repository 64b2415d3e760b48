#include "isingpair/classify/scan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace isingpair {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

// Every 2^16-th candidate is recomputed with Rational arithmetic.
constexpr std::uint64_t kCrosscheckStride = 1u << 16;
// lcm(1..28) < 10^11 keeps 27·L³ products inside 128 bits.
constexpr int kScaledKernelMaxBound = 28;

std::int64_t to_i64(const std::string& s) { return std::stoll(s); }

Rational from_i128(i128 num, i128 den) {
  auto to_mpz = [](i128 v) {
    const bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
  };
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  return Rational(q);
}

struct Partial {
  std::uint64_t candidates = 0;
  std::uint64_t violations = 0;
  std::uint64_t m1_negative = 0;
  std::uint64_t m2_negative = 0;
  std::uint64_t crosschecked = 0;
  std::uint64_t crosscheck_failures = 0;
  bool have = false;
  i128 min_det = 0, min_m1 = 0, min_m2 = 0;  // scaled by 27·L³
  std::array<std::size_t, 6> witness{};
};

struct Kernel {
  std::vector<Rational> grid;
  std::vector<std::int64_t> scaled;  // grid value · L
  i128 L = 1;

  // 27·L³ times det A, M₁ and the regrouped M₂.
  void eval(const std::array<std::size_t, 6>& idx, i128& det, i128& m1, i128& m2) const {
    const i128 x1 = scaled[idx[0]], x2 = scaled[idx[1]], x3 = scaled[idx[2]];
    const i128 x4 = scaled[idx[3]], x5 = scaled[idx[4]], x6 = scaled[idx[5]];
    const i128 a = L - x2, b = L - x4, c = L - x6;
    const i128 x = x1 - x3, y = x2 - x4, z = x1 - x5;
    det = 27 * (a * b * c + 2 * x * y * z - a * z * z - b * y * y - c * x * x);
    m1 = 8 * L * L * L - 18 * L * (x * x + y * y + z * z) + 54 * x * y * z;
    m2 = 9 * (3 * a - 2 * L) * (b * c - z * z) + 3 * (3 * b - 2 * L) * (2 * L * c - 3 * y * y) +
         (3 * c - 2 * L) * (4 * L * L - 9 * x * x);
  }
};

std::array<Rational, 6> lambdas_at(const std::vector<Rational>& grid, const std::array<std::size_t, 6>& idx) {
  std::array<Rational, 6> out;
  for (std::size_t m = 0; m < 6; ++m) out[m] = grid[idx[m]];
  return out;
}

void note_min(Partial& p, i128 det, i128 m1, i128 m2, const std::array<std::size_t, 6>& idx) {
  if (!p.have) {
    p.have = true;
    p.min_det = det, p.min_m1 = m1, p.min_m2 = m2, p.witness = idx;
    return;
  }
  if (det < p.min_det) p.min_det = det, p.witness = idx;
  p.min_m1 = std::min(p.min_m1, m1);
  p.min_m2 = std::min(p.min_m2, m2);
}

Partial scan_slice(const Kernel& k, std::size_t first) {
  Partial p;
  const std::size_t g = k.grid.size();
  std::array<std::size_t, 6> idx{first, 0, 0, 0, 0, 0};
  for (;;) {
    i128 det, m1, m2;
    k.eval(idx, det, m1, m2);
    ++p.candidates;
    if (det <= 0) ++p.violations;
    if (m1 < 0) ++p.m1_negative;
    if (m2 < 0) ++p.m2_negative;
    if (m1 + m2 != det) ++p.crosscheck_failures;
    note_min(p, det, m1, m2, idx);
    if (p.candidates % kCrosscheckStride == 1) {
      const auto lam = lambdas_at(k.grid, idx);
      const MuMatrix cert = independence_certificate(lam);
      const i128 scale = 27 * k.L * k.L * k.L;
      ++p.crosschecked;
      if (cert.det != from_i128(det, scale)) ++p.crosscheck_failures;
    }
    std::size_t m = 5;
    while (m > 0 && ++idx[m] == g) idx[m--] = 0;
    if (m == 0) break;
  }
  return p;
}

std::uint64_t pow6(std::uint64_t v) {
  std::uint64_t r = 1;
  for (int i = 0; i < 6; ++i) r *= v;
  return r;
}

}  // namespace

std::vector<Rational> farey_values(int bound, const Rational& lo, const Rational& hi) {
  std::vector<Rational> out;
  for (int q = 1; q <= bound; ++q)
    for (int p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Rational r(p, q);
      if (r >= lo && r <= hi) out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<MuMatrix> scan_candidate(std::span<const Rational> lambdas) {
  if (lambdas.size() != 6) throw std::invalid_argument("lambda sequence needs lambda_1 ... lambda_6");
  for (const auto& l : lambdas)
    if (!in_scan_bounds(l)) return std::nullopt;
  return independence_certificate(lambdas);
}

ScanReport infeasibility_scan(int bound, unsigned workers) {
  if (bound < 2) throw std::invalid_argument("denominator bound must be at least 2");
  if (bound > kScaledKernelMaxBound)
    throw std::invalid_argument("denominator bound above " + std::to_string(kScaledKernelMaxBound) +
                                " overflows the scaled kernel");
  ScanReport report;
  report.bound = bound;
  Kernel k;
  k.grid = farey_values(bound, Rational(0), Rational(1, 3));
  report.values_per_index = k.grid.size();
  report.values_total = farey_values(bound, Rational(0), Rational(1)).size();
  report.filtered = pow6(report.values_total) - pow6(report.values_per_index);

  std::int64_t L = 1;
  for (const auto& v : k.grid) L = std::lcm(L, to_i64(v.denominator()));
  k.L = L;
  for (const auto& v : k.grid) k.scaled.push_back(to_i64(v.numerator()) * (L / to_i64(v.denominator())));

  const std::size_t slices = k.grid.size();
  std::vector<Partial> parts(slices);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(slices));
  auto run = [&](std::size_t s) { parts[s] = scan_slice(k, s); };
  if (workers <= 1) {
    for (std::size_t s = 0; s < slices; ++s) run(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t s = w; s < slices; s += workers) run(s);
      });
    for (auto& t : pool) t.join();
  }

  // Merge in grid order so ties resolve to the earliest sequence.
  std::optional<std::size_t> best;
  for (std::size_t s = 0; s < slices; ++s) {
    const Partial& p = parts[s];
    report.candidates += p.candidates;
    report.violations += p.violations;
    report.m1_negative += p.m1_negative;
    report.m2_negative += p.m2_negative;
    report.crosschecked += p.crosschecked;
    report.crosscheck_failures += p.crosscheck_failures;
  }
  // Minima are recomputed exactly from the per-slice witnesses.
  for (std::size_t s = 0; s < slices; ++s) {
    const MuMatrix cert = independence_certificate(lambdas_at(k.grid, parts[s].witness));
    if (!best || cert.det < report.min_det) {
      best = s;
      report.min_det = cert.det;
      report.min_det_witness = lambdas_at(k.grid, parts[s].witness);
    }
  }
  const i128 scale = 27 * k.L * k.L * k.L;
  i128 m1 = parts[0].min_m1, m2 = parts[0].min_m2;
  for (const auto& p : parts) m1 = std::min(m1, p.min_m1), m2 = std::min(m2, p.min_m2);
  report.min_m1 = from_i128(m1, scale);
  report.min_m2 = from_i128(m2, scale);
  return report;
}

nlohmann::json to_json(const ScanReport& r) {
  nlohmann::json witness = nlohmann::json::array();
  for (const auto& l : r.min_det_witness) witness.push_back(l.str());
  return nlohmann::json{{"bound", r.bound},
                        {"values_per_index", r.values_per_index},
                        {"candidates", r.candidates},
                        {"filtered", r.filtered},
                        {"violations", r.violations},
                        {"min_det", r.min_det.str()},
                        {"min_det_witness", witness},
                        {"min_m1", r.min_m1.str()},
                        {"min_m2", r.min_m2.str()},
                        {"m1_negative", r.m1_negative},
                        {"m2_negative", r.m2_negative},
                        {"crosschecked", r.crosschecked},
                        {"crosscheck_failures", r.crosscheck_failures}};
}

nlohmann::json to_json(const MuMatrix& m) {
  nlohmann::json lambdas = nlohmann::json::array();
  for (const auto& l : m.lambda_seq.values) lambdas.push_back(l.str());
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t i = 0; i < 3; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < 3; ++j) row.push_back(m.A(i, j).str());
    a.push_back(row);
  }
  return nlohmann::json{{"lambda", lambdas}, {"A", a},           {"m1", m.m1.str()},
                        {"m2", m.m2.str()},  {"det", m.det.str()}, {"verdict", verdict_name(m.verdict)}};
}

}  // namespace isingpair
