#include "qseal/analysis.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "qseal/error.hpp"
#include "qseal/kernels.hpp"

namespace qseal {
namespace {

void require_shape(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k > n) {
    throw Error(ErrorCode::kInvalidShape,
                "need 1 <= k and 2k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

void require_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "n = " + std::to_string(n) + " exceeds dense oracle cap " + std::to_string(cap));
  }
}

// Advances `combo` (strictly increasing, values < n) to the next combination
// in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t i = k; i-- > 0;) {
    if (combo[i] < n - k + i) {
      ++combo[i];
      for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Rational hs_distance_formula(std::size_t n, std::size_t k) {
  require_shape(n, k);
  const std::size_t seals = n - k;
  BigInt sum = 0;
  for (std::size_t j = 0; j < k; ++j) sum += binomial(seals, j) * binomial(k, j) * pow2(seals - j);
  const BigInt placements = binomial(n, k);
  const BigInt norm = placements * pow2(seals);
  Rational d2(BigInt(2) * placements * sum, norm * norm);
  d2.canonicalize();
  return d2;
}

Rational hs_bound(std::size_t n, std::size_t k) {
  require_shape(n, k);
  Rational bound(BigInt(1), pow2(n - k - 1));
  bound.canonicalize();
  return bound;
}

DensityMatrix build_rho(unsigned b, std::size_t n, std::size_t k, std::size_t cap, Execution exec) {
  require_cap(n, cap);
  if (k > n || b > 1) throw Error(ErrorCode::kInvalidShape, "need k <= n and b in {0,1}");
  DensityMatrix rho(n);
  // The 2^(n-k) seal assignments of one placement sum to I on the seal
  // qubits, so each placement is one term (1/C(n,k)) |b><b|^k (x) (I/2)^(n-k).
  const double weight = 1.0 / binomial(n, k).get_d();
  const Matrix2 code = projector(Qubit{Axis::kComputational, b});
  const Matrix2 half_identity{0.5, 0.0, 0.0, 0.5};
  std::vector<std::size_t> combo(k);
  for (std::size_t i = 0; i < k; ++i) combo[i] = i;
  std::vector<Matrix2> factors(n);
  do {
    std::fill(factors.begin(), factors.end(), half_identity);
    for (std::size_t idx : combo) factors[idx] = code;
    if (exec == Execution::kParallel) {
      kernels::accumulate_product(factors, weight, rho);
    } else {
      kernels::serial::accumulate_product(factors, weight, rho);
    }
  } while (next_combination(combo, n));
  return rho;
}

double hs_distance_oracle(std::size_t n, std::size_t k, std::size_t cap, Execution exec) {
  const DensityMatrix rho0 = build_rho(0, n, k, cap, exec);
  const DensityMatrix rho1 = build_rho(1, n, k, cap, exec);
  return exec == Execution::kParallel ? kernels::hs_distance_squared(rho0, rho1)
                                      : kernels::serial::hs_distance_squared(rho0, rho1);
}

std::optional<double> DistanceReport::oracle_error() const {
  if (!d2_oracle) return std::nullopt;
  return std::abs(d2_formula.get_d() - *d2_oracle);
}

DistanceReport distance_report(std::size_t n, std::size_t k, bool with_oracle, std::size_t cap) {
  DistanceReport report;
  report.n = n;
  report.k = k;
  report.d2_formula = hs_distance_formula(n, k);
  report.bound = hs_bound(n, k);
  report.bound_satisfied = report.d2_formula < report.bound;
  if (with_oracle) report.d2_oracle = hs_distance_oracle(n, k, cap);
  return report;
}

bool binomial_identity_check(std::size_t n, std::size_t m) {
  if (2 * m > n) throw Error(ErrorCode::kInvalidShape, "need 2m <= n");
  BigInt rhs = binomial(n - m, m);
  for (std::size_t j = 0; j < m; ++j) rhs += binomial(n - m, j) * binomial(m, j);
  return binomial(n, m) == rhs;
}

BigInt count_nonorthogonal_encodings(std::size_t n, std::size_t k) {
  if (k > n || k > n - k) throw Error(ErrorCode::kInvalidShape, "need k <= n - k");
  return binomial(n - k, k) * pow2(k);
}

Rational p_cheat(std::size_t k, std::size_t n) {
  if (n < 1 || k > n) throw Error(ErrorCode::kInvalidParams, "need n >= 1 and k <= n");
  Rational p = Rational(3UL * k, 4UL * n) + Rational(1, 4);
  p.canonicalize();
  return p;
}

Rational detection_probability(std::size_t r) {
  Rational p = 1 - Rational(BigInt(1), pow2(r));
  p.canonicalize();
  return p;
}

Rational expected_known_seal_coordinates(const SealParams& params) {
  if (params.k > params.n) throw Error(ErrorCode::kInvalidParams, "need k <= n");
  Rational out(static_cast<unsigned long>(params.n - params.k), 2UL);
  out.canonicalize();
  return out;
}

bool orthogonality_witness(std::size_t n, std::size_t k, std::size_t cap) {
  if (n < 1 || k < 1 || k > n) throw Error(ErrorCode::kInvalidShape, "need 1 <= k <= n");
  require_cap(n, cap);
  const DensityMatrix rho0 = build_rho(0, n, k, cap);
  const DensityMatrix rho1 = build_rho(1, n, k, cap);
  return std::abs(kernels::trace_product(rho0, rho1)) <= 1e-12;
}

}  // namespace qseal
