#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "qseal/exact.hpp"
#include "qseal/seal.hpp"
#include "qseal/states.hpp"

namespace qseal {

enum class Execution { kParallel, kSerial };

// Hilbert-Schmidt distance between the bit-0 and bit-1 sealing ensembles in
// closed form:
//
//   d^2 = 2 C(n,k) sum_{j<k} C(n-k,j) C(k,j) 2^(n-k-j) / [C(n,k) 2^(n-k)]^2
//
// Exact; requires 1 <= k and 2k <= n.
Rational hs_distance_formula(std::size_t n, std::size_t k);

// 2^-((n-k)-1), the exponential upper bound on hs_distance_formula.
Rational hs_bound(std::size_t n, std::size_t k);

// Uniform mixture over every placement of k |b> code qubits and every |+>/|->
// assignment of the remaining n-k qubits. Because |+><+| + |-><-| = I the
// seal assignments are summed in closed form, one product term per placement.
DensityMatrix build_rho(unsigned b, std::size_t n, std::size_t k, std::size_t cap = oracle_cap(),
                        Execution exec = Execution::kParallel);

// Tr[(rho_0 - rho_1)^dagger (rho_0 - rho_1)] by dense arithmetic.
double hs_distance_oracle(std::size_t n, std::size_t k, std::size_t cap = oracle_cap(),
                          Execution exec = Execution::kParallel);

struct DistanceReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Rational d2_formula;
  std::optional<double> d2_oracle;
  Rational bound;
  bool bound_satisfied = false;

  std::optional<double> oracle_error() const;
};

DistanceReport distance_report(std::size_t n, std::size_t k, bool with_oracle, std::size_t cap = oracle_cap());

// C(n, m) == C(n-m, m) + sum_{j<m} C(n-m, j) C(m, j), exact; requires 2m <= n.
bool binomial_identity_check(std::size_t n, std::size_t m);

// Encodings of the opposite bit that overlap one fixed encoding:
// C(n-k, k) 2^k. Requires k <= n - k.
BigInt count_nonorthogonal_encodings(std::size_t n, std::size_t k);

// Single-qubit cheat success without detection: (3/4)(k/n) + 1/4.
Rational p_cheat(std::size_t k, std::size_t n);

// 1 - 2^-r
Rational detection_probability(std::size_t r);

// (n - k)/2: expected number of seal qubits whose computational outcome
// disagrees with the sealed bit.
Rational expected_known_seal_coordinates(const SealParams& params);

// True iff rho_0 and rho_1 have mutually orthogonal supports, i.e.
// Tr[rho_0 rho_1] == 0. Any 1 <= k <= n is accepted, so both the majority
// (k > n/2) and minority encodings can be probed.
bool orthogonality_witness(std::size_t n, std::size_t k, std::size_t cap = oracle_cap());

}  // namespace qseal
