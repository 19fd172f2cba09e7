#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qseal/exact.hpp"
#include "qseal/random.hpp"
#include "qseal/states.hpp"

namespace qseal {

// Register length n, code-qubit count k and sender-verification sample size
// r. The code fraction is always the exact ratio k/n.
struct SealParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;

  std::size_t seal_count() const noexcept { return n - k; }
  Rational fraction() const { return Rational(static_cast<unsigned long>(k), static_cast<unsigned long>(n)); }

  friend bool operator==(const SealParams&, const SealParams&) = default;
};

struct ValidationReport {
  // All constraints, statistical thresholds included.
  bool ok = false;
  // Only the hard constraints: n >= 1, 1 <= k, 2k < n, r <= n - k.
  bool structurally_valid = false;
  // n0 = 2(1 - f)/f^2. Zero when k == 0 (undefined).
  Rational n0;
  // f0 = (sqrt(2n + 1) - 1)/n. `f0_exact` is set when 2n + 1 is a perfect
  // square.
  double f0 = 0.0;
  std::optional<Rational> f0_exact;
  std::vector<std::string> messages;
};

ValidationReport validate_params(const SealParams& params);

// Throws InvalidParams unless the hard constraints hold. The n0/f0
// thresholds are advisory here; callers that want them enforced check
// `validate_params(...).ok`.
void require_structural(const SealParams& params);

// Smallest register length n with k = f n integral that passes every check in
// validate_params, for the exact fraction f = numerator/denominator < 1/2.
std::size_t minimum_valid_length(std::size_t numerator, std::size_t denominator);

// The sealer's secret.
struct PreparationRecord {
  std::size_t n = 0;
  unsigned code_bit = 0;
  std::vector<Position> code_positions;      // sorted
  std::map<Position, unsigned> seal_eigenbits;  // diagonal eigenbit per seal position

  std::vector<Position> seal_positions() const;
  bool is_code_position(Position p) const;

  friend bool operator==(const PreparationRecord&, const PreparationRecord&) = default;
};

struct SealedBit {
  QubitRegister reg;
  PreparationRecord record;
};

// Encodes b into n qubits with k uniformly placed |b> code qubits and random
// |+>/|-> seal qubits. Accepts any 0 <= k <= n so that parameter points
// outside the modified scheme (for instance the original f = 2/3 majority
// encoding) can be simulated.
SealedBit prepare_encoding(unsigned b, std::size_t n, std::size_t k, RandomSource& rng);

// prepare_encoding after require_structural.
SealedBit seal_bit(unsigned b, const SealParams& params, RandomSource& rng);

enum class TiePolicy { kFail, kCoin };

struct ReadResult {
  std::optional<unsigned> bit;  // empty on a tie under TiePolicy::kFail
  std::size_t votes_for_0 = 0;
  std::size_t votes_for_1 = 0;
  std::vector<unsigned> outcomes;  // per position, position 1 first

  bool tie() const noexcept { return votes_for_0 == votes_for_1; }
};

// Measures every qubit in the computational basis (collapsing `reg` in place)
// and takes the majority. Prefer odd n: even n admits ties.
ReadResult read_bit(QubitRegister& reg, RandomSource& rng, TiePolicy policy = TiePolicy::kFail);

// n (1/2 + f/2)
Rational expected_correct_votes(const SealParams& params);

// Exact probability that the majority vote returns the sealed bit.
Rational read_success_probability(const SealParams& params, TiePolicy policy = TiePolicy::kFail);

struct VerifyReport {
  bool intact = true;
  std::vector<Position> checked;
  std::vector<Position> mismatches;
};

// Measures r distinct, uniformly chosen seal positions in the diagonal basis
// and compares against the record. The checked qubits collapse.
VerifyReport sender_verify(QubitRegister& reg, const PreparationRecord& record, std::size_t r,
                           RandomSource& rng);

struct VerifierCredential {
  std::string verifier_id;
  std::map<Position, unsigned> expected;  // coordinate -> diagonal eigenbit

  std::vector<Position> coords() const;

  friend bool operator==(const VerifierCredential&, const VerifierCredential&) = default;
};

// Pairwise-disjoint credentials of the requested sizes, whose union must stay
// a proper subset of the seal positions. Ids are "v1", "v2", ...
std::vector<VerifierCredential> issue_credentials(const PreparationRecord& record,
                                                  std::span<const std::size_t> sizes, RandomSource& rng);

// Measures every credential coordinate in the diagonal basis. Code qubits are
// never touched.
VerifyReport verifier_verify(QubitRegister& reg, const VerifierCredential& credential, RandomSource& rng);

}  // namespace qseal
