#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qseal/exact.hpp"
#include "qseal/random.hpp"
#include "qseal/seal.hpp"

namespace qseal {

struct AttackOutcome {
  std::optional<unsigned> guessed_bit;  // empty when a full read ties
  std::vector<Position> measured_positions;
  std::vector<unsigned> outcomes;  // parallel to measured_positions
  QubitRegister register_after;
};

// Reads the whole register in the computational basis; the guess is the
// majority (no guess on a tie).
AttackOutcome full_measure_attack(QubitRegister reg, RandomSource& rng);

// Measures one uniformly chosen qubit in the computational basis and guesses
// its outcome. The measured qubit is forwarded collapsed, not re-prepared.
AttackOutcome single_qubit_attack(QubitRegister reg, RandomSource& rng);

// Coordinates that returned the minority outcome of a full read. Empty on a
// tie. Throws NotAFullRead unless all n positions were measured.
std::vector<Position> known_seal_coordinates(const AttackOutcome& outcome, const SealParams& params);

enum class Strategy { kFullMeasure, kSingleQubit };

struct VerificationMode {
  enum class Kind { kSenderAll, kSenderR, kCredential };

  Kind kind = Kind::kSenderAll;
  std::size_t r = 0;
  std::vector<std::size_t> credential_sizes;

  static VerificationMode sender_all() { return {Kind::kSenderAll, 0, {}}; }
  static VerificationMode sender_r(std::size_t r) { return {Kind::kSenderR, r, {}}; }
  static VerificationMode credentials(std::vector<std::size_t> sizes) {
    return {Kind::kCredential, 0, std::move(sizes)};
  }
};

struct AttackStats {
  std::uint64_t trials = 0;
  std::uint64_t correct = 0;
  std::uint64_t detected = 0;
  std::uint64_t undetected_success = 0;

  double guess_correct_rate() const noexcept;
  double detected_rate() const noexcept;
  double undetected_success_rate() const noexcept;
  // sqrt(p (1 - p) / trials) at the empirical rate
  double guess_correct_stderr() const noexcept;
  double detected_stderr() const noexcept;
  double undetected_success_stderr() const noexcept;

  AttackStats& operator+=(const AttackStats& other) noexcept;
  friend bool operator==(const AttackStats&, const AttackStats&) = default;
};

// Each trial t seals a uniform bit with RandomSource(seed).child(t), attacks,
// and verifies the attacked register. Parameter points with f >= 1/2 are
// accepted so the original majority encoding can be compared.
//
// With s > 1 the trial splits a uniform message bit into s XOR shares and
// attacks every share register; a trial then counts as correct only if every
// share guess is correct, and as detected if any share verification fails.
AttackStats run_trials(Strategy strategy, const SealParams& params, const VerificationMode& verification,
                       std::uint64_t trials, std::uint64_t seed, std::size_t s = 1);

// Exact rates for the harness above. Verification outcomes on collapsed
// qubits are fair coins independent of the computational outcomes, and the
// s shares are independent, which makes every rate a closed form.
struct AttackPrediction {
  Rational guess_correct;
  Rational detected;
  Rational undetected_success;
};

AttackPrediction predict_attack(Strategy strategy, const SealParams& params, const VerificationMode& verification,
                                std::size_t s = 1);

namespace serial {

AttackStats run_trials(Strategy strategy, const SealParams& params, const VerificationMode& verification,
                       std::uint64_t trials, std::uint64_t seed, std::size_t s = 1);

}  // namespace serial

}  // namespace qseal
