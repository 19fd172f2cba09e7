#include "qseal/adversary.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "qseal/error.hpp"
#include "qseal/sharing.hpp"

namespace qseal {
namespace {

double rate(std::uint64_t count, std::uint64_t trials) {
  return trials == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(trials);
}

double stderr_of(std::uint64_t count, std::uint64_t trials) {
  if (trials == 0) return 0.0;
  const double p = rate(count, trials);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

void check_harness_params(const SealParams& params, const VerificationMode& verification, std::uint64_t trials,
                          std::size_t s) {
  if (params.n < 1 || params.k < 1 || params.k > params.n) {
    throw Error(ErrorCode::kInvalidParams, "attack harness needs n >= 1 and 1 <= k <= n");
  }
  if (trials < 1) throw Error(ErrorCode::kInvalidParams, "trials must be at least 1");
  if (s < 1) throw Error(ErrorCode::kInvalidParams, "share count s must be at least 1");
  const std::size_t seals = params.n - params.k;
  if (verification.kind == VerificationMode::Kind::kSenderR && verification.r > seals) {
    throw Error(ErrorCode::kInvalidParams, "r exceeds the seal-qubit count");
  }
  if (verification.kind == VerificationMode::Kind::kCredential) {
    const std::size_t total =
        std::accumulate(verification.credential_sizes.begin(), verification.credential_sizes.end(), std::size_t{0});
    if (total >= seals) throw Error(ErrorCode::kInvalidParams, "credential sizes must sum below n - k");
  }
}

// Returns true if the verification noticed the attack.
bool verify_after(QubitRegister& reg, const PreparationRecord& record, const SealParams& params,
                  const VerificationMode& verification, RandomSource& rng) {
  switch (verification.kind) {
    case VerificationMode::Kind::kSenderAll:
      return !sender_verify(reg, record, params.n - params.k, rng).intact;
    case VerificationMode::Kind::kSenderR:
      return !sender_verify(reg, record, verification.r, rng).intact;
    case VerificationMode::Kind::kCredential: {
      bool detected = false;
      for (const VerifierCredential& cred : issue_credentials(record, verification.credential_sizes, rng)) {
        detected |= !verifier_verify(reg, cred, rng).intact;
      }
      return detected;
    }
  }
  return false;
}

AttackStats run_one_trial(Strategy strategy, const SealParams& params, const VerificationMode& verification,
                          std::size_t s, RandomSource rng) {
  const unsigned message_bit = rng.bit();
  const ShareSet shares = s == 1 ? ShareSet{{message_bit}} : split_bit(message_bit, s, rng);
  bool all_correct = true;
  bool any_detected = false;
  for (unsigned share : shares.shares) {
    SealedBit sealed = prepare_encoding(share, params.n, params.k, rng);
    AttackOutcome outcome = strategy == Strategy::kFullMeasure ? full_measure_attack(std::move(sealed.reg), rng)
                                                               : single_qubit_attack(std::move(sealed.reg), rng);
    all_correct &= outcome.guessed_bit.has_value() && *outcome.guessed_bit == share;
    any_detected |= verify_after(outcome.register_after, sealed.record, params, verification, rng);
  }
  AttackStats one;
  one.trials = 1;
  one.correct = all_correct ? 1 : 0;
  one.detected = any_detected ? 1 : 0;
  one.undetected_success = (all_correct && !any_detected) ? 1 : 0;
  return one;
}

}  // namespace

AttackOutcome full_measure_attack(QubitRegister reg, RandomSource& rng) {
  AttackOutcome out;
  const ReadResult read = read_bit(reg, rng, TiePolicy::kFail);
  out.guessed_bit = read.bit;
  out.measured_positions.resize(reg.size());
  std::iota(out.measured_positions.begin(), out.measured_positions.end(), Position{1});
  out.outcomes = read.outcomes;
  out.register_after = std::move(reg);
  return out;
}

AttackOutcome single_qubit_attack(QubitRegister reg, RandomSource& rng) {
  if (reg.empty()) throw Error(ErrorCode::kInvalidParams, "cannot attack an empty register");
  AttackOutcome out;
  const Position p = static_cast<Position>(rng.below(reg.size())) + 1;
  const unsigned o = reg.measure(p, Axis::kComputational, rng);
  out.guessed_bit = o;
  out.measured_positions = {p};
  out.outcomes = {o};
  out.register_after = std::move(reg);
  return out;
}

std::vector<Position> known_seal_coordinates(const AttackOutcome& outcome, const SealParams& params) {
  if (outcome.measured_positions.size() != params.n || outcome.outcomes.size() != params.n) {
    throw Error(ErrorCode::kNotAFullRead, "known seal coordinates need all n positions measured");
  }
  std::size_t ones = 0;
  for (unsigned o : outcome.outcomes) ones += o;
  const std::size_t zeros = params.n - ones;
  if (ones == zeros) return {};
  const unsigned minority = ones < zeros ? 1U : 0U;
  std::vector<Position> out;
  for (std::size_t i = 0; i < params.n; ++i) {
    if (outcome.outcomes[i] == minority) out.push_back(outcome.measured_positions[i]);
  }
  return out;
}

double AttackStats::guess_correct_rate() const noexcept { return rate(correct, trials); }
double AttackStats::detected_rate() const noexcept { return rate(detected, trials); }
double AttackStats::undetected_success_rate() const noexcept { return rate(undetected_success, trials); }
double AttackStats::guess_correct_stderr() const noexcept { return stderr_of(correct, trials); }
double AttackStats::detected_stderr() const noexcept { return stderr_of(detected, trials); }
double AttackStats::undetected_success_stderr() const noexcept { return stderr_of(undetected_success, trials); }

AttackStats& AttackStats::operator+=(const AttackStats& other) noexcept {
  trials += other.trials;
  correct += other.correct;
  detected += other.detected;
  undetected_success += other.undetected_success;
  return *this;
}

AttackStats run_trials(Strategy strategy, const SealParams& params, const VerificationMode& verification,
                       std::uint64_t trials, std::uint64_t seed, std::size_t s) {
  check_harness_params(params, verification, trials, s);
  const RandomSource root(seed);
  std::uint64_t correct = 0;
  std::uint64_t detected = 0;
  std::uint64_t undetected = 0;
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) reduction(+ : correct, detected, undetected)
  for (std::int64_t t = 0; t < count; ++t) {
    const AttackStats one =
        run_one_trial(strategy, params, verification, s, root.child(static_cast<std::uint64_t>(t)));
    correct += one.correct;
    detected += one.detected;
    undetected += one.undetected_success;
  }
  return AttackStats{trials, correct, detected, undetected};
}

AttackPrediction predict_attack(Strategy strategy, const SealParams& params, const VerificationMode& verification,
                                std::size_t s) {
  check_harness_params(params, verification, 1, s);
  const std::size_t seals = params.n - params.k;
  std::size_t checked = 0;
  switch (verification.kind) {
    case VerificationMode::Kind::kSenderAll: checked = seals; break;
    case VerificationMode::Kind::kSenderR: checked = verification.r; break;
    case VerificationMode::Kind::kCredential:
      checked = std::accumulate(verification.credential_sizes.begin(), verification.credential_sizes.end(),
                                std::size_t{0});
      break;
  }

  Rational correct;
  Rational detected;
  Rational undetected;
  if (strategy == Strategy::kFullMeasure) {
    correct = read_success_probability(params, TiePolicy::kFail);
    const Rational survive(BigInt(1), pow2(checked));
    detected = 1 - survive;
    undetected = correct * survive;
  } else {
    const Rational f = params.fraction();
    // Probability that an attacked seal qubit is among the checked ones.
    const Rational q = seals == 0 ? Rational(0) : Rational(static_cast<unsigned long>(checked),
                                                           static_cast<unsigned long>(seals));
    correct = f + (1 - f) / 2;
    detected = (1 - f) * q / 2;
    undetected = f + (1 - f) / 2 * (1 - q / 2);
  }

  AttackPrediction out{1, 0, 1};
  Rational not_detected = 1;
  for (std::size_t i = 0; i < s; ++i) {
    out.guess_correct *= correct;
    not_detected *= 1 - detected;
    out.undetected_success *= undetected;
  }
  out.detected = 1 - not_detected;
  out.guess_correct.canonicalize();
  out.detected.canonicalize();
  out.undetected_success.canonicalize();
  return out;
}

namespace serial {

AttackStats run_trials(Strategy strategy, const SealParams& params, const VerificationMode& verification,
                       std::uint64_t trials, std::uint64_t seed, std::size_t s) {
  check_harness_params(params, verification, trials, s);
  const RandomSource root(seed);
  AttackStats total;
  for (std::uint64_t t = 0; t < trials; ++t) total += run_one_trial(strategy, params, verification, s, root.child(t));
  return total;
}

}  // namespace serial
}  // namespace qseal
