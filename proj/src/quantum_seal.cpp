#include "qseal/quantum_seal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qseal/error.hpp"

namespace qseal {
namespace {

void check_key(const PureState& state, const PauliKey& key) {
  if (key.bits.size() != 2 * state.qubit_count()) {
    throw Error(ErrorCode::kKeyLengthMismatch, "key has " + std::to_string(key.bits.size()) + " bits for " +
                                                   std::to_string(state.qubit_count()) + " qubits");
  }
}

PureState apply_key(const PureState& state, const PauliKey& key) {
  check_key(state, key);
  PureState out = state;
  for (Position p = 1; p <= state.qubit_count(); ++p) apply_pauli_inplace(out, p, key.pauli_at(p));
  return out;
}

// Majority-votes one K-seal register in place in the combined layout. Slots
// the plan mislabels as K-seal qubits are payload qubits; measuring them
// collapses the payload.
std::optional<unsigned> read_kseal_share(LayeredQuantumSeal& seal, const std::vector<std::size_t>& payload_index,
                                         const InterspersionPlan& plan, std::size_t index, RandomSource& rng) {
  const std::size_t width = seal.params.n;
  std::size_t ones = 0;
  for (std::size_t j = 0; j < width; ++j) {
    const Position slot = plan.kseal_positions[index * width + j];
    CombinedSlot& cell = seal.combined[slot - 1];
    unsigned outcome = 0;
    if (cell.payload) {
      outcome = seal.encrypted_payload.measure(payload_index[slot - 1] + 1, rng);
    } else {
      const Measurement m = measure(cell.qubit, Axis::kComputational, rng);
      cell.qubit = m.collapsed;
      outcome = m.outcome;
    }
    ones += outcome;
  }
  const std::size_t zeros = width - ones;
  if (ones == zeros) return std::nullopt;
  return ones > zeros ? 1U : 0U;
}

}  // namespace

Pauli PauliKey::pauli_at(Position position) const {
  if (position < 1 || position > qubit_count()) throw Error(ErrorCode::kPositionOutOfRange, "key position");
  const unsigned hi = bits[2 * (position - 1)] & 1U;
  const unsigned lo = bits[2 * (position - 1) + 1] & 1U;
  switch ((hi << 1) | lo) {
    case 0b01: return Pauli::kX;
    case 0b10: return Pauli::kY;
    case 0b11: return Pauli::kZ;
    default: return Pauli::kI;
  }
}

PauliKey PauliKey::random(std::size_t qubit_count, RandomSource& rng) {
  PauliKey key;
  key.bits.resize(2 * qubit_count);
  for (unsigned& b : key.bits) b = rng.bit();
  return key;
}

PureState encrypt(const PureState& state, const PauliKey& key) { return apply_key(state, key); }

PureState decrypt(const PureState& state, const PauliKey& key) { return apply_key(state, key); }

double mixture_check(std::size_t samples, RandomSource& rng) {
  constexpr Pauli kPaulis[] = {Pauli::kI, Pauli::kX, Pauli::kY, Pauli::kZ};
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const PureState s = PureState::random(1, rng);
    Complex avg[4] = {};
    for (Pauli p : kPaulis) {
      const PureState t = apply_pauli(s, 1, p);
      const auto a = t.amplitudes();
      avg[0] += a[0] * std::conj(a[0]);
      avg[1] += a[0] * std::conj(a[1]);
      avg[2] += a[1] * std::conj(a[0]);
      avg[3] += a[1] * std::conj(a[1]);
    }
    const Complex half_identity[4] = {0.5, 0.0, 0.0, 0.5};
    for (int e = 0; e < 4; ++e) worst = std::max(worst, std::abs(0.25 * avg[e] - half_identity[e]));
  }
  return worst;
}

DensityMatrix key_average(const PureState& state, std::size_t cap) {
  const std::size_t n = state.qubit_count();
  if (n > cap) throw Error(ErrorCode::kOracleCapExceeded, "key average over too many qubits");
  DensityMatrix avg(n);
  const std::size_t keys = std::size_t{1} << (2 * n);
  const double weight = 1.0 / static_cast<double>(keys);
  PauliKey key;
  key.bits.resize(2 * n);
  for (std::size_t code = 0; code < keys; ++code) {
    for (std::size_t b = 0; b < 2 * n; ++b) key.bits[b] = (code >> (2 * n - 1 - b)) & 1U;
    const PureState t = encrypt(state, key);
    const auto a = t.amplitudes();
    for (std::size_t r = 0; r < avg.dimension(); ++r) {
      for (std::size_t c = 0; c < avg.dimension(); ++c) avg(r, c) += weight * a[r] * std::conj(a[c]);
    }
  }
  return avg;
}

InterspersionPlan sample_plan(std::size_t payload_count, std::size_t kseal_count, RandomSource& rng) {
  InterspersionPlan plan;
  plan.combined_length = payload_count + kseal_count;
  for (std::size_t idx : sample_without_replacement(plan.combined_length, kseal_count, rng)) {
    plan.kseal_positions.push_back(idx + 1);
  }
  std::sort(plan.kseal_positions.begin(), plan.kseal_positions.end());
  return plan;
}

BigInt plan_count(std::size_t combined_length, std::size_t kseal_count) {
  return binomial(combined_length, kseal_count);
}

BigInt plan_rank(const InterspersionPlan& plan) {
  const std::size_t total = plan.combined_length;
  const std::size_t k = plan.kseal_positions.size();
  BigInt rank = 0;
  Position previous = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Position current = plan.kseal_positions[i];
    if (current <= previous || current > total) throw std::invalid_argument("plan positions must be increasing");
    // Every combination that agrees on the first i entries and puts a smaller
    // value at entry i comes first.
    for (Position v = previous + 1; v < current; ++v) rank += binomial(total - v, k - i - 1);
    previous = current;
  }
  return rank;
}

InterspersionPlan plan_unrank(std::size_t combined_length, std::size_t kseal_count, const BigInt& rank) {
  if (rank < 0 || rank >= plan_count(combined_length, kseal_count)) {
    throw Error(ErrorCode::kCSealReadFailure, "plan rank out of range");
  }
  InterspersionPlan plan;
  plan.combined_length = combined_length;
  BigInt remaining = rank;
  Position v = 1;
  for (std::size_t i = 0; i < kseal_count; ++i) {
    for (;;) {
      const BigInt block = binomial(combined_length - v, kseal_count - i - 1);
      if (remaining < block) break;
      remaining -= block;
      ++v;
    }
    plan.kseal_positions.push_back(v);
    ++v;
  }
  return plan;
}

std::size_t plan_bit_width(std::size_t combined_length, std::size_t kseal_count) {
  const BigInt largest = plan_count(combined_length, kseal_count) - 1;
  return mpz_sizeinbase(largest.get_mpz_t(), 2);
}

std::vector<unsigned> serialize_plan(const InterspersionPlan& plan) {
  const std::size_t width = plan_bit_width(plan.combined_length, plan.kseal_positions.size());
  const BigInt rank = plan_rank(plan);
  std::vector<unsigned> bits(width);
  for (std::size_t i = 0; i < width; ++i) {
    bits[i] = mpz_tstbit(rank.get_mpz_t(), width - 1 - i) ? 1U : 0U;
  }
  return bits;
}

InterspersionPlan deserialize_plan(const std::vector<unsigned>& bits, std::size_t combined_length,
                                   std::size_t kseal_count) {
  if (bits.size() != plan_bit_width(combined_length, kseal_count)) {
    throw Error(ErrorCode::kCSealReadFailure, "plan bit count does not match the plan width");
  }
  BigInt rank = 0;
  for (unsigned b : bits) rank = rank * 2 + (b & 1U);
  return plan_unrank(combined_length, kseal_count, rank);
}

QuantumSealBundle seal_quantum(const PureState& state, const SealParams& params, std::size_t s, RandomSource& rng,
                               std::size_t payload_cap) {
  require_structural(params);
  if (s < 1) throw Error(ErrorCode::kInvalidParams, "share count s must be at least 1");
  const std::size_t n = state.qubit_count();
  if (n < 1 || n > payload_cap) {
    throw Error(ErrorCode::kPayloadCapExceeded,
                "payload of " + std::to_string(n) + " qubits outside 1.." + std::to_string(payload_cap));
  }

  QuantumSealBundle out;
  LayeredQuantumSeal& seal = out.seal;
  QuantumSealSecret& secret = out.secret;
  seal.params = params;
  seal.s = s;
  seal.payload_qubits = n;

  RandomSource key_rng = rng.child(0);
  secret.key = PauliKey::random(n, key_rng);
  seal.encrypted_payload = encrypt(state, secret.key);

  RandomSource kseal_rng = rng.child(1);
  std::vector<QubitRegister> kseal_registers;
  for (SealedMessage& m : seal_message(secret.key.bits, params, s, kseal_rng)) {
    for (std::size_t j = 0; j < s; ++j) {
      kseal_registers.push_back(std::move(m.registers[j]));
      secret.kseal_records.push_back(std::move(m.records[j]));
    }
  }

  RandomSource plan_rng = rng.child(2);
  secret.plan = sample_plan(n, seal.kseal_qubit_count(), plan_rng);
  seal.combined.assign(secret.plan.combined_length, CombinedSlot{true, Qubit{}});
  std::size_t cursor = 0;
  for (const QubitRegister& reg : kseal_registers) {
    for (const Qubit& q : reg) seal.combined[secret.plan.kseal_positions[cursor++] - 1] = CombinedSlot{false, q};
  }

  const std::vector<unsigned> plan_bits = serialize_plan(secret.plan);
  seal.plan_bits = plan_bits.size();
  RandomSource cseal_rng = rng.child(3);
  for (SealedMessage& m : seal_message(plan_bits, params, s, cseal_rng)) {
    for (std::size_t j = 0; j < s; ++j) {
      seal.cseal_registers.push_back(std::move(m.registers[j]));
      secret.cseal_records.push_back(std::move(m.records[j]));
    }
  }
  return out;
}

QuantumReadResult read_quantum_detailed(LayeredQuantumSeal& seal, RandomSource& rng) {
  const std::size_t s = seal.s;
  if (seal.cseal_registers.size() != seal.plan_bits * s ||
      seal.combined.size() != seal.payload_qubits + seal.kseal_qubit_count()) {
    throw Error(ErrorCode::kFileFormat, "incomplete layered seal");
  }

  std::vector<unsigned> plan_bits(seal.plan_bits);
  for (std::size_t i = 0; i < seal.plan_bits; ++i) {
    const SharedReadResult r =
        read_shared_bit(std::span<QubitRegister>(seal.cseal_registers).subspan(i * s, s), rng, TiePolicy::kFail);
    if (!r.bit) throw Error(ErrorCode::kCSealReadFailure, "tie while reading plan bit " + std::to_string(i));
    plan_bits[i] = *r.bit;
  }
  InterspersionPlan plan = deserialize_plan(plan_bits, seal.combined.size(), seal.kseal_qubit_count());

  // Payload index of each slot in the true layout; a physical reader never
  // sees this, it only decides which payload qubit a misdirected read hits.
  std::vector<std::size_t> payload_index(seal.combined.size());
  std::size_t next_payload = 0;
  for (std::size_t i = 0; i < seal.combined.size(); ++i) {
    if (seal.combined[i].payload) payload_index[i] = next_payload++;
  }

  PauliKey key;
  key.bits.resize(2 * seal.payload_qubits);
  for (std::size_t bit = 0; bit < key.bits.size(); ++bit) {
    unsigned parity = 0;
    for (std::size_t j = 0; j < s; ++j) {
      const auto share = read_kseal_share(seal, payload_index, plan, bit * s + j, rng);
      if (!share) throw Error(ErrorCode::kKSealReadFailure, "tie while reading key bit " + std::to_string(bit));
      parity ^= *share;
    }
    key.bits[bit] = parity;
  }

  PureState state = decrypt(seal.encrypted_payload, key);
  return {std::move(state), std::move(plan), std::move(key)};
}

PureState read_quantum(LayeredQuantumSeal& seal, RandomSource& rng) {
  return std::move(read_quantum_detailed(seal, rng).state);
}

QubitRegister kseal_register(const LayeredQuantumSeal& seal, const InterspersionPlan& plan, std::size_t index) {
  const std::size_t width = seal.params.n;
  if (index >= seal.kseal_register_count()) throw Error(ErrorCode::kPositionOutOfRange, "K-seal register index");
  std::vector<Qubit> qubits;
  qubits.reserve(width);
  for (std::size_t j = 0; j < width; ++j) {
    const CombinedSlot& cell = seal.combined.at(plan.kseal_positions.at(index * width + j) - 1);
    if (cell.payload) throw Error(ErrorCode::kFileFormat, "plan points at a payload slot");
    qubits.push_back(cell.qubit);
  }
  return QubitRegister(std::move(qubits));
}

void store_kseal_register(LayeredQuantumSeal& seal, const InterspersionPlan& plan, std::size_t index,
                          const QubitRegister& reg) {
  const std::size_t width = seal.params.n;
  if (index >= seal.kseal_register_count() || reg.size() != width) {
    throw Error(ErrorCode::kPositionOutOfRange, "K-seal register index");
  }
  for (std::size_t j = 0; j < width; ++j) {
    CombinedSlot& cell = seal.combined.at(plan.kseal_positions.at(index * width + j) - 1);
    cell.qubit = reg.qubits()[j];
  }
}

VerifyReport verify_kseal_register(LayeredQuantumSeal& seal, const QuantumSealSecret& secret, std::size_t index,
                                   std::size_t r, RandomSource& rng) {
  QubitRegister reg = kseal_register(seal, secret.plan, index);
  VerifyReport report = sender_verify(reg, secret.kseal_records.at(index), r, rng);
  store_kseal_register(seal, secret.plan, index, reg);
  return report;
}

Rational layered_read_success_probability(const SealParams& params, std::size_t s, std::size_t payload_qubits) {
  const std::size_t kseal_qubits = 2 * payload_qubits * s * params.n;
  const std::size_t reads = (2 * payload_qubits + plan_bit_width(payload_qubits + kseal_qubits, kseal_qubits)) * s;
  const Rational p = read_success_probability(params, TiePolicy::kFail);
  Rational out = 1;
  for (std::size_t i = 0; i < reads; ++i) out *= p;
  out.canonicalize();
  return out;
}

}  // namespace qseal
