#pragma once

#include <cstddef>
#include <vector>

#include "qseal/exact.hpp"
#include "qseal/random.hpp"
#include "qseal/seal.hpp"
#include "qseal/sharing.hpp"
#include "qseal/states.hpp"

namespace qseal {

// 2n classical bits; the pair (bits[2i], bits[2i+1]) selects the Pauli on
// qubit i+1: 00 -> I, 01 -> X, 10 -> Y, 11 -> Z.
struct PauliKey {
  std::vector<unsigned> bits;

  std::size_t qubit_count() const noexcept { return bits.size() / 2; }
  Pauli pauli_at(Position position) const;

  static PauliKey random(std::size_t qubit_count, RandomSource& rng);

  friend bool operator==(const PauliKey&, const PauliKey&) = default;
};

PureState encrypt(const PureState& state, const PauliKey& key);
// Paulis are self-inverse, so this applies the same sequence again.
PureState decrypt(const PureState& state, const PauliKey& key);

// For `samples` Haar-random single-qubit states S, forms
// (1/4) sum_sigma sigma|S><S|sigma over {I, X, Y, Z} and returns the largest
// entry-wise deviation from I/2 seen.
double mixture_check(std::size_t samples, RandomSource& rng);

// (1/4^n) sum over all 4^n keys of encrypt(psi)encrypt(psi)^dagger.
DensityMatrix key_average(const PureState& state, std::size_t cap = oracle_cap());

// Where the K-seal qubits sit among the payload qubits in the combined
// register. Positions are 1-based and sorted; payload qubits fill the rest in
// order.
struct InterspersionPlan {
  std::size_t combined_length = 0;
  std::vector<Position> kseal_positions;

  std::size_t payload_count() const noexcept { return combined_length - kseal_positions.size(); }

  friend bool operator==(const InterspersionPlan&, const InterspersionPlan&) = default;
};

InterspersionPlan sample_plan(std::size_t payload_count, std::size_t kseal_count, RandomSource& rng);

// Plans are numbered by the lexicographic order of their K-seal position
// sets; there are C(N, k_s) of them.
BigInt plan_count(std::size_t combined_length, std::size_t kseal_count);
BigInt plan_rank(const InterspersionPlan& plan);
InterspersionPlan plan_unrank(std::size_t combined_length, std::size_t kseal_count, const BigInt& rank);
std::size_t plan_bit_width(std::size_t combined_length, std::size_t kseal_count);

// Big-endian rank, padded to plan_bit_width.
std::vector<unsigned> serialize_plan(const InterspersionPlan& plan);
// Throws CSealReadFailure if the bits encode a rank outside the plan count.
InterspersionPlan deserialize_plan(const std::vector<unsigned>& bits, std::size_t combined_length,
                                   std::size_t kseal_count);

// One slot of the combined register: a payload qubit (held inside the dense
// encrypted payload) or a symbolic K-seal qubit.
struct CombinedSlot {
  bool payload = false;
  Qubit qubit;  // meaningful for K-seal slots only

  friend bool operator==(const CombinedSlot&, const CombinedSlot&) = default;
};

// The public seal triple. The K-seal registers live inside `combined` at the
// plan positions, flattened in bit-major/share-minor register order; the
// C-seal registers are stored in the same order as seal_message produces.
struct LayeredQuantumSeal {
  SealParams params;
  std::size_t s = 1;
  std::size_t payload_qubits = 0;
  std::size_t plan_bits = 0;
  PureState encrypted_payload = PureState::basis(0, 0);
  std::vector<CombinedSlot> combined;
  std::vector<QubitRegister> cseal_registers;

  std::size_t kseal_qubit_count() const noexcept { return 2 * payload_qubits * s * params.n; }
  std::size_t kseal_register_count() const noexcept { return 2 * payload_qubits * s; }
};

// The sealer's side.
struct QuantumSealSecret {
  PauliKey key;
  InterspersionPlan plan;
  std::vector<PreparationRecord> kseal_records;  // bit-major, share-minor
  std::vector<PreparationRecord> cseal_records;  // bit-major, share-minor
};

struct QuantumSealBundle {
  LayeredQuantumSeal seal;
  QuantumSealSecret secret;
};

inline constexpr std::size_t kDefaultPayloadCap = 10;

// Encrypts with a fresh key K, seals K's bits, intersperses the K-seal qubits
// with the payload by a uniform plan C, then seals C.
QuantumSealBundle seal_quantum(const PureState& state, const SealParams& params, std::size_t s, RandomSource& rng,
                               std::size_t payload_cap = kDefaultPayloadCap);

struct QuantumReadResult {
  PureState state;
  InterspersionPlan plan;
  PauliKey key;
};

// Breaks the C seal to learn the plan, breaks the K-seal qubits it points
// at, and decrypts. All read registers collapse. A misread plan makes the
// reader measure payload slots, which collapses the payload as well.
QuantumReadResult read_quantum_detailed(LayeredQuantumSeal& seal, RandomSource& rng);
PureState read_quantum(LayeredQuantumSeal& seal, RandomSource& rng);

// K-seal register `index` (bit-major/share-minor) gathered from the combined
// register through `plan`, and the inverse write-back.
QubitRegister kseal_register(const LayeredQuantumSeal& seal, const InterspersionPlan& plan, std::size_t index);
void store_kseal_register(LayeredQuantumSeal& seal, const InterspersionPlan& plan, std::size_t index,
                          const QubitRegister& reg);

// Sender verification of one K-seal register, written back after collapse.
VerifyReport verify_kseal_register(LayeredQuantumSeal& seal, const QuantumSealSecret& secret, std::size_t index,
                                   std::size_t r, RandomSource& rng);

// Probability that every classical majority vote in the pipeline is right:
// p_read^((2n + plan_bits) s).
Rational layered_read_success_probability(const SealParams& params, std::size_t s, std::size_t payload_qubits);

}  // namespace qseal
