#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qseal/exact.hpp"
#include "qseal/random.hpp"
#include "qseal/seal.hpp"

namespace qseal {

// (s, s) XOR threshold shares of one bit.
struct ShareSet {
  std::vector<unsigned> shares;

  std::size_t size() const noexcept { return shares.size(); }
};

ShareSet split_bit(unsigned b, std::size_t s, RandomSource& rng);
unsigned combine(const ShareSet& shares);

// The s sealed share registers of one message bit, share order.
struct SealedMessage {
  SealParams params;
  std::size_t s = 0;
  std::vector<QubitRegister> registers;
  std::vector<PreparationRecord> records;
};

// One SealedMessage per message bit. Flattened, the registers are ordered
// bit-major then share-minor: register (i * s + j) holds share j of bit i.
// Bit i draws from rng.child(i), so bits can be sealed independently.
std::vector<SealedMessage> seal_message(std::span<const unsigned> message_bits, const SealParams& params,
                                        std::size_t s, RandomSource& rng);

struct SharedReadResult {
  std::optional<unsigned> bit;  // empty if any share read tied under kFail
  std::vector<ReadResult> share_reads;
};

// Majority-votes every share register (collapsing them) and XORs the shares.
SharedReadResult read_shared_bit(std::span<QubitRegister> share_registers, RandomSource& rng,
                                 TiePolicy policy = TiePolicy::kFail);

// 1 - p^s
double catch_probability(double p_cheat, std::size_t s);
Rational catch_probability(const Rational& p_cheat, std::size_t s);

}  // namespace qseal
