#include "qseal/sharing.hpp"

#include <cmath>

#include "qseal/error.hpp"

namespace qseal {

ShareSet split_bit(unsigned b, std::size_t s, RandomSource& rng) {
  if (s < 1) throw Error(ErrorCode::kInvalidParams, "share count s must be at least 1");
  ShareSet out;
  out.shares.reserve(s);
  unsigned parity = b & 1U;
  for (std::size_t j = 0; j + 1 < s; ++j) {
    const unsigned share = rng.bit();
    parity ^= share;
    out.shares.push_back(share);
  }
  out.shares.push_back(parity);
  return out;
}

unsigned combine(const ShareSet& shares) {
  unsigned x = 0;
  for (unsigned s : shares.shares) x ^= s & 1U;
  return x;
}

std::vector<SealedMessage> seal_message(std::span<const unsigned> message_bits, const SealParams& params,
                                        std::size_t s, RandomSource& rng) {
  require_structural(params);
  if (s < 1) throw Error(ErrorCode::kInvalidParams, "share count s must be at least 1");
  std::vector<SealedMessage> out;
  out.reserve(message_bits.size());
  for (std::size_t i = 0; i < message_bits.size(); ++i) {
    RandomSource bit_rng = rng.child(i);
    const ShareSet shares = split_bit(message_bits[i], s, bit_rng);
    SealedMessage sealed{params, s, {}, {}};
    for (std::size_t j = 0; j < s; ++j) {
      RandomSource share_rng = bit_rng.child(j);
      SealedBit one = seal_bit(shares.shares[j], params, share_rng);
      sealed.registers.push_back(std::move(one.reg));
      sealed.records.push_back(std::move(one.record));
    }
    out.push_back(std::move(sealed));
  }
  return out;
}

SharedReadResult read_shared_bit(std::span<QubitRegister> share_registers, RandomSource& rng, TiePolicy policy) {
  SharedReadResult out;
  unsigned parity = 0;
  bool complete = true;
  for (QubitRegister& reg : share_registers) {
    ReadResult r = read_bit(reg, rng, policy);
    if (r.bit) {
      parity ^= *r.bit;
    } else {
      complete = false;
    }
    out.share_reads.push_back(std::move(r));
  }
  if (complete) out.bit = parity;
  return out;
}

double catch_probability(double p_cheat, std::size_t s) {
  if (!(p_cheat >= 0.0 && p_cheat <= 1.0) || s < 1) {
    throw Error(ErrorCode::kInvalidParams, "need 0 <= p_cheat <= 1 and s >= 1");
  }
  return 1.0 - std::pow(p_cheat, static_cast<double>(s));
}

Rational catch_probability(const Rational& p_cheat, std::size_t s) {
  if (p_cheat < 0 || p_cheat > 1 || s < 1) throw Error(ErrorCode::kInvalidParams, "need 0 <= p_cheat <= 1 and s >= 1");
  Rational power = 1;
  for (std::size_t i = 0; i < s; ++i) power *= p_cheat;
  Rational out = 1 - power;
  out.canonicalize();
  return out;
}

}  // namespace qseal
