#include "qseal/seal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qseal/error.hpp"

namespace qseal {
namespace {

std::string describe(const Rational& q) {
  std::ostringstream out;
  out << to_fraction_string(q) << " (" << q.get_d() << ")";
  return out.str();
}

// floor(sqrt(v)) for exact perfect-square detection.
std::size_t isqrt(std::size_t v) {
  auto root = static_cast<std::size_t>(std::sqrt(static_cast<double>(v)));
  while (root * root > v) --root;
  while ((root + 1) * (root + 1) <= v) ++root;
  return root;
}

}  // namespace

ValidationReport validate_params(const SealParams& params) {
  ValidationReport report;
  const std::size_t n = params.n;
  const std::size_t k = params.k;
  bool structural = true;

  if (n < 1) {
    structural = false;
    report.messages.push_back("register length n must be at least 1");
  }
  if (k < 1) {
    structural = false;
    report.messages.push_back("code-qubit count k must be at least 1");
  }
  if (n >= 1 && 2 * k >= n) {
    structural = false;
    report.messages.push_back("code fraction f = k/n = " + std::to_string(k) + "/" + std::to_string(n) +
                              " must satisfy f < 1/2");
  }
  if (k <= n && params.r > n - k) {
    structural = false;
    report.messages.push_back("verification sample r = " + std::to_string(params.r) +
                              " exceeds the seal-qubit count n - k");
  }
  report.structurally_valid = structural;

  bool thresholds = n >= 1 && k >= 1 && k <= n;
  if (thresholds) {
    // n0 = 2(1 - k/n)/(k/n)^2 = 2n(n - k)/k^2
    report.n0 = Rational(BigInt(2) * n * (n - k), BigInt(k) * k);
    report.n0.canonicalize();
    if (!(Rational(static_cast<unsigned long>(n)) > report.n0)) {
      thresholds = false;
      report.messages.push_back("n = " + std::to_string(n) + " must exceed n0 = 2(1-f)/f^2 = " +
                                describe(report.n0));
    }

    const std::size_t disc = 2 * n + 1;
    report.f0 = (std::sqrt(static_cast<double>(disc)) - 1.0) / static_cast<double>(n);
    const std::size_t root = isqrt(disc);
    if (root * root == disc) {
      Rational f0(static_cast<unsigned long>(root - 1), static_cast<unsigned long>(n));
      f0.canonicalize();
      report.f0_exact = f0;
    }
    // k/n > (sqrt(2n+1) - 1)/n  <=>  (k + 1)^2 > 2n + 1
    if (!((k + 1) * (k + 1) > disc)) {
      thresholds = false;
      std::ostringstream msg;
      msg << "f = " << k << "/" << n << " must exceed f0 = (sqrt(2n+1)-1)/n = ";
      if (report.f0_exact) {
        msg << describe(*report.f0_exact);
      } else {
        msg << report.f0;
      }
      msg << "; need more than " << report.f0 * static_cast<double>(n) << " code qubits";
      report.messages.push_back(msg.str());
    }
  }

  report.ok = structural && thresholds;
  return report;
}

void require_structural(const SealParams& params) {
  const ValidationReport report = validate_params(params);
  if (!report.structurally_valid) {
    std::string joined;
    for (const auto& m : report.messages) joined += (joined.empty() ? "" : "; ") + m;
    throw Error(ErrorCode::kInvalidParams, joined);
  }
}

std::size_t minimum_valid_length(std::size_t numerator, std::size_t denominator) {
  if (numerator == 0 || denominator == 0 || 2 * numerator >= denominator) {
    throw Error(ErrorCode::kInvalidParams, "code fraction must lie strictly between 0 and 1/2");
  }
  const std::size_t g = std::gcd(numerator, denominator);
  const std::size_t step_n = denominator / g;
  const std::size_t step_k = numerator / g;
  for (std::size_t m = 1;; ++m) {
    if (validate_params({step_n * m, step_k * m, 0}).ok) return step_n * m;
  }
}

std::vector<Position> PreparationRecord::seal_positions() const {
  std::vector<Position> out;
  out.reserve(seal_eigenbits.size());
  for (const auto& [p, bit] : seal_eigenbits) out.push_back(p);
  return out;
}

bool PreparationRecord::is_code_position(Position p) const {
  return std::binary_search(code_positions.begin(), code_positions.end(), p);
}

SealedBit prepare_encoding(unsigned b, std::size_t n, std::size_t k, RandomSource& rng) {
  if (n < 1 || k > n || b > 1) throw Error(ErrorCode::kInvalidParams, "encoding needs n >= 1, k <= n, b in {0,1}");
  SealedBit out;
  out.record.n = n;
  out.record.code_bit = b;
  for (std::size_t idx : sample_without_replacement(n, k, rng)) out.record.code_positions.push_back(idx + 1);
  std::sort(out.record.code_positions.begin(), out.record.code_positions.end());

  std::vector<Qubit> qubits(n);
  for (Position p = 1; p <= n; ++p) {
    if (out.record.is_code_position(p)) {
      qubits[p - 1] = Qubit{Axis::kComputational, b};
    } else {
      const unsigned eigenbit = rng.bit();
      qubits[p - 1] = Qubit{Axis::kDiagonal, eigenbit};
      out.record.seal_eigenbits.emplace(p, eigenbit);
    }
  }
  out.reg = QubitRegister(std::move(qubits));
  return out;
}

SealedBit seal_bit(unsigned b, const SealParams& params, RandomSource& rng) {
  require_structural(params);
  return prepare_encoding(b, params.n, params.k, rng);
}

ReadResult read_bit(QubitRegister& reg, RandomSource& rng, TiePolicy policy) {
  ReadResult result;
  result.outcomes.reserve(reg.size());
  for (Position p = 1; p <= reg.size(); ++p) {
    const unsigned o = reg.measure(p, Axis::kComputational, rng);
    result.outcomes.push_back(o);
    (o ? result.votes_for_1 : result.votes_for_0)++;
  }
  if (result.votes_for_0 > result.votes_for_1) {
    result.bit = 0;
  } else if (result.votes_for_1 > result.votes_for_0) {
    result.bit = 1;
  } else if (policy == TiePolicy::kCoin) {
    result.bit = rng.bit();
  }
  return result;
}

Rational expected_correct_votes(const SealParams& params) {
  // n (f + (1 - f)/2) = n/2 + k/2
  Rational out(static_cast<unsigned long>(params.n + params.k), 2UL);
  out.canonicalize();
  return out;
}

Rational read_success_probability(const SealParams& params, TiePolicy policy) {
  const std::size_t n = params.n;
  const std::size_t k = params.k;
  if (n < 1 || k > n) throw Error(ErrorCode::kInvalidParams, "need n >= 1 and k <= n");
  const std::size_t m = n - k;
  BigInt wins = 0;
  BigInt ties = 0;
  for (std::size_t x = 0; x <= m; ++x) {
    const std::size_t twice_votes = 2 * (k + x);
    if (twice_votes > n) {
      wins += binomial(m, x);
    } else if (twice_votes == n) {
      ties += binomial(m, x);
    }
  }
  Rational p(wins, pow2(m));
  if (policy == TiePolicy::kCoin) p += Rational(ties, pow2(m + 1));
  p.canonicalize();
  return p;
}

VerifyReport sender_verify(QubitRegister& reg, const PreparationRecord& record, std::size_t r, RandomSource& rng) {
  const std::vector<Position> seals = record.seal_positions();
  if (r > seals.size()) {
    throw Error(ErrorCode::kRTooLarge,
                "r = " + std::to_string(r) + " exceeds " + std::to_string(seals.size()) + " seal positions");
  }
  VerifyReport report;
  for (std::size_t idx : sample_without_replacement(seals.size(), r, rng)) {
    const Position p = seals[idx];
    report.checked.push_back(p);
    if (reg.measure(p, Axis::kDiagonal, rng) != record.seal_eigenbits.at(p)) report.mismatches.push_back(p);
  }
  std::sort(report.checked.begin(), report.checked.end());
  std::sort(report.mismatches.begin(), report.mismatches.end());
  report.intact = report.mismatches.empty();
  return report;
}

std::vector<Position> VerifierCredential::coords() const {
  std::vector<Position> out;
  out.reserve(expected.size());
  for (const auto& [p, bit] : expected) out.push_back(p);
  return out;
}

std::vector<VerifierCredential> issue_credentials(const PreparationRecord& record,
                                                  std::span<const std::size_t> sizes, RandomSource& rng) {
  const std::vector<Position> seals = record.seal_positions();
  std::size_t total = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw Error(ErrorCode::kInvalidParams, "credential must cover at least one coordinate");
    total += s;
  }
  if (total >= seals.size()) {
    throw Error(ErrorCode::kCredentialBudgetExceeded,
                "credentials cover " + std::to_string(total) + " of " + std::to_string(seals.size()) +
                    " seal qubits; their union must be a proper subset");
  }
  const std::vector<std::size_t> drawn = sample_without_replacement(seals.size(), total, rng);
  std::vector<VerifierCredential> out;
  out.reserve(sizes.size());
  std::size_t cursor = 0;
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    VerifierCredential cred;
    cred.verifier_id = "v" + std::to_string(j + 1);
    for (std::size_t i = 0; i < sizes[j]; ++i) {
      const Position p = seals[drawn[cursor++]];
      cred.expected.emplace(p, record.seal_eigenbits.at(p));
    }
    out.push_back(std::move(cred));
  }
  return out;
}

VerifyReport verifier_verify(QubitRegister& reg, const VerifierCredential& credential, RandomSource& rng) {
  VerifyReport report;
  for (const auto& [p, expected] : credential.expected) {
    report.checked.push_back(p);
    if (reg.measure(p, Axis::kDiagonal, rng) != expected) report.mismatches.push_back(p);
  }
  report.intact = report.mismatches.empty();
  return report;
}

}  // namespace qseal
