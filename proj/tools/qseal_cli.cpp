// qseal: command-line front end for sealing, reading, verifying and attacking
// classical and quantum seals, and for the distinguishability sweep.
//
// Exit codes: 0 success, 1 runtime/file error, 2 parameter validation
// failure, 3 broken seal, 4 oracle mismatch or bound violation.

#include <omp.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fmt/core.h>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qseal/adversary.hpp"
#include "qseal/analysis.hpp"
#include "qseal/error.hpp"
#include "qseal/io.hpp"
#include "qseal/quantum_seal.hpp"
#include "qseal/seal.hpp"
#include "qseal/sharing.hpp"

namespace {

using namespace qseal;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBroken = 3;
constexpr int kExitMismatch = 4;

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t trials = 100000;
  int threads = 0;
  std::string format = "table";
};

// Rows of strings printed either as an aligned table or as CSV.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, bool csv) const {
    if (csv) {
      print_csv(out);
      return;
    }
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = header_[c].size();
    for (const auto& row : rows_)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "  " : "") << row[c] << std::string(c + 1 < row.size() ? width[c] - row[c].size() : 0, ' ');
      }
      out << '\n';
    };
    line(header_);
    for (const auto& row : rows_) line(row);
  }

  void print_csv(std::ostream& out) const {
    auto line = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    };
    line(header_);
    for (const auto& row : rows_) line(row);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string num(double v) { return fmt::format("{:.7f}", v); }
std::string yes_no(bool v) { return v ? "true" : "false"; }

std::string bits_string(const std::vector<unsigned>& bits) {
  std::string out;
  for (unsigned b : bits) out.push_back(b ? '1' : '0');
  return out;
}

std::vector<unsigned> parse_bits(const std::string& text) {
  std::vector<unsigned> out;
  for (char c : text) {
    if (c != '0' && c != '1') throw Error(ErrorCode::kInvalidParams, "message must be a string of 0 and 1");
    out.push_back(c == '1' ? 1U : 0U);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidParams, "empty message");
  return out;
}

std::vector<unsigned> parse_hex(const std::string& text) {
  std::vector<unsigned> out;
  for (char c : text) {
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw Error(ErrorCode::kInvalidParams, "invalid hex digit");
    for (int i = 3; i >= 0; --i) out.push_back((v >> i) & 1);
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidParams, "empty message");
  return out;
}

// Prints the threshold report; returns false if sealing must stop.
bool report_validation(const SealParams& params, bool allow_weak) {
  const ValidationReport report = validate_params(params);
  std::cout << fmt::format("n={} k={} f={}", params.n, params.k,
                           to_fraction_string(Rational(params.k, params.n == 0 ? 1 : params.n)));
  if (params.k > 0) std::cout << fmt::format(" n0={} ({:.4f})", to_fraction_string(report.n0), report.n0.get_d());
  std::cout << fmt::format(" f0={:.6f}", report.f0);
  if (report.f0_exact) std::cout << " (exactly " << to_fraction_string(*report.f0_exact) << ")";
  std::cout << '\n';
  for (const auto& m : report.messages) std::cerr << "validation: " << m << '\n';
  if (!report.structurally_valid) return false;
  if (!report.ok && !allow_weak) {
    std::cerr << "refusing weak parameters (pass --allow-weak to override)\n";
    return false;
  }
  return true;
}

// Read/verify commands mutate the public file; --dry-run works on a copy.
void save_public(const fs::path& path, const nlohmann::json& j, bool dry_run) {
  if (dry_run) {
    io::write_json(fs::path(path).concat(".dry-run"), j);
    return;
  }
  io::write_json(path, j);
}

// ---- seal ----------------------------------------------------------------

struct SealArgs {
  std::string message;
  std::string hex;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t shares = 1;
  std::string public_path;
  std::string secret_path;
  bool allow_weak = false;
};

int command_seal(const Globals& g, const SealArgs& a) {
  const std::vector<unsigned> bits = a.hex.empty() ? parse_bits(a.message) : parse_hex(a.hex);
  const SealParams params{a.n, a.k, 0};
  if (!report_validation(params, a.allow_weak)) return kExitInvalid;
  if (a.shares < 1) throw Error(ErrorCode::kInvalidParams, "shares must be at least 1");

  RandomSource rng(g.seed);
  io::ClassicalPublic pub{params, a.shares, bits.size(), {}};
  io::ClassicalSecret secret{bits, {}};
  for (SealedMessage& m : seal_message(bits, params, a.shares, rng)) {
    for (std::size_t j = 0; j < a.shares; ++j) {
      pub.registers.push_back(std::move(m.registers[j]));
      secret.records.push_back(std::move(m.records[j]));
    }
  }
  io::write_json(a.public_path, io::to_json(pub));
  io::write_json(a.secret_path, io::to_json(secret));
  std::cout << fmt::format("sealed {} bit(s) into {} register(s); P[read succeeds per register] = {}\n", bits.size(),
                           pub.registers.size(), to_fraction_string(read_success_probability(params)));
  return kExitOk;
}

// ---- read ----------------------------------------------------------------

struct ReadArgs {
  std::string public_path;
  std::string tie_policy = "fail";
  bool dry_run = false;
};

int command_read(const Globals& g, const ReadArgs& a) {
  const nlohmann::json j = io::read_json(a.public_path);
  if (io::public_kind(j) != "classical") throw Error(ErrorCode::kFileFormat, "quantum bundle: use qread");
  io::ClassicalPublic pub = io::classical_public_from_json(j);
  const TiePolicy policy = a.tie_policy == "coin" ? TiePolicy::kCoin : TiePolicy::kFail;

  RandomSource rng(g.seed);
  Table table({"bit", "value", "votes_0", "votes_1"});
  std::string message;
  bool tie = false;
  for (std::size_t i = 0; i < pub.message_bits; ++i) {
    RandomSource bit_rng = rng.child(i);
    auto regs = std::span<QubitRegister>(pub.registers).subspan(i * pub.s, pub.s);
    const SharedReadResult r = read_shared_bit(regs, bit_rng, policy);
    std::string v0, v1;
    for (const ReadResult& share : r.share_reads) {
      v0 += (v0.empty() ? "" : "/") + std::to_string(share.votes_for_0);
      v1 += (v1.empty() ? "" : "/") + std::to_string(share.votes_for_1);
    }
    const char value = r.bit ? static_cast<char>('0' + *r.bit) : '?';
    tie |= !r.bit;
    message.push_back(value);
    table.add({std::to_string(i), std::string(1, value), v0, v1});
  }
  save_public(a.public_path, io::to_json(pub), a.dry_run);
  table.print(std::cout, g.format == "csv");
  std::cout << "message: " << message << '\n';
  if (tie) {
    std::cerr << to_string(ErrorCode::kTieEncountered) << ": majority vote tied on at least one register\n";
    return kExitRuntime;
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string public_path;
  std::string secret_path;
  std::string credentials_path;
  std::string verifier;
  std::optional<std::size_t> r;
  bool dry_run = false;
};

std::string positions_string(const std::vector<Position>& ps) {
  std::string out;
  for (Position p : ps) out += (out.empty() ? "" : " ") + std::to_string(p);
  return out.empty() ? "-" : out;
}

int command_verify(const Globals& g, const VerifyArgs& a) {
  const nlohmann::json j = io::read_json(a.public_path);
  if (io::public_kind(j) != "classical") throw Error(ErrorCode::kFileFormat, "quantum bundle: use qverify");
  io::ClassicalPublic pub = io::classical_public_from_json(j);
  RandomSource rng(g.seed);
  Table table({"register", "checked", "mismatches", "verdict"});
  std::size_t broken = 0;
  std::size_t checked_registers = 0;

  auto record_row = [&](std::size_t index, const VerifyReport& report) {
    ++checked_registers;
    broken += report.intact ? 0 : 1;
    table.add({std::to_string(index), std::to_string(report.checked.size()), positions_string(report.mismatches),
               report.intact ? "intact" : "broken"});
  };

  if (!a.secret_path.empty()) {
    const io::ClassicalSecret secret = io::classical_secret_from_json(io::read_json(a.secret_path));
    if (secret.records.size() != pub.registers.size()) {
      throw Error(ErrorCode::kFileFormat, "secret file does not match the public bundle");
    }
    const std::size_t r = a.r.value_or(pub.params.n - pub.params.k);
    for (std::size_t i = 0; i < pub.registers.size(); ++i) {
      RandomSource reg_rng = rng.child(i);
      record_row(i, sender_verify(pub.registers[i], secret.records[i], r, reg_rng));
    }
  } else {
    const io::CredentialFile creds = io::credentials_from_json(io::read_json(a.credentials_path));
    for (const io::CredentialEntry& e : creds.entries) {
      if (e.credential.verifier_id != a.verifier) continue;
      if (e.register_index >= pub.registers.size()) throw Error(ErrorCode::kFileFormat, "credential register index");
      RandomSource reg_rng = rng.child(e.register_index);
      record_row(e.register_index, verifier_verify(pub.registers[e.register_index], e.credential, reg_rng));
    }
    if (checked_registers == 0) throw Error(ErrorCode::kCredentialUnknown, "no credentials for '" + a.verifier + "'");
  }
  save_public(a.public_path, io::to_json(pub), a.dry_run);
  table.print(std::cout, g.format == "csv");
  std::cout << fmt::format("{} of {} register(s) broken\n", broken, checked_registers);
  return broken ? kExitBroken : kExitOk;
}

// ---- issue-credentials ---------------------------------------------------

struct IssueArgs {
  std::string secret_path;
  std::vector<std::size_t> sizes;
  std::string output;
};

int command_issue(const Globals& g, const IssueArgs& a) {
  const io::ClassicalSecret secret = io::classical_secret_from_json(io::read_json(a.secret_path));
  RandomSource rng(g.seed);
  io::CredentialFile file;
  for (std::size_t i = 0; i < secret.records.size(); ++i) {
    RandomSource reg_rng = rng.child(i);
    for (VerifierCredential& c : issue_credentials(secret.records[i], a.sizes, reg_rng)) {
      file.entries.push_back({i, std::move(c)});
    }
  }
  io::write_json(a.output, io::to_json(file));
  std::cout << fmt::format("issued {} verifier credential(s) over {} register(s)\n", a.sizes.size(),
                           secret.records.size());
  return kExitOk;
}

// ---- attack --------------------------------------------------------------

struct AttackArgs {
  std::string strategy = "single";
  std::size_t n = 0;
  std::size_t k = 0;
  std::string mode = "all";
  std::size_t r = 0;
  std::vector<std::size_t> sizes;
  std::size_t shares = 1;
  bool check = false;
};

int command_attack(const Globals& g, const AttackArgs& a) {
  const Strategy strategy = a.strategy == "full" ? Strategy::kFullMeasure : Strategy::kSingleQubit;
  const SealParams params{a.n, a.k, 0};
  VerificationMode mode = VerificationMode::sender_all();
  if (a.mode == "r") mode = VerificationMode::sender_r(a.r);
  if (a.mode == "credentials") mode = VerificationMode::credentials(a.sizes);

  const AttackStats stats = run_trials(strategy, params, mode, g.trials, g.seed, a.shares);
  const AttackPrediction predicted = predict_attack(strategy, params, mode, a.shares);

  Table table({"metric", "empirical", "stderr", "band_low", "band_high", "predicted", "within_3sigma"});
  bool all_within = true;
  auto row = [&](const char* name, double empirical, const Rational& exact) {
    const double p = exact.get_d();
    const double half = 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(stats.trials));
    const bool within = (p == 0.0 || p == 1.0) ? empirical == p : std::abs(empirical - p) <= half;
    all_within &= within;
    const double se = std::sqrt(empirical * (1.0 - empirical) / static_cast<double>(stats.trials));
    table.add({name, num(empirical), num(se), num(p - half), num(p + half), to_fraction_string(exact) + " = " + num(p),
               yes_no(within)});
  };
  row("guess_correct", stats.guess_correct_rate(), predicted.guess_correct);
  row("detected", stats.detected_rate(), predicted.detected);
  row("undetected_success", stats.undetected_success_rate(), predicted.undetected_success);
  if (g.format != "csv") {
    std::cout << fmt::format("strategy={} n={} k={} mode={} shares={} trials={} seed={}\n", a.strategy, a.n, a.k,
                             a.mode, a.shares, stats.trials, g.seed);
  }
  table.print(std::cout, g.format == "csv");
  return a.check && !all_within ? kExitMismatch : kExitOk;
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeArgs {
  std::size_t n_min = 2;
  std::size_t n_max = 10;
  std::string k_rule = "third";
  bool oracle = false;
  std::string output;
};

std::vector<std::size_t> k_values(std::size_t n, const std::string& rule) {
  if (rule == "third") return {std::max<std::size_t>(1, n / 3)};
  if (rule == "all") {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; 2 * k <= n; ++k) out.push_back(k);
    return out;
  }
  std::size_t k = 0;
  try {
    k = std::stoul(rule);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kInvalidParams, "k rule must be 'third', 'all' or an integer");
  }
  return {k};
}

int command_analyze(const Globals& g, const AnalyzeArgs& a) {
  if (a.n_min > a.n_max || a.n_min < 2) throw Error(ErrorCode::kInvalidParams, "need 2 <= n-min <= n-max");
  Table table({"n", "k", "d2_formula", "d2_formula_float", "d2_oracle", "bound", "bound_satisfied"});
  bool failed = false;
  double worst = 0.0;
  for (std::size_t n = a.n_min; n <= a.n_max; ++n) {
    for (std::size_t k : k_values(n, a.k_rule)) {
      if (k < 1 || 2 * k > n) continue;
      const DistanceReport rep = distance_report(n, k, a.oracle);
      failed |= !rep.bound_satisfied;
      if (const auto err = rep.oracle_error()) {
        worst = std::max(worst, *err);
        failed |= *err > 1e-10;
      }
      table.add({std::to_string(n), std::to_string(k), to_fraction_string(rep.d2_formula),
                 fmt::format("{:.17g}", rep.d2_formula.get_d()),
                 rep.d2_oracle ? fmt::format("{:.17g}", *rep.d2_oracle) : "", to_fraction_string(rep.bound),
                 yes_no(rep.bound_satisfied)});
    }
  }
  if (!a.output.empty()) {
    std::ofstream out(a.output, std::ios::binary);
    if (!out) throw Error(ErrorCode::kFileFormat, "cannot open " + a.output);
    table.print_csv(out);
  } else {
    table.print(std::cout, g.format == "csv");
  }
  if (a.oracle && g.format != "csv") std::cerr << fmt::format("max |formula - oracle| = {:.3e}\n", worst);
  return failed ? kExitMismatch : kExitOk;
}

// ---- qseal / qread / qverify ---------------------------------------------

struct QSealArgs {
  std::size_t qubits = 1;
  std::optional<std::size_t> basis;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t shares = 1;
  std::size_t payload_cap = kDefaultPayloadCap;
  std::string public_path;
  std::string secret_path;
  bool allow_weak = false;
};

int command_qseal(const Globals& g, const QSealArgs& a) {
  const SealParams params{a.n, a.k, 0};
  if (!report_validation(params, a.allow_weak)) return kExitInvalid;
  if (a.qubits < 1 || a.qubits > a.payload_cap) {
    throw Error(ErrorCode::kPayloadCapExceeded, fmt::format("payload must have 1..{} qubits", a.payload_cap));
  }
  RandomSource rng(g.seed);
  RandomSource state_rng = rng.child(0);
  const PureState psi = a.basis ? PureState::basis(a.qubits, *a.basis) : PureState::random(a.qubits, state_rng);
  RandomSource seal_rng = rng.child(1);
  QuantumSealBundle bundle = seal_quantum(psi, params, a.shares, seal_rng, a.payload_cap);
  io::write_json(a.public_path, io::to_json(bundle.seal));
  io::write_json(a.secret_path, io::to_json(io::QuantumSecret{bundle.secret, psi}));
  std::cout << fmt::format("sealed {} payload qubit(s): {} K-seal register(s), {} plan bit(s), {} C-seal register(s)\n",
                           a.qubits, bundle.seal.kseal_register_count(), bundle.seal.plan_bits,
                           bundle.seal.cseal_registers.size());
  std::cout << "P[every majority vote correct] = "
            << to_fraction_string(layered_read_success_probability(params, a.shares, a.qubits)) << '\n';
  return kExitOk;
}

struct QReadArgs {
  std::string public_path;
  std::string secret_path;
  bool dry_run = false;
};

int command_qread(const Globals& g, const QReadArgs& a) {
  const nlohmann::json j = io::read_json(a.public_path);
  if (io::public_kind(j) != "quantum") throw Error(ErrorCode::kFileFormat, "classical bundle: use read");
  LayeredQuantumSeal seal = io::quantum_public_from_json(j);
  RandomSource rng(g.seed);
  std::optional<QuantumReadResult> result;
  std::optional<Error> failure;
  try {
    result = read_quantum_detailed(seal, rng);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCSealReadFailure && e.code() != ErrorCode::kKSealReadFailure) throw;
    failure = e;
  }
  // The attempt collapsed whatever it touched, success or not.
  save_public(a.public_path, io::to_json(seal), a.dry_run);
  if (failure) {
    std::cerr << to_string(failure->code()) << ": " << failure->what() << '\n';
    return kExitRuntime;
  }
  std::cout << "plan rank: " << plan_rank(result->plan).get_str() << '\n';
  std::cout << "key: " << bits_string(result->key.bits) << '\n';
  Table table({"index", "re", "im"});
  for (std::size_t i = 0; i < result->state.dimension(); ++i) {
    const auto amp = result->state.amplitudes()[i];
    table.add({std::to_string(i), fmt::format("{:.12f}", amp.real()), fmt::format("{:.12f}", amp.imag())});
  }
  table.print(std::cout, g.format == "csv");
  if (!a.secret_path.empty()) {
    const io::QuantumSecret secret = io::quantum_secret_from_json(io::read_json(a.secret_path));
    const double fid = fidelity(result->state, secret.plaintext);
    std::cout << fmt::format("fidelity with sealed state: {:.15f}\n", fid);
    if (std::abs(fid - 1.0) > 1e-12) return kExitMismatch;
  }
  return kExitOk;
}

struct QVerifyArgs {
  std::string public_path;
  std::string secret_path;
  std::optional<std::size_t> r;
  bool dry_run = false;
};

int command_qverify(const Globals& g, const QVerifyArgs& a) {
  const nlohmann::json j = io::read_json(a.public_path);
  if (io::public_kind(j) != "quantum") throw Error(ErrorCode::kFileFormat, "classical bundle: use verify");
  LayeredQuantumSeal seal = io::quantum_public_from_json(j);
  const io::QuantumSecret secret = io::quantum_secret_from_json(io::read_json(a.secret_path));
  const std::size_t r = a.r.value_or(seal.params.n - seal.params.k);
  RandomSource rng(g.seed);
  Table table({"layer", "register", "checked", "mismatches", "verdict"});
  std::size_t broken = 0;
  auto add = [&](const char* layer, std::size_t i, const VerifyReport& rep) {
    broken += rep.intact ? 0 : 1;
    table.add({layer, std::to_string(i), std::to_string(rep.checked.size()), positions_string(rep.mismatches),
               rep.intact ? "intact" : "broken"});
  };
  RandomSource k_rng = rng.child(0);
  for (std::size_t i = 0; i < seal.kseal_register_count(); ++i) {
    RandomSource reg_rng = k_rng.child(i);
    add("key", i, verify_kseal_register(seal, secret.secret, i, r, reg_rng));
  }
  RandomSource c_rng = rng.child(1);
  for (std::size_t i = 0; i < seal.cseal_registers.size(); ++i) {
    RandomSource reg_rng = c_rng.child(i);
    add("plan", i, sender_verify(seal.cseal_registers[i], secret.secret.cseal_records.at(i), r, reg_rng));
  }
  save_public(a.public_path, io::to_json(seal), a.dry_run);
  table.print(std::cout, g.format == "csv");
  std::cout << fmt::format("{} of {} register(s) broken\n", broken,
                           seal.kseal_register_count() + seal.cseal_registers.size());
  return broken ? kExitBroken : kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams:
    case ErrorCode::kOracleCapExceeded:
    case ErrorCode::kPositionOutOfRange:
    case ErrorCode::kRTooLarge:
    case ErrorCode::kCredentialBudgetExceeded:
    case ErrorCode::kCredentialUnknown:
    case ErrorCode::kInvalidShape:
    case ErrorCode::kKeyLengthMismatch:
    case ErrorCode::kPayloadCapExceeded:
      return kExitInvalid;
    default:
      return kExitRuntime;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum seal simulator"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--trials", g.trials, "Monte Carlo trials")->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  app.add_option("--threads", g.threads, "OpenMP threads (0 keeps the runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "csv"}));

  SealArgs seal;
  auto* c_seal = app.add_subcommand("seal", "Seal a classical message");
  auto* msg = c_seal->add_option("--message", seal.message, "Message bits, e.g. 1011");
  c_seal->add_option("--hex", seal.hex, "Message as hex, most significant bit first")->excludes(msg);
  c_seal->add_option("-n,--n", seal.n, "Qubits per register")->required();
  c_seal->add_option("-k,--k", seal.k, "Code qubits per register")->required();
  c_seal->add_option("-s,--shares", seal.shares, "XOR shares per message bit");
  c_seal->add_option("--public", seal.public_path)->required();
  c_seal->add_option("--secret", seal.secret_path)->required();
  c_seal->add_flag("--allow-weak", seal.allow_weak, "Seal even if the length thresholds fail");

  ReadArgs read;
  auto* c_read = app.add_subcommand("read", "Break a classical seal by majority vote");
  c_read->add_option("--public", read.public_path)->required();
  c_read->add_option("--tie-policy", read.tie_policy)->check(CLI::IsMember({"fail", "coin"}));
  c_read->add_flag("--dry-run", read.dry_run, "Write the collapsed bundle to <public>.dry-run instead");

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify", "Check seal qubits for disturbance");
  c_verify->add_option("--public", verify.public_path)->required();
  auto* v_secret = c_verify->add_option("--secret", verify.secret_path, "Sender verification");
  auto* v_creds = c_verify->add_option("--credentials", verify.credentials_path, "Verifier credential file");
  v_secret->excludes(v_creds);
  c_verify->add_option("--verifier", verify.verifier, "Verifier id within the credential file")->needs(v_creds);
  c_verify->add_option("-r,--r", verify.r, "Seal qubits to check (default: all)");
  c_verify->add_flag("--dry-run", verify.dry_run);

  IssueArgs issue;
  auto* c_issue = app.add_subcommand("issue-credentials", "Hand out disjoint seal-qubit subsets to verifiers");
  c_issue->add_option("--secret", issue.secret_path)->required();
  c_issue->add_option("--sizes", issue.sizes, "Credential size per verifier")->required()->delimiter(',');
  c_issue->add_option("-o,--output", issue.output)->required();

  AttackArgs attack;
  auto* c_attack = app.add_subcommand("attack", "Monte Carlo attack campaign");
  c_attack->add_option("--strategy", attack.strategy)->check(CLI::IsMember({"full", "single"}));
  c_attack->add_option("-n,--n", attack.n)->required();
  c_attack->add_option("-k,--k", attack.k)->required();
  c_attack->add_option("--mode", attack.mode)->check(CLI::IsMember({"all", "r", "credentials"}));
  c_attack->add_option("-r,--r", attack.r);
  c_attack->add_option("--sizes", attack.sizes)->delimiter(',');
  c_attack->add_option("-s,--shares", attack.shares)->check(CLI::PositiveNumber);
  c_attack->add_flag("--check", attack.check, "Exit 4 if any rate leaves its 3-sigma band");

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "Hilbert-Schmidt distance sweep");
  c_analyze->add_option("--n-min", analyze.n_min);
  c_analyze->add_option("--n-max", analyze.n_max);
  c_analyze->add_option("--k-rule", analyze.k_rule, "third, all, or a fixed k");
  c_analyze->add_flag("--oracle", analyze.oracle, "Cross-check against dense density matrices");
  c_analyze->add_option("-o,--output", analyze.output, "CSV output path");

  QSealArgs qseal;
  auto* c_qseal = app.add_subcommand("qseal", "Seal a quantum state");
  c_qseal->add_option("--qubits", qseal.qubits, "Payload qubits (random state unless --basis)");
  c_qseal->add_option("--basis", qseal.basis, "Seal the computational basis state with this index");
  c_qseal->add_option("-n,--n", qseal.n)->required();
  c_qseal->add_option("-k,--k", qseal.k)->required();
  c_qseal->add_option("-s,--shares", qseal.shares);
  c_qseal->add_option("--payload-cap", qseal.payload_cap);
  c_qseal->add_option("--public", qseal.public_path)->required();
  c_qseal->add_option("--secret", qseal.secret_path)->required();
  c_qseal->add_flag("--allow-weak", qseal.allow_weak);

  QReadArgs qread;
  auto* c_qread = app.add_subcommand("qread", "Break a layered quantum seal and decrypt");
  c_qread->add_option("--public", qread.public_path)->required();
  c_qread->add_option("--secret", qread.secret_path, "Compare against the sealed plaintext");
  c_qread->add_flag("--dry-run", qread.dry_run);

  QVerifyArgs qverify;
  auto* c_qverify = app.add_subcommand("qverify", "Sender verification of every key and plan seal");
  c_qverify->add_option("--public", qverify.public_path)->required();
  c_qverify->add_option("--secret", qverify.secret_path)->required();
  c_qverify->add_option("-r,--r", qverify.r);
  c_qverify->add_flag("--dry-run", qverify.dry_run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  if (g.threads > 0) omp_set_num_threads(g.threads);
  try {
    if (*c_seal) {
      if (seal.message.empty() && seal.hex.empty()) throw Error(ErrorCode::kInvalidParams, "need --message or --hex");
      return command_seal(g, seal);
    }
    if (*c_read) return command_read(g, read);
    if (*c_verify) {
      if (verify.secret_path.empty() && verify.credentials_path.empty()) {
        throw Error(ErrorCode::kInvalidParams, "need --secret or --credentials");
      }
      return command_verify(g, verify);
    }
    if (*c_issue) return command_issue(g, issue);
    if (*c_attack) return command_attack(g, attack);
    if (*c_analyze) return command_analyze(g, analyze);
    if (*c_qseal) return command_qseal(g, qseal);
    if (*c_qread) return command_qread(g, qread);
    if (*c_qverify) return command_qverify(g, qverify);
  } catch (const Error& e) {
    std::cerr << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitRuntime;
}
