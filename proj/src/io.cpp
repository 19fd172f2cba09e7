#include "qseal/io.hpp"

#include <sodium.h>

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "qseal/error.hpp"

namespace qseal::io {
namespace {

using nlohmann::json;

[[noreturn]] void format_error(const std::string& what) { throw Error(ErrorCode::kFileFormat, what); }

void expect_header(const json& j, const std::string& format, const std::string& kind) {
  if (!j.is_object() || j.value("format", "") != format) format_error("expected a " + format + " document");
  if (j.value("version", -1) != kFormatVersion) format_error("unsupported version");
  if (j.value("kind", "") != kind) format_error("expected kind '" + kind + "'");
}

json header(const std::string& format, const std::string& kind) {
  return json{{"format", format}, {"version", kFormatVersion}, {"kind", kind}};
}

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    format_error(std::string("field '") + key + "': " + e.what());
  }
}

json params_json(const SealParams& p) { return json{{"n", p.n}, {"k", p.k}, {"r", p.r}}; }

SealParams params_from(const json& j) {
  return {field<std::size_t>(j, "n"), field<std::size_t>(j, "k"), field<std::size_t>(j, "r")};
}

json record_json(const PreparationRecord& r) {
  json seals = json::array();
  for (const auto& [p, bit] : r.seal_eigenbits) seals.push_back(json::array({p, bit}));
  return json{{"n", r.n}, {"code_bit", r.code_bit}, {"code_positions", r.code_positions}, {"seal_eigenbits", seals}};
}

PreparationRecord record_from(const json& j) {
  PreparationRecord r;
  r.n = field<std::size_t>(j, "n");
  r.code_bit = field<unsigned>(j, "code_bit");
  r.code_positions = field<std::vector<Position>>(j, "code_positions");
  for (const auto& pair : field<std::vector<std::pair<Position, unsigned>>>(j, "seal_eigenbits")) {
    r.seal_eigenbits.emplace(pair.first, pair.second);
  }
  return r;
}

json registers_json(const std::vector<QubitRegister>& regs) {
  json out = json::array();
  for (const auto& r : regs) out.push_back(r.to_string());
  return out;
}

std::vector<QubitRegister> registers_from(const json& j, const char* key) {
  std::vector<QubitRegister> out;
  for (const auto& s : field<std::vector<std::string>>(j, key)) out.push_back(QubitRegister::from_string(s));
  return out;
}

json amplitudes_json(const PureState& state) {
  return json{{"qubits", state.qubit_count()},
              {"encoding", "base64"},
              {"layout", "interleaved-real-imag-binary64"},
              {"endianness", "little"},
              {"data", encode_amplitudes(state)}};
}

PureState amplitudes_from(const json& j) {
  if (j.value("endianness", "") != "little" || j.value("encoding", "") != "base64") {
    format_error("amplitude block must be little-endian base64");
  }
  return decode_amplitudes(field<std::size_t>(j, "qubits"), field<std::string>(j, "data"));
}

void ensure_sodium() {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw std::runtime_error("libsodium failed to initialise");
}

}  // namespace

std::string encode_amplitudes(const PureState& state) {
  ensure_sodium();
  std::vector<unsigned char> bytes;
  bytes.reserve(state.dimension() * 16);
  auto put = [&bytes](double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<unsigned char>(bits >> (8 * i)));
  };
  for (const Complex& a : state.amplitudes()) {
    put(a.real());
    put(a.imag());
  }
  std::string out(sodium_base64_ENCODED_LEN(bytes.size(), sodium_base64_VARIANT_ORIGINAL), '\0');
  sodium_bin2base64(out.data(), out.size(), bytes.data(), bytes.size(), sodium_base64_VARIANT_ORIGINAL);
  out.resize(out.size() - 1);  // trailing NUL
  return out;
}

PureState decode_amplitudes(std::size_t qubit_count, const std::string& base64) {
  ensure_sodium();
  if (qubit_count > 30) format_error("payload too large");
  const std::size_t dim = std::size_t{1} << qubit_count;
  std::vector<unsigned char> bytes(dim * 16);
  std::size_t written = 0;
  if (sodium_base642bin(bytes.data(), bytes.size(), base64.data(), base64.size(), nullptr, &written, nullptr,
                        sodium_base64_VARIANT_ORIGINAL) != 0 ||
      written != bytes.size()) {
    format_error("malformed amplitude block");
  }
  auto get = [&bytes](std::size_t offset) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[offset + i]) << (8 * i);
    return std::bit_cast<double>(bits);
  };
  std::vector<Complex> amps(dim);
  for (std::size_t i = 0; i < dim; ++i) amps[i] = {get(16 * i), get(16 * i + 8)};
  try {
    return PureState(qubit_count, std::move(amps));
  } catch (const std::invalid_argument& e) {
    format_error(e.what());
  }
}

json to_json(const ClassicalPublic& bundle) {
  json j = header("qseal.public", "classical");
  j["params"] = params_json(bundle.params);
  j["shares"] = bundle.s;
  j["message_bits"] = bundle.message_bits;
  j["register_order"] = "bit-major,share-minor";
  j["registers"] = registers_json(bundle.registers);
  return j;
}

json to_json(const ClassicalSecret& secret) {
  json j = header("qseal.secret", "classical");
  j["message"] = secret.message;
  json records = json::array();
  for (const auto& r : secret.records) records.push_back(record_json(r));
  j["records"] = records;
  return j;
}

json to_json(const CredentialFile& credentials) {
  json j = header("qseal.credentials", "classical");
  json entries = json::array();
  for (const auto& e : credentials.entries) {
    json expected = json::array();
    for (const auto& [p, bit] : e.credential.expected) expected.push_back(json::array({p, bit}));
    entries.push_back(json{{"verifier", e.credential.verifier_id}, {"register", e.register_index}, {"expected", expected}});
  }
  j["entries"] = entries;
  return j;
}

json to_json(const LayeredQuantumSeal& seal) {
  json j = header("qseal.public", "quantum");
  j["params"] = params_json(seal.params);
  j["shares"] = seal.s;
  j["payload_qubits"] = seal.payload_qubits;
  j["plan_bits"] = seal.plan_bits;
  j["payload"] = amplitudes_json(seal.encrypted_payload);
  std::string combined;
  combined.reserve(seal.combined.size());
  for (const CombinedSlot& slot : seal.combined) combined.push_back(slot.payload ? 'P' : slot.qubit.symbol());
  j["combined"] = combined;
  j["cseal_registers"] = registers_json(seal.cseal_registers);
  return j;
}

json to_json(const QuantumSecret& qs) {
  json j = header("qseal.secret", "quantum");
  j["key"] = qs.secret.key.bits;
  j["plan"] = json{{"combined_length", qs.secret.plan.combined_length},
                   {"kseal_positions", qs.secret.plan.kseal_positions}};
  json kseal = json::array();
  for (const auto& r : qs.secret.kseal_records) kseal.push_back(record_json(r));
  json cseal = json::array();
  for (const auto& r : qs.secret.cseal_records) cseal.push_back(record_json(r));
  j["kseal_records"] = kseal;
  j["cseal_records"] = cseal;
  j["plaintext"] = amplitudes_json(qs.plaintext);
  return j;
}

ClassicalPublic classical_public_from_json(const json& j) {
  expect_header(j, "qseal.public", "classical");
  ClassicalPublic out;
  out.params = params_from(field<json>(j, "params"));
  out.s = field<std::size_t>(j, "shares");
  out.message_bits = field<std::size_t>(j, "message_bits");
  out.registers = registers_from(j, "registers");
  if (out.registers.size() != out.s * out.message_bits) format_error("register count != shares * message bits");
  for (const auto& r : out.registers) {
    if (r.size() != out.params.n) format_error("register length does not match n");
  }
  return out;
}

ClassicalSecret classical_secret_from_json(const json& j) {
  expect_header(j, "qseal.secret", "classical");
  ClassicalSecret out;
  out.message = field<std::vector<unsigned>>(j, "message");
  for (const auto& r : field<json>(j, "records")) out.records.push_back(record_from(r));
  return out;
}

CredentialFile credentials_from_json(const json& j) {
  expect_header(j, "qseal.credentials", "classical");
  CredentialFile out;
  for (const auto& e : field<json>(j, "entries")) {
    CredentialEntry entry;
    entry.register_index = field<std::size_t>(e, "register");
    entry.credential.verifier_id = field<std::string>(e, "verifier");
    for (const auto& pair : field<std::vector<std::pair<Position, unsigned>>>(e, "expected")) {
      entry.credential.expected.emplace(pair.first, pair.second);
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

LayeredQuantumSeal quantum_public_from_json(const json& j) {
  expect_header(j, "qseal.public", "quantum");
  LayeredQuantumSeal seal;
  seal.params = params_from(field<json>(j, "params"));
  seal.s = field<std::size_t>(j, "shares");
  seal.payload_qubits = field<std::size_t>(j, "payload_qubits");
  seal.plan_bits = field<std::size_t>(j, "plan_bits");
  seal.encrypted_payload = amplitudes_from(field<json>(j, "payload"));
  for (char c : field<std::string>(j, "combined")) {
    seal.combined.push_back(c == 'P' ? CombinedSlot{true, Qubit{}} : CombinedSlot{false, Qubit::from_symbol(c)});
  }
  seal.cseal_registers = registers_from(j, "cseal_registers");
  if (seal.encrypted_payload.qubit_count() != seal.payload_qubits ||
      seal.combined.size() != seal.payload_qubits + seal.kseal_qubit_count() ||
      seal.cseal_registers.size() != seal.plan_bits * seal.s) {
    format_error("inconsistent quantum seal dimensions");
  }
  return seal;
}

QuantumSecret quantum_secret_from_json(const json& j) {
  expect_header(j, "qseal.secret", "quantum");
  QuantumSecret out;
  out.secret.key.bits = field<std::vector<unsigned>>(j, "key");
  const json plan = field<json>(j, "plan");
  out.secret.plan.combined_length = field<std::size_t>(plan, "combined_length");
  out.secret.plan.kseal_positions = field<std::vector<Position>>(plan, "kseal_positions");
  for (const auto& r : field<json>(j, "kseal_records")) out.secret.kseal_records.push_back(record_from(r));
  for (const auto& r : field<json>(j, "cseal_records")) out.secret.cseal_records.push_back(record_from(r));
  out.plaintext = amplitudes_from(field<json>(j, "plaintext"));
  return out;
}

std::string public_kind(const json& j) {
  if (!j.is_object() || j.value("format", "") != "qseal.public") format_error("not a qseal public file");
  const std::string kind = j.value("kind", "");
  if (kind != "classical" && kind != "quantum") format_error("unknown public kind '" + kind + "'");
  return kind;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) format_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    format_error(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) format_error("cannot write " + tmp.string());
    out << j.dump(2) << '\n';
    if (!out) format_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qseal::io
