#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "qseal/quantum_seal.hpp"
#include "qseal/seal.hpp"
#include "qseal/states.hpp"

// On-disk formats. Every file is a JSON document with "format", "version" and
// "kind" fields. Registers are symbol strings over {0, 1, +, -}, one symbol per
// qubit, position 1 first. Amplitude blocks are base64 of interleaved
// (real, imag) IEEE-754 binary64 values in little-endian byte order.
//
// Public files model the physical qubits and never carry preparation records,
// keys or plans; those live in the secret file.
namespace qseal::io {

inline constexpr int kFormatVersion = 1;

struct ClassicalPublic {
  SealParams params;
  std::size_t s = 1;
  std::size_t message_bits = 0;
  std::vector<QubitRegister> registers;  // bit-major, share-minor

  friend bool operator==(const ClassicalPublic&, const ClassicalPublic&) = default;
};

struct ClassicalSecret {
  std::vector<unsigned> message;
  std::vector<PreparationRecord> records;  // parallel to ClassicalPublic::registers

  friend bool operator==(const ClassicalSecret&, const ClassicalSecret&) = default;
};

// One verifier's credentials across the registers of a bundle.
struct CredentialEntry {
  std::size_t register_index = 0;
  VerifierCredential credential;

  friend bool operator==(const CredentialEntry&, const CredentialEntry&) = default;
};

struct CredentialFile {
  std::vector<CredentialEntry> entries;

  friend bool operator==(const CredentialFile&, const CredentialFile&) = default;
};

struct QuantumSecret {
  QuantumSealSecret secret;
  PureState plaintext = PureState::basis(0, 0);
};

std::string encode_amplitudes(const PureState& state);
PureState decode_amplitudes(std::size_t qubit_count, const std::string& base64);

nlohmann::json to_json(const ClassicalPublic& bundle);
nlohmann::json to_json(const ClassicalSecret& secret);
nlohmann::json to_json(const CredentialFile& credentials);
nlohmann::json to_json(const LayeredQuantumSeal& seal);
nlohmann::json to_json(const QuantumSecret& secret);

ClassicalPublic classical_public_from_json(const nlohmann::json& j);
ClassicalSecret classical_secret_from_json(const nlohmann::json& j);
CredentialFile credentials_from_json(const nlohmann::json& j);
LayeredQuantumSeal quantum_public_from_json(const nlohmann::json& j);
QuantumSecret quantum_secret_from_json(const nlohmann::json& j);

// "classical" or "quantum"; throws FileFormat for anything unrecognised.
std::string public_kind(const nlohmann::json& j);

nlohmann::json read_json(const std::filesystem::path& path);
// Writes through a temporary file and renames, so a failed write never leaves
// a half-written bundle.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace qseal::io
