#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "qseal/error.hpp"
#include "qseal/io.hpp"
#include "qseal/sharing.hpp"

namespace qseal {
namespace {

namespace fs = std::filesystem;

void expect_same_amplitudes(const PureState& a, const PureState& b) {
  ASSERT_EQ(a.qubit_count(), b.qubit_count());
  for (std::size_t i = 0; i < a.dimension(); ++i) EXPECT_EQ(a.amplitudes()[i], b.amplitudes()[i]);
}

struct ClassicalFixture {
  io::ClassicalPublic pub;
  io::ClassicalSecret secret;
};

ClassicalFixture make_classical(std::uint64_t seed) {
  RandomSource rng(seed);
  ClassicalFixture out;
  out.secret.message = {1, 0, 1};
  out.pub.params = {9, 3, 0};
  out.pub.s = 2;
  out.pub.message_bits = 3;
  for (auto& m : seal_message(out.secret.message, out.pub.params, 2, rng)) {
    for (std::size_t j = 0; j < 2; ++j) {
      out.pub.registers.push_back(m.registers[j]);
      out.secret.records.push_back(m.records[j]);
    }
  }
  return out;
}

TEST(Amplitudes, Base64RoundTripIsExact) {
  RandomSource rng(1);
  const auto psi = PureState::random(3, rng);
  expect_same_amplitudes(io::decode_amplitudes(3, io::encode_amplitudes(psi)), psi);
  // |0> is (1, 0): 0x3ff0000000000000 then zero, little-endian.
  EXPECT_EQ(io::encode_amplitudes(PureState::basis(1, 0)), "AAAAAAAA8D8AAAAAAAAAAAAAAAAAAAAAAAAAAAAAAAA=");
  EXPECT_THROW(io::decode_amplitudes(2, io::encode_amplitudes(psi)), Error);
  EXPECT_THROW(io::decode_amplitudes(1, "not base64!"), Error);
}

TEST(Classical, RoundTrips) {
  const auto fx = make_classical(2);
  EXPECT_EQ(io::classical_public_from_json(io::to_json(fx.pub)), fx.pub);
  EXPECT_EQ(io::classical_secret_from_json(io::to_json(fx.secret)), fx.secret);
  EXPECT_EQ(io::public_kind(io::to_json(fx.pub)), "classical");
}

TEST(Credentials, RoundTrip) {
  const auto fx = make_classical(3);
  RandomSource rng(4);
  io::CredentialFile file;
  const std::vector<std::size_t> sizes = {2, 1};
  for (std::size_t i = 0; i < fx.secret.records.size(); ++i) {
    for (auto& c : issue_credentials(fx.secret.records[i], sizes, rng)) file.entries.push_back({i, c});
  }
  EXPECT_EQ(io::credentials_from_json(io::to_json(file)), file);
}

TEST(Quantum, RoundTrips) {
  RandomSource rng(5);
  const auto psi = PureState::random(2, rng);
  const auto bundle = seal_quantum(psi, {9, 3, 0}, 2, rng);
  const auto seal = io::quantum_public_from_json(io::to_json(bundle.seal));
  EXPECT_EQ(seal.params, bundle.seal.params);
  EXPECT_EQ(seal.s, bundle.seal.s);
  EXPECT_EQ(seal.payload_qubits, bundle.seal.payload_qubits);
  EXPECT_EQ(seal.plan_bits, bundle.seal.plan_bits);
  EXPECT_EQ(seal.combined, bundle.seal.combined);
  EXPECT_EQ(seal.cseal_registers, bundle.seal.cseal_registers);
  expect_same_amplitudes(seal.encrypted_payload, bundle.seal.encrypted_payload);

  const io::QuantumSecret secret{bundle.secret, psi};
  const auto back = io::quantum_secret_from_json(io::to_json(secret));
  EXPECT_EQ(back.secret.key, bundle.secret.key);
  EXPECT_EQ(back.secret.plan, bundle.secret.plan);
  EXPECT_EQ(back.secret.kseal_records, bundle.secret.kseal_records);
  EXPECT_EQ(back.secret.cseal_records, bundle.secret.cseal_records);
  expect_same_amplitudes(back.plaintext, psi);
  EXPECT_EQ(io::public_kind(io::to_json(bundle.seal)), "quantum");
}

TEST(PublicFiles, CarryNoSecretMaterial) {
  const auto fx = make_classical(6);
  RandomSource rng(7);
  const auto bundle = seal_quantum(PureState::random(1, rng), {9, 3, 0}, 1, rng);
  for (const std::string& text : {io::to_json(fx.pub).dump(), io::to_json(bundle.seal).dump()}) {
    for (const char* marker : {"code_positions", "seal_eigenbits", "code_bit", "kseal_positions", "\"key\"",
                               "\"plan\"", "records", "plaintext", "expected"}) {
      EXPECT_EQ(text.find(marker), std::string::npos) << marker;
    }
  }
  // The secret side does carry them.
  const std::string secret = io::to_json(fx.secret).dump();
  EXPECT_NE(secret.find("code_positions"), std::string::npos);
}

TEST(Headers, WrongDocumentsAreRejected) {
  const auto fx = make_classical(8);
  auto j = io::to_json(fx.pub);
  EXPECT_THROW(io::classical_secret_from_json(j), Error);
  EXPECT_THROW(io::quantum_public_from_json(j), Error);
  j["version"] = 2;
  EXPECT_THROW(io::classical_public_from_json(j), Error);
  EXPECT_THROW(io::public_kind(nlohmann::json::object()), Error);
  auto bad = io::to_json(fx.pub);
  bad["registers"][0] = "01x";
  EXPECT_THROW(io::classical_public_from_json(bad), Error);
}

TEST(Files, WriteReadAndDeterminism) {
  const fs::path dir = fs::temp_directory_path() / "qseal_io_test";
  fs::create_directories(dir);
  const auto a = make_classical(9);
  const auto b = make_classical(9);
  io::write_json(dir / "a.json", io::to_json(a.pub));
  io::write_json(dir / "b.json", io::to_json(b.pub));
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(dir / "a.json"), slurp(dir / "b.json"));
  EXPECT_EQ(io::classical_public_from_json(io::read_json(dir / "a.json")), a.pub);
  EXPECT_THROW(io::read_json(dir / "missing.json"), Error);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace qseal
