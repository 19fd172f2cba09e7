#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qseal/random.hpp"

namespace qseal {

using Complex = std::complex<double>;

// Qubit coordinates are 1-based throughout the public API. In every dense
// representation position 1 is the most significant bit of the basis index.
using Position = std::size_t;

enum class Axis : std::uint8_t {
  kComputational,  // Z eigenbasis {|0>, |1>}
  kDiagonal,       // X eigenbasis {|+>, |->}
};

// One of the four honest-protocol states |0>, |1>, |+>, |->. For the diagonal
// axis eigenbit 0 is |+> and eigenbit 1 is |->. Global phase is not tracked.
struct Qubit {
  Axis axis = Axis::kComputational;
  unsigned eigenbit = 0;

  static constexpr Qubit zero() { return {Axis::kComputational, 0}; }
  static constexpr Qubit one() { return {Axis::kComputational, 1}; }
  static constexpr Qubit plus() { return {Axis::kDiagonal, 0}; }
  static constexpr Qubit minus() { return {Axis::kDiagonal, 1}; }

  // '0', '1', '+', '-'
  char symbol() const noexcept;
  static Qubit from_symbol(char c);

  friend bool operator==(const Qubit&, const Qubit&) = default;
};

struct Measurement {
  unsigned outcome;
  Qubit collapsed;
};

// Projective measurement along `axis`. Same-axis measurement is deterministic
// and draws nothing from `rng`; cross-axis measurement draws one fair bit.
Measurement measure(const Qubit& qubit, Axis axis, RandomSource& rng);

class QubitRegister {
 public:
  QubitRegister() = default;
  explicit QubitRegister(std::vector<Qubit> qubits) : qubits_(std::move(qubits)) {}

  std::size_t size() const noexcept { return qubits_.size(); }
  bool empty() const noexcept { return qubits_.empty(); }

  const Qubit& at(Position position) const;
  Qubit& at(Position position);

  // Measures and collapses the qubit at `position`.
  unsigned measure(Position position, Axis axis, RandomSource& rng);

  std::span<const Qubit> qubits() const noexcept { return qubits_; }
  auto begin() const noexcept { return qubits_.begin(); }
  auto end() const noexcept { return qubits_.end(); }

  std::string to_string() const;
  static QubitRegister from_string(std::string_view symbols);

  friend bool operator==(const QubitRegister&, const QubitRegister&) = default;

 private:
  std::vector<Qubit> qubits_;
};

enum class Pauli : std::uint8_t { kI, kX, kY, kZ };

// Dense n-qubit pure state.
class PureState {
 public:
  PureState(std::size_t qubit_count, std::vector<Complex> amplitudes);

  static PureState basis(std::size_t qubit_count, std::size_t index);
  static PureState from_qubit(const Qubit& qubit);
  // Haar-random state from normalized complex Gaussian amplitudes.
  static PureState random(std::size_t qubit_count, RandomSource& rng);

  std::size_t qubit_count() const noexcept { return qubit_count_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }

  double norm_squared() const noexcept;

  // Computational-basis measurement of one qubit with collapse.
  unsigned measure(Position position, RandomSource& rng);

 private:
  std::size_t qubit_count_;
  std::vector<Complex> amplitudes_;
};

PureState apply_pauli(const PureState& state, Position position, Pauli pauli);
void apply_pauli_inplace(PureState& state, Position position, Pauli pauli);

// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

using Matrix2 = std::array<Complex, 4>;  // row-major 2x2

Matrix2 projector(const Qubit& qubit);
Matrix2 pauli_matrix(Pauli pauli);
inline constexpr Matrix2 kIdentity2{Complex{1}, Complex{0}, Complex{0}, Complex{1}};

// Dense 2^n x 2^n operator, row-major.
class DensityMatrix {
 public:
  explicit DensityMatrix(std::size_t qubit_count);

  static DensityMatrix from_pure(const PureState& state);

  std::size_t qubit_count() const noexcept { return qubit_count_; }
  std::size_t dimension() const noexcept { return dimension_; }

  Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dimension_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dimension_ + col];
  }
  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  Complex trace() const;
  double purity() const;
  bool is_hermitian(double tolerance = 1e-12) const;
  double min_eigenvalue() const;
  // Hermitian, unit trace, and positive semidefinite within the given
  // tolerances.
  bool is_valid_state(double tolerance = 1e-12, double eigen_tolerance = 1e-10) const;

  // <phi|rho|phi> for a product state phi.
  double expectation(const QubitRegister& product_state) const;

 private:
  std::size_t qubit_count_;
  std::size_t dimension_;
  std::vector<Complex> entries_;
};

// Default dense-oracle limit, overridable through QSEAL_ORACLE_CAP.
inline constexpr std::size_t kDefaultOracleCap = 12;
std::size_t oracle_cap();

DensityMatrix register_to_density(const QubitRegister& reg, std::size_t cap = oracle_cap());

}  // namespace qseal
