#include "qseal/states.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "qseal/error.hpp"
#include "qseal/kernels.hpp"

namespace qseal {
namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

std::size_t bit_shift(std::size_t qubit_count, Position position) { return qubit_count - position; }

void check_position(std::size_t qubit_count, Position position) {
  if (position < 1 || position > qubit_count) {
    throw Error(ErrorCode::kPositionOutOfRange,
                "position " + std::to_string(position) + " outside 1.." + std::to_string(qubit_count));
  }
}

}  // namespace

char Qubit::symbol() const noexcept {
  if (axis == Axis::kComputational) return eigenbit ? '1' : '0';
  return eigenbit ? '-' : '+';
}

Qubit Qubit::from_symbol(char c) {
  switch (c) {
    case '0': return zero();
    case '1': return one();
    case '+': return plus();
    case '-': return minus();
    default: throw Error(ErrorCode::kFileFormat, std::string("unknown qubit symbol '") + c + "'");
  }
}

Measurement measure(const Qubit& qubit, Axis axis, RandomSource& rng) {
  if (qubit.axis == axis) return {qubit.eigenbit, qubit};
  const unsigned outcome = rng.bit();
  return {outcome, Qubit{axis, outcome}};
}

const Qubit& QubitRegister::at(Position position) const {
  check_position(qubits_.size(), position);
  return qubits_[position - 1];
}

Qubit& QubitRegister::at(Position position) {
  check_position(qubits_.size(), position);
  return qubits_[position - 1];
}

unsigned QubitRegister::measure(Position position, Axis axis, RandomSource& rng) {
  Qubit& q = at(position);
  const Measurement m = qseal::measure(q, axis, rng);
  q = m.collapsed;
  return m.outcome;
}

std::string QubitRegister::to_string() const {
  std::string out;
  out.reserve(qubits_.size());
  for (const Qubit& q : qubits_) out.push_back(q.symbol());
  return out;
}

QubitRegister QubitRegister::from_string(std::string_view symbols) {
  std::vector<Qubit> qubits;
  qubits.reserve(symbols.size());
  for (char c : symbols) qubits.push_back(Qubit::from_symbol(c));
  return QubitRegister(std::move(qubits));
}

PureState::PureState(std::size_t qubit_count, std::vector<Complex> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
  if (qubit_count_ >= 8 * sizeof(std::size_t) || amplitudes_.size() != (std::size_t{1} << qubit_count_)) {
    throw std::invalid_argument("amplitude count must be 2^qubit_count");
  }
  if (std::abs(norm_squared() - 1.0) > 1e-12) throw std::invalid_argument("state is not normalized");
}

PureState PureState::basis(std::size_t qubit_count, std::size_t index) {
  std::vector<Complex> amps(std::size_t{1} << qubit_count);
  amps.at(index) = 1.0;
  return PureState(qubit_count, std::move(amps));
}

PureState PureState::from_qubit(const Qubit& qubit) {
  if (qubit.axis == Axis::kComputational) return basis(1, qubit.eigenbit);
  const double sign = qubit.eigenbit ? -1.0 : 1.0;
  return PureState(1, {kInvSqrt2, sign * kInvSqrt2});
}

PureState PureState::random(std::size_t qubit_count, RandomSource& rng) {
  std::vector<Complex> amps(std::size_t{1} << qubit_count);
  double norm = 0.0;
  for (Complex& a : amps) {
    const double re = rng.normal();
    const double im = rng.normal();
    a = {re, im};
    norm += re * re + im * im;
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (Complex& a : amps) a *= scale;
  return PureState(qubit_count, std::move(amps));
}

double PureState::norm_squared() const noexcept {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

unsigned PureState::measure(Position position, RandomSource& rng) {
  check_position(qubit_count_, position);
  const std::size_t mask = std::size_t{1} << bit_shift(qubit_count_, position);
  double p1 = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & mask) p1 += std::norm(amplitudes_[i]);
  }
  const unsigned outcome = rng.unit() < p1 ? 1U : 0U;
  const double kept = outcome ? p1 : 1.0 - p1;
  const double scale = 1.0 / std::sqrt(kept);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    const bool is_one = (i & mask) != 0;
    amplitudes_[i] = (is_one == (outcome == 1U)) ? amplitudes_[i] * scale : Complex{};
  }
  return outcome;
}

void apply_pauli_inplace(PureState& state, Position position, Pauli pauli) {
  check_position(state.qubit_count(), position);
  if (pauli == Pauli::kI) return;
  const std::size_t mask = std::size_t{1} << bit_shift(state.qubit_count(), position);
  auto amps = state.amplitudes();
  const Complex i_unit{0.0, 1.0};
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & mask) continue;
    Complex& a0 = amps[idx];
    Complex& a1 = amps[idx | mask];
    switch (pauli) {
      case Pauli::kX: std::swap(a0, a1); break;
      case Pauli::kY: {
        // Y = [[0, -i], [i, 0]]
        const Complex n0 = -i_unit * a1;
        const Complex n1 = i_unit * a0;
        a0 = n0;
        a1 = n1;
        break;
      }
      case Pauli::kZ: a1 = -a1; break;
      case Pauli::kI: break;
    }
  }
}

PureState apply_pauli(const PureState& state, Position position, Pauli pauli) {
  PureState out = state;
  apply_pauli_inplace(out, position, pauli);
  return out;
}

double fidelity(const PureState& a, const PureState& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("fidelity of states with different sizes");
  Complex overlap{};
  for (std::size_t i = 0; i < a.dimension(); ++i) overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  return std::norm(overlap);
}

Matrix2 projector(const Qubit& qubit) {
  if (qubit.axis == Axis::kComputational) {
    return qubit.eigenbit ? Matrix2{0.0, 0.0, 0.0, 1.0} : Matrix2{1.0, 0.0, 0.0, 0.0};
  }
  const double off = qubit.eigenbit ? -0.5 : 0.5;
  return Matrix2{0.5, off, off, 0.5};
}

Matrix2 pauli_matrix(Pauli pauli) {
  switch (pauli) {
    case Pauli::kX: return {0.0, 1.0, 1.0, 0.0};
    case Pauli::kY: return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0};
    case Pauli::kZ: return {1.0, 0.0, 0.0, -1.0};
    case Pauli::kI: break;
  }
  return kIdentity2;
}

DensityMatrix::DensityMatrix(std::size_t qubit_count)
    : qubit_count_(qubit_count),
      dimension_(std::size_t{1} << qubit_count),
      entries_(dimension_ * dimension_) {}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
  DensityMatrix rho(state.qubit_count());
  const auto amps = state.amplitudes();
  for (std::size_t r = 0; r < rho.dimension(); ++r) {
    for (std::size_t c = 0; c < rho.dimension(); ++c) rho(r, c) = amps[r] * std::conj(amps[c]);
  }
  return rho;
}

Complex DensityMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < dimension_; ++i) t += (*this)(i, i);
  return t;
}

double DensityMatrix::purity() const { return kernels::trace_product(*this, *this).real(); }

bool DensityMatrix::is_hermitian(double tolerance) const {
  for (std::size_t r = 0; r < dimension_; ++r) {
    for (std::size_t c = r; c < dimension_; ++c) {
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) return false;
    }
  }
  return true;
}

double DensityMatrix::min_eigenvalue() const {
  const auto dim = static_cast<Eigen::Index>(dimension_);
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = (*this)(r, c);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

bool DensityMatrix::is_valid_state(double tolerance, double eigen_tolerance) const {
  return is_hermitian(tolerance) && std::abs(trace() - Complex{1.0}) <= tolerance &&
         min_eigenvalue() >= -eigen_tolerance;
}

double DensityMatrix::expectation(const QubitRegister& product_state) const {
  if (product_state.size() != qubit_count_) throw std::invalid_argument("product state size mismatch");
  std::vector<Complex> phi{Complex{1.0}};
  for (const Qubit& q : product_state) {
    const PureState single = PureState::from_qubit(q);
    std::vector<Complex> next;
    next.reserve(phi.size() * 2);
    for (const Complex& a : phi) {
      next.push_back(a * single.amplitudes()[0]);
      next.push_back(a * single.amplitudes()[1]);
    }
    phi = std::move(next);
  }
  Complex value{};
  for (std::size_t r = 0; r < dimension_; ++r) {
    for (std::size_t c = 0; c < dimension_; ++c) value += std::conj(phi[r]) * (*this)(r, c) * phi[c];
  }
  return value.real();
}

std::size_t oracle_cap() {
  if (const char* env = std::getenv("QSEAL_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      // fall through to default on garbage
    }
  }
  return kDefaultOracleCap;
}

DensityMatrix register_to_density(const QubitRegister& reg, std::size_t cap) {
  if (reg.size() > cap) {
    throw Error(ErrorCode::kOracleCapExceeded,
                "register of " + std::to_string(reg.size()) + " qubits exceeds dense cap " + std::to_string(cap));
  }
  std::vector<Matrix2> factors;
  factors.reserve(reg.size());
  for (const Qubit& q : reg) factors.push_back(projector(q));
  DensityMatrix rho(reg.size());
  kernels::accumulate_product(factors, 1.0, rho);
  return rho;
}

}  // namespace qseal
