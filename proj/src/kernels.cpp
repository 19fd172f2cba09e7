#include "qseal/kernels.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qseal::kernels {
namespace {

void check_shapes(std::span<const Matrix2> factors, const DensityMatrix& acc) {
  if (factors.size() != acc.qubit_count()) {
    throw std::invalid_argument("factor count does not match matrix qubit count");
  }
}

void check_shapes(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("matrix dimensions differ");
}

// Entry (row, col) of the Kronecker product. Stops at the first zero factor,
// which is what keeps projector/identity products cheap.
inline Complex product_entry(std::span<const Matrix2> factors, std::size_t row, std::size_t col) {
  const std::size_t n = factors.size();
  Complex value{1.0, 0.0};
  for (std::size_t q = 0; q < n; ++q) {
    const std::size_t shift = n - 1 - q;
    const std::size_t r = (row >> shift) & 1U;
    const std::size_t c = (col >> shift) & 1U;
    const Complex f = factors[q][2 * r + c];
    if (f == Complex{}) return Complex{};
    value *= f;
  }
  return value;
}

inline double hs_row(const DensityMatrix& a, const DensityMatrix& b, std::size_t row) {
  const std::size_t dim = a.dimension();
  double sum = 0.0;
  for (std::size_t col = 0; col < dim; ++col) sum += std::norm(a(row, col) - b(row, col));
  return sum;
}

inline Complex trace_product_row(const DensityMatrix& a, const DensityMatrix& b, std::size_t row) {
  const std::size_t dim = a.dimension();
  Complex sum{};
  for (std::size_t k = 0; k < dim; ++k) sum += a(row, k) * b(k, row);
  return sum;
}

}  // namespace

void accumulate_product(std::span<const Matrix2> factors, double weight, DensityMatrix& acc) {
  check_shapes(factors, acc);
  const auto dim = static_cast<std::int64_t>(acc.dimension());
#pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < dim; ++row) {
    for (std::int64_t col = 0; col < dim; ++col) {
      const Complex v = product_entry(factors, static_cast<std::size_t>(row), static_cast<std::size_t>(col));
      if (v != Complex{}) acc(row, col) += weight * v;
    }
  }
}

double hs_distance_squared(const DensityMatrix& a, const DensityMatrix& b) {
  check_shapes(a, b);
  const auto dim = static_cast<std::int64_t>(a.dimension());
  std::vector<double> partial(a.dimension());
#pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < dim; ++row) partial[row] = hs_row(a, b, static_cast<std::size_t>(row));
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

Complex trace_product(const DensityMatrix& a, const DensityMatrix& b) {
  check_shapes(a, b);
  const auto dim = static_cast<std::int64_t>(a.dimension());
  std::vector<Complex> partial(a.dimension());
#pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < dim; ++row) {
    partial[row] = trace_product_row(a, b, static_cast<std::size_t>(row));
  }
  Complex total{};
  for (const Complex& p : partial) total += p;
  return total;
}

namespace serial {

void accumulate_product(std::span<const Matrix2> factors, double weight, DensityMatrix& acc) {
  check_shapes(factors, acc);
  const std::size_t dim = acc.dimension();
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      const Complex v = product_entry(factors, row, col);
      if (v != Complex{}) acc(row, col) += weight * v;
    }
  }
}

double hs_distance_squared(const DensityMatrix& a, const DensityMatrix& b) {
  check_shapes(a, b);
  double total = 0.0;
  for (std::size_t row = 0; row < a.dimension(); ++row) total += hs_row(a, b, row);
  return total;
}

Complex trace_product(const DensityMatrix& a, const DensityMatrix& b) {
  check_shapes(a, b);
  Complex total{};
  for (std::size_t row = 0; row < a.dimension(); ++row) total += trace_product_row(a, b, row);
  return total;
}

}  // namespace serial
}  // namespace qseal::kernels
