#include <gtest/gtest.h>

#include <omp.h>

#include <cstring>

#include "qseal/analysis.hpp"
#include "qseal/kernels.hpp"

namespace qseal {
namespace {

bool bitwise_equal(const DensityMatrix& a, const DensityMatrix& b) {
  return a.dimension() == b.dimension() &&
         std::memcmp(a.entries().data(), b.entries().data(), a.entries().size_bytes()) == 0;
}

TEST(Kernels, ParallelAccumulateMatchesSerialReferenceBitwise) {
  const std::vector<Matrix2> factors = {projector(Qubit::plus()), pauli_matrix(Pauli::kY), kIdentity2,
                                        projector(Qubit::one()), pauli_matrix(Pauli::kX)};
  DensityMatrix reference(5);
  kernels::serial::accumulate_product(factors, 0.375, reference);
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    DensityMatrix parallel(5);
    kernels::accumulate_product(factors, 0.375, parallel);
    EXPECT_TRUE(bitwise_equal(parallel, reference)) << threads << " threads";
  }
}

TEST(Kernels, ReductionsIndependentOfThreadCount) {
  const auto rho0 = build_rho(0, 7, 3, 12, Execution::kSerial);
  const auto rho1 = build_rho(1, 7, 3, 12, Execution::kSerial);
  const double reference = kernels::serial::hs_distance_squared(rho0, rho1);
  const Complex ref_trace = kernels::serial::trace_product(rho0, rho1);
  for (int threads : {1, 3, 8}) {
    omp_set_num_threads(threads);
    EXPECT_EQ(kernels::hs_distance_squared(rho0, rho1), reference);
    EXPECT_EQ(kernels::trace_product(rho0, rho1), ref_trace);
    EXPECT_TRUE(bitwise_equal(build_rho(1, 7, 3, 12, Execution::kParallel), rho1));
  }
}

TEST(Kernels, ShapeMismatchThrows) {
  DensityMatrix acc(2);
  const std::vector<Matrix2> one = {kIdentity2};
  EXPECT_THROW(kernels::accumulate_product(one, 1.0, acc), std::invalid_argument);
  EXPECT_THROW(kernels::hs_distance_squared(DensityMatrix(1), DensityMatrix(2)), std::invalid_argument);
}

}  // namespace
}  // namespace qseal
