#pragma once

#include <span>

#include "qseal/states.hpp"

// Dense kernels behind the density-matrix oracle. Each kernel has an OpenMP
// version in `qseal::kernels` and a plain loop in `qseal::kernels::serial`
// that is kept as the reference. Both versions reduce in the same fixed order
// (row partials first, then rows in index order), so results are bitwise
// identical for any thread count.
namespace qseal::kernels {

// acc += weight * (factors[0] (x) factors[1] (x) ... ); factors[0] acts on
// position 1.
void accumulate_product(std::span<const Matrix2> factors, double weight, DensityMatrix& acc);

// Tr[(a - b)^dagger (a - b)]
double hs_distance_squared(const DensityMatrix& a, const DensityMatrix& b);

// Tr[a b]
Complex trace_product(const DensityMatrix& a, const DensityMatrix& b);

namespace serial {

void accumulate_product(std::span<const Matrix2> factors, double weight, DensityMatrix& acc);
double hs_distance_squared(const DensityMatrix& a, const DensityMatrix& b);
Complex trace_product(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace serial

}  // namespace qseal::kernels
