#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pdm/errors.hpp"

namespace pdm::numerics {

/// Smallest n_lowest eigenvalues of the symmetric tridiagonal matrix with
/// the given diagonal and off-diagonal, ascending.
///
/// Implicit-shift QL iteration (EISPACK tql1 lineage), eigenvalues only,
/// iteration cap 50 per eigenvalue. All eigenvalues of a real symmetric
/// tridiagonal matrix are real; this never returns complex parts.
///
/// Throws PreconditionError on mismatched lengths or n_lowest > size,
/// ConvergenceFailure past the iteration cap.
std::vector<double> eigen_tridiagonal(std::span<const double> diag,
                                      std::span<const double> offdiag,
                                      std::size_t n_lowest);

/// Eigenvector of the same matrix for a converged eigenvalue, via inverse
/// iteration with partially pivoted tridiagonal elimination. Normalized to
/// unit Euclidean norm; overall sign unspecified.
std::vector<double> tridiagonal_eigenvector(std::span<const double> diag,
                                            std::span<const double> offdiag,
                                            double eigenvalue);

}  // namespace pdm::numerics
