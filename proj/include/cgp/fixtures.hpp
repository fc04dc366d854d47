#pragma once

// Named unitary generators used by the CLI and the test suites.

#include <optional>
#include <string_view>
#include <utility>

#include "cgp/ensembles.hpp"
#include "cgp/matrix_core.hpp"

namespace cgp::fixtures {

CMat identity(int d);

/// <l|F|m> = d^{-1/2} exp(2 pi i l m / d) with basis labels l, m = 1..d
/// (stored at row l-1, column m-1).
CMat fourier(int d);

/// n-fold tensor power of the 2x2 Hadamard; d must be a power of two.
CMat hadamard(int d);

/// Fourier matrix with rows `row_a` and `row_b` (0-based) interchanged.
CMat fourier_rowswap(int d, int row_a, int row_b);

CMat random_haar(int d, RngSeed seed);

/// Random permutation matrix times random diagonal phases.
CMat random_permutation_phase(int d, RngSeed seed);

/// Generator lookup by name: identity, fourier, hadamard, fourier-rowswap,
/// random-haar, random-permutation-phase. Throws InputError for unknown names.
CMat by_name(std::string_view name, int d, RngSeed seed = {},
             std::optional<std::pair<int, int>> rows = std::nullopt);

}  // namespace cgp::fixtures
