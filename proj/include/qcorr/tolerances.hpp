#pragma once

namespace qcorr::tol {

// Default numerical tolerances. Every validating constructor and check
// accepts an explicit tolerance argument; these are the defaults.

inline constexpr double eps_norm = 1e-12;         // state vector normalization
inline constexpr double eps_herm = 1e-12;         // hermiticity, max-element norm
inline constexpr double eps_unitary = 1e-10;      // U†U = 1, max-element norm
inline constexpr double eps_eig = 1e-10;          // eigendecomposition residual
inline constexpr double eps_rank = 1e-10;         // eigenvalue > eps_rank counts toward rank
inline constexpr double eps_trace = 1e-12;        // |tr W - 1|
inline constexpr double eps_psd = 1e-10;          // eigenvalues >= -eps_psd
inline constexpr double eps_psd_relaxed = 1e-8;   // reconstruction output
inline constexpr double eps_realization = 1e-8;   // ensemble mixes to W, max-element
inline constexpr double eps_support = 1e-8;       // member state projection residual onto range of W
inline constexpr double eps_gs_skip = 1e-8;       // Gram-Schmidt candidate rejection threshold
inline constexpr double eps_zero_prob = 1e-14;    // outcome treated as impossible below this
inline constexpr double eps_weight_sum = 1e-12;   // ensemble weights sum to 1

}  // namespace qcorr::tol
