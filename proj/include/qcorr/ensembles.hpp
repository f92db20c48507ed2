#pragma once

#include <cstddef>
#include <vector>

#include "qcorr/linalg.hpp"
#include "qcorr/tolerances.hpp"

namespace qcorr {

// Hermitian, positive-semidefinite, unit-trace matrix. The eigensystem is
// computed once at construction and shared by downstream operations.
class DensityOperator {
  public:
    explicit DensityOperator(HermitianOperator op, double trace_eps = tol::eps_trace,
                             double psd_eps = tol::eps_psd);
    explicit DensityOperator(ComplexMatrix m, double trace_eps = tol::eps_trace,
                             double psd_eps = tol::eps_psd);

    const ComplexMatrix& matrix() const { return op_.matrix(); }
    const HermitianOperator& hermitian() const { return op_; }
    std::size_t dim() const { return op_.dim(); }

    const std::vector<double>& eigenvalues() const { return eigen_.values; }  // descending
    const UnitaryOperator& eigenvectors() const { return eigen_.vectors; }
    std::size_t rank(double eps = tol::eps_rank) const;

  private:
    HermitianOperator op_;
    EigenSystem eigen_;
};

struct EnsembleMember {
    double weight;    // in (0, 1]
    PureState state;  // normalized
};

// Weighted list of pure states of equal dimension; weights sum to 1.
class Ensemble {
  public:
    explicit Ensemble(std::vector<EnsembleMember> members,
                      double weight_eps = tol::eps_weight_sum);

    std::size_t size() const { return members_.size(); }
    std::size_t dim() const { return members_.front().state.dim(); }
    const std::vector<EnsembleMember>& members() const { return members_; }
    const EnsembleMember& operator[](std::size_t i) const { return members_[i]; }

  private:
    std::vector<EnsembleMember> members_;
};

// D x d_r matrix relating an ensemble realization to the eigen-ensemble:
// sqrt(q_mu) |psi_mu> = sum_i M(mu,i) sqrt(p_i) |phi_i>. Columns orthonormal.
class MixingMatrix {
  public:
    explicit MixingMatrix(ComplexMatrix m, double eps = tol::eps_unitary);

    const ComplexMatrix& matrix() const { return matrix_; }
    std::size_t ensemble_size() const { return matrix_.rows(); }
    std::size_t rank() const { return matrix_.cols(); }

  private:
    ComplexMatrix matrix_;
};

// W = sum_mu q_mu |psi_mu><psi_mu|
DensityOperator density_from_ensemble(const Ensemble& e);

// Eigenvector ensemble of w, restricted to eigenvalues above rank_eps.
Ensemble eigen_ensemble(const DensityOperator& w, double rank_eps = tol::eps_rank);

// Mixing matrix of a realization e of w. Throws RealizationError when e does
// not mix to w within eps_realization, SupportError when a member state lies
// outside the range of w.
MixingMatrix mixing_matrix(const DensityOperator& w, const Ensemble& e,
                           double realization_eps = tol::eps_realization,
                           double support_eps = tol::eps_support);

}  // namespace qcorr
