#include "qcorr/ensembles.hpp"

#include <cmath>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

DensityOperator::DensityOperator(HermitianOperator op, double trace_eps, double psd_eps)
    : op_(std::move(op)), eigen_(hermitian_eig(op_)) {
    const double tr = op_.matrix().trace().real();
    if (std::abs(tr - 1.0) > trace_eps) {
        throw PhysicalityError("trace " + std::to_string(tr) + " is not 1 within " +
                               std::to_string(trace_eps));
    }
    const double min_eig = eigen_.values.back();
    if (min_eig < -psd_eps) {
        throw PhysicalityError("negative eigenvalue " + std::to_string(min_eig) +
                               " below -" + std::to_string(psd_eps));
    }
}

DensityOperator::DensityOperator(ComplexMatrix m, double trace_eps, double psd_eps)
    : DensityOperator(HermitianOperator(std::move(m)), trace_eps, psd_eps) {}

std::size_t DensityOperator::rank(double eps) const {
    std::size_t r = 0;
    for (double v : eigen_.values)
        if (v > eps) ++r;
    return r;
}

Ensemble::Ensemble(std::vector<EnsembleMember> members, double weight_eps)
    : members_(std::move(members)) {
    if (members_.empty()) throw DimensionError("ensemble must have at least one member");
    const std::size_t d = members_.front().state.dim();
    double sum = 0.0;
    for (const EnsembleMember& m : members_) {
        if (m.state.dim() != d) throw DimensionError("ensemble members have mixed dimensions");
        if (!(m.weight > 0.0)) throw DomainError("ensemble weights must be positive");
        sum += m.weight;
    }
    if (std::abs(sum - 1.0) > weight_eps) {
        throw DomainError("ensemble weights sum to " + std::to_string(sum));
    }
}

MixingMatrix::MixingMatrix(ComplexMatrix m, double eps) : matrix_(std::move(m)) {
    if (matrix_.cols() > matrix_.rows()) {
        throw DimensionError("mixing matrix needs at least as many rows as columns");
    }
    for (std::size_t a = 0; a < matrix_.cols(); ++a) {
        for (std::size_t b = a; b < matrix_.cols(); ++b) {
            Complex g = 0.0;
            for (std::size_t mu = 0; mu < matrix_.rows(); ++mu)
                g += matrix_(mu, a) * std::conj(matrix_(mu, b));
            const double want = (a == b) ? 1.0 : 0.0;
            if (std::abs(g - want) > eps) {
                throw OrthonormalityError("mixing matrix columns deviate from orthonormality by " +
                                          std::to_string(std::abs(g - want)));
            }
        }
    }
}

DensityOperator density_from_ensemble(const Ensemble& e) {
    const std::size_t d = e.dim();
    ComplexMatrix w(d, d);
    for (const EnsembleMember& m : e.members()) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                w(i, j) += m.weight * m.state[i] * std::conj(m.state[j]);
    }
    // roundoff cleanup so the result passes strict hermiticity checks
    for (std::size_t i = 0; i < d; ++i) {
        w(i, i) = Complex(w(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < d; ++j) {
            const Complex avg = 0.5 * (w(i, j) + std::conj(w(j, i)));
            w(i, j) = avg;
            w(j, i) = std::conj(avg);
        }
    }
    return DensityOperator(std::move(w));
}

Ensemble eigen_ensemble(const DensityOperator& w, double rank_eps) {
    std::vector<EnsembleMember> members;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        const double p = w.eigenvalues()[i];
        if (p <= rank_eps) break;  // descending order
        members.push_back({p, w.eigenvectors().column(i)});
    }
    // eigenvalues of a unit-trace PSD matrix sum to 1; renormalize away the
    // discarded sub-threshold tail so the Ensemble invariant holds exactly
    double sum = 0.0;
    for (const EnsembleMember& m : members) sum += m.weight;
    for (EnsembleMember& m : members) m.weight /= sum;
    return Ensemble(std::move(members));
}

MixingMatrix mixing_matrix(const DensityOperator& w, const Ensemble& e, double realization_eps,
                           double support_eps) {
    if (e.dim() != w.dim()) throw DimensionError("ensemble dimension does not match density matrix");

    const double defect = max_abs_diff(density_from_ensemble(e).matrix(), w.matrix());
    if (defect > realization_eps) {
        throw RealizationError("ensemble mixes to a matrix deviating from the target by " +
                               std::to_string(defect));
    }

    const std::size_t d_r = w.rank();
    const std::size_t big_d = e.size();
    const auto& vecs = w.eigenvectors().matrix();

    ComplexMatrix m(big_d, d_r);
    for (std::size_t mu = 0; mu < big_d; ++mu) {
        const EnsembleMember& member = e[mu];
        const double root_q = std::sqrt(member.weight);
        double in_support = 0.0;
        for (std::size_t i = 0; i < d_r; ++i) {
            Complex overlap = 0.0;  // <phi_i|psi_mu>
            for (std::size_t k = 0; k < w.dim(); ++k)
                overlap += std::conj(vecs(k, i)) * member.state[k];
            in_support += std::norm(overlap);
            m(mu, i) = overlap * root_q / std::sqrt(w.eigenvalues()[i]);
        }
        if (1.0 - in_support > support_eps) {
            throw SupportError("ensemble member " + std::to_string(mu) +
                               " lies outside the range of the density matrix (residual " +
                               std::to_string(1.0 - in_support) + ")");
        }
    }
    return MixingMatrix(std::move(m));
}

}  // namespace qcorr
