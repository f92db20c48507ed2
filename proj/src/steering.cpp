#include "qcorr/steering.hpp"

#include <cmath>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

Purification::Purification(PureState state, std::size_t system_dim, std::size_t ancilla_dim)
    : state_(std::move(state)), system_dim_(system_dim), ancilla_dim_(ancilla_dim) {
    if (system_dim_ == 0 || ancilla_dim_ == 0) {
        throw DimensionError("purification factor dimensions must be positive");
    }
    if (state_.dim() != system_dim_ * ancilla_dim_) {
        throw DimensionError("purification state dimension " + std::to_string(state_.dim()) +
                             " is not " + std::to_string(system_dim_) + "x" +
                             std::to_string(ancilla_dim_));
    }
}

std::vector<PureState> Purification::ancilla_reference_basis() const {
    std::vector<PureState> basis;
    basis.reserve(ancilla_dim_);
    for (std::size_t mu = 0; mu < ancilla_dim_; ++mu)
        basis.push_back(PureState::basis_vector(ancilla_dim_, mu));
    return basis;
}

ComplexMatrix Purification::system_density() const {
    return partial_trace(projector(state_), {system_dim_, ancilla_dim_}, {0});
}

SteeringBasis::SteeringBasis(std::vector<PureState> states, Ensemble target, double eps)
    : states_(std::move(states)), target_(std::move(target)) {
    if (states_.size() < target_.size()) {
        throw DimensionError("steering basis smaller than its target ensemble");
    }
    for (std::size_t a = 0; a < states_.size(); ++a) {
        if (states_[a].dim() != states_.size()) {
            throw DimensionError("steering basis states must have dimension equal to the count");
        }
        for (std::size_t b = a; b < states_.size(); ++b) {
            const double want = (a == b) ? 1.0 : 0.0;
            if (std::abs(inner(states_[a], states_[b]) - want) > eps) {
                throw OrthonormalityError("steering basis states are not orthonormal");
            }
        }
    }
}

Purification purify(const DensityOperator& w, std::size_t ancilla_dim) {
    const std::size_t d_r = w.rank();
    if (ancilla_dim < d_r) {
        throw AncillaTooSmallError("ancilla dimension " + std::to_string(ancilla_dim) +
                                   " below rank " + std::to_string(d_r));
    }
    const std::size_t d = w.dim();
    std::vector<Complex> amps(d * ancilla_dim, Complex(0.0, 0.0));
    const auto& vecs = w.eigenvectors().matrix();
    for (std::size_t i = 0; i < d_r; ++i) {
        const double root_p = std::sqrt(w.eigenvalues()[i]);
        for (std::size_t s = 0; s < d; ++s) amps[s * ancilla_dim + i] += root_p * vecs(s, i);
    }
    return Purification(PureState::normalized(std::move(amps)), d, ancilla_dim);
}

SteeringBasis steering_basis(const DensityOperator& w, const Ensemble& target) {
    return steering_basis(w, target, target.size());
}

SteeringBasis steering_basis(const DensityOperator& w, const Ensemble& target,
                             std::size_t ancilla_dim) {
    if (ancilla_dim < target.size()) {
        throw DimensionError("ancilla dimension below target ensemble size");
    }
    const MixingMatrix mixing = mixing_matrix(w, target);
    const std::size_t d_r = mixing.rank();

    // zero rows pad targets smaller than the ancilla; the padded directions
    // come out of the unitary extension and annihilate the purification
    ComplexMatrix columns(ancilla_dim, d_r);
    for (std::size_t mu = 0; mu < target.size(); ++mu)
        for (std::size_t i = 0; i < d_r; ++i) columns(mu, i) = mixing.matrix()(mu, i);
    const UnitaryOperator u = extend_to_unitary(columns);

    // |beta_mu> = sum_nu conj(U(mu,nu)) |alpha_nu> with canonical alpha
    std::vector<PureState> betas;
    betas.reserve(ancilla_dim);
    for (std::size_t mu = 0; mu < ancilla_dim; ++mu) {
        std::vector<Complex> amps(ancilla_dim);
        for (std::size_t nu = 0; nu < ancilla_dim; ++nu)
            amps[nu] = std::conj(u.matrix()(mu, nu));
        betas.push_back(PureState(std::move(amps), 1e-8));
    }
    return SteeringBasis(std::move(betas), target);
}

SteeringOutcome project_ancilla(const Purification& phi, const PureState& ancilla_state,
                                std::size_t index) {
    if (ancilla_state.dim() != phi.ancilla_dim()) {
        throw DimensionError("ancilla state dimension mismatch");
    }
    const std::size_t d = phi.system_dim();
    const std::size_t big_d = phi.ancilla_dim();
    std::vector<Complex> conditional(d, Complex(0.0, 0.0));
    for (std::size_t s = 0; s < d; ++s)
        for (std::size_t a = 0; a < big_d; ++a)
            conditional[s] += phi.state()[s * big_d + a] * std::conj(ancilla_state[a]);

    double probability = 0.0;
    for (const Complex& c : conditional) probability += std::norm(c);

    SteeringOutcome outcome{index, probability, std::nullopt};
    if (probability >= tol::eps_zero_prob) {
        outcome.conditional_state = PureState::normalized(std::move(conditional));
    }
    return outcome;
}

std::vector<SteeringOutcome> steer(const DensityOperator& w, const Ensemble& target) {
    const SteeringBasis basis = steering_basis(w, target);
    const Purification phi = purify(w, basis.size());
    std::vector<SteeringOutcome> outcomes;
    outcomes.reserve(basis.size());
    for (std::size_t mu = 0; mu < basis.size(); ++mu)
        outcomes.push_back(project_ancilla(phi, basis.states()[mu], mu));
    return outcomes;
}

SteeringWitness steering_witness(const DensityOperator& w, const std::vector<Ensemble>& targets) {
    if (targets.empty()) throw DimensionError("witness needs at least one target ensemble");
    std::size_t ancilla_dim = 0;
    for (const Ensemble& t : targets) ancilla_dim = std::max(ancilla_dim, t.size());
    ancilla_dim = std::max(ancilla_dim, w.rank());

    std::vector<SteeringBasis> bases;
    bases.reserve(targets.size());
    for (std::size_t n = 0; n < targets.size(); ++n) {
        try {
            bases.push_back(steering_basis(w, targets[n], ancilla_dim));
        } catch (const RealizationError& err) {
            throw RealizationError("target ensemble " + std::to_string(n) + ": " + err.what());
        }
    }
    return SteeringWitness{purify(w, ancilla_dim), std::move(bases)};
}

std::vector<SteeringOutcome> measure_witness(const SteeringWitness& witness,
                                             std::size_t basis_index) {
    const SteeringBasis& basis = witness.bases.at(basis_index);
    std::vector<SteeringOutcome> outcomes;
    outcomes.reserve(basis.size());
    for (std::size_t mu = 0; mu < basis.size(); ++mu)
        outcomes.push_back(project_ancilla(witness.purification, basis.states()[mu], mu));
    return outcomes;
}

}  // namespace qcorr
