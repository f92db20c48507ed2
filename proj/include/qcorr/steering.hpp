#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qcorr/ensembles.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

// Bipartite pure state on system (x) ancilla whose ancilla partial trace is a
// given density matrix. Amplitude layout: index = s * ancilla_dim + a. The
// ancilla reference basis is canonical.
class Purification {
  public:
    Purification(PureState state, std::size_t system_dim, std::size_t ancilla_dim);

    const PureState& state() const { return state_; }
    std::size_t system_dim() const { return system_dim_; }
    std::size_t ancilla_dim() const { return ancilla_dim_; }

    std::vector<PureState> ancilla_reference_basis() const;

    // Partial trace over the ancilla.
    ComplexMatrix system_density() const;

  private:
    PureState state_;
    std::size_t system_dim_;
    std::size_t ancilla_dim_;
};

// Orthonormal ancilla measurement basis together with the ensemble it
// remotely prepares. Entries past the target size are padding directions
// with zero outcome probability.
class SteeringBasis {
  public:
    SteeringBasis(std::vector<PureState> states, Ensemble target,
                  double eps = tol::eps_unitary);

    const std::vector<PureState>& states() const { return states_; }
    const Ensemble& target() const { return target_; }
    std::size_t size() const { return states_.size(); }

  private:
    std::vector<PureState> states_;
    Ensemble target_;
};

struct SteeringOutcome {
    std::size_t index;
    double probability;
    // Empty when probability < tol::eps_zero_prob (renormalization undefined).
    std::optional<PureState> conditional_state;
};

// Schmidt-form purification |Phi> = sum_i sqrt(p_i) |phi_i> (x) |alpha_i| with
// canonical ancilla vectors. Throws AncillaTooSmallError when ancilla_dim <
// rank(w).
Purification purify(const DensityOperator& w, std::size_t ancilla_dim);

// Ancilla basis whose measurement on the shared purification prepares the
// target realization. ancilla_dim defaults to the target size; larger values
// pad with extension directions of zero probability.
SteeringBasis steering_basis(const DensityOperator& w, const Ensemble& target);
SteeringBasis steering_basis(const DensityOperator& w, const Ensemble& target,
                             std::size_t ancilla_dim);

// Born-rule projection of the ancilla onto one state.
SteeringOutcome project_ancilla(const Purification& phi, const PureState& ancilla_state,
                                std::size_t index = 0);

// Full measurement of the target's steering basis on the purification of w.
std::vector<SteeringOutcome> steer(const DensityOperator& w, const Ensemble& target);

// One shared purification plus one steering basis per target ensemble.
struct SteeringWitness {
    Purification purification;
    std::vector<SteeringBasis> bases;
};

SteeringWitness steering_witness(const DensityOperator& w, const std::vector<Ensemble>& targets);

// Outcomes of measuring one witness basis on the witness purification.
std::vector<SteeringOutcome> measure_witness(const SteeringWitness& witness,
                                             std::size_t basis_index);

}  // namespace qcorr
