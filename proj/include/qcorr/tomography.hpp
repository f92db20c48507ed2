#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qcorr/ensembles.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

// Ordered resolution of a composite system into tensor factors.
class Partition {
  public:
    explicit Partition(std::vector<std::size_t> dims);

    static Partition parse(const std::string& text);  // e.g. "2x2x2"

    std::size_t factors() const { return dims_.size(); }
    std::size_t total_dim() const;
    const std::vector<std::size_t>& dims() const { return dims_; }
    std::string to_string() const;

  private:
    std::vector<std::size_t> dims_;
};

// dim^2 Hermitian operators spanning the operator algebra of one subsystem.
// Linear independence is checked at construction via the Gram matrix of
// Hilbert-Schmidt inner products.
class OperatorBasis {
  public:
    explicit OperatorBasis(std::vector<HermitianOperator> elements,
                           std::string name = "custom");

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return elements_.size(); }
    const HermitianOperator& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<HermitianOperator>& elements() const { return elements_; }
    const std::string& name() const { return name_; }

  private:
    std::size_t dim_;
    std::vector<HermitianOperator> elements_;
    std::string name_;
};

// Elementary basis: dim projectors |u><u|, then for each pair u < v the
// symmetric sum |u><v| + |v><u| followed by the i-weighted antisymmetric
// difference i(|u><v| - |v><u|).
OperatorBasis hermitian_basis(std::size_t dim);

// {1, sigma_x, sigma_y, sigma_z} for a qubit.
OperatorBasis pauli_basis();

// Named bases reconstructible from (name, dim); used by the file formats.
OperatorBasis basis_by_name(const std::string& name, std::size_t dim);

// Default per-factor bases for a partition (hermitian_basis of each factor).
std::vector<OperatorBasis> make_bases(const Partition& partition);

struct CorrelationRecord {
    std::vector<std::size_t> indices;  // one basis index per factor
    double value;                      // tr(W * M_i (x) N_j (x) ...)
};

// Complete correlation data for one partition and choice of bases.
struct RecordSet {
    Partition partition;
    std::vector<OperatorBasis> bases;
    std::vector<CorrelationRecord> records;
};

// All product expectations tr(W * E_a), one record per index tuple.
RecordSet correlations(const DensityOperator& w, const Partition& partition,
                       const std::vector<OperatorBasis>& bases);

// Real coefficients c with |phi><phi| = sum_a c_a E_a over the product basis.
std::vector<double> expansion_coeffs(const PureState& phi, const Partition& partition,
                                     const std::vector<OperatorBasis>& bases);

// <phi|W|phi> from records alone.
double diagonal_element(const PureState& phi, const RecordSet& rs);

// <beta|W|alpha> from records alone, via the polarization identity over
// diagonal elements of normalized superpositions.
Complex offdiagonal_element(const PureState& alpha, const PureState& beta, const RecordSet& rs);

// Matrix elements of W in the canonical basis, reconstructed entry by entry
// from the records. Throws IncompleteDataError naming missing index tuples.
ComplexMatrix reconstruct_elements(const RecordSet& rs);

// reconstruct_elements + density-operator validation with relaxed tolerances.
DensityOperator reconstruct(const RecordSet& rs, double trace_eps = tol::eps_psd_relaxed,
                            double psd_eps = tol::eps_psd_relaxed);

// Nearest physical state: hermitize, clip negative eigenvalues, renormalize.
DensityOperator project_to_physical(const ComplexMatrix& estimate);

struct ResolutionReport {
    std::vector<Partition> partitions;
    std::vector<ComplexMatrix> reconstructions;
    double max_pairwise_diff;
    double tolerance;
    bool consistent;
};

// Reconstructs w independently from every partition and compares the results.
ResolutionReport resolution_consistency(const DensityOperator& w,
                                        const std::vector<Partition>& partitions,
                                        double eps = 1e-9);

struct SingletWitness {
    bool is_singlet;
    double fidelity;  // overlap with the spin-zero projector
};

// Decides singlet-ness from the three like-component correlations
// tr(W sigma_mu (x) sigma_mu), mu = x, y, z.
SingletWitness singlet_witness(const std::array<double, 3>& values, double tolerance);

}  // namespace qcorr
