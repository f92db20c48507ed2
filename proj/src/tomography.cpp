#include "qcorr/tomography.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

Partition::Partition(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw DimensionError("partition needs at least one factor");
    for (std::size_t d : dims_)
        if (d == 0) throw DimensionError("partition factors must be positive");
}

Partition Partition::parse(const std::string& text) {
    std::vector<std::size_t> dims;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('x', pos);
        if (next == std::string::npos) next = text.size();
        const std::string token = text.substr(pos, next - pos);
        std::size_t consumed = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &consumed);
        } catch (const std::exception&) {
            throw ParseError("bad partition token '" + token + "' in '" + text + "'");
        }
        if (consumed != token.size() || value == 0) {
            throw ParseError("bad partition token '" + token + "' in '" + text + "'");
        }
        dims.push_back(static_cast<std::size_t>(value));
        pos = next + 1;
    }
    if (dims.empty()) throw ParseError("empty partition spec");
    return Partition(std::move(dims));
}

std::size_t Partition::total_dim() const {
    std::size_t total = 1;
    for (std::size_t d : dims_) total *= d;
    return total;
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        if (k) out += 'x';
        out += std::to_string(dims_[k]);
    }
    return out;
}

namespace {

// Real symmetric positive-definite solver (Cholesky). Throws BasisError when
// the matrix is numerically singular.
class CholeskyFactor {
  public:
    explicit CholeskyFactor(std::vector<double> matrix, std::size_t n) : n_(n), l_(std::move(matrix)) {
        double max_diag = 0.0;
        for (std::size_t i = 0; i < n_; ++i) max_diag = std::max(max_diag, l_[i * n_ + i]);
        const double floor = 1e-12 * std::max(1.0, max_diag);
        for (std::size_t j = 0; j < n_; ++j) {
            double d = l_[j * n_ + j];
            for (std::size_t k = 0; k < j; ++k) d -= l_[j * n_ + k] * l_[j * n_ + k];
            if (d <= floor) throw BasisError("operator set is not linearly independent");
            const double root = std::sqrt(d);
            l_[j * n_ + j] = root;
            for (std::size_t i = j + 1; i < n_; ++i) {
                double v = l_[i * n_ + j];
                for (std::size_t k = 0; k < j; ++k) v -= l_[i * n_ + k] * l_[j * n_ + k];
                l_[i * n_ + j] = v / root;
            }
        }
    }

    std::vector<double> solve(std::vector<double> b) const {
        for (std::size_t i = 0; i < n_; ++i) {
            double v = b[i];
            for (std::size_t k = 0; k < i; ++k) v -= l_[i * n_ + k] * b[k];
            b[i] = v / l_[i * n_ + i];
        }
        for (std::size_t i = n_; i-- > 0;) {
            double v = b[i];
            for (std::size_t k = i + 1; k < n_; ++k) v -= l_[k * n_ + i] * b[k];
            b[i] = v / l_[i * n_ + i];
        }
        return b;
    }

  private:
    std::size_t n_;
    std::vector<double> l_;
};

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    // tr(a b) for Hermitian a, b is real
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
    return t.real();
}

// Product basis over all factors, with the Gram factorization needed to
// expand states in it. Built once per operation.
class ProductBasis {
  public:
    ProductBasis(const Partition& partition, const std::vector<OperatorBasis>& bases)
        : shape_(), strides_() {
        if (bases.size() != partition.factors()) {
            throw DimensionError("need one operator basis per partition factor");
        }
        for (std::size_t k = 0; k < bases.size(); ++k) {
            if (bases[k].dim() != partition.dims()[k]) {
                throw DimensionError("basis dimension mismatch at factor " + std::to_string(k));
            }
            shape_.push_back(bases[k].size());
        }
        strides_.assign(shape_.size(), 1);
        for (std::size_t k = shape_.size(); k-- > 1;) strides_[k - 1] = strides_[k] * shape_[k];

        std::size_t count = 1;
        for (std::size_t s : shape_) count *= s;
        elements_.reserve(count);
        std::vector<std::size_t> idx(shape_.size(), 0);
        for (std::size_t a = 0; a < count; ++a) {
            ComplexMatrix e = bases[0][idx[0]].matrix();
            for (std::size_t k = 1; k < bases.size(); ++k) e = kron(e, bases[k][idx[k]].matrix());
            elements_.push_back(std::move(e));
            for (std::size_t k = shape_.size(); k-- > 0;) {
                if (++idx[k] < shape_[k]) break;
                idx[k] = 0;
            }
        }

        std::vector<double> gram(count * count);
        for (std::size_t a = 0; a < count; ++a) {
            for (std::size_t b = a; b < count; ++b) {
                const double g = hs_inner(elements_[a], elements_[b]);
                gram[a * count + b] = g;
                gram[b * count + a] = g;
            }
        }
        gram_ = std::make_unique<CholeskyFactor>(std::move(gram), count);
    }

    std::size_t count() const { return elements_.size(); }
    const std::vector<std::size_t>& shape() const { return shape_; }
    const ComplexMatrix& element(std::size_t a) const { return elements_[a]; }

    std::size_t flat_index(const std::vector<std::size_t>& indices) const {
        if (indices.size() != shape_.size()) {
            throw DimensionError("record index tuple has wrong length");
        }
        std::size_t flat = 0;
        for (std::size_t k = 0; k < indices.size(); ++k) {
            if (indices[k] >= shape_[k]) throw DimensionError("record index out of range");
            flat += indices[k] * strides_[k];
        }
        return flat;
    }

    std::vector<std::size_t> tuple_of(std::size_t flat) const {
        std::vector<std::size_t> indices(shape_.size());
        for (std::size_t k = 0; k < shape_.size(); ++k) {
            indices[k] = flat / strides_[k];
            flat %= strides_[k];
        }
        return indices;
    }

    // Real coefficients of |phi><phi| over the product elements. The raw
    // amplitudes need not be normalized.
    std::vector<double> state_coefficients(const std::vector<Complex>& phi) const {
        std::vector<double> rhs(count());
        for (std::size_t a = 0; a < count(); ++a) {
            const ComplexMatrix& e = elements_[a];
            Complex q = 0.0;
            for (std::size_t i = 0; i < e.rows(); ++i) {
                Complex row = 0.0;
                for (std::size_t j = 0; j < e.cols(); ++j) row += e(i, j) * phi[j];
                q += std::conj(phi[i]) * row;
            }
            rhs[a] = q.real();
        }
        return gram_->solve(std::move(rhs));
    }

  private:
    std::vector<std::size_t> shape_;
    std::vector<std::size_t> strides_;
    std::vector<ComplexMatrix> elements_;
    std::unique_ptr<CholeskyFactor> gram_;
};

// Record values arranged by flat product index; fails loudly on gaps.
std::vector<double> record_values(const ProductBasis& pb, const RecordSet& rs) {
    std::vector<double> values(pb.count(), 0.0);
    std::vector<bool> present(pb.count(), false);
    for (const CorrelationRecord& r : rs.records) {
        const std::size_t flat = pb.flat_index(r.indices);
        present[flat] = true;
        values[flat] = r.value;
    }
    std::vector<std::size_t> missing;
    for (std::size_t a = 0; a < pb.count(); ++a)
        if (!present[a]) missing.push_back(a);
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "missing " << missing.size() << " record(s):";
        const std::size_t shown = std::min<std::size_t>(missing.size(), 16);
        for (std::size_t n = 0; n < shown; ++n) {
            msg << " (";
            const auto tuple = pb.tuple_of(missing[n]);
            for (std::size_t k = 0; k < tuple.size(); ++k) {
                if (k) msg << ",";
                msg << tuple[k];
            }
            msg << ")";
        }
        if (missing.size() > shown) msg << " ...";
        throw IncompleteDataError(msg.str());
    }
    return values;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// <v|W|v> for unnormalized v, evaluated from records; zero vectors give 0.
double quad_from_records(const ProductBasis& pb, const std::vector<double>& values,
                         const std::vector<Complex>& v) {
    double norm2 = 0.0;
    for (const Complex& z : v) norm2 += std::norm(z);
    if (norm2 < 1e-24) return 0.0;
    return dot(pb.state_coefficients(v), values);
}

}  // namespace

OperatorBasis::OperatorBasis(std::vector<HermitianOperator> elements, std::string name)
    : dim_(0), elements_(std::move(elements)), name_(std::move(name)) {
    if (elements_.empty()) throw DimensionError("operator basis must be nonempty");
    dim_ = elements_.front().dim();
    for (const HermitianOperator& e : elements_) {
        if (e.dim() != dim_) throw DimensionError("operator basis elements have mixed dimensions");
    }
    if (elements_.size() != dim_ * dim_) {
        throw BasisError("operator basis needs dim^2 elements, got " +
                         std::to_string(elements_.size()));
    }
    const std::size_t n = elements_.size();
    std::vector<double> gram(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            const double g = hs_inner(elements_[a].matrix(), elements_[b].matrix());
            gram[a * n + b] = g;
            gram[b * n + a] = g;
        }
    }
    CholeskyFactor check(std::move(gram), n);  // throws BasisError when singular
}

OperatorBasis hermitian_basis(std::size_t dim) {
    if (dim == 0) throw DimensionError("basis dimension must be positive");
    std::vector<HermitianOperator> elements;
    elements.reserve(dim * dim);
    for (std::size_t u = 0; u < dim; ++u) {
        ComplexMatrix p(dim, dim);
        p(u, u) = 1.0;
        elements.emplace_back(std::move(p));
    }
    for (std::size_t u = 0; u < dim; ++u) {
        for (std::size_t v = u + 1; v < dim; ++v) {
            ComplexMatrix sym(dim, dim);
            sym(u, v) = 1.0;
            sym(v, u) = 1.0;
            elements.emplace_back(std::move(sym));
            ComplexMatrix asym(dim, dim);
            asym(u, v) = Complex(0.0, 1.0);
            asym(v, u) = Complex(0.0, -1.0);
            elements.emplace_back(std::move(asym));
        }
    }
    return OperatorBasis(std::move(elements), "hermitian");
}

OperatorBasis pauli_basis() {
    std::vector<HermitianOperator> elements;
    elements.emplace_back(ComplexMatrix::identity(2));
    elements.emplace_back(ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}));
    elements.emplace_back(ComplexMatrix(2, 2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}));
    elements.emplace_back(ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}));
    return OperatorBasis(std::move(elements), "pauli");
}

OperatorBasis basis_by_name(const std::string& name, std::size_t dim) {
    if (name == "hermitian") return hermitian_basis(dim);
    if (name == "pauli") {
        if (dim != 2) throw ParseError("pauli basis requires dimension 2");
        return pauli_basis();
    }
    throw ParseError("unknown operator basis '" + name + "'");
}

std::vector<OperatorBasis> make_bases(const Partition& partition) {
    std::vector<OperatorBasis> bases;
    bases.reserve(partition.factors());
    for (std::size_t d : partition.dims()) bases.push_back(hermitian_basis(d));
    return bases;
}

RecordSet correlations(const DensityOperator& w, const Partition& partition,
                       const std::vector<OperatorBasis>& bases) {
    if (partition.total_dim() != w.dim()) {
        throw DimensionError("partition covers dimension " + std::to_string(partition.total_dim()) +
                             ", density matrix has " + std::to_string(w.dim()));
    }
    const ProductBasis pb(partition, bases);
    std::vector<CorrelationRecord> records;
    records.reserve(pb.count());
    for (std::size_t a = 0; a < pb.count(); ++a) {
        Complex t = 0.0;
        const ComplexMatrix& e = pb.element(a);
        for (std::size_t i = 0; i < w.dim(); ++i)
            for (std::size_t k = 0; k < w.dim(); ++k) t += w.matrix()(i, k) * e(k, i);
        if (std::abs(t.imag()) > 1e-12) {
            throw Error("correlation value has imaginary residual " + std::to_string(t.imag()));
        }
        records.push_back({pb.tuple_of(a), t.real()});
    }
    return RecordSet{partition, bases, std::move(records)};
}

std::vector<double> expansion_coeffs(const PureState& phi, const Partition& partition,
                                     const std::vector<OperatorBasis>& bases) {
    if (phi.dim() != partition.total_dim()) {
        throw DimensionError("state dimension does not match partition");
    }
    const ProductBasis pb(partition, bases);
    return pb.state_coefficients(phi.amplitudes());
}

double diagonal_element(const PureState& phi, const RecordSet& rs) {
    if (phi.dim() != rs.partition.total_dim()) {
        throw DimensionError("state dimension does not match record partition");
    }
    const ProductBasis pb(rs.partition, rs.bases);
    const std::vector<double> values = record_values(pb, rs);
    return dot(pb.state_coefficients(phi.amplitudes()), values);
}

Complex offdiagonal_element(const PureState& alpha, const PureState& beta, const RecordSet& rs) {
    if (alpha.dim() != beta.dim() || alpha.dim() != rs.partition.total_dim()) {
        throw DimensionError("state dimensions do not match record partition");
    }
    const ProductBasis pb(rs.partition, rs.bases);
    const std::vector<double> values = record_values(pb, rs);

    const std::size_t d = alpha.dim();
    std::vector<Complex> plus(d), plus_i(d);
    for (std::size_t k = 0; k < d; ++k) {
        plus[k] = alpha[k] + beta[k];
        plus_i[k] = alpha[k] + Complex(0.0, 1.0) * beta[k];
    }
    const double q_plus = quad_from_records(pb, values, plus);
    const double q_plus_i = quad_from_records(pb, values, plus_i);
    const double q_a = dot(pb.state_coefficients(alpha.amplitudes()), values);
    const double q_b = dot(pb.state_coefficients(beta.amplitudes()), values);

    return 0.5 * q_plus + Complex(0.0, 0.5) * q_plus_i -
           Complex(0.5, 0.5) * (q_a + q_b);
}

ComplexMatrix reconstruct_elements(const RecordSet& rs) {
    const ProductBasis pb(rs.partition, rs.bases);
    const std::vector<double> values = record_values(pb, rs);
    const std::size_t d = rs.partition.total_dim();

    std::vector<double> diag(d);
    for (std::size_t r = 0; r < d; ++r) {
        std::vector<Complex> e(d, Complex(0.0, 0.0));
        e[r] = 1.0;
        diag[r] = dot(pb.state_coefficients(e), values);
    }

    ComplexMatrix w(d, d);
    for (std::size_t r = 0; r < d; ++r) w(r, r) = diag[r];
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r + 1; c < d; ++c) {
            // <e_r|W|e_c> from diagonal elements of superpositions
            std::vector<Complex> plus(d, Complex(0.0, 0.0));
            plus[c] = 1.0;
            plus[r] += 1.0;
            std::vector<Complex> plus_i(d, Complex(0.0, 0.0));
            plus_i[c] = 1.0;
            plus_i[r] += Complex(0.0, 1.0);
            const double q_plus = quad_from_records(pb, values, plus);
            const double q_plus_i = quad_from_records(pb, values, plus_i);
            const Complex elem = 0.5 * q_plus + Complex(0.0, 0.5) * q_plus_i -
                                 Complex(0.5, 0.5) * (diag[r] + diag[c]);
            w(r, c) = elem;
            w(c, r) = std::conj(elem);
        }
    }
    return w;
}

DensityOperator reconstruct(const RecordSet& rs, double trace_eps, double psd_eps) {
    return DensityOperator(reconstruct_elements(rs), trace_eps, psd_eps);
}

DensityOperator project_to_physical(const ComplexMatrix& estimate) {
    if (!estimate.is_square()) throw DimensionError("estimate must be square");
    const std::size_t d = estimate.rows();
    ComplexMatrix herm(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            herm(i, j) = 0.5 * (estimate(i, j) + std::conj(estimate(j, i)));

    const EigenSystem eig = hermitian_eig(HermitianOperator(std::move(herm)));
    std::vector<double> clipped(d);
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        clipped[i] = std::max(eig.values[i], 0.0);
        sum += clipped[i];
    }
    if (sum <= 0.0) throw PhysicalityError("estimate has no positive spectral weight");

    const auto& v = eig.vectors.matrix();
    ComplexMatrix w(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double p = clipped[k] / sum;
        if (p == 0.0) continue;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) w(i, j) += p * v(i, k) * std::conj(v(j, k));
    }
    return DensityOperator(std::move(w));
}

ResolutionReport resolution_consistency(const DensityOperator& w,
                                        const std::vector<Partition>& partitions, double eps) {
    if (partitions.empty()) throw DimensionError("need at least one partition");
    ResolutionReport report{partitions, {}, 0.0, eps, true};
    for (const Partition& p : partitions) {
        report.reconstructions.push_back(
            reconstruct(correlations(w, p, make_bases(p))).matrix());
    }
    for (std::size_t a = 0; a < report.reconstructions.size(); ++a) {
        for (std::size_t b = a + 1; b < report.reconstructions.size(); ++b) {
            report.max_pairwise_diff = std::max(
                report.max_pairwise_diff,
                max_abs_diff(report.reconstructions[a], report.reconstructions[b]));
        }
    }
    report.consistent = report.max_pairwise_diff <= eps;
    return report;
}

SingletWitness singlet_witness(const std::array<double, 3>& values, double tolerance) {
    double sum = 0.0;
    bool all_minus_one = true;
    for (double v : values) {
        if (std::abs(v) > 1.0 + 1e-9) {
            throw RangeError("correlation value " + std::to_string(v) + " outside [-1, 1]");
        }
        sum += v;
        if (std::abs(v + 1.0) > tolerance) all_minus_one = false;
    }
    return SingletWitness{all_minus_one, (1.0 - sum) / 4.0};
}

}  // namespace qcorr
