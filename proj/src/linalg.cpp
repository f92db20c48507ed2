#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

PureState::PureState(std::vector<Complex> amplitudes, double eps)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) throw DimensionError("state dimension must be positive");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw DomainError("state amplitudes must be finite");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > eps) {
        throw NormalizationError("state norm " + std::to_string(std::sqrt(norm2)) +
                                 " is not 1 within " + std::to_string(eps));
    }
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) norm2 += std::norm(a);
    const double norm = std::sqrt(norm2);
    if (norm < 1e-300) throw NormalizationError("cannot normalize a zero vector");
    for (Complex& a : amplitudes) a /= norm;
    return PureState(std::move(amplitudes));
}

PureState PureState::basis_vector(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DimensionError("basis vector index out of range");
    std::vector<Complex> amps(dim, Complex(0.0, 0.0));
    amps[index] = 1.0;
    return PureState(std::move(amps));
}

Complex inner(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) throw DimensionError("inner product: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double fidelity(const PureState& a, const PureState& b) { return std::norm(inner(a, b)); }

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<Complex> amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) amps[i * b.dim() + j] = a[i] * b[j];
    return PureState(std::move(amps));
}

ComplexMatrix projector(const PureState& s) {
    ComplexMatrix p(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) p(i, j) = s[i] * std::conj(s[j]);
    return p;
}

HermitianOperator::HermitianOperator(ComplexMatrix m, double eps) : matrix_(std::move(m)) {
    if (!matrix_.is_square()) throw DimensionError("hermitian operator must be square");
    const double defect = hermiticity_defect(matrix_);
    if (defect > eps) {
        throw HermiticityError("matrix deviates from its adjoint by " + std::to_string(defect));
    }
}

UnitaryOperator::UnitaryOperator(ComplexMatrix m, double eps) : matrix_(std::move(m)) {
    if (!matrix_.is_square()) throw DimensionError("unitary operator must be square");
    const ComplexMatrix gram = matrix_.adjoint() * matrix_;
    const double defect = max_abs_diff(gram, ComplexMatrix::identity(matrix_.rows()));
    if (defect > eps) {
        throw OrthonormalityError("U†U deviates from identity by " + std::to_string(defect));
    }
}

PureState UnitaryOperator::column(std::size_t j) const {
    std::vector<Complex> amps(dim());
    for (std::size_t i = 0; i < dim(); ++i) amps[i] = matrix_(i, j);
    return PureState(std::move(amps), 1e-8);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex v = a(i, j);
            if (v == Complex(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = v * b(k, l);
        }
    }
    return out;
}

namespace {

// Row-major strides for a multi-index over `dims`.
std::vector<std::size_t> strides_of(const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) s[k - 1] = s[k] * dims[k];
    return s;
}

// Flat offsets contributed by the sub-multi-index running over `factors`.
std::vector<std::size_t> factor_offsets(const std::vector<std::size_t>& dims,
                                        const std::vector<std::size_t>& strides,
                                        const std::vector<std::size_t>& factors) {
    std::size_t total = 1;
    for (std::size_t f : factors) total *= dims[f];
    std::vector<std::size_t> offsets(total, 0);
    std::vector<std::size_t> idx(factors.size(), 0);
    for (std::size_t n = 0; n < total; ++n) {
        std::size_t off = 0;
        for (std::size_t k = 0; k < factors.size(); ++k) off += idx[k] * strides[factors[k]];
        offsets[n] = off;
        for (std::size_t k = factors.size(); k-- > 0;) {
            if (++idx[k] < dims[factors[k]]) break;
            idx[k] = 0;
        }
    }
    return offsets;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
    if (!m.is_square()) throw DimensionError("partial_trace requires a square matrix");
    std::size_t total = 1;
    for (std::size_t d : dims) {
        if (d == 0) throw DimensionError("factor dimensions must be positive");
        total *= d;
    }
    if (total != m.rows()) {
        throw DimensionError("factor dimensions multiply to " + std::to_string(total) +
                             ", matrix has dimension " + std::to_string(m.rows()));
    }
    if (keep.empty()) throw DimensionError("partial_trace: keep set must be nonempty");
    std::vector<bool> kept(dims.size(), false);
    for (std::size_t f : keep) {
        if (f >= dims.size()) throw DimensionError("partial_trace: keep index out of range");
        if (kept[f]) throw DimensionError("partial_trace: duplicate keep index");
        kept[f] = true;
    }

    std::vector<std::size_t> traced;
    for (std::size_t f = 0; f < dims.size(); ++f)
        if (!kept[f]) traced.push_back(f);

    const std::vector<std::size_t> strides = strides_of(dims);
    std::vector<std::size_t> keep_sorted(keep.begin(), keep.end());
    std::sort(keep_sorted.begin(), keep_sorted.end());
    const std::vector<std::size_t> keep_offsets = factor_offsets(dims, strides, keep_sorted);
    const std::vector<std::size_t> trace_offsets = factor_offsets(dims, strides, traced);

    const std::size_t out_dim = keep_offsets.size();
    ComplexMatrix out(out_dim, out_dim);
    for (std::size_t r = 0; r < out_dim; ++r) {
        for (std::size_t c = 0; c < out_dim; ++c) {
            Complex sum = 0.0;
            for (std::size_t t : trace_offsets)
                sum += m(keep_offsets[r] + t, keep_offsets[c] + t);
            out(r, c) = sum;
        }
    }
    return out;
}

namespace {

// One Jacobi sweep; returns the largest off-diagonal magnitude seen before
// rotating. a is overwritten toward diagonal form, v accumulates rotations.
double jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v, double skip_below) {
    const std::size_t n = a.rows();
    double max_off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const Complex apq = a(p, q);
            const double mag = std::abs(apq);
            max_off = std::max(max_off, mag);
            if (mag <= skip_below) continue;

            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const Complex phase = apq / mag;

            // Real Jacobi angle for [[app, |apq|], [|apq|, aqq]].
            const double tau = (aqq - app) / (2.0 * mag);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                             (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            const Complex rp = s * phase;              // R(p,q)
            const Complex rq = -s * std::conj(phase);  // R(q,p)

            // columns: A <- A R
            for (std::size_t i = 0; i < n; ++i) {
                const Complex aip = a(i, p);
                const Complex aiq = a(i, q);
                a(i, p) = aip * c + aiq * rq;
                a(i, q) = aip * rp + aiq * c;
            }
            // rows: A <- R† A
            for (std::size_t j = 0; j < n; ++j) {
                const Complex apj = a(p, j);
                const Complex aqj = a(q, j);
                a(p, j) = c * apj + std::conj(rq) * aqj;
                a(q, j) = std::conj(rp) * apj + c * aqj;
            }
            // restore exact symmetry on the zeroed pair
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = Complex(a(p, p).real(), 0.0);
            a(q, q) = Complex(a(q, q).real(), 0.0);

            // V <- V R
            for (std::size_t i = 0; i < n; ++i) {
                const Complex vip = v(i, p);
                const Complex viq = v(i, q);
                v(i, p) = vip * c + viq * rq;
                v(i, q) = vip * rp + viq * c;
            }
        }
    }
    return max_off;
}

}  // namespace

EigenSystem hermitian_eig(const HermitianOperator& h) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, a.max_abs());
    const double stop = 1e-15 * scale;
    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        const double max_off = jacobi_sweep(a, v, stop);
        if (max_off <= stop) break;
    }
    if (sweep == max_sweeps) throw Error("hermitian_eig: Jacobi iteration did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    std::vector<double> values(n);
    ComplexMatrix vectors(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        values[j] = a(src, src).real();

        // phase convention: first clearly nonzero component real positive
        Complex phase(1.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double mag = std::abs(v(i, src));
            if (mag > 1e-10) {
                phase = std::conj(v(i, src)) / mag;
                break;
            }
        }
        for (std::size_t i = 0; i < n; ++i) vectors(i, j) = v(i, src) * phase;
    }
    return EigenSystem{std::move(values), UnitaryOperator(std::move(vectors))};
}

UnitaryOperator extend_to_unitary(const ComplexMatrix& columns, double eps) {
    const std::size_t big = columns.rows();
    const std::size_t small = columns.cols();
    if (small > big) throw DimensionError("extend_to_unitary: more columns than rows");

    for (std::size_t a = 0; a < small; ++a) {
        for (std::size_t b = a; b < small; ++b) {
            Complex g = 0.0;
            for (std::size_t i = 0; i < big; ++i) g += std::conj(columns(i, a)) * columns(i, b);
            const double want = (a == b) ? 1.0 : 0.0;
            if (std::abs(g - want) > eps) {
                throw OrthonormalityError("input columns are not orthonormal (deviation " +
                                          std::to_string(std::abs(g - want)) + ")");
            }
        }
    }

    ComplexMatrix u(big, big);
    for (std::size_t j = 0; j < small; ++j)
        for (std::size_t i = 0; i < big; ++i) u(i, j) = columns(i, j);

    std::size_t filled = small;
    for (std::size_t k = 0; k < big && filled < big; ++k) {
        std::vector<Complex> cand(big, Complex(0.0, 0.0));
        cand[k] = 1.0;
        // two MGS passes against everything accepted so far
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < filled; ++j) {
                Complex overlap = 0.0;
                for (std::size_t i = 0; i < big; ++i) overlap += std::conj(u(i, j)) * cand[i];
                for (std::size_t i = 0; i < big; ++i) cand[i] -= overlap * u(i, j);
            }
        }
        double norm2 = 0.0;
        for (const Complex& z : cand) norm2 += std::norm(z);
        const double norm = std::sqrt(norm2);
        if (norm < tol::eps_gs_skip) continue;
        for (std::size_t i = 0; i < big; ++i) u(i, filled) = cand[i] / norm;
        ++filled;
    }
    if (filled < big) {
        throw OrthonormalityError("unitary extension exhausted canonical candidates");
    }
    return UnitaryOperator(std::move(u), eps);
}

}  // namespace qcorr
