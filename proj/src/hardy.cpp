#include "qcorr/hardy.hpp"

#include <cmath>
#include <string>

#include "qcorr/errors.hpp"

namespace qcorr {

double golden_mean() { return 0.5 * (std::sqrt(5.0) + 1.0); }

namespace {

PureState hardy_state_vector(double x, const PureState& one_r) {
    // |Psi> = (|2R,2R> - |1R,1R><1R,1R|2R,2R>) / sqrt(1 - x^2), with
    // <1R,1R|2R,2R> = <1R|2R>^2 = x for the symmetric real bases used here.
    const PureState rr = tensor(one_r, one_r);
    std::vector<Complex> amps(4, Complex(0.0, 0.0));
    amps[0] = 1.0;  // |2R,2R> = |00>
    for (std::size_t k = 0; k < 4; ++k) amps[k] -= x * rr[k];
    for (Complex& a : amps) a /= std::sqrt(1.0 - x * x);
    return PureState(std::move(amps));
}

HermitianOperator red_green_observable(const PureState& red, const PureState& green) {
    ComplexMatrix m = projector(red);
    m -= projector(green);
    return HermitianOperator(std::move(m));
}

}  // namespace

HardyContext::HardyContext(double overlap_x)
    : x_(overlap_x),
      eigenstates_{PureState::basis_vector(2, 0), PureState::basis_vector(2, 0),
                   PureState::basis_vector(2, 0), PureState::basis_vector(2, 0)},
      observables_{HermitianOperator(ComplexMatrix::identity(2)),
                   HermitianOperator(ComplexMatrix::identity(2))},
      state_(PureState::basis_vector(4, 0)) {
    if (!(overlap_x > 0.0) || !(overlap_x < 1.0)) {
        throw DomainError("overlap x must lie strictly inside (0, 1)");
    }
    const double theta = std::acos(std::sqrt(x_));
    const double c = std::cos(theta);
    const double s = std::sin(theta);

    eigenstates_[0] = PureState({Complex(c, 0.0), Complex(s, 0.0)});    // |1R>
    eigenstates_[1] = PureState({Complex(-s, 0.0), Complex(c, 0.0)});   // |1G>
    eigenstates_[2] = PureState::basis_vector(2, 0);                    // |2R>
    eigenstates_[3] = PureState::basis_vector(2, 1);                    // |2G>

    observables_[0] = red_green_observable(eigenstates_[0], eigenstates_[1]);
    observables_[1] = red_green_observable(eigenstates_[2], eigenstates_[3]);
    state_ = hardy_state_vector(x_, eigenstates_[0]);
}

const PureState& HardyContext::eigenstate(int setting, Color c) const {
    if (setting != 1 && setting != 2) throw DomainError("setting must be 1 or 2");
    const std::size_t base = (setting == 1) ? 0 : 2;
    return eigenstates_[base + (c == Color::red ? 0 : 1)];
}

const HermitianOperator& HardyContext::observable(int setting) const {
    if (setting != 1 && setting != 2) throw DomainError("setting must be 1 or 2");
    return observables_[setting - 1];
}

double joint_probability(const HardyContext& ctx, int setting_a, int setting_b, Color a, Color b) {
    const PureState outcome = tensor(ctx.eigenstate(setting_a, a), ctx.eigenstate(setting_b, b));
    return fidelity(outcome, ctx.state());
}

const std::array<const char*, 4> ProbabilityTable::setting_labels{"22", "11", "12", "21"};
const std::array<const char*, 4> ProbabilityTable::outcome_labels{"GG", "GR", "RG", "RR"};

double ProbabilityTable::column_sum(std::size_t setting) const {
    double sum = 0.0;
    for (std::size_t o = 0; o < 4; ++o) sum += p[o][setting];
    return sum;
}

ProbabilityTable probability_table(const HardyContext& ctx) {
    ProbabilityTable table{};
    for (std::size_t s = 0; s < 4; ++s) {
        const auto [sa, sb] = ProbabilityTable::settings[s];
        for (std::size_t o = 0; o < 4; ++o) {
            const auto [ca, cb] = ProbabilityTable::outcomes[o];
            const double value = joint_probability(ctx, sa, sb, ca, cb);
            if (value < -1e-15 || value > 1.0 + 1e-15) {
                throw Error("probability out of range");
            }
            table.p[o][s] = value;
        }
    }
    for (std::size_t s = 0; s < 4; ++s) {
        if (std::abs(table.column_sum(s) - 1.0) > 1e-12) {
            throw Error("probability column does not sum to 1");
        }
    }
    return table;
}

ProbabilityTable golden_table() { return probability_table(HardyContext(1.0 / golden_mean())); }

MaximumSearch maximize_p22gg() {
    // long double keeps function-value comparisons meaningful down to the
    // 1e-12 bracket width
    const auto f = [](long double x) { return x * x * (1.0L - x) / (1.0L + x); };
    const long double inv_phi = 0.5L * (std::sqrt(5.0L) - 1.0L);
    long double lo = 0.0L, hi = 1.0L;
    long double a = hi - inv_phi * (hi - lo);
    long double b = lo + inv_phi * (hi - lo);
    long double fa = f(a), fb = f(b);
    while (hi - lo > 1e-12L) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        }
    }
    const double x_star = static_cast<double>(0.5L * (lo + hi));
    return MaximumSearch{x_star, x_star * x_star * (1.0 - x_star) / (1.0 + x_star)};
}

namespace {

Conditional conditional(const std::string& label, double joint, double conditioning) {
    if (conditioning < tol::eps_zero_prob) return Conditional{label, std::nullopt};
    return Conditional{label, joint / conditioning};
}

}  // namespace

ParadoxReport paradox_report(const HardyContext& ctx) {
    ParadoxReport report{};
    report.x = ctx.x();

    // p(1AR | 2BG) from the (1,2) setting: p(R,G|12) / (p(G,G|12) + p(R,G|12))
    {
        const double joint = joint_probability(ctx, 1, 2, Color::red, Color::green);
        const double cond = joint + joint_probability(ctx, 1, 2, Color::green, Color::green);
        report.p_1ar_given_2bg = conditional("p(1AR|2BG)", joint, cond);
    }
    // p(1BG | 1AR) from the (1,1) setting
    {
        const double joint = joint_probability(ctx, 1, 1, Color::red, Color::green);
        const double cond = joint + joint_probability(ctx, 1, 1, Color::red, Color::red);
        report.p_1bg_given_1ar = conditional("p(1BG|1AR)", joint, cond);
    }
    // p(2AR | 1BG) from the (2,1) setting
    {
        const double joint = joint_probability(ctx, 2, 1, Color::red, Color::green);
        const double cond = joint + joint_probability(ctx, 2, 1, Color::green, Color::green);
        report.p_2ar_given_1bg = conditional("p(2AR|1BG)", joint, cond);
    }

    report.p_2ag_2bg = joint_probability(ctx, 2, 2, Color::green, Color::green);

    // the chain of unit conditionals would force this to 1; it is not
    {
        const double joint = joint_probability(ctx, 2, 2, Color::red, Color::green);
        const double cond = joint + report.p_2ag_2bg;
        report.p_2ar_given_2bg = conditional("p(2AR|2BG)", joint, cond);
    }

    report.note =
        "each conditional above is taken from a different setting pair's joint "
        "distribution; no single joint distribution over all four observables "
        "reproduces them, so the chain from p(2BG) to p(2AR) does not compose";
    return report;
}

}  // namespace qcorr
