#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "qcorr/ensembles.hpp"
#include "qcorr/linalg.hpp"

namespace qcorr {

// Eigenstate colors of the two dichotomic observables per side.
enum class Color { red, green };

// Golden mean (sqrt(5)+1)/2.
double golden_mean();

// Two qubits A and B, each carrying observables 1 and 2 whose eigenbases are
// rotated against each other by theta with cos^2(theta) = x. Observable-2
// eigenstates are the canonical basis; red is the first eigenvector of each
// observable, green the second. The joint state has vanishing probability for
// outcomes (1R,1R), (2G,1G) and (1G,2G) at every x.
class HardyContext {
  public:
    explicit HardyContext(double overlap_x);

    double x() const { return x_; }
    const PureState& state() const { return state_; }

    // setting is 1 or 2; the same eigenbasis serves both sides
    const PureState& eigenstate(int setting, Color c) const;

    // observable with eigenvalue +1 on red and -1 on green
    const HermitianOperator& observable(int setting) const;

  private:
    double x_;
    std::array<PureState, 4> eigenstates_;      // 1R, 1G, 2R, 2G
    std::array<HermitianOperator, 2> observables_;
    PureState state_;
};

// Born probability of outcome pair (a, b) when A measures setting_a and B
// measures setting_b.
double joint_probability(const HardyContext& ctx, int setting_a, int setting_b, Color a, Color b);

// Probabilities of the four outcome pairs (GG, GR, RG, RR) under the four
// setting pairs (22, 11, 12, 21). Column = setting pair, first digit is A.
struct ProbabilityTable {
    static constexpr std::array<std::pair<int, int>, 4> settings{
        {{2, 2}, {1, 1}, {1, 2}, {2, 1}}};
    static constexpr std::array<std::pair<Color, Color>, 4> outcomes{
        {{Color::green, Color::green},
         {Color::green, Color::red},
         {Color::red, Color::green},
         {Color::red, Color::red}}};
    static const std::array<const char*, 4> setting_labels;
    static const std::array<const char*, 4> outcome_labels;

    // p[outcome][setting]
    std::array<std::array<double, 4>, 4> p;

    double column_sum(std::size_t setting) const;
};

ProbabilityTable probability_table(const HardyContext& ctx);

// Table at the overlap x = 1/golden_mean(), where every entry is a power of
// the golden mean (or zero).
ProbabilityTable golden_table();

struct MaximumSearch {
    double x_star;
    double p_star;
};

// Maximizes p(2G,2G) = x^2 (1-x)/(1+x) over x in (0,1) by golden-section
// search with bracket tolerance 1e-12.
MaximumSearch maximize_p22gg();

struct Conditional {
    std::string label;
    std::optional<double> value;  // empty when the conditioning event has ~zero probability
};

struct ParadoxReport {
    double x;
    // each equals 1 wherever defined
    Conditional p_1ar_given_2bg;
    Conditional p_1bg_given_1ar;
    Conditional p_2ar_given_1bg;
    // nonzero, contradicting the chained conditionals
    double p_2ag_2bg;
    // actual value of the would-be chain conclusion, strictly below 1
    Conditional p_2ar_given_2bg;
    std::string note;
};

// The three unit conditionals, the nonzero joint that contradicts their
// chaining, and the honest value of the chained conditional.
ParadoxReport paradox_report(const HardyContext& ctx);

}  // namespace qcorr
