#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace pickqubo {

/// One value in {0,1} per model variable.
using BitAssignment = std::vector<std::uint8_t>;

struct LinearTerm {
    int var;
    double coeff;
    bool operator==(const LinearTerm&) const = default;
};

struct QuadraticTerm {
    int i;  // i < j
    int j;
    double coeff;
    bool operator==(const QuadraticTerm&) const = default;
};

class EncodingLayout;
struct PenaltyWeights;

/// Quadratic pseudo-boolean function  offset + sum_i a_i x_i + sum_{i<j} b_ij x_i x_j.
///
/// Terms are stored sorted by index with no zero coefficients. Immutable; build with QuboBuilder.
class QuboModel {
public:
    QuboModel() = default;

    int num_vars() const { return num_vars_; }
    const std::vector<LinearTerm>& linear() const { return linear_; }
    const std::vector<QuadraticTerm>& quadratic() const { return quadratic_; }
    double offset() const { return offset_; }
    double linear_coeff(int var) const;
    double quadratic_coeff(int i, int j) const;
    /// Largest / smallest nonzero absolute coefficient over linear and quadratic terms (0 if none).
    double max_abs_coeff() const;
    double min_abs_coeff() const;

    /// Encoding this model was compiled from; null for hand-built models.
    const std::shared_ptr<const EncodingLayout>& layout() const { return layout_; }
    const std::shared_ptr<const PenaltyWeights>& weights() const { return weights_; }

    bool operator==(const QuboModel& other) const;

private:
    friend class QuboBuilder;

    int num_vars_ = 0;
    std::vector<LinearTerm> linear_;
    std::vector<QuadraticTerm> quadratic_;
    double offset_ = 0.0;
    std::shared_ptr<const EncodingLayout> layout_;
    std::shared_ptr<const PenaltyWeights> weights_;
};

class QuboBuilder {
public:
    explicit QuboBuilder(int num_vars);

    QuboBuilder& add_linear(int var, double coeff);
    /// Accepts either index order; i == j folds into the linear term (x*x = x).
    QuboBuilder& add_quadratic(int i, int j, double coeff);
    QuboBuilder& add_offset(double value);
    /// Adds weight * (sum_k coeff_k x_{var_k} + constant)^2. Variables must be distinct.
    QuboBuilder& add_squared(std::span<const LinearTerm> terms, double constant, double weight);
    QuboBuilder& add(const QuboModel& model);
    QuboBuilder& set_layout(std::shared_ptr<const EncodingLayout> layout);
    QuboBuilder& set_weights(std::shared_ptr<const PenaltyWeights> weights);

    QuboModel build() const;

private:
    void check(int var) const;

    int num_vars_;
    std::map<int, double> linear_;
    std::map<std::pair<int, int>, double> quadratic_;
    double offset_ = 0.0;
    std::shared_ptr<const EncodingLayout> layout_;
    std::shared_ptr<const PenaltyWeights> weights_;
};

double qubo_energy(const QuboModel& model, std::span<const std::uint8_t> bits);

/// Unpacks the low `num_bits` bits of `value` (bit k of the integer -> variable k).
BitAssignment bits_from_integer(std::uint64_t value, int num_bits);
std::uint64_t integer_from_bits(std::span<const std::uint8_t> bits);

}  // namespace pickqubo
