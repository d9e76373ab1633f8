#include "pickqubo/qubo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pickqubo/errors.hpp"

namespace pickqubo {

double QuboModel::linear_coeff(int var) const {
    auto it = std::lower_bound(linear_.begin(), linear_.end(), var,
                               [](const LinearTerm& t, int v) { return t.var < v; });
    return (it != linear_.end() && it->var == var) ? it->coeff : 0.0;
}

double QuboModel::quadratic_coeff(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(quadratic_.begin(), quadratic_.end(), std::pair{i, j},
                               [](const QuadraticTerm& t, const std::pair<int, int>& key) {
                                   return std::pair{t.i, t.j} < key;
                               });
    return (it != quadratic_.end() && it->i == i && it->j == j) ? it->coeff : 0.0;
}

double QuboModel::max_abs_coeff() const {
    double best = 0.0;
    for (const auto& t : linear_) best = std::max(best, std::abs(t.coeff));
    for (const auto& t : quadratic_) best = std::max(best, std::abs(t.coeff));
    return best;
}

double QuboModel::min_abs_coeff() const {
    double best = 0.0;
    auto visit = [&best](double c) {
        const double a = std::abs(c);
        if (best == 0.0 || a < best) best = a;
    };
    for (const auto& t : linear_) visit(t.coeff);
    for (const auto& t : quadratic_) visit(t.coeff);
    return best;
}

bool QuboModel::operator==(const QuboModel& other) const {
    return num_vars_ == other.num_vars_ && linear_ == other.linear_ && quadratic_ == other.quadratic_ &&
           offset_ == other.offset_;
}

QuboBuilder::QuboBuilder(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw InvalidInput("QuboBuilder: negative variable count");
}

void QuboBuilder::check(int var) const {
    if (var < 0 || var >= num_vars_) {
        throw InvalidInput("QuboBuilder: variable " + std::to_string(var) + " out of range [0, " +
                           std::to_string(num_vars_) + ")");
    }
}

QuboBuilder& QuboBuilder::add_linear(int var, double coeff) {
    check(var);
    linear_[var] += coeff;
    return *this;
}

QuboBuilder& QuboBuilder::add_quadratic(int i, int j, double coeff) {
    check(i);
    check(j);
    if (i == j) return add_linear(i, coeff);
    if (i > j) std::swap(i, j);
    quadratic_[{i, j}] += coeff;
    return *this;
}

QuboBuilder& QuboBuilder::add_offset(double value) {
    offset_ += value;
    return *this;
}

QuboBuilder& QuboBuilder::add_squared(std::span<const LinearTerm> terms, double constant, double weight) {
    // (sum c_k x_k + r)^2 = sum c_k^2 x_k + 2 sum_{k<l} c_k c_l x_k x_l + 2 r sum c_k x_k + r^2
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& [var, coeff] = terms[k];
        add_linear(var, weight * (coeff * coeff + 2.0 * constant * coeff));
        for (std::size_t l = k + 1; l < terms.size(); ++l) {
            if (terms[l].var == var) throw InvalidInput("add_squared: repeated variable");
            add_quadratic(var, terms[l].var, weight * 2.0 * coeff * terms[l].coeff);
        }
    }
    offset_ += weight * constant * constant;
    return *this;
}

QuboBuilder& QuboBuilder::add(const QuboModel& model) {
    if (model.num_vars() != num_vars_) throw InvalidInput("QuboBuilder::add: variable count mismatch");
    for (const auto& t : model.linear()) linear_[t.var] += t.coeff;
    for (const auto& t : model.quadratic()) quadratic_[{t.i, t.j}] += t.coeff;
    offset_ += model.offset();
    return *this;
}

QuboBuilder& QuboBuilder::set_layout(std::shared_ptr<const EncodingLayout> layout) {
    layout_ = std::move(layout);
    return *this;
}

QuboBuilder& QuboBuilder::set_weights(std::shared_ptr<const PenaltyWeights> weights) {
    weights_ = std::move(weights);
    return *this;
}

QuboModel QuboBuilder::build() const {
    QuboModel model;
    model.num_vars_ = num_vars_;
    for (const auto& [var, coeff] : linear_) {
        if (coeff != 0.0) model.linear_.push_back({var, coeff});
    }
    for (const auto& [key, coeff] : quadratic_) {
        if (coeff != 0.0) model.quadratic_.push_back({key.first, key.second, coeff});
    }
    model.offset_ = offset_;
    model.layout_ = layout_;
    model.weights_ = weights_;
    return model;
}

double qubo_energy(const QuboModel& model, std::span<const std::uint8_t> bits) {
    if (static_cast<int>(bits.size()) != model.num_vars()) {
        throw InvalidInput("qubo_energy: expected " + std::to_string(model.num_vars()) + " bits, got " +
                           std::to_string(bits.size()));
    }
    double energy = model.offset();
    for (const auto& t : model.linear()) {
        if (bits[t.var]) energy += t.coeff;
    }
    for (const auto& t : model.quadratic()) {
        if (bits[t.i] && bits[t.j]) energy += t.coeff;
    }
    return energy;
}

BitAssignment bits_from_integer(std::uint64_t value, int num_bits) {
    BitAssignment bits(num_bits);
    for (int k = 0; k < num_bits; ++k) bits[k] = static_cast<std::uint8_t>((value >> k) & 1U);
    return bits;
}

std::uint64_t integer_from_bits(std::span<const std::uint8_t> bits) {
    std::uint64_t value = 0;
    for (std::size_t k = 0; k < bits.size() && k < 64; ++k) {
        if (bits[k]) value |= std::uint64_t{1} << k;
    }
    return value;
}

}  // namespace pickqubo
