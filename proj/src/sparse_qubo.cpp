#include "sparse_qubo.hpp"

namespace pickqubo::detail {

SparseQubo::SparseQubo(const QuboModel& model)
    : offset_(model.offset()), linear_(model.num_vars(), 0.0), start_(model.num_vars() + 1, 0) {
    for (const auto& t : model.linear()) linear_[t.var] = t.coeff;
    std::vector<std::size_t> degree(model.num_vars(), 0);
    for (const auto& t : model.quadratic()) {
        ++degree[t.i];
        ++degree[t.j];
    }
    for (int v = 0; v < model.num_vars(); ++v) start_[v + 1] = start_[v] + degree[v];
    neighbours_.resize(start_.back());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (const auto& t : model.quadratic()) {
        neighbours_[fill[t.i]++] = {t.j, t.coeff};
        neighbours_[fill[t.j]++] = {t.i, t.coeff};
    }
}

double SparseQubo::energy(std::span<const std::uint8_t> bits) const {
    double energy = offset_;
    for (int v = 0; v < num_vars(); ++v) {
        if (!bits[v]) continue;
        energy += linear_[v];
        for (std::size_t k = start_[v]; k < start_[v + 1]; ++k) {
            const auto& nb = neighbours_[k];
            if (nb.var > v && bits[nb.var]) energy += nb.coeff;
        }
    }
    return energy;
}

void SparseQubo::local_fields(std::span<const std::uint8_t> bits, std::vector<double>& field) const {
    field.assign(linear_.begin(), linear_.end());
    for (int v = 0; v < num_vars(); ++v) {
        for (std::size_t k = start_[v]; k < start_[v + 1]; ++k) {
            if (bits[neighbours_[k].var]) field[v] += neighbours_[k].coeff;
        }
    }
}

double SparseQubo::flip(std::span<std::uint8_t> bits, std::span<double> field, int var) const {
    const double delta = flip_delta(bits, field, var);
    bits[var] ^= 1U;
    const double sign = bits[var] ? 1.0 : -1.0;
    for (std::size_t k = start_[var]; k < start_[var + 1]; ++k) {
        field[neighbours_[k].var] += sign * neighbours_[k].coeff;
    }
    return delta;
}

}  // namespace pickqubo::detail
