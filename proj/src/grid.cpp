#include "cgl/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cgl {

SineBasisGrid::SineBasisGrid(int n_modes, int n_phys)
    : n_modes_(n_modes), n_phys_(n_phys) {
    if (n_modes < 1) {
        throw ConfigError("n_modes must be >= 1");
    }
    if (n_phys < 3 * n_modes + 1) {
        throw ConfigError("n_phys must be >= 3*n_modes+1 = " +
                          std::to_string(3 * n_modes + 1) + ", got " +
                          std::to_string(n_phys));
    }
    const double pi = std::numbers::pi;
    eigvals_.resize(static_cast<std::size_t>(n_modes));
    for (int k = 1; k <= n_modes; ++k) {
        eigvals_[static_cast<std::size_t>(k - 1)] = (k * pi) * (k * pi);
    }
    sin_table_.resize(static_cast<std::size_t>(n_phys) * static_cast<std::size_t>(n_modes));
    for (int j = 1; j <= n_phys; ++j) {
        const double x = node(j);
        for (int k = 1; k <= n_modes; ++k) {
            sin_table_[static_cast<std::size_t>(j - 1) * n_modes + (k - 1)] =
                std::sin(k * pi * x);
        }
    }
}

PhysicalField SineBasisGrid::to_physical(const SpectralField& u) const {
    if (u.n_modes() != n_modes_) {
        throw DimensionMismatch("to_physical: field has " + std::to_string(u.n_modes()) +
                                " modes, grid expects " + std::to_string(n_modes_));
    }
    const double root2 = std::numbers::sqrt2;
    PhysicalField values(static_cast<std::size_t>(n_phys_));
    for (int j = 0; j < n_phys_; ++j) {
        Complex acc(0.0, 0.0);
        const double* row = &sin_table_[static_cast<std::size_t>(j) * n_modes_];
        for (int k = 0; k < n_modes_; ++k) {
            acc += u.coeffs[static_cast<std::size_t>(k)] * row[k];
        }
        values[static_cast<std::size_t>(j)] = root2 * acc;
    }
    return values;
}

SpectralField SineBasisGrid::to_modes(const PhysicalField& values) const {
    if (static_cast<int>(values.size()) != n_phys_) {
        throw DimensionMismatch("to_modes: got " + std::to_string(values.size()) +
                                " values, grid has " + std::to_string(n_phys_) + " nodes");
    }
    // a_k = sqrt(2)/(M+1) * sum_j values_j sin(k pi x_j)
    const double scale = std::numbers::sqrt2 / (n_phys_ + 1.0);
    SpectralField u = SpectralField::zero(n_modes_);
    for (int k = 0; k < n_modes_; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n_phys_; ++j) {
            acc += values[static_cast<std::size_t>(j)] *
                   sin_table_[static_cast<std::size_t>(j) * n_modes_ + k];
        }
        u.coeffs[static_cast<std::size_t>(k)] = scale * acc;
    }
    return u;
}

double SineBasisGrid::integrate(const std::vector<double>& f_values) const {
    if (static_cast<int>(f_values.size()) != n_phys_) {
        throw DimensionMismatch("integrate: sample count does not match grid");
    }
    double s = 0.0;
    for (double v : f_values) s += v;
    return s / (n_phys_ + 1.0);
}

} // namespace cgl
