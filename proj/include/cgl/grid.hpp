#pragma once

#include <vector>

#include "cgl/field.hpp"

namespace cgl {

using PhysicalField = std::vector<Complex>;

/// Sine-basis collocation grid: N retained modes and M >= 3N+1 interior
/// nodes x_j = j/(M+1), j = 1..M. The heavy padding keeps the quintic
/// (degree-5) products of fields band-limited to N/2 alias-free under the
/// discrete sine analysis.
///
/// to_physical / to_modes form an exact bijection on the span of the first
/// N modes (discrete sine orthogonality on the uniform grid).
class SineBasisGrid {
public:
    SineBasisGrid(int n_modes, int n_phys);

    int n_modes() const { return n_modes_; }
    int n_phys() const { return n_phys_; }

    /// mu_k = (k pi)^2, k = 1..N (1-based via index k-1).
    const std::vector<double>& eigvals() const { return eigvals_; }

    /// Interior node x_j = j/(M+1), j = 1..M (1-based via index j-1).
    double node(int j1based) const { return static_cast<double>(j1based) / (n_phys_ + 1.0); }

    /// values(x_j) = sum_k a_k sqrt(2) sin(k pi x_j).
    PhysicalField to_physical(const SpectralField& u) const;

    /// Discrete sine analysis (quadrature projection onto the first N modes).
    SpectralField to_modes(const PhysicalField& values) const;

    /// Quadrature of int_I f dx for grid samples of f (rectangle rule on the
    /// uniform interior grid; exact for sine/cosine content up to 2(M+1)).
    double integrate(const std::vector<double>& f_values) const;

private:
    int n_modes_;
    int n_phys_;
    std::vector<double> eigvals_;
    std::vector<double> sin_table_; // [ (j-1)*N + (k-1) ] = sin(k pi x_j)
};

} // namespace cgl
