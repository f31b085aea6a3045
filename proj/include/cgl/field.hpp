#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "cgl/errors.hpp"

namespace cgl {

using Complex = std::complex<double>;

/// Complex field on I = (0,1) with homogeneous Dirichlet boundary values,
/// stored as coefficients in the orthonormal sine basis
/// e_k(x) = sqrt(2) sin(k pi x), k = 1..N. coeffs[k-1] holds mode k.
struct SpectralField {
    std::vector<Complex> coeffs;

    SpectralField() = default;
    explicit SpectralField(std::vector<Complex> c) : coeffs(std::move(c)) {}

    static SpectralField zero(int n_modes) {
        return SpectralField(std::vector<Complex>(static_cast<std::size_t>(n_modes)));
    }

    int n_modes() const { return static_cast<int>(coeffs.size()); }

    Complex& operator[](int k1based) { return coeffs[static_cast<std::size_t>(k1based - 1)]; }
    const Complex& operator[](int k1based) const { return coeffs[static_cast<std::size_t>(k1based - 1)]; }

    bool is_finite() const;
};

SpectralField operator+(const SpectralField& a, const SpectralField& b);
SpectralField operator-(const SpectralField& a, const SpectralField& b);
SpectralField operator*(Complex s, const SpectralField& a);
SpectralField operator*(double s, const SpectralField& a);
SpectralField& operator+=(SpectralField& a, const SpectralField& b);

bool operator==(const SpectralField& a, const SpectralField& b);

/// Coupled slow/fast pair on a common mode count.
struct FieldPair {
    SpectralField slow;
    SpectralField fast;
};

/// Pairwise (cascade) summation; keeps mode sums stable up to N ~ 1024.
double pairwise_sum(const std::vector<double>& v);

/// Re sum_k u_k conj(v_k); the discrete realization of Re int_I u vbar dx.
double inner_product(const SpectralField& u, const SpectralField& v);

struct FieldNorms {
    double l2;
    double h1_semi;
};

/// Parseval norms: l2 = (sum |a_k|^2)^{1/2}, h1_semi = (sum (k pi)^2 |a_k|^2)^{1/2}.
FieldNorms field_norms(const SpectralField& u);

inline double norm_l2(const SpectralField& u) { return field_norms(u).l2; }

} // namespace cgl
