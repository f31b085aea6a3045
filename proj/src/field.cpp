#include "cgl/field.hpp"

#include <cmath>
#include <numbers>

namespace cgl {

namespace {

void require_same_modes(const SpectralField& a, const SpectralField& b) {
    if (a.n_modes() != b.n_modes()) {
        throw DimensionMismatch("fields have different mode counts: " +
                                std::to_string(a.n_modes()) + " vs " +
                                std::to_string(b.n_modes()));
    }
}

} // namespace

bool SpectralField::is_finite() const {
    for (const Complex& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

SpectralField operator+(const SpectralField& a, const SpectralField& b) {
    require_same_modes(a, b);
    SpectralField r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

SpectralField operator-(const SpectralField& a, const SpectralField& b) {
    require_same_modes(a, b);
    SpectralField r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

SpectralField operator*(Complex s, const SpectralField& a) {
    SpectralField r = a;
    for (Complex& c : r.coeffs) c *= s;
    return r;
}

SpectralField operator*(double s, const SpectralField& a) {
    return Complex(s, 0.0) * a;
}

SpectralField& operator+=(SpectralField& a, const SpectralField& b) {
    require_same_modes(a, b);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) a.coeffs[i] += b.coeffs[i];
    return a;
}

bool operator==(const SpectralField& a, const SpectralField& b) {
    return a.coeffs == b.coeffs;
}

double pairwise_sum(const std::vector<double>& v) {
    // recursive halving with a small serial base case
    struct Rec {
        static double sum(const double* p, std::size_t n) {
            if (n <= 8) {
                double s = 0.0;
                for (std::size_t i = 0; i < n; ++i) s += p[i];
                return s;
            }
            const std::size_t half = n / 2;
            return sum(p, half) + sum(p + half, n - half);
        }
    };
    return Rec::sum(v.data(), v.size());
}

double inner_product(const SpectralField& u, const SpectralField& v) {
    require_same_modes(u, v);
    std::vector<double> terms(u.coeffs.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        terms[i] = u.coeffs[i].real() * v.coeffs[i].real() +
                   u.coeffs[i].imag() * v.coeffs[i].imag();
    }
    return pairwise_sum(terms);
}

FieldNorms field_norms(const SpectralField& u) {
    const double pi = std::numbers::pi;
    std::vector<double> sq(u.coeffs.size());
    std::vector<double> sq_h1(u.coeffs.size());
    for (std::size_t i = 0; i < sq.size(); ++i) {
        const double m2 = std::norm(u.coeffs[i]);
        const double kpi = (static_cast<double>(i) + 1.0) * pi;
        sq[i] = m2;
        sq_h1[i] = kpi * kpi * m2;
    }
    return FieldNorms{std::sqrt(pairwise_sum(sq)), std::sqrt(pairwise_sum(sq_h1))};
}

} // namespace cgl
