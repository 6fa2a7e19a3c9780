#pragma once

#include <complex>
#include <functional>
#include <random>
#include <vector>

namespace eitres {

/// Truncated Fourier representation of boundary data on the unit circle:
/// phi(theta) = sum_{|n| <= N} phi_n e^{i n theta}.
///
/// Mode 0 is carried for completeness but ignored by every norm and
/// quadratic form (boundary data is an equivalence class modulo constants).
/// Real-valued data satisfies phi_{-n} = conj(phi_n).
class FourierBoundaryData {
public:
    explicit FourierBoundaryData(int truncation);

    /// Single mode a*e^{i n theta}. Truncation defaults to |n| (at least 1).
    static FourierBoundaryData mode(int n, std::complex<double> amplitude,
                                    int truncation = -1);

    /// a*cos(n theta), i.e. coefficients a/2 at modes +-n.
    static FourierBoundaryData cosine(int n, double amplitude = 1.0,
                                      int truncation = -1);

    /// Constant boundary data (mode 0 only); in the quotient this is zero.
    static FourierBoundaryData constant(double value, int truncation = 1);

    /// Random real-valued data: independent coefficients in the unit box for
    /// n = 0..N, mirrored conjugate-symmetrically. Deterministic in the rng.
    static FourierBoundaryData random_real(int truncation, std::mt19937& rng);

    int truncation() const { return trunc_; }
    std::complex<double> coeff(int n) const;
    void set_coeff(int n, std::complex<double> value);

    /// Pointwise evaluation of the truncated series at angle theta.
    std::complex<double> evaluate(double theta) const;

private:
    int trunc_;
    std::vector<std::complex<double>> coeffs_;  // index n + trunc_
};

/// Trapezoidal-rule Fourier coefficients of a 2*pi-periodic function sampled
/// at `samples` equispaced angles. Spectrally accurate for smooth data, but
/// requires samples >= 4*truncation to keep aliasing controlled; fewer
/// samples raise std::invalid_argument.
FourierBoundaryData fourier_coefficients(
    const std::function<std::complex<double>(double)>& f, int truncation,
    int samples);

/// H^{1/2} seminorm on the circle, sqrt(2*pi * sum |n| |phi_n|^2).
/// Zero exactly when the data is constant up to truncation.
double h_half_norm(const FourierBoundaryData& phi);

}  // namespace eitres
