/*
   Copyright 2026 The secrecylab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "secrecylab/rng.hpp"
#include "secrecylab/secrecy.hpp"

namespace secrecylab::channel {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Split of the total power P between the information symbol u and the
/// N - 1 artificial-noise dimensions.
struct NoiseSplit {
    double phi;
    double signal_variance;      ///< P phi
    double an_variance_per_dim;  ///< P (1 - phi) / (N - 1)

    static NoiseSplit make(double power, double phi, int n_antennas);
};

/// Unitary basis W = [w1 W2] of C^N with w1 = h* / ||h||.
///
/// Stored implicitly as a Householder reflector followed by a phase on the
/// first column, so projections cost O(N) instead of O(N^2).
class BeamBasis {
public:
    /// Throws DegenerateError when ||h|| < 1e-30.
    explicit BeamBasis(std::span<const Complex> h);

    int dimension() const noexcept { return static_cast<int>(reflector_.size()); }
    double channel_norm() const noexcept { return channel_norm_; }

    /// Element W(row, col).
    Complex operator()(int row, int col) const;
    ComplexVector column(int col) const;

    /// g^T W = [g1, g2^T].
    ComplexVector project(std::span<const Complex> g) const;

    /// W c, e.g. the transmit vector x = w1 u + W2 v for c = [u, v].
    ComplexVector apply(std::span<const Complex> coefficients) const;

private:
    Complex phase(int col) const noexcept { return col == 0 ? first_phase_ : Complex{1.0, 0.0}; }

    ComplexVector reflector_;
    double reflector_norm2_ = 0.0;
    Complex first_phase_{1.0, 0.0};
    double channel_norm_ = 0.0;
};

/// One fading realization with its beamforming basis and projected Eve gains.
struct ChannelDraw {
    ComplexVector h;
    ComplexVector g;
    BeamBasis basis;
    double effective_gain; ///< ||h||^2
    double g1_gain;        ///< |g^T w1|^2
    double g2_gain;        ///< ||g^T W2||^2
};

/// N i.i.d. CN(0, 1) entries.
ComplexVector sample_intended_channel(rng::Stream& stream, int n_antennas);

/// N i.i.d. CN(0, variance) entries.
ComplexVector sample_eavesdropper_channel(rng::Stream& stream, int n_antennas, double variance);

BeamBasis null_space_basis(std::span<const Complex> h);

ChannelDraw make_draw(ComplexVector h, ComplexVector g);

/// Samples h then g from `stream`.
ChannelDraw draw_channel(rng::Stream& stream, const SystemConfig& config);

/// Instantaneous Eve SNR |g1|^2 P phi / (||g2||^2 sigma_v^2 + noise).
///
/// With the default zero receiver noise this equals
/// (N-1)/(1/phi - 1) * |g1|^2 / ||g2||^2 and is +infinity for phi == 1.
double eve_snr_sample(const ChannelDraw& draw, const NoiseSplit& split, double eve_noise_variance = 0.0);

} // namespace secrecylab::channel
