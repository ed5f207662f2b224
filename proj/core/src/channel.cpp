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

#include "secrecylab/channel.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "secrecylab/errors.hpp"

namespace secrecylab::channel {

NoiseSplit NoiseSplit::make(double power, double phi, int n_antennas)
{
    detail::require_domain(power > 0.0, "NoiseSplit: power must be positive");
    detail::require_domain(phi > 0.0 && phi <= 1.0, "NoiseSplit: phi must lie in (0, 1]");
    detail::require_domain(n_antennas >= 2, "NoiseSplit: n_antennas must be >= 2");
    return NoiseSplit{phi, power * phi, power * (1.0 - phi) / (n_antennas - 1)};
}

BeamBasis::BeamBasis(std::span<const Complex> h)
{
    detail::require_domain(h.size() >= 2, "BeamBasis: channel must have at least two entries");
    const double norm2 = std::accumulate(h.begin(), h.end(), 0.0,
                                         [](double acc, const Complex& z) { return acc + std::norm(z); });
    channel_norm_ = std::sqrt(norm2);
    if (!(channel_norm_ >= 1e-30)) {
        throw DegenerateError("BeamBasis: channel norm below 1e-30");
    }

    // a = h* / ||h||; reflector u = a + e^{i theta} e1 with theta = arg(a_0),
    // so H a = -e^{i theta} e1 and |u|^2 = 2 (1 + |a_0|) never vanishes.
    reflector_.resize(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        reflector_[i] = std::conj(h[i]) / channel_norm_;
    }
    const double a0 = std::abs(reflector_[0]);
    const Complex unit_phase = a0 > 0.0 ? reflector_[0] / a0 : Complex{1.0, 0.0};
    reflector_[0] += unit_phase;
    reflector_norm2_ = 2.0 * (1.0 + a0);
    first_phase_ = -unit_phase;
}

Complex BeamBasis::operator()(int row, int col) const
{
    const auto r = static_cast<std::size_t>(row);
    const auto c = static_cast<std::size_t>(col);
    const Complex identity = row == col ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    return (identity - 2.0 * reflector_[r] * std::conj(reflector_[c]) / reflector_norm2_) * phase(col);
}

ComplexVector BeamBasis::column(int col) const
{
    ComplexVector out(reflector_.size());
    for (int row = 0; row < dimension(); ++row) {
        out[static_cast<std::size_t>(row)] = (*this)(row, col);
    }
    return out;
}

ComplexVector BeamBasis::project(std::span<const Complex> g) const
{
    detail::require_domain(g.size() == reflector_.size(), "BeamBasis::project: dimension mismatch");
    Complex gu{0.0, 0.0};
    for (std::size_t i = 0; i < g.size(); ++i) {
        gu += g[i] * reflector_[i];
    }
    const Complex scale = 2.0 * gu / reflector_norm2_;
    ComplexVector out(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        out[k] = (g[k] - scale * std::conj(reflector_[k])) * phase(static_cast<int>(k));
    }
    return out;
}

ComplexVector BeamBasis::apply(std::span<const Complex> coefficients) const
{
    detail::require_domain(coefficients.size() == reflector_.size(), "BeamBasis::apply: dimension mismatch");
    ComplexVector scaled(coefficients.begin(), coefficients.end());
    scaled[0] *= first_phase_;
    Complex uc{0.0, 0.0};
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        uc += std::conj(reflector_[i]) * scaled[i];
    }
    const Complex scale = 2.0 * uc / reflector_norm2_;
    for (std::size_t i = 0; i < scaled.size(); ++i) {
        scaled[i] -= scale * reflector_[i];
    }
    return scaled;
}

ComplexVector sample_intended_channel(rng::Stream& stream, int n_antennas)
{
    return sample_eavesdropper_channel(stream, n_antennas, 1.0);
}

ComplexVector sample_eavesdropper_channel(rng::Stream& stream, int n_antennas, double variance)
{
    detail::require_domain(n_antennas >= 2, "channel sampling: n_antennas must be >= 2");
    detail::require_domain(variance > 0.0, "channel sampling: variance must be positive");
    ComplexVector out(static_cast<std::size_t>(n_antennas));
    for (auto& z : out) {
        z = stream.complex_normal(variance);
    }
    return out;
}

BeamBasis null_space_basis(std::span<const Complex> h)
{
    return BeamBasis(h);
}

ChannelDraw make_draw(ComplexVector h, ComplexVector g)
{
    BeamBasis basis(h);
    const ComplexVector projected = basis.project(g);
    double g2 = 0.0;
    for (std::size_t k = 1; k < projected.size(); ++k) {
        g2 += std::norm(projected[k]);
    }
    const double gain = basis.channel_norm() * basis.channel_norm();
    const double g1 = std::norm(projected[0]);
    return ChannelDraw{std::move(h), std::move(g), std::move(basis), gain, g1, g2};
}

ChannelDraw draw_channel(rng::Stream& stream, const SystemConfig& config)
{
    auto h = sample_intended_channel(stream, config.n_antennas);
    auto g = sample_eavesdropper_channel(stream, config.n_antennas, config.eve_variance);
    return make_draw(std::move(h), std::move(g));
}

double eve_snr_sample(const ChannelDraw& draw, const NoiseSplit& split, double eve_noise_variance)
{
    detail::require_domain(eve_noise_variance >= 0.0, "eve_snr_sample: noise variance must be >= 0");
    const double signal = draw.g1_gain * split.signal_variance;
    const double interference = draw.g2_gain * split.an_variance_per_dim + eve_noise_variance;
    if (signal == 0.0) {
        return 0.0;
    }
    if (interference == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return signal / interference;
}

} // namespace secrecylab::channel
