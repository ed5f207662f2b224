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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "secrecylab/channel.hpp"
#include "secrecylab/errors.hpp"

using namespace secrecylab;
using channel::Complex;
using channel::ComplexVector;

namespace {

ComplexVector random_vector(int n, std::uint64_t seed)
{
    rng::Stream s(seed, 0);
    return channel::sample_intended_channel(s, n);
}

} // namespace

TEST(NoiseSplit, Variances)
{
    const auto split = channel::NoiseSplit::make(100.0, 0.25, 4);
    EXPECT_EQ(split.signal_variance, 25.0);
    EXPECT_EQ(split.an_variance_per_dim, 25.0);
    EXPECT_THROW(channel::NoiseSplit::make(100.0, 0.0, 4), DomainError);
    EXPECT_THROW(channel::NoiseSplit::make(100.0, 0.5, 1), DomainError);
}

TEST(BeamBasis, UnitaryWithMatchedFirstColumn)
{
    for (int n : {2, 3, 4, 8, 17}) {
        const auto h = random_vector(n, 100 + n);
        const channel::BeamBasis basis(h);
        double norm2 = 0.0;
        for (const auto& z : h) {
            norm2 += std::norm(z);
        }
        EXPECT_NEAR(basis.channel_norm(), std::sqrt(norm2), 1e-14);
        for (int i = 0; i < n; ++i) {
            // w1 = h* / ||h||
            EXPECT_LT(std::abs(basis(i, 0) - std::conj(h[i]) / std::sqrt(norm2)), 1e-14);
            for (int j = 0; j < n; ++j) {
                Complex inner{0.0, 0.0};
                for (int k = 0; k < n; ++k) {
                    inner += std::conj(basis(k, i)) * basis(k, j);
                }
                EXPECT_LT(std::abs(inner - (i == j ? 1.0 : 0.0)), 1e-13) << n << " " << i << " " << j;
            }
        }
        // h^T W2 = 0 and h^T w1 = ||h||.
        for (int j = 0; j < n; ++j) {
            Complex hw{0.0, 0.0};
            for (int k = 0; k < n; ++k) {
                hw += h[k] * basis(k, j);
            }
            EXPECT_LT(std::abs(hw - (j == 0 ? std::sqrt(norm2) : 0.0)), 1e-13);
        }
    }
}

TEST(BeamBasis, FastProjectAndApplyMatchDenseProducts)
{
    const int n = 6;
    const auto h = random_vector(n, 1);
    const auto g = random_vector(n, 2);
    const auto c = random_vector(n, 3);
    const channel::BeamBasis basis(h);
    const auto projected = basis.project(g);
    const auto applied = basis.apply(c);
    for (int j = 0; j < n; ++j) {
        Complex gw{0.0, 0.0}, wc{0.0, 0.0};
        for (int k = 0; k < n; ++k) {
            gw += g[k] * basis(k, j);
            wc += basis(j, k) * c[k];
        }
        EXPECT_LT(std::abs(projected[j] - gw), 1e-13);
        EXPECT_LT(std::abs(applied[j] - wc), 1e-13);
    }
    const auto col = basis.column(2);
    for (int k = 0; k < n; ++k) {
        EXPECT_EQ(col[k], basis(k, 2));
    }
}

TEST(BeamBasis, HandlesZeroLeadingEntryAndRejectsDegenerate)
{
    const ComplexVector h{{0.0, 0.0}, {0.0, 1.0}, {2.0, 0.0}};
    const channel::BeamBasis basis(h);
    EXPECT_LT(std::abs(basis(1, 0) - Complex(0.0, -1.0) / std::sqrt(5.0)), 1e-15);
    EXPECT_THROW(channel::BeamBasis(ComplexVector(4, Complex{0.0, 0.0})), DegenerateError);
    EXPECT_THROW(channel::BeamBasis(ComplexVector(1, Complex{1.0, 0.0})), DomainError);
}

TEST(ChannelDraw, GainsAndEveSnr)
{
    SystemConfig config;
    config.n_antennas = 5;
    rng::Stream s(9, 0);
    const auto draw = channel::draw_channel(s, config);
    double h2 = 0.0, g2 = 0.0;
    for (int k = 0; k < 5; ++k) {
        h2 += std::norm(draw.h[k]);
        g2 += std::norm(draw.g[k]);
    }
    EXPECT_NEAR(draw.effective_gain, h2, 1e-13 * h2);
    EXPECT_NEAR(draw.g1_gain + draw.g2_gain, g2, 1e-13 * g2);

    const double phi = 0.3;
    const auto split = channel::NoiseSplit::make(7.0, phi, 5);
    const double expected = 4.0 / (1.0 / phi - 1.0) * draw.g1_gain / draw.g2_gain;
    EXPECT_NEAR(channel::eve_snr_sample(draw, split), expected, 1e-13 * expected);
    EXPECT_LT(channel::eve_snr_sample(draw, split, 1.0), expected);
    EXPECT_EQ(channel::eve_snr_sample(draw, channel::NoiseSplit::make(7.0, 1.0, 5)),
              std::numeric_limits<double>::infinity());
}

TEST(ChannelDraw, EveVarianceScalesGWithoutChangingSnr)
{
    SystemConfig unit, scaled;
    unit.n_antennas = scaled.n_antennas = 4;
    scaled.eve_variance = 4.0;
    const auto split = channel::NoiseSplit::make(100.0, 0.4, 4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        rng::Stream a(seed, 0), b(seed, 0);
        const auto da = channel::draw_channel(a, unit);
        const auto db = channel::draw_channel(b, scaled);
        EXPECT_EQ(da.h, db.h);
        for (int k = 0; k < 4; ++k) {
            EXPECT_EQ(2.0 * da.g[k], db.g[k]);
        }
        EXPECT_EQ(channel::eve_snr_sample(da, split), channel::eve_snr_sample(db, split));
    }
    // Non-power-of-two scales agree to rounding.
    scaled.eve_variance = 3.0;
    rng::Stream a(1, 0), b(1, 0);
    const double ra = channel::eve_snr_sample(channel::draw_channel(a, unit), split);
    const double rb = channel::eve_snr_sample(channel::draw_channel(b, scaled), split);
    EXPECT_NEAR(ra, rb, 1e-12 * ra);
}

TEST(ChannelDraw, EffectiveGainIsGammaDistributed)
{
    SystemConfig config;
    config.n_antennas = 4;
    rng::Stream s(2, 0);
    constexpr int n = 100000;
    int above = 0;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double gain = channel::draw_channel(s, config).effective_gain;
        sum += gain;
        above += gain > 2.0 ? 1 : 0;
    }
    EXPECT_NEAR(sum / n, 4.0, 5.0 * 2.0 / std::sqrt(n));
    const double p = 0.857123460498547;
    EXPECT_NEAR(static_cast<double>(above) / n, p, 5.0 * std::sqrt(p * (1 - p) / n));
}
