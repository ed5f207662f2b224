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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace secrecylab::cli {

enum class ExperimentId {
    fig1_tradeoff,
    fig2_pmin,
    fig3_thr_vs_rs,
    fig4_nae_thr_vs_p,
    fig5_ae_thr_vs_p,
    fig6_gain_vs_eps,
    design_nae,
    design_ae,
    campaign,
    validate,
};

std::string_view to_string(ExperimentId id);
std::optional<ExperimentId> parse_experiment_id(std::string_view name);
const std::vector<ExperimentId>& all_experiments();

/// Parameters of one run. Every range holds at least one value after
/// `validate()`; an empty `message_rate` means "use the throughput-optimal
/// rate" where that makes sense.
struct ExperimentSpec {
    ExperimentId id = ExperimentId::design_nae;
    std::vector<int> n_antennas;
    std::vector<double> power_db;
    std::vector<double> epsilon;
    std::vector<double> message_rate;
    std::vector<double> delta;
    std::vector<double> phi;
    std::vector<double> effective_gain;
    std::string scheme = "nae"; ///< campaign only: nae | ae
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 0;
    std::string output_path; ///< empty: standard output
    bool timestamp = true;
    int threads = 1;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

/// Defaults for each experiment (the grids used for the published curves).
ExperimentSpec default_spec(ExperimentId id);

/// Parses "a:b:step" (inclusive), comma lists of values, or a mix such as
/// "0:10:5,40". With `allow_db_suffix` each value may end in "dB".
std::vector<double> parse_range(std::string_view text, std::string_view field, bool allow_db_suffix = false);

/// Sets one named parameter from its text form. Recognized keys:
/// n, p_db, eps, rs, delta, phi, h2, scheme, trials, seed, out, no_timestamp.
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

/// Applies top-level keys, then keys of the section named after the
/// experiment, from an INI file.
void apply_config_file(ExperimentSpec& spec, const std::string& path);

/// Worker count: SECRECYLAB_THREADS if set and positive, else hardware
/// parallelism.
int default_threads();

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Computes every grid point (in parallel over `spec.threads`) and returns
/// rows in grid order.
Table run_experiment(const ExperimentSpec& spec);

/// "# meta:" line, header and rows, LF-terminated.
std::string render_csv(const ExperimentSpec& spec, const Table& table, std::string_view timestamp = {});

/// Formats with 9 significant digits; NaN prints as "NaN".
std::string format_number(double value);

/// Entry point shared by the executable and the tests. Returns the exit
/// status: 0 on success, 1 on I/O failure, 2 on invalid input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace secrecylab::cli
