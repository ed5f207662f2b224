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

#include "secrecylab/cli/experiment.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "secrecylab/ae.hpp"
#include "secrecylab/errors.hpp"
#include "secrecylab/nae.hpp"
#include "secrecylab/secrecy.hpp"
#include "secrecylab/sim.hpp"

#ifndef SECRECYLAB_VERSION
#define SECRECYLAB_VERSION "unknown"
#endif

namespace secrecylab::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::array<std::pair<ExperimentId, std::string_view>, 10> kNames{{
    {ExperimentId::fig1_tradeoff, "fig1_tradeoff"},
    {ExperimentId::fig2_pmin, "fig2_pmin"},
    {ExperimentId::fig3_thr_vs_rs, "fig3_thr_vs_rs"},
    {ExperimentId::fig4_nae_thr_vs_p, "fig4_nae_thr_vs_p"},
    {ExperimentId::fig5_ae_thr_vs_p, "fig5_ae_thr_vs_p"},
    {ExperimentId::fig6_gain_vs_eps, "fig6_gain_vs_eps"},
    {ExperimentId::design_nae, "design_nae"},
    {ExperimentId::design_ae, "design_ae"},
    {ExperimentId::campaign, "campaign"},
    {ExperimentId::validate, "validate"},
}};

std::string_view trim(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = text.find_last_not_of(" \t\r\n");
    return text.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view field, bool allow_db_suffix)
{
    text = trim(text);
    if (allow_db_suffix && text.size() > 2) {
        const auto tail = text.substr(text.size() - 2);
        if ((tail[0] == 'd' || tail[0] == 'D') && (tail[1] == 'b' || tail[1] == 'B')) {
            text = trim(text.substr(0, text.size() - 2));
        }
    }
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
        throw ConfigError(std::string(field), "cannot parse '" + std::string(text) + "' as a finite number");
    }
    return value;
}

std::uint64_t parse_count(std::string_view text, std::string_view field)
{
    text = trim(text);
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) {
        // Accept integral values written in floating form, e.g. 1e6.
        const double as_double = parse_number(text, field, false);
        if (as_double < 0.0 || as_double != std::floor(as_double) || as_double > 1.8e19) {
            throw ConfigError(std::string(field), "expected a nonnegative integer, got '" + std::string(text) + "'");
        }
        return static_cast<std::uint64_t>(as_double);
    }
    return value;
}

std::string join(const std::vector<double>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? ";" : "") + format_number(values[i]);
    }
    return out.empty() ? "-" : out;
}

std::vector<double> log_grid(std::initializer_list<double> decades)
{
    std::vector<double> out;
    for (double d : decades) {
        for (double m : {1.0, 2.0, 5.0}) {
            out.push_back(m * d);
        }
    }
    return out;
}

// Evaluates `f(i)` for i in [0, count) on up to `threads` workers; results
// keep index order, and the first failure (by index) is rethrown.
template <typename Row>
std::vector<Row> parallel_map(std::size_t count, int threads, const std::function<Row(std::size_t)>& f)
{
    std::vector<Row> rows(count);
    std::vector<std::exception_ptr> errors(count);
    const auto run = [&](std::size_t worker, std::size_t stride) {
        for (std::size_t i = worker; i < count; i += stride) {
            try {
                rows[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(static_cast<std::size_t>(threads), 1, count == 0 ? 1 : count));
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(run, w, workers);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

using Row = std::vector<std::string>;

std::string fmt(double v)
{
    return format_number(v);
}

SystemConfig make_config(int n, double p_db, std::uint64_t seed = 0)
{
    SystemConfig config;
    config.n_antennas = n;
    config.power = db_to_linear(p_db);
    config.rng_seed = seed;
    return config;
}

// Cartesian product helper: visits every combination in row-major order of
// the given dimension sizes.
std::vector<std::vector<std::size_t>> grid(std::initializer_list<std::size_t> sizes)
{
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t size : sizes) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& prefix : out) {
            for (std::size_t i = 0; i < size; ++i) {
                auto item = prefix;
                item.push_back(i);
                next.push_back(std::move(item));
            }
        }
        out = std::move(next);
    }
    return out;
}

double optimal_or_given(const std::vector<double>& rates, std::size_t i, const SecrecyBudget& budget,
                        const SystemConfig& config)
{
    return rates.empty() ? nae::optimal_message_rate(budget, config).message_rate : rates[i];
}

Table run_grid(const ExperimentSpec& s)
{
    const auto& ns = s.n_antennas;
    const auto& ps = s.power_db;
    const auto& es = s.epsilon;
    const std::size_t rs_count = std::max<std::size_t>(1, s.message_rate.size());
    Table table;
    std::vector<std::vector<std::size_t>> points;
    std::function<Row(std::size_t)> row;

    switch (s.id) {
    case ExperimentId::fig1_tradeoff:
        table.columns = {"N", "P_dB", "R_s", "epsilon", "p_tx"};
        points = grid({ns.size(), ps.size(), s.message_rate.size(), es.size()});
        row = [&](std::size_t i) -> Row {
            const auto& k = points[i];
            const int n = ns[k[0]];
            const auto design = nae::delay_optimal_design(s.message_rate[k[2]], SecrecyBudget(es[k[3]], n),
                                                          make_config(n, ps[k[1]]));
            return {std::to_string(n), fmt(ps[k[1]]), fmt(s.message_rate[k[2]]), fmt(es[k[3]]), fmt(design.p_tx)};
        };
        break;
    case ExperimentId::fig2_pmin:
        table.columns = {"delta", "N", "epsilon", "R_s", "P_min_dB"};
        points = grid({s.delta.size(), es.size(), s.message_rate.size(), ns.size()});
        row = [&](std::size_t i) -> Row {
            const auto& k = points[i];
            const int n = ns[k[3]];
            const double p = nae::min_power(s.message_rate[k[2]], SecrecyBudget(es[k[1]], n), s.delta[k[0]]);
            return {fmt(s.delta[k[0]]), std::to_string(n), fmt(es[k[1]]), fmt(s.message_rate[k[2]]),
                    fmt(linear_to_db(p))};
        };
        break;
    case ExperimentId::fig3_thr_vs_rs:
        table.columns = {"N", "P_dB", "epsilon", "R_s", "p_tx", "eta"};
        points = grid({ns.size(), ps.size(), es.size(), s.message_rate.size()});
        row = [&](std::size_t i) -> Row {
            const auto& k = points[i];
            const int n = ns[k[0]];
            const double rs = s.message_rate[k[3]];
            const auto design = nae::delay_optimal_design(rs, SecrecyBudget(es[k[2]], n), make_config(n, ps[k[1]]));
            return {std::to_string(n), fmt(ps[k[1]]), fmt(es[k[2]]), fmt(rs), fmt(design.p_tx), fmt(design.throughput)};
        };
        break;
    case ExperimentId::fig4_nae_thr_vs_p:
        table.columns = {"P_dB", "epsilon", "N", "eta_exact", "eta_approx"};
        points = grid({es.size(), ns.size(), ps.size()});
        row = [&](std::size_t i) -> Row {
            const auto& k = points[i];
            const int n = ns[k[1]];
            const SecrecyBudget budget(es[k[0]], n);
            const auto config = make_config(n, ps[k[2]]);
            const double exact = nae::optimal_message_rate(budget, config).design.throughput;
            const double approx = config.power > 1.0 ? nae::throughput_high_snr_approx(budget, config).eta : kNaN;
            return {fmt(ps[k[2]]), fmt(es[k[0]]), std::to_string(n), fmt(exact), fmt(approx)};
        };
        break;
    case ExperimentId::fig5_ae_thr_vs_p:
        table.columns = {"P_dB", "epsilon", "N", "eta_exact", "eta_approx_full", "eta_approx_simple"};
        points = grid({es.size(), ns.size(), ps.size()});
        row = [&](std::size_t i) -> Row {
            const auto& k = points[i];
            const int n = ns[k[1]];
            const SecrecyBudget budget(es[k[0]], n);
            const auto config = make_config(n, ps[k[2]]);
            const double full = budget.unconstrained() ? kNaN : ae::throughput_approx_full(budget, config);
            return {fmt(ps[k[2]]), fmt(es[k[0]]), std::to_string(n), fmt(ae::throughput_exact(budget, config)),
                    fmt(full), fmt(ae::throughput_approx_simple(budget, config).eta)};
        };
        break;
    case ExperimentId::fig6_gain_vs_eps:
        table.columns = {"epsilon", "N", "P_dB", "eta_ae", "eta_nae", "gain_exact", "gain_approx"};
        points = grid({ns.size(), ps.size(), es.size()});
        row = [&](std::size_t i) -> Row {
            const auto& k = points[i];
            const int n = ns[k[0]];
            const SecrecyBudget budget(es[k[2]], n);
            const auto config = make_config(n, ps[k[1]]);
            const double eta_ae = ae::throughput_exact(budget, config);
            const double eta_nae = nae::optimal_message_rate(budget, config).design.throughput;
            const double approx = config.power > 1.0 ? ae::throughput_gain_approx(config) : kNaN;
            return {fmt(es[k[2]]), std::to_string(n), fmt(ps[k[1]]), fmt(eta_ae), fmt(eta_nae),
                    fmt(eta_ae - eta_nae), fmt(approx)};
        };
        break;
    case ExperimentId::design_nae:
        table.columns = {"R_s", "epsilon", "N", "P_dB", "phi", "R_b", "R_e", "mu", "p_tx", "eta"};
        points = grid({rs_count, es.size(), ns.size(), ps.size()});
        row = [&](std::size_t i) -> Row {
            const auto& k = points[i];
            const int n = ns[k[2]];
            const SecrecyBudget budget(es[k[1]], n);
            const auto config = make_config(n, ps[k[3]]);
            const double rs = optimal_or_given(s.message_rate, k[0], budget, config);
            const auto d = nae::delay_optimal_design(rs, budget, config);
            return {fmt(rs), fmt(es[k[1]]), std::to_string(n), fmt(ps[k[3]]), fmt(d.phi), fmt(d.rates.codeword),
                    fmt(d.rates.redundancy()), fmt(d.threshold), fmt(d.p_tx), fmt(d.throughput)};
        };
        break;
    case ExperimentId::design_ae:
        table.columns = {"h2", "epsilon", "N", "P_dB", "transmitting", "phi", "R_b", "R_s", "R_e"};
        points = grid({s.effective_gain.size(), es.size(), ns.size(), ps.size()});
        row = [&](std::size_t i) -> Row {
            const auto& k = points[i];
            const int n = ns[k[2]];
            const double h2 = s.effective_gain[k[0]];
            const auto d = ae::adapt_design(h2, SecrecyBudget(es[k[1]], n), make_config(n, ps[k[3]]));
            return {fmt(h2), fmt(es[k[1]]), std::to_string(n), fmt(ps[k[3]]), d.transmitting ? "1" : "0",
                    fmt(d.phi), fmt(d.rates.codeword), fmt(d.rates.message), fmt(d.rates.redundancy())};
        };
        break;
    case ExperimentId::validate:
        table.columns = {"phi", "N", "samples", "seed", "max_deviation", "max_deviation_limit"};
        points = grid({s.phi.size(), ns.size()});
        row = [&](std::size_t i) -> Row {
            const auto& k = points[i];
            const int n = ns[k[1]];
            const double phi = s.phi[k[0]];
            using Kind = sim::CcdfReference::Kind;
            const double closed = sim::validate_eve_ccdf(phi, n, s.trials, s.seed, {Kind::closed_form}, 1);
            const double limit = sim::validate_eve_ccdf(phi, n, s.trials, s.seed, {Kind::exponential_limit}, 1);
            return {fmt(phi), std::to_string(n), std::to_string(s.trials), std::to_string(s.seed), fmt(closed),
                    fmt(limit)};
        };
        break;
    case ExperimentId::campaign:
        break;
    }

    table.rows = parallel_map<Row>(points.size(), s.threads, row);
    return table;
}

// Campaigns parallelize inside the simulator, one grid point at a time.
Table run_campaigns(const ExperimentSpec& s)
{
    Table table;
    table.columns = {"scheme", "R_s", "epsilon", "N", "P_dB", "trials", "transmissions", "secrecy_outages",
                     "decode_failures", "p_tx", "p_tx_ci", "p_so", "p_so_ci", "throughput", "throughput_ci"};
    const bool is_ae = s.scheme == "ae";
    const std::size_t rs_count = is_ae ? 1 : std::max<std::size_t>(1, s.message_rate.size());
    for (const auto& k : grid({rs_count, s.epsilon.size(), s.n_antennas.size(), s.power_db.size()})) {
        const int n = s.n_antennas[k[2]];
        const SecrecyBudget budget(s.epsilon[k[1]], n);
        sim::CampaignSpec campaign;
        campaign.config = make_config(n, s.power_db[k[3]], s.seed);
        campaign.trials = s.trials;
        campaign.worker_streams = s.threads;
        double rs = kNaN;
        if (is_ae) {
            campaign.scheme = budget;
        } else {
            rs = optimal_or_given(s.message_rate, k[0], budget, campaign.config);
            campaign.scheme = nae::delay_optimal_design(rs, budget, campaign.config);
        }
        const auto r = sim::simulate_campaign(campaign);
        table.rows.push_back({s.scheme, fmt(rs), fmt(s.epsilon[k[1]]), std::to_string(n), fmt(s.power_db[k[3]]),
                              std::to_string(r.trials), std::to_string(r.transmissions),
                              std::to_string(r.secrecy_outages), std::to_string(r.decode_failures),
                              fmt(r.p_tx.value), fmt(r.p_tx.half_width), fmt(r.p_so.value), fmt(r.p_so.half_width),
                              fmt(r.throughput.value), fmt(r.throughput.half_width)});
    }
    return table;
}

std::string utc_timestamp()
{
    const std::time_t now = std::time(nullptr);
    std::tm parts{};
    gmtime_r(&now, &parts);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &parts);
    return buffer;
}

} // namespace

std::string_view to_string(ExperimentId id)
{
    for (const auto& [key, name] : kNames) {
        if (key == id) {
            return name;
        }
    }
    return "unknown";
}

std::optional<ExperimentId> parse_experiment_id(std::string_view name)
{
    for (const auto& [key, label] : kNames) {
        if (label == name) {
            return key;
        }
    }
    return std::nullopt;
}

const std::vector<ExperimentId>& all_experiments()
{
    static const std::vector<ExperimentId> ids = [] {
        std::vector<ExperimentId> out;
        for (const auto& entry : kNames) {
            out.push_back(entry.first);
        }
        return out;
    }();
    return ids;
}

std::string format_number(double value)
{
    if (std::isnan(value)) {
        return "NaN";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.9g", value);
    return buffer;
}

ExperimentSpec default_spec(ExperimentId id)
{
    ExperimentSpec s;
    s.id = id;
    s.threads = default_threads();
    s.n_antennas = {4};
    s.power_db = {20.0};
    s.epsilon = {0.01};
    s.delta = {0.9};
    s.phi = {0.3};
    s.effective_gain = {1.0};
    switch (id) {
    case ExperimentId::fig1_tradeoff:
        s.n_antennas = {2, 4, 8};
        s.power_db = {10.0};
        s.message_rate = {2.0};
        s.epsilon = log_grid({1e-4, 1e-3, 1e-2, 1e-1});
        s.epsilon.push_back(1.0);
        break;
    case ExperimentId::fig2_pmin:
        s.n_antennas = {2, 3, 4, 5, 6, 8, 10, 12, 16, 24, 32, 48, 64};
        s.message_rate = {2.0};
        s.delta = {0.5, 0.9, 0.99};
        break;
    case ExperimentId::fig3_thr_vs_rs:
        s.n_antennas = {2, 4, 8};
        s.message_rate = parse_range("0.25:8:0.25", "rs");
        break;
    case ExperimentId::fig4_nae_thr_vs_p:
    case ExperimentId::fig5_ae_thr_vs_p:
        s.power_db = parse_range("0:50:5", "p_db");
        s.epsilon = {1.0, 0.1, 0.01};
        break;
    case ExperimentId::fig6_gain_vs_eps:
        s.n_antennas = {2, 4, 8};
        s.power_db = {40.0};
        s.epsilon = log_grid({1e-4, 1e-3, 1e-2});
        s.epsilon.push_back(0.1);
        break;
    case ExperimentId::design_nae:
    case ExperimentId::design_ae:
    case ExperimentId::campaign:
    case ExperimentId::validate:
        break;
    }
    return s;
}

std::vector<double> parse_range(std::string_view text, std::string_view field, bool allow_db_suffix)
{
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view item = trim(text.substr(start, comma - start));
        start = comma + 1;
        if (item.empty()) {
            throw ConfigError(std::string(field), "empty list element");
        }
        const auto colon1 = item.find(':');
        if (colon1 == std::string_view::npos) {
            out.push_back(parse_number(item, field, allow_db_suffix));
            continue;
        }
        const auto colon2 = item.find(':', colon1 + 1);
        if (colon2 == std::string_view::npos) {
            throw ConfigError(std::string(field), "range must be start:stop:step");
        }
        const double first = parse_number(item.substr(0, colon1), field, allow_db_suffix);
        const double last = parse_number(item.substr(colon1 + 1, colon2 - colon1 - 1), field, allow_db_suffix);
        const double step = parse_number(item.substr(colon2 + 1), field, allow_db_suffix);
        if (!(step > 0.0) || last < first) {
            throw ConfigError(std::string(field), "range needs step > 0 and stop >= start");
        }
        const auto count = static_cast<long>(std::floor((last - first) / step * (1.0 + 1e-12) + 1e-9));
        if (count > 1000000) {
            throw ConfigError(std::string(field), "range has more than 1e6 points");
        }
        for (long i = 0; i <= count; ++i) {
            out.push_back(first + static_cast<double>(i) * step);
        }
    }
    return out;
}

void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value)
{
    const std::string field(key);
    if (key == "n") {
        std::vector<int> counts;
        for (double v : parse_range(value, key)) {
            if (v != std::floor(v) || v < 2 || v > 1e6) {
                throw ConfigError(field, "antenna counts must be integers >= 2");
            }
            counts.push_back(static_cast<int>(v));
        }
        spec.n_antennas = std::move(counts);
    } else if (key == "p_db") {
        spec.power_db = parse_range(value, key, true);
    } else if (key == "eps") {
        spec.epsilon = parse_range(value, key);
    } else if (key == "rs") {
        spec.message_rate = trim(value) == "opt" ? std::vector<double>{} : parse_range(value, key);
    } else if (key == "delta") {
        spec.delta = parse_range(value, key);
    } else if (key == "phi") {
        spec.phi = parse_range(value, key);
    } else if (key == "h2") {
        spec.effective_gain = parse_range(value, key);
    } else if (key == "scheme") {
        spec.scheme = std::string(trim(value));
    } else if (key == "trials") {
        spec.trials = parse_count(value, key);
    } else if (key == "seed") {
        spec.seed = parse_count(value, key);
    } else if (key == "out") {
        spec.output_path = std::string(trim(value));
    } else if (key == "no_timestamp") {
        const auto v = trim(value);
        spec.timestamp = !(v == "1" || v == "true" || v == "yes" || v == "on");
    } else {
        throw ConfigError(field, "unknown parameter");
    }
}

void apply_config_file(ExperimentSpec& spec, const std::string& path)
{
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError("config", e.what());
    }
    const std::string section(to_string(spec.id));
    for (const auto& [key, node] : tree) {
        if (node.empty()) {
            apply_setting(spec, key, node.data());
        }
    }
    if (const auto own = tree.get_child_optional(section)) {
        for (const auto& [key, node] : *own) {
            apply_setting(spec, key, node.data());
        }
    }
}

int default_threads()
{
    if (const char* env = std::getenv("SECRECYLAB_THREADS")) {
        const int requested = std::atoi(env);
        if (requested > 0) {
            return requested;
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void ExperimentSpec::validate() const
{
    const auto need = [](bool ok, const char* field, const char* message) {
        if (!ok) {
            throw ConfigError(field, message);
        }
    };
    need(!n_antennas.empty(), "n", "at least one value required");
    need(std::all_of(n_antennas.begin(), n_antennas.end(), [](int n) { return n >= 2; }), "n", "must be >= 2");
    need(!power_db.empty(), "p_db", "at least one value required");
    need(std::all_of(power_db.begin(), power_db.end(), [](double p) { return std::isfinite(p) && p < 3000.0; }),
         "p_db", "must be finite");
    need(!epsilon.empty(), "eps", "at least one value required");
    need(std::all_of(epsilon.begin(), epsilon.end(), [](double e) { return e > 0.0 && e <= 1.0; }), "eps",
         "must lie in (0, 1]");
    need(std::all_of(message_rate.begin(), message_rate.end(), [](double r) { return r > 0.0; }), "rs",
         "must be > 0");
    need(std::all_of(delta.begin(), delta.end(), [](double d) { return d > 0.0 && d < 1.0; }), "delta",
         "must lie in (0, 1)");
    need(std::all_of(phi.begin(), phi.end(), [](double f) { return f > 0.0 && f < 1.0; }), "phi",
         "must lie in (0, 1)");
    need(std::all_of(effective_gain.begin(), effective_gain.end(), [](double h) { return h >= 0.0; }), "h2",
         "must be >= 0");
    need(threads >= 1, "threads", "must be >= 1");
    need(trials >= 1, "trials", "must be >= 1");

    switch (id) {
    case ExperimentId::fig1_tradeoff:
    case ExperimentId::fig2_pmin:
    case ExperimentId::fig3_thr_vs_rs:
        need(!message_rate.empty(), "rs", "explicit message rates required");
        need(id != ExperimentId::fig2_pmin || !delta.empty(), "delta", "at least one value required");
        break;
    case ExperimentId::design_ae:
        need(!effective_gain.empty(), "h2", "at least one value required");
        break;
    case ExperimentId::campaign:
        need(scheme == "nae" || scheme == "ae", "scheme", "must be 'nae' or 'ae'");
        break;
    case ExperimentId::validate:
        need(!phi.empty(), "phi", "at least one value required");
        need(trials >= 10000, "trials", "validation needs at least 10000 samples");
        break;
    default:
        break;
    }
}

Table run_experiment(const ExperimentSpec& spec)
{
    spec.validate();
    return spec.id == ExperimentId::campaign ? run_campaigns(spec) : run_grid(spec);
}

std::string render_csv(const ExperimentSpec& spec, const Table& table, std::string_view timestamp)
{
    std::ostringstream out;
    out << "# meta: secrecylab " << SECRECYLAB_VERSION << " experiment=" << to_string(spec.id)
        << " seed=" << spec.seed << " n=";
    for (std::size_t i = 0; i < spec.n_antennas.size(); ++i) {
        out << (i ? ";" : "") << spec.n_antennas[i];
    }
    out << " p_db=" << join(spec.power_db) << " eps=" << join(spec.epsilon)
        << " rs=" << (spec.message_rate.empty() ? "opt" : join(spec.message_rate)) << " delta=" << join(spec.delta)
        << " phi=" << join(spec.phi) << " h2=" << join(spec.effective_gain) << " scheme=" << spec.scheme
        << " trials=" << spec.trials;
    if (!timestamp.empty()) {
        out << " timestamp=" << timestamp;
    }
    out << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << row[i];
        }
        out << '\n';
    }
    return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Secrecy throughput designs, sweeps and Monte Carlo campaigns", "secrecylab"};
    std::string experiment;
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;
    bool no_timestamp = false;

    std::string ids;
    for (const auto id : all_experiments()) {
        ids += (ids.empty() ? "" : ", ") + std::string(to_string(id));
    }
    app.add_option("experiment_id", experiment, "One of: " + ids)->required();
    app.add_option("--config", config_path, "INI file; [section] named after the experiment");
    const auto flag = [&](const std::string& name, const std::string& key, const std::string& help) {
        app.add_option_function<std::string>(
            name, [&overrides, key](const std::string& v) { overrides.emplace_back(key, v); }, help);
    };
    flag("--n", "n", "Transmit antennas (list or a:b:step)");
    flag("--p-db", "p_db", "Transmit power in dB (list or range; 'dB' suffix allowed)");
    flag("--eps", "eps", "Secrecy outage limit(s) in (0, 1]");
    flag("--rs", "rs", "Message rate(s) in bits/channel use, or 'opt'");
    flag("--delta", "delta", "Transmit probability target(s)");
    flag("--trials", "trials", "Monte Carlo trials or samples");
    flag("--seed", "seed", "64-bit RNG seed");
    flag("--out", "out", "Output CSV path (default: stdout)");
    flag("--phi", "phi", "Power split for 'validate'");
    flag("--h2", "h2", "Channel gain ||h||^2 for 'design_ae'");
    flag("--scheme", "scheme", "Campaign scheme: nae | ae");
    app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp from the meta line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        const auto id = parse_experiment_id(experiment);
        if (!id) {
            throw ConfigError("experiment_id", "unknown experiment '" + experiment + "'");
        }
        ExperimentSpec spec = default_spec(*id);
        if (!config_path.empty()) {
            apply_config_file(spec, config_path);
        }
        for (const auto& [key, value] : overrides) {
            apply_setting(spec, key, value);
        }
        if (no_timestamp) {
            spec.timestamp = false;
        }

        const Table table = run_experiment(spec);
        const std::string csv = render_csv(spec, table, spec.timestamp ? utc_timestamp() : std::string{});
        if (spec.output_path.empty()) {
            out << csv;
        } else {
            std::ofstream file(spec.output_path, std::ios::binary | std::ios::trunc);
            if (!(file << csv) || !file.flush()) {
                throw IoError("cannot write '" + spec.output_path + "'");
            }
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "secrecylab: invalid " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        err << "secrecylab: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "secrecylab: " << e.what() << '\n';
        return 2;
    }
}

} // namespace secrecylab::cli
