#include "layersim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "layersim/engine.hpp"

namespace layersim::sweep {

std::string axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::SystemSize: return "system_size";
        case SweepAxis::LambdaMin: return "lambda_min";
        case SweepAxis::ErrorProb: return "p_err";
        case SweepAxis::Topology: return "topology";
    }
    return "unknown";
}

SweepAxis parse_axis(const std::string& name) {
    for (SweepAxis a : {SweepAxis::SystemSize, SweepAxis::LambdaMin, SweepAxis::ErrorProb, SweepAxis::Topology})
        if (axis_name(a) == name) return a;
    throw ValidationError("axis", "must be system_size, lambda_min, p_err or topology, got '" + name + "'");
}

std::string value_label(const AxisValue& value) {
    if (const double* x = std::get_if<double>(&value)) return format_real(*x);
    return topology_label(std::get<TopologySpec>(value));
}

SystemParams point_params(const SweepSpec& spec, const AxisValue& value, uint64_t seed) {
    SystemParams p = spec.base;
    p.seed = seed;
    switch (spec.axis) {
        case SweepAxis::SystemSize: p.N = static_cast<int>(std::get<double>(value)); break;
        case SweepAxis::LambdaMin: p.lambda_min = std::get<double>(value); break;
        case SweepAxis::ErrorProb: p.p_err = std::get<double>(value); break;
        case SweepAxis::Topology: p.topology = std::get<TopologySpec>(value); break;
    }
    return p;
}

namespace {

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        items.push_back(first == std::string::npos ? std::string{} : item.substr(first, last - first + 1));
    }
    return items;
}

// Config key replaced by the axis value.
std::string axis_key(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::SystemSize: return "N";
        case SweepAxis::LambdaMin: return "lambda_min";
        case SweepAxis::ErrorProb: return "p_err";
        case SweepAxis::Topology: return "topology";
    }
    return {};
}

AxisValue parse_value(SweepAxis axis, const std::string& text) {
    if (axis == SweepAxis::Topology) return parse_topology_label(text);
    if (axis == SweepAxis::SystemSize) return static_cast<double>(parse_integer(text, "values"));
    return parse_real(text, "values");
}

std::vector<uint64_t> parse_seeds(const std::string& text) {
    std::vector<uint64_t> seeds;
    if (const auto dots = text.find(".."); dots != std::string::npos && text.find(',') == std::string::npos) {
        const uint64_t lo = parse_seed(text.substr(0, dots));
        const uint64_t hi = parse_seed(text.substr(dots + 2));
        if (hi < lo) throw ValidationError("seeds", "empty range '" + text + "'");
        for (uint64_t s = lo;; ++s) {
            seeds.push_back(s);
            if (s == hi) break;
        }
        return seeds;
    }
    for (const auto& item : split_list(text)) seeds.push_back(parse_seed(item));
    return seeds;
}

bool value_less(const AxisValue& a, const AxisValue& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (const double* x = std::get_if<double>(&a)) return *x < std::get<double>(b);
    return value_label(a) < value_label(b);
}

bool value_equal(const AxisValue& a, const AxisValue& b) { return !value_less(a, b) && !value_less(b, a); }

}  // namespace

SweepSpec parse_sweep_config(const config::KeyValueFile& kv) {
    std::vector<std::string> allowed = config::run_keys();
    allowed.insert(allowed.end(), {"axis", "values", "seeds"});
    kv.reject_unknown(allowed);

    SweepSpec spec;
    const config::Entry& axis_entry = kv.require("axis");
    const config::Entry& values_entry = kv.require("values");
    const config::Entry& seeds_entry = kv.require("seeds");
    try {
        spec.axis = parse_axis(axis_entry.value);
    } catch (const ValidationError& e) {
        kv.fail(axis_entry, e.what());
    }
    spec.base = config::parse_run_config(kv, {axis_key(spec.axis), "seed"});

    try {
        for (const auto& item : split_list(values_entry.value)) {
            AxisValue v = parse_value(spec.axis, item);
            for (const auto& seen : spec.values)
                if (value_equal(seen, v)) throw ValidationError("values", "duplicate value '" + item + "'");
            spec.values.push_back(std::move(v));
        }
    } catch (const ValidationError& e) {
        kv.fail(values_entry, e.what());
    }
    if (spec.values.empty()) kv.fail(values_entry, "values: list is empty");

    try {
        spec.seeds = parse_seeds(seeds_entry.value);
    } catch (const ValidationError& e) {
        kv.fail(seeds_entry, e.what());
    }
    if (spec.seeds.empty()) kv.fail(seeds_entry, "seeds: list is empty");
    std::sort(spec.seeds.begin(), spec.seeds.end());
    if (std::adjacent_find(spec.seeds.begin(), spec.seeds.end()) != spec.seeds.end())
        kv.fail(seeds_entry, "seeds: duplicate seed");

    for (const auto& v : spec.values) {
        try {
            validate_params(point_params(spec, v, spec.seeds.front()));
        } catch (const ValidationError& e) {
            kv.fail(values_entry, "value " + value_label(v) + " gives invalid parameters: " + e.what());
        }
    }
    return spec;
}

SweepSpec load_sweep_config(const std::filesystem::path& path) {
    return parse_sweep_config(config::KeyValueFile::load(path));
}

std::vector<AxisValue> sorted_values(const SweepSpec& spec) {
    std::vector<AxisValue> values = spec.values;
    std::stable_sort(values.begin(), values.end(), value_less);
    return values;
}

metrics::MetricsReport run_point(const SystemParams& params) {
    const ValidatedParams vp = validate_params(params);
    metrics::StreamingMetrics stats(vp, params.burn_in);
    engine::run_streaming(vp, [&](const engine::StepFrame& f) { stats.observe(f); });
    return stats.report();
}

namespace {

struct MeanStd {
    double mean = 0, std = 0;
};

MeanStd mean_std(const std::vector<double>& xs) {
    MeanStd r;
    if (xs.empty()) return r;
    for (double x : xs) r.mean += x;
    r.mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return r;
    double ss = 0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.std = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    return r;
}

Aggregate aggregate(const AxisValue& value, std::span<const PointResult> points) {
    Aggregate agg{value};
    std::vector<double> c, u, g, a;
    for (const auto& p : points) {
        if (!p.report) continue;
        c.push_back(p.report->c_avg);
        u.push_back(p.report->P_util);
        g.push_back(p.report->gini);
        a.push_back(p.report->a_avg_mean);
    }
    agg.ok_runs = static_cast<int>(c.size());
    auto fill = [](const std::vector<double>& xs, double& mean, double& sd) {
        const MeanStd ms = mean_std(xs);
        mean = ms.mean;
        sd = ms.std;
    };
    fill(c, agg.c_avg, agg.c_avg_std);
    fill(u, agg.P_util, agg.P_util_std);
    fill(g, agg.gini, agg.gini_std);
    fill(a, agg.a_avg_mean, agg.a_avg_mean_std);
    return agg;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec, int parallelism, const PointRunner& runner) {
    if (parallelism < 1) throw std::invalid_argument("run_sweep: parallelism must be >= 1");
    SweepResult result;
    result.spec = spec;

    std::vector<uint64_t> seeds = spec.seeds;
    std::sort(seeds.begin(), seeds.end());
    const std::vector<AxisValue> values = sorted_values(spec);
    for (const auto& v : values)
        for (uint64_t s : seeds) result.points.push_back({v, s, point_params(spec, v, s), std::nullopt, {}});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < result.points.size(); i = next++) {
            PointResult& point = result.points[i];
            try {
                point.report = runner(point.params);
            } catch (const std::exception& e) {
                point.error = e.what();
            }
        }
    };
    const int workers = std::min<int>(parallelism, static_cast<int>(result.points.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    const std::span<const PointResult> all(result.points);
    for (std::size_t v = 0; v < values.size(); ++v)
        result.aggregates.push_back(aggregate(values[v], all.subspan(v * seeds.size(), seeds.size())));
    return result;
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += (ch == '\n' || ch == '\r') ? ' ' : ch;
    }
    return out + "\"";
}

}  // namespace

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "kind,axis,value,seed,N,topology,lambda_min,p_err,c_avg,P_util,gini,a_avg_mean,"
           "c_avg_std,P_util_std,gini_std,a_avg_mean_std,status\n";
    const std::string axis = axis_name(result.spec.axis);
    const std::size_t per_value = result.spec.seeds.size();

    for (std::size_t v = 0; v < result.aggregates.size(); ++v) {
        for (std::size_t k = 0; k < per_value; ++k) {
            const PointResult& p = result.points[v * per_value + k];
            out << "run," << axis << ',' << value_label(p.value) << ',' << p.seed << ',' << p.params.N << ','
                << topology_label(p.params.topology) << ',' << format_real(p.params.lambda_min) << ','
                << format_real(p.params.p_err) << ',';
            if (p.report) {
                out << format_real(p.report->c_avg) << ',' << format_real(p.report->P_util) << ','
                    << format_real(p.report->gini) << ',' << format_real(p.report->a_avg_mean) << ",,,,,ok\n";
            } else {
                out << ",,,,,,,," << csv_quote("error: " + p.error) << '\n';
            }
        }
        const Aggregate& a = result.aggregates[v];
        const SystemParams p = point_params(result.spec, a.value, 0);
        out << "aggregate," << axis << ',' << value_label(a.value) << ",," << p.N << ','
            << topology_label(p.topology) << ',' << format_real(p.lambda_min) << ',' << format_real(p.p_err) << ',';
        if (a.ok_runs > 0) {
            out << format_real(a.c_avg) << ',' << format_real(a.P_util) << ',' << format_real(a.gini) << ','
                << format_real(a.a_avg_mean) << ',' << format_real(a.c_avg_std) << ','
                << format_real(a.P_util_std) << ',' << format_real(a.gini_std) << ','
                << format_real(a.a_avg_mean_std) << ",ok " << a.ok_runs << '/' << per_value << '\n';
        } else {
            out << ",,,,,,,,error: no successful runs\n";
        }
    }
}

std::filesystem::path sweep_to_directory(const SweepSpec& spec, const std::filesystem::path& out_dir,
                                         int parallelism) {
    std::filesystem::create_directories(out_dir);
    const SweepResult result = run_sweep(spec, parallelism);
    const auto path = out_dir / kSweepFile;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_sweep_csv(out, result);
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
    return path;
}

}  // namespace layersim::sweep
