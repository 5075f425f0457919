#include "layersim/output.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "layersim/config.hpp"

namespace layersim::output {

namespace fs = std::filesystem;

namespace {

std::ofstream open_for_write(const fs::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

void check_written(std::ostream& out, const fs::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

void write_raster_line(std::ostream& out, const engine::StepFrame& frame) {
    for (std::size_t i = 0; i < frame.strategies.size(); ++i) {
        if (i) out << ' ';
        out << to_int(frame.strategies[i]);
    }
    out << '\n';
}

void write_summary_header(std::ostream& out) {
    out << "t,n,a_avg,P_all,cooperator_count,defector_count,ignore_count\n";
}

void write_summary_row(std::ostream& out, const engine::StepFrame& f) {
    out << f.t << ',' << f.n << ',' << format_real(f.a_avg) << ',' << format_real(f.total_power()) << ','
        << f.count(AgentStrategy::Cooperate) << ',' << f.count(AgentStrategy::Defect) << ','
        << f.count(AgentStrategy::Ignore) << '\n';
}

void write_metrics_header(std::ostream& out) { out << "seed,N,topology,lambda_min,p_err,c_avg,P_util,gini,a_avg_mean\n"; }

void write_metrics_row(std::ostream& out, const SystemParams& p, const metrics::MetricsReport& r) {
    out << p.seed << ',' << p.N << ',' << topology_label(p.topology) << ',' << format_real(p.lambda_min) << ','
        << format_real(p.p_err) << ',' << format_real(r.c_avg) << ',' << format_real(r.P_util) << ','
        << format_real(r.gini) << ',' << format_real(r.a_avg_mean) << '\n';
}

metrics::MetricsReport run_to_directory(const ValidatedParams& vp, const fs::path& out_dir, RunFiles* files) {
    fs::create_directories(out_dir);
    RunFiles paths{out_dir / kRasterFile, out_dir / kSummaryFile, out_dir / kMetricsFile,
                   out_dir / kResolvedConfigFile};

    {
        auto out = open_for_write(paths.config);
        config::write_resolved_config(out, vp);
        check_written(out, paths.config);
    }

    auto raster = open_for_write(paths.raster);
    auto summary = open_for_write(paths.summary);
    write_summary_header(summary);
    metrics::StreamingMetrics stats(vp, vp.params.burn_in);
    engine::run_streaming(vp, [&](const engine::StepFrame& f) {
        write_raster_line(raster, f);
        write_summary_row(summary, f);
        stats.observe(f);
    });
    check_written(raster, paths.raster);
    check_written(summary, paths.summary);

    const metrics::MetricsReport report = stats.report();
    {
        auto out = open_for_write(paths.metrics);
        write_metrics_header(out);
        write_metrics_row(out, vp.params, report);
        check_written(out, paths.metrics);
    }
    if (files) *files = paths;
    return report;
}

fs::path export_graph(const ValidatedParams& vp, const fs::path& out_dir) {
    fs::create_directories(out_dir);
    const network::CommGraph graph = engine::build_run_graph(vp);
    const fs::path path = out_dir / kGraphFile;
    auto out = open_for_write(path);
    network::write_edge_list(out, graph);
    check_written(out, path);
    return path;
}

}  // namespace layersim::output
