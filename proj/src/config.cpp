#include "layersim/config.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

namespace layersim::config {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string position(const std::string& source, int line) {
    return line > 0 ? source + ":" + std::to_string(line) : source;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& what)
    : std::runtime_error(position(source, line) + ": " + what), line_(line) {}

KeyValueFile KeyValueFile::parse(std::istream& in, const std::string& source) {
    KeyValueFile kv;
    kv.source_ = source;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(source, line_no, "expected 'key = value'");
        Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
        if (e.key.empty()) throw ConfigError(source, line_no, "empty key");
        if (e.value.empty()) throw ConfigError(source, line_no, "empty value for key '" + e.key + "'");
        if (const Entry* dup = kv.find(e.key))
            throw ConfigError(source, line_no,
                              "duplicate key '" + e.key + "' (first set on line " + std::to_string(dup->line) + ")");
        kv.entries_.push_back(std::move(e));
    }
    return kv;
}

KeyValueFile KeyValueFile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string(), 0, "cannot open config file");
    return parse(in, path.string());
}

const Entry* KeyValueFile::find(const std::string& key) const {
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.key == key; });
    return it == entries_.end() ? nullptr : &*it;
}

const Entry& KeyValueFile::require(const std::string& key) const {
    if (const Entry* e = find(key)) return *e;
    throw ConfigError(source_, 0, "missing required key '" + key + "'");
}

void KeyValueFile::reject_unknown(const std::vector<std::string>& allowed) const {
    for (const auto& e : entries_)
        if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end())
            fail(e, "unknown key '" + e.key + "'");
}

void KeyValueFile::fail(const Entry& e, const std::string& what) const { throw ConfigError(source_, e.line, what); }

const std::vector<std::string>& run_keys() {
    static const std::vector<std::string> keys = {"N",     "R_V_ohm", "R0_ohm",  "V_volt", "lambda_min",
                                                  "p_err", "topology", "ws_K",   "ws_beta", "ba_m",
                                                  "steps", "burn_in",  "seed"};
    return keys;
}

std::string topology_kind_name(TopologyKind kind) {
    switch (kind) {
        case TopologyKind::Ring: return "ring";
        case TopologyKind::WattsStrogatz: return "watts_strogatz";
        case TopologyKind::BarabasiAlbert: return "barabasi_albert";
    }
    return "unknown";
}

SystemParams parse_run_config(const KeyValueFile& kv, const std::vector<std::string>& optional_keys) {
    SystemParams p;

    // Wraps value conversion so errors carry the line of the offending entry.
    auto with_line = [&](const Entry& e, auto convert) {
        try {
            return convert(e.value);
        } catch (const ValidationError& err) {
            kv.fail(e, err.what());
        }
    };
    auto present = [&](const std::string& key) {
        return kv.find(key) ||
               std::find(optional_keys.begin(), optional_keys.end(), key) == optional_keys.end();
    };
    auto integer = [&](const std::string& key, int& target) {
        if (!present(key)) return;
        const Entry& e = kv.require(key);
        const long long v = with_line(e, [&](const std::string& s) { return parse_integer(s, key); });
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
            kv.fail(e, key + ": out of range");
        target = static_cast<int>(v);
    };
    auto real = [&](const std::string& key, double& target) {
        if (!present(key)) return;
        const Entry& e = kv.require(key);
        target = with_line(e, [&](const std::string& s) { return parse_real(s, key); });
    };

    integer("N", p.N);
    real("R_V_ohm", p.R_V);
    real("R0_ohm", p.R_0);
    real("V_volt", p.V);
    real("lambda_min", p.lambda_min);
    real("p_err", p.p_err);
    integer("steps", p.steps);
    if (present("seed")) {
        const Entry& e = kv.require("seed");
        p.seed = with_line(e, [](const std::string& s) { return parse_seed(s); });
    }
    if (kv.find("burn_in")) integer("burn_in", p.burn_in);
    else p.burn_in = 0;

    if (present("topology")) {
        const Entry& topo = kv.require("topology");
        if (topo.value == "ring") {
            p.topology.kind = TopologyKind::Ring;
        } else if (topo.value == "watts_strogatz") {
            p.topology.kind = TopologyKind::WattsStrogatz;
            integer("ws_K", p.topology.ws_K);
            real("ws_beta", p.topology.ws_beta);
        } else if (topo.value == "barabasi_albert") {
            p.topology.kind = TopologyKind::BarabasiAlbert;
            integer("ba_m", p.topology.ba_m);
        } else {
            kv.fail(topo, "topology must be ring, watts_strogatz or barabasi_albert, got '" + topo.value + "'");
        }
    }
    return p;
}

SystemParams load_run_config(const std::filesystem::path& path) {
    const KeyValueFile kv = KeyValueFile::load(path);
    kv.reject_unknown(run_keys());
    return parse_run_config(kv);
}

void write_run_config(std::ostream& out, const SystemParams& p) {
    out << "N = " << p.N << '\n'
        << "R_V_ohm = " << format_real(p.R_V) << '\n'
        << "R0_ohm = " << format_real(p.R_0) << '\n'
        << "V_volt = " << format_real(p.V) << '\n'
        << "lambda_min = " << format_real(p.lambda_min) << '\n'
        << "p_err = " << format_real(p.p_err) << '\n'
        << "topology = " << topology_kind_name(p.topology.kind) << '\n';
    if (p.topology.kind == TopologyKind::WattsStrogatz)
        out << "ws_K = " << p.topology.ws_K << '\n' << "ws_beta = " << format_real(p.topology.ws_beta) << '\n';
    if (p.topology.kind == TopologyKind::BarabasiAlbert) out << "ba_m = " << p.topology.ba_m << '\n';
    out << "steps = " << p.steps << '\n' << "burn_in = " << p.burn_in << '\n' << "seed = " << p.seed << '\n';
}

void write_resolved_config(std::ostream& out, const ValidatedParams& vp) {
    write_run_config(out, vp.params);
    out << "# derived: mu = " << format_real(vp.mu) << '\n'
        << "# derived: R_ohm = " << format_real(vp.R) << '\n'
        << "# derived: V_scaled_volt = " << format_real(vp.V_scaled) << '\n'
        << "# derived: P_typ_watt = " << format_real(vp.P_typ) << '\n';
}

}  // namespace layersim::config
