#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "layersim/core.hpp"

namespace layersim::config {

/// Parse failure with source position. line is 0 when the problem is not
/// tied to one line (e.g. a missing key).
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& source, int line, const std::string& what);
    int line() const noexcept { return line_; }

private:
    int line_;
};

struct Entry {
    std::string key;
    std::string value;
    int line = 0;
};

/// Flat "key = value" text. Blank lines and '#' comments are skipped;
/// duplicate keys are an error.
class KeyValueFile {
public:
    static KeyValueFile parse(std::istream& in, const std::string& source);
    static KeyValueFile load(const std::filesystem::path& path);

    const std::string& source() const noexcept { return source_; }
    const Entry* find(const std::string& key) const;
    const Entry& require(const std::string& key) const;
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    /// Throws on the first key not in the allowed list.
    void reject_unknown(const std::vector<std::string>& allowed) const;

    [[noreturn]] void fail(const Entry& e, const std::string& what) const;

private:
    std::string source_;
    std::vector<Entry> entries_;
};

/// Keys of a single-run configuration, in the order they are written.
const std::vector<std::string>& run_keys();

/// Reads SystemParams. Required: N, R_V_ohm, R0_ohm, V_volt, lambda_min,
/// p_err, topology, steps, seed. Optional: burn_in (0); ws_K and ws_beta are
/// required for watts_strogatz, ba_m for barabasi_albert.
/// Keys listed in optional_keys may be absent (a sweep supplies them).
SystemParams parse_run_config(const KeyValueFile& kv, const std::vector<std::string>& optional_keys = {});

SystemParams load_run_config(const std::filesystem::path& path);

/// Writes a config that parse_run_config reads back to an equal SystemParams.
void write_run_config(std::ostream& out, const SystemParams& params);

/// write_run_config plus the derived constants as trailing comments.
void write_resolved_config(std::ostream& out, const ValidatedParams& vp);

std::string topology_kind_name(TopologyKind kind);

}  // namespace layersim::config
