#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "onsager/field.hpp"
#include "onsager/flux.hpp"
#include "onsager/norms_time.hpp"

namespace onsager {

namespace fs = std::filesystem;

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_atomic(const fs::path& path, const std::string& content);

/// Shortest decimal form that reads back as the same double (17 digits).
std::string format_double(double v);

// ONSF1 snapshot: the line "ONSF1", a one-line JSON header
// {"n", "time", "nu", "layout": "full-c128-le"}, then n^3 records in
// row-major order over k1, k2, k3 = -n/2 .. n/2-1 (k1 slowest), each holding
// three complex coefficients as little-endian float64 (re, im) pairs.

void write_snapshot(const fs::path& path, const VelocityField& u, double nu);

struct Snapshot {
    VelocityField field;
    double nu = 0.0;  ///< 0 when the header has no viscosity
};

Snapshot read_snapshot(const fs::path& path);

/// Snapshot files plus manifest.json ({"nu", "n", "snapshots": [{"file",
/// "time"}]}). An optional budget.csv carries per-step energy budgets.
class TrajectoryWriter {
public:
    TrajectoryWriter(fs::path dir, double nu, int n);
    void add(const VelocityField& u);
    void add_budget(const SnapshotBudget& b);
    /// Writes the manifest (and budget log); call once after the last add.
    void finish();

private:
    fs::path dir_;
    double nu_;
    int n_;
    nlohmann::json entries_ = nlohmann::json::array();
    std::vector<SnapshotBudget> budgets_;
};

class TrajectoryReader {
public:
    explicit TrajectoryReader(fs::path dir);
    double nu() const { return nu_; }
    int n() const { return n_; }
    std::size_t size() const { return files_.size(); }
    std::vector<double> times() const { return times_; }
    VelocityField load(std::size_t i) const;
    /// Streams snapshots in time order without holding more than one.
    void for_each(const std::function<void(const VelocityField&)>& f) const;
    Trajectory load_all() const;
    bool has_budgets() const;
    std::vector<SnapshotBudget> budgets() const;

private:
    fs::path dir_;
    double nu_ = 0.0;
    int n_ = 0;
    std::vector<std::string> files_;
    std::vector<double> times_;
};

/// Provenance record stored next to every output.
struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    std::string version;
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    double wall_clock_seconds = 0.0;
    std::vector<std::uint64_t> seeds;
};

nlohmann::json to_json(const RunManifest& m);
void write_run_manifest(const fs::path& path, const RunManifest& m);

std::string flux_rows_csv(const FluxReport& r);
std::string flux_summary_csv(const FluxReport& r);
std::string energy_rows_csv(const FluxReport& r);
std::string norm_series_csv(const NormSeries& s);
NormSeries read_norm_series_csv(const fs::path& path);

/// Parses a budget log written by TrajectoryWriter.
std::vector<SnapshotBudget> parse_budget_csv(const std::string& text);
std::string budget_csv(const std::vector<SnapshotBudget>& budgets);

}  // namespace onsager
