#include "onsager/io.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "onsager/error.hpp"

namespace onsager {

namespace {
constexpr const char* kMagic = "ONSF1";
constexpr const char* kLayout = "full-c128-le";

void put_double(std::string& out, double v) {
    auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

double get_double(const char* p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
    return std::bit_cast<double>(bits);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path.string());
    return ss.str();
}

nlohmann::json parse_json(const std::string& text, const fs::path& path) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed JSON in " + path.string() + ": " + e.what());
    }
}

std::string snapshot_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "snap_%06zu.onsf", i);
    return buf;
}
}  // namespace

void write_atomic(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw IoError("write failed: " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_snapshot(const fs::path& path, const VelocityField& u, double nu) {
    const int n = u.grid().n;
    const int h = n / 2;
    nlohmann::json header = {{"n", n}, {"layout", kLayout}};
    header["time"] = u.time ? nlohmann::json(*u.time) : nlohmann::json(nullptr);
    if (nu > 0.0) header["nu"] = nu;
    std::string out = std::string(kMagic) + "\n" + header.dump() + "\n";
    out.reserve(out.size() + u.grid().physical_size() * 48);
    for (int k1 = -h; k1 < h; ++k1)
        for (int k2 = -h; k2 < h; ++k2)
            for (int k3 = -h; k3 < h; ++k3)
                for (int c = 0; c < 3; ++c) {
                    const Complex z = u.coeff(c, k1, k2, k3);
                    put_double(out, z.real());
                    put_double(out, z.imag());
                }
    write_atomic(path, out);
}

Snapshot read_snapshot(const fs::path& path) {
    const std::string data = read_file(path);
    const auto l1 = data.find('\n');
    if (l1 == std::string::npos || data.substr(0, l1) != kMagic)
        throw IoError("not an ONSF1 file: " + path.string());
    const auto l2 = data.find('\n', l1 + 1);
    if (l2 == std::string::npos) throw IoError("truncated header: " + path.string());
    const nlohmann::json header = parse_json(data.substr(l1 + 1, l2 - l1 - 1), path);
    if (header.value("layout", "") != kLayout)
        throw IoError("unsupported layout in " + path.string());
    if (!header.contains("n") || !header["n"].is_number_integer())
        throw IoError("missing grid size in " + path.string());
    const int n = header["n"].get<int>();
    if (n < 8 || n % 2 != 0 || n > 4096) throw IoError("invalid grid size in " + path.string());
    const std::size_t body = static_cast<std::size_t>(n) * n * n * 48;
    if (data.size() != l2 + 1 + body) throw IoError("wrong payload size in " + path.string());

    Snapshot s{VelocityField(make_grid(n)), header.value("nu", 0.0)};
    const Grid& g = s.field.grid();
    if (header.contains("time") && header["time"].is_number()) s.field.time = header["time"].get<double>();
    const int h = n / 2;
    const char* p = data.data() + l2 + 1;
    for (int k1 = -h; k1 < h; ++k1)
        for (int k2 = -h; k2 < h; ++k2)
            for (int k3 = -h; k3 < h; ++k3)
                for (int c = 0; c < 3; ++c, p += 16) {
                    const Complex z(get_double(p), get_double(p + 8));
                    if (k3 >= 0)
                        s.field.component(c)[g.spectral_index(g.index_of(k1), g.index_of(k2), k3)] = z;
                    else if (k3 == -h)
                        s.field.component(c)[g.spectral_index(g.index_of(-k1 == h ? -h : -k1),
                                                              g.index_of(-k2 == h ? -h : -k2), h)] =
                            std::conj(z);
                }
    return s;
}

TrajectoryWriter::TrajectoryWriter(fs::path dir, double nu, int n)
    : dir_(std::move(dir)), nu_(nu), n_(n) {
    require(nu > 0.0, "viscosity must be positive");
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create " + dir_.string() + ": " + ec.message());
}

void TrajectoryWriter::add(const VelocityField& u) {
    require(u.time.has_value(), "trajectory snapshots need a time");
    require(u.grid().n == n_, "snapshot grid differs from the trajectory grid");
    const std::string name = snapshot_name(entries_.size());
    write_snapshot(dir_ / name, u, nu_);
    entries_.push_back({{"file", name}, {"time", *u.time}});
}

void TrajectoryWriter::add_budget(const SnapshotBudget& b) { budgets_.push_back(b); }

void TrajectoryWriter::finish() {
    if (!budgets_.empty()) write_atomic(dir_ / "budget.csv", budget_csv(budgets_));
    const nlohmann::json m = {{"nu", nu_}, {"n", n_}, {"format", kMagic}, {"snapshots", entries_}};
    write_atomic(dir_ / "manifest.json", m.dump(2) + "\n");
}

TrajectoryReader::TrajectoryReader(fs::path dir) : dir_(std::move(dir)) {
    const fs::path mpath = dir_ / "manifest.json";
    const nlohmann::json m = parse_json(read_file(mpath), mpath);
    try {
        nu_ = m.at("nu").get<double>();
        n_ = m.at("n").get<int>();
        for (const auto& e : m.at("snapshots")) {
            files_.push_back(e.at("file").get<std::string>());
            times_.push_back(e.at("time").get<double>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed manifest " + mpath.string() + ": " + e.what());
    }
}

VelocityField TrajectoryReader::load(std::size_t i) const {
    Snapshot s = read_snapshot(dir_ / files_.at(i));
    if (s.field.grid().n != n_) throw IoError("snapshot grid differs from manifest: " + files_[i]);
    s.field.time = times_[i];
    return std::move(s.field);
}

void TrajectoryReader::for_each(const std::function<void(const VelocityField&)>& f) const {
    for (std::size_t i = 0; i < files_.size(); ++i) f(load(i));
}

Trajectory TrajectoryReader::load_all() const {
    std::vector<VelocityField> snaps;
    for_each([&](const VelocityField& u) { snaps.push_back(u); });
    return Trajectory(nu_, std::move(snaps));
}

bool TrajectoryReader::has_budgets() const { return fs::exists(dir_ / "budget.csv"); }

std::vector<SnapshotBudget> TrajectoryReader::budgets() const {
    return parse_budget_csv(read_file(dir_ / "budget.csv"));
}

nlohmann::json to_json(const RunManifest& m) {
    return {{"command", m.command},       {"parameters", m.parameters},
            {"version", m.version},       {"inputs", m.inputs},
            {"outputs", m.outputs},       {"wall_clock_seconds", m.wall_clock_seconds},
            {"seeds", m.seeds}};
}

void write_run_manifest(const fs::path& path, const RunManifest& m) {
    write_atomic(path, to_json(m).dump(2) + "\n");
}

std::string flux_rows_csv(const FluxReport& r) {
    std::string out = "t,q,flux,dissipation,energy,residual\n";
    for (const auto& row : r.rows)
        out += format_double(row.t) + "," + std::to_string(row.q) + "," + format_double(row.flux) +
               "," + format_double(row.dissipation) + "," + format_double(row.energy) + "," +
               format_double(row.residual) + "\n";
    return out;
}

std::string flux_summary_csv(const FluxReport& r) {
    std::string out = "q,lambda_q,int_abs_flux\n";
    for (const auto& s : r.summary)
        out += std::to_string(s.q) + "," + format_double(s.lambda_q) + "," +
               format_double(s.int_abs_flux) + "\n";
    return out;
}

std::string energy_rows_csv(const FluxReport& r) {
    std::string out = "t,energy,dissipated,residual\n";
    for (const auto& e : r.energy)
        out += format_double(e.t) + "," + format_double(e.energy) + "," +
               format_double(e.dissipated) + "," + format_double(e.residual) + "\n";
    return out;
}

std::string norm_series_csv(const NormSeries& s) {
    std::string out = "t,value\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += format_double(s.times()[i]) + "," + format_double(s.values()[i]) + "\n";
    return out;
}

namespace {
std::vector<std::vector<double>> parse_numeric_csv(const std::string& text,
                                                   const std::string& header,
                                                   const std::string& what) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw IoError(what + " is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != header) throw IoError(what + " header must be \"" + header + "\"");
    const std::size_t cols = std::count(header.begin(), header.end(), ',') + 1;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<double> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw IoError(what + ": bad number \"" + cell + "\"");
            }
        }
        if (row.size() != cols) throw IoError(what + ": wrong column count");
        rows.push_back(std::move(row));
    }
    return rows;
}
}  // namespace

NormSeries read_norm_series_csv(const fs::path& path) {
    std::vector<double> t, v;
    for (const auto& row : parse_numeric_csv(read_file(path), "t,value", path.string())) {
        t.push_back(row[0]);
        v.push_back(row[1]);
    }
    return NormSeries(std::move(t), std::move(v));
}

std::string budget_csv(const std::vector<SnapshotBudget>& budgets) {
    std::string out = "t,q,energy,grad_energy,low_energy,low_grad,flux\n";
    for (const auto& b : budgets)
        for (std::size_t i = 0; i < b.flux.size(); ++i)
            out += format_double(b.t) + "," + std::to_string(static_cast<int>(i) - 1) + "," +
                   format_double(b.energy) + "," + format_double(b.grad_energy) + "," +
                   format_double(b.low_energy[i]) + "," + format_double(b.low_grad[i]) + "," +
                   format_double(b.flux[i]) + "\n";
    return out;
}

std::vector<SnapshotBudget> parse_budget_csv(const std::string& text) {
    std::vector<SnapshotBudget> out;
    for (const auto& row : parse_numeric_csv(
             text, "t,q,energy,grad_energy,low_energy,low_grad,flux", "budget log")) {
        const int q = static_cast<int>(row[1]);
        if (q == -1) {
            out.emplace_back();
            out.back().t = row[0];
            out.back().energy = row[2];
            out.back().grad_energy = row[3];
        }
        if (out.empty() || out.back().t != row[0] ||
            q != static_cast<int>(out.back().flux.size()) - 1)
            throw IoError("budget log rows out of order");
        out.back().low_energy.push_back(row[4]);
        out.back().low_grad.push_back(row[5]);
        out.back().flux.push_back(row[6]);
    }
    return out;
}

}  // namespace onsager
