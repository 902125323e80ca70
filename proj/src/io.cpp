#include "eulgen/io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

static_assert(std::endian::native == std::endian::little, "snapshot codec assumes a little-endian host");

namespace eulgen {
namespace {

[[noreturn]] void io_fail(const std::string& path, const std::string& what) {
    throw std::runtime_error(path + ": " + what);
}

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void put_u32(std::ostream& os, std::uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }

std::uint32_t get_u32(std::istream& is) {
    std::uint32_t v = 0;
    is.read(reinterpret_cast<char*>(&v), 4);
    return v;
}

}  // namespace

std::string format_diagnostics_row(const DiagnosticsRow& r) {
    std::string out = format_double(r.t);
    for (double x : {r.E_total, r.S_total, r.E_drift_rel, r.S_production_rate, r.power_residual, r.min_theta,
                     r.min_detF, r.max_speed}) {
        out += ',';
        out += format_double(x);
    }
    return out;
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows) {
    std::ofstream os(path);
    if (!os) io_fail(path, "cannot open for writing");
    os << kDiagnosticsHeader << '\n';
    for (const DiagnosticsRow& r : rows) os << format_diagnostics_row(r) << '\n';
    if (!os) io_fail(path, "write failed");
}

std::vector<DiagnosticsRow> read_diagnostics_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) io_fail(path, "cannot open for reading");
    std::string line;
    if (!std::getline(is, line) || line != kDiagnosticsHeader) io_fail(path, "bad diagnostics header");
    std::vector<DiagnosticsRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        DiagnosticsRow r;
        double* slots[] = {&r.t,       &r.E_total,           &r.S_total,  &r.E_drift_rel, &r.S_production_rate,
                           &r.power_residual, &r.min_theta, &r.min_detF, &r.max_speed};
        std::stringstream ss(line);
        std::string cell;
        for (double* slot : slots) {
            if (!std::getline(ss, cell, ',')) io_fail(path, "short diagnostics row");
            *slot = std::stod(cell);
        }
        rows.push_back(r);
    }
    return rows;
}

void write_field_snapshot(const std::string& path, const TensorField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) io_fail(path, "cannot open for writing");
    os.write("EULG", 4);
    put_u32(os, kSnapshotVersion);
    put_u32(os, static_cast<std::uint32_t>(f.grid().dim()));
    put_u32(os, static_cast<std::uint32_t>(f.grid().n()));
    const std::uint8_t tag = static_cast<std::uint8_t>(f.kind());
    os.write(reinterpret_cast<const char*>(&tag), 1);
    const int nc = f.components();
    std::vector<double> row(static_cast<std::size_t>(nc));
    for (std::size_t node = 0; node < f.num_nodes(); ++node) {
        for (int c = 0; c < nc; ++c) row[static_cast<std::size_t>(c)] = f.at(c, node);
        os.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(8 * row.size()));
    }
    if (!os) io_fail(path, "write failed");
}

TensorField read_field_snapshot(const std::string& path, double L) {
    std::ifstream is(path, std::ios::binary);
    if (!is) io_fail(path, "cannot open for reading");
    char magic[4] = {};
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "EULG", 4) != 0) io_fail(path, "bad magic");
    const std::uint32_t version = get_u32(is);
    if (version != kSnapshotVersion) io_fail(path, "unsupported snapshot version " + std::to_string(version));
    const std::uint32_t d = get_u32(is);
    const std::uint32_t n = get_u32(is);
    std::uint8_t tag = 0;
    is.read(reinterpret_cast<char*>(&tag), 1);
    if (!is) io_fail(path, "truncated header");
    const Grid g(static_cast<int>(d), static_cast<int>(n), L);
    TensorField f(g, kind_from_tag(tag));
    const int nc = f.components();
    std::vector<double> row(static_cast<std::size_t>(nc));
    for (std::size_t node = 0; node < f.num_nodes(); ++node) {
        is.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(8 * row.size()));
        if (!is) io_fail(path, "truncated payload");
        for (int c = 0; c < nc; ++c) f.at(c, node) = row[static_cast<std::size_t>(c)];
    }
    return f;
}

void write_state_snapshot(const std::string& dir, const std::string& stem, const State& q, double time,
                          std::uint64_t config_hash) {
    namespace fs = std::filesystem;
    const fs::path base = fs::path(dir) / stem;
    const char* names[] = {"pi", "F", "Fp", "tau"};
    const TensorField* fields[] = {&q.pi, &q.F, &q.Fp, &q.tau};
    nlohmann::json side;
    side["time"] = time;
    side["config_hash"] = config_hash;
    side["L"] = q.grid().length();
    side["tau_role"] = q.role == TauRole::Entropy ? "entropy" : "internal_energy";
    side["fields"] = nlohmann::json::object();
    for (int i = 0; i < 4; ++i) {
        const std::string file = stem + "_" + names[i] + ".eulg";
        write_field_snapshot((fs::path(dir) / file).string(), *fields[i]);
        side["fields"][names[i]] = file;
    }
    const std::string side_path = base.string() + ".json";
    std::ofstream os(side_path);
    if (!os) io_fail(side_path, "cannot open for writing");
    os << side.dump(2) << '\n';
    if (!os) io_fail(side_path, "write failed");
}

State read_state_snapshot(const std::string& dir, const std::string& stem, double L, TauRole role) {
    namespace fs = std::filesystem;
    auto field = [&](const char* name) {
        return read_field_snapshot((fs::path(dir) / (stem + "_" + name + ".eulg")).string(), L);
    };
    State q{field("pi"), field("F"), field("Fp"), field("tau"), role};
    return q;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace eulgen
