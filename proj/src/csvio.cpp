#include "clairaut/csvio.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "clairaut/errors.hpp"

#include "json.hpp"

namespace clairaut {

namespace {
constexpr char kSurfaceHeader[] = "x,y,z,param,f_resid,stat_resid";
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string surface_csv(const SampledSurface& s) {
    std::string out = kSurfaceHeader;
    out += '\n';
    for (const auto& ep : s.points) {
        out += format_double(ep.p.x) + ',' + format_double(ep.p.y) + ',' + format_double(ep.p.z) +
               ',' + format_double(ep.param) + ',' + format_double(ep.family_residual) + ',' +
               format_double(ep.stationarity_residual) + '\n';
    }
    return out;
}

std::string points_csv(const std::vector<Point2>& pts, const std::string& header) {
    std::string out = header;
    out += '\n';
    for (const auto& p : pts) out += format_double(p.x) + ',' + format_double(p.y) + '\n';
    return out;
}

std::string surface_json(const SampledSurface& s) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& ep : s.points)
        pts.push_back({{"x", ep.p.x},
                       {"y", ep.p.y},
                       {"z", ep.p.z},
                       {"param", ep.param},
                       {"f_resid", ep.family_residual},
                       {"stat_resid", ep.stationarity_residual}});
    const auto& d = s.diag;
    nlohmann::json doc{{"points", std::move(pts)},
                       {"diagnostics",
                        {{"attempted", d.attempted},
                         {"accepted", d.accepted},
                         {"skipped_no_bracket", d.skipped_no_bracket},
                         {"skipped_excluded", d.skipped_excluded},
                         {"skipped_degenerate", d.skipped_degenerate},
                         {"skipped_domain", d.skipped_domain},
                         {"rejected_residual", d.rejected_residual}}}};
    return doc.dump();
}

SampledSurface read_surface_csv(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line) || line != kSurfaceHeader)
        throw Error("surface CSV must start with the header \"" + std::string(kSurfaceHeader) +
                    "\"");
    SampledSurface s;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        EnvelopePoint ep;
        double* fields[6] = {&ep.p.x,  &ep.p.y,          &ep.p.z,
                             &ep.param, &ep.family_residual, &ep.stationarity_residual};
        std::size_t pos = 0;
        for (int f = 0; f < 6; ++f) {
            const std::size_t next = line.find(',', pos);
            const std::string cell = line.substr(pos, next == std::string::npos ? next : next - pos);
            try {
                std::size_t used = 0;
                *fields[f] = std::stod(cell, &used);
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw Error("bad number \"" + cell + "\" on CSV line " + std::to_string(lineno));
            }
            if (f < 5) {
                if (next == std::string::npos)
                    throw Error("expected 6 fields on CSV line " + std::to_string(lineno));
                pos = next + 1;
            } else if (next != std::string::npos) {
                throw Error("expected 6 fields on CSV line " + std::to_string(lineno));
            }
        }
        s.points.push_back(ep);
    }
    s.diag.attempted = s.diag.accepted = static_cast<int>(s.points.size());
    return s;
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(target.parent_path(), ec);
        if (ec) throw Error("cannot create " + target.parent_path().string() + ": " + ec.message());
    }
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error("short write to " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw Error("cannot rename " + tmp.string() + " -> " + path + ": " + ec.message());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace clairaut
