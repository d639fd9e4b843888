#pragma once

#include <string>
#include <vector>

#include "clairaut/envelope.hpp"
#include "clairaut/geometry.hpp"

namespace clairaut {

// 17 significant digits: every double round-trips, so equal clouds print to
// byte-identical artifacts.
std::string format_double(double v);

// CSV with the fixed header x,y,z,param,f_resid,stat_resid.
std::string surface_csv(const SampledSurface& s);

// Two-column CSV with a caller-chosen header line (e.g. "X,Z").
std::string points_csv(const std::vector<Point2>& pts, const std::string& header);

// Compact single-line JSON mirror of the CSV fields plus the diagnostics.
std::string surface_json(const SampledSurface& s);

// Parse a surface CSV produced by surface_csv (header required).
SampledSurface read_surface_csv(const std::string& content);

// Write content to path via a temp file + rename, so readers never observe a
// half-written artifact. Creates parent directories as needed.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

} // namespace clairaut
