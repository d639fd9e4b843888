#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clairaut/analysis.hpp"
#include "clairaut/envelope.hpp"
#include "clairaut/families.hpp"
#include "clairaut/numerics.hpp"
#include "clairaut/parallel.hpp"
#include "clairaut/verify.hpp"

namespace clairaut {

// One measured quantity of an entry's check battery.
struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct EntryReport {
    std::string name;
    bool passed = false;
    std::vector<CheckResult> checks;
    std::vector<std::string> artifacts;  // files written (empty when out_dir is empty)
};

// A named, self-contained reproduction: family + constraint + expected
// surface + a runnable battery of checks. The structured fields describe the
// ingredients where they apply; 2-D curve-family demonstrations carry
// curve_family instead of constraint/expected.
struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string notes;
    PlaneFamily family;
    std::optional<ConstraintCurve> constraint;
    std::optional<Surface> expected;
    CurveFamilyFn curve_family;
    std::function<EntryReport(const std::string& out_dir, const ToleranceConfig&, Exec)> run;
};

// The suite in its fixed listing order.
const std::vector<CatalogEntry>& catalog();
std::vector<std::string> catalog_list();

// Throws UnknownEntryError for names not in catalog_list().
const CatalogEntry& catalog_get(const std::string& name);

// Run one entry / the whole suite. A nonempty out_dir makes entries write
// their CSV point clouds and JSON reports there (atomically, no timestamps,
// so repeated runs produce byte-identical files).
EntryReport catalog_run(const std::string& name, const std::string& out_dir = "",
                        const ToleranceConfig& cfg = {}, Exec exec = Exec::parallel);
std::vector<EntryReport> catalog_run_all(const std::string& out_dir = "",
                                         const ToleranceConfig& cfg = {},
                                         Exec exec = Exec::parallel);

// Single-line JSON rendering of a report, stable field order.
std::string report_json(const EntryReport& rep);

// Ingredients shared with the test batteries.
RealFn bimodal_phi_prime();  // two-bump piecewise quartic, zero outside [0, 4]
RealFn bimodal_phi();        // its running integral, phi(0) = 0
FunctionOfA bimodal_constraint();
ImplicitRelation circle_constraint();
ParametricCurve tilted_cone_constraint();          // corrected signs, analytic derivative
ParametricCurve tilted_cone_constraint_flipped();  // the plausible-but-wrong sign choice
InverseMap chojnacki_map();
Field3 cone_quadric();    // (x-z)^2 + (y-z)^2 - z^2
Field3 circle_quadric();  // z^2 - 2xz - 2yz + 2xy

} // namespace clairaut
