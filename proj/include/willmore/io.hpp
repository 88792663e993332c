#ifndef WILLMORE_IO_HPP
#define WILLMORE_IO_HPP

#include <string>

#include <json.hpp>

#include "willmore/branch.hpp"
#include "willmore/currents.hpp"
#include "willmore/forms.hpp"
#include "willmore/surface.hpp"

namespace willmore {

// Named Weierstrass input as read from a surface file.
struct SurfaceSpec {
    std::string name;
    int order = 12;
    WeierstrassData data;
};

nlohmann::json to_json(const Coeff& c);
nlohmann::json to_json(const LaurentSeries& s);
nlohmann::json to_json(const TensorField& t);
nlohmann::json residue_report(const ResidueSet& r);
nlohmann::json form_report_json(const FormReport& r);
nlohmann::json expansion_report(const BranchExpansion& e, const PairingReport& p);

LaurentSeries series_from_json(const nlohmann::json& j, Backend be = Backend::exact);

// JSON or TOML by content; rational entries are integers or "num/den" strings.
SurfaceSpec load_surface_file(const std::string& path);
SurfaceSpec parse_surface_json(const nlohmann::json& j);

// Bare names resolve against WILLMORE_CORPUS (or ./corpus).
std::string resolve_surface_path(const std::string& arg);

} // namespace willmore

#endif
