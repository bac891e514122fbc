#pragma once

#include "lllshift/group.hpp"
#include "lllshift/lll.hpp"
#include "lllshift/separated.hpp"
#include "lllshift/shift.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace lllshift::io {

using nlohmann::json;

// Group specs:
//   {"family": "lattice", "dim": 2}
//   {"family": "cyclic", "moduli": [100]}
//   {"family": "free", "rank": 2}
//   {"family": "table", "mul": [[...], ...], "identity": 0}
json group_to_json(const GroupContext& ctx);
GroupContext group_from_json(const json& j);

// Elements: integer arrays for lattices and cyclic products (residues are reduced),
// signed generator arrays for free groups ([1, -2] = g1 g2^-1), indices for tables.
json element_to_json(const GroupContext& ctx, const GroupElement& g);
GroupElement element_from_json(const GroupContext& ctx, const json& j);
json set_to_json(const GroupContext& ctx, const ElementSet& s);
ElementSet set_from_json(const GroupContext& ctx, const json& j);

json pattern_to_json(const GroupContext& ctx, const Pattern& p);
Pattern pattern_from_json(const GroupContext& ctx, const json& j, Symbol k);

/// {"group": ..., "k": 2, "pattern": {"support": [...], "values": [...]}, "F": [...],
///  "core_radius": r_c, "universe_radius": r_u, "L": [...] (optional override)}
/// Radii are ignored for finite groups. For infinite groups core_radius is required
/// and universe_radius defaults to required_universe_radius(D, F, core_radius).
ShiftConfig shift_config_from_json(const json& j);

/// {"universe": {"k": k, "variables": [...]}, "group": ... (when generator events are
/// present), "events": [{"domain": [...], "forbidden": [[...], ...]} |
///                      {"domain": [...], "generator": {"kind": "shift_block", ...}}]}
json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);

/// Flat object variable name -> symbol.
json assignment_to_json(const VariableUniverse& universe, const Assignment& f);
Assignment assignment_from_json(const VariableUniverse& universe, const json& j);

json trap_report_to_json(const GroupContext& ctx, const TrapReport& report);
json bounds_report_to_json(const BoundsReport& report);
json correctness_to_json(const CorrectnessReport& report);

/// Throws InvalidArgument on unreadable files or malformed JSON.
json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const json& j);

} // namespace lllshift::io
