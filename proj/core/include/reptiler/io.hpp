#pragma once

#include "reptiler/fills.hpp"
#include "reptiler/patches.hpp"
#include "reptiler/tiling.hpp"

#include <json.hpp>

#include <string>

namespace reptiler {

// Exact JSON encodings. Rationals travel as "p/q" strings; nothing is
// ever serialized as a decimal.

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json qf_to_json(const QF& v);
QF qf_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const PointQ& p);
PointQ point_from_json(const nlohmann::json& j);

nlohmann::json polygon_to_json(const PolyQ& p);
PolyQ polygon_from_json(const nlohmann::json& j);

nlohmann::json region_to_json(const RegionQ& r);
RegionQ region_from_json(const nlohmann::json& j);

nlohmann::json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const nlohmann::json& j);

nlohmann::json fill_to_json(const FillSolution& f);
nlohmann::json fills_to_json(const std::vector<FillSolution>& fs);

nlohmann::json edgefill_to_json(const EdgeFill& f);
nlohmann::json edgefills_to_json(const std::vector<EdgeFill>& fs);

nlohmann::json patch_to_json(const PatchCandidate& c);
nlohmann::json patches_to_json(const std::vector<PatchCandidate>& cs);

/// Compact exact literal: "7/5", "1/2r7" (= sqrt7/2), "2/5+2/5r6",
/// "4/5-1/5r6". 'r' marks the radicand.
QF parse_qf_literal(const std::string& text);

/// Prototile instance grammar: f1:<rat> | f2:<rat> | f3:<rat> |
/// f3ab:<qf>,<qf>.
struct InstanceSpec {
    enum class Kind { F1, F2, F3, F3AB } kind;
    Rat param;       // f1/f2/f3
    QF a_param, b_param;  // f3ab
};
InstanceSpec parse_instance_string(const std::string& text);

/// Builds the QF-field instance (throws WrongFamily for f2, whose
/// coordinates need the tower field and never feed the tiler).
QuadSpec<QF> build_qf_instance(const InstanceSpec& spec);

}  // namespace reptiler
