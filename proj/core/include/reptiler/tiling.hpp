#pragma once

#include "reptiler/quad.hpp"
#include "reptiler/region.hpp"

#include <string>
#include <vector>

namespace reptiler {

class ScaleOutOfField : public Error {
public:
    explicit ScaleOutOfField(const std::string& what) : Error(what) {}
};

using PointQ = Point<QF>;
using PolyQ = Polygon<QF>;
using RegionQ = Region<QF>;
using IsometryQ = Isometry<QF>;

/// A prototile copy: the isometry and its cached image polygon.
struct Placement {
    IsometryQ iso;
    PolyQ shape;  // apply_isometry(iso, prototile), exactly
};

struct Tiling {
    PolyQ prototile;
    RegionQ region;  // the original target
    std::vector<Placement> placements;
};

struct SearchConfig {
    enum class Mode { FIRST, ALL, COUNT };
    Mode mode = Mode::ALL;
    long max_tiles = 100000;
    long max_nodes = 10000000;  // REPTILER_MAX_NODES overrides
    bool allow_reflection = true;
};

enum class SearchStatus { COMPLETE, BUDGET };

struct SearchResult {
    SearchStatus status = SearchStatus::COMPLETE;
    long nodes = 0;
    long count = 0;
    std::vector<Tiling> tilings;  // empty in COUNT mode
};

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

/// All placements of the prototile putting one of its vertices at the
/// region's canonical corner (lexicographically smallest vertex) with an
/// incident edge flush along the canonical ray, opening into the corner
/// wedge, deduplicated and in deterministic order. Every tiling of the
/// region realizes one of them.
std::vector<Placement> enumerate_corner_placements(const RegionQ& region, const PolyQ& proto,
                                                   const SearchConfig& cfg);

/// Exhaustive corner-constrained backtracking enumeration.
SearchResult tile_region(const RegionQ& region, const PolyQ& proto, const SearchConfig& cfg);

/// Independent validity check: congruent copies, pairwise disjoint
/// interiors, containment, and exact area bookkeeping.
VerifyReport verify_tiling(const Tiling& t, bool allow_reflection = true);

/// The four-tile pinwheel square tiling of side a+b (family (iii)).
Tiling f0_square_tiling(const QuadSpec<QF>& q);

/// n x n grid of translated pinwheel squares.
Tiling trivial_quadrant_tiling(const QuadSpec<QF>& q, int n);

enum class ReptileOutcome { FOUND, EXHAUSTED, BUDGET };

struct ReptileResult {
    ReptileOutcome outcome;
    long nodes = 0;
    std::vector<Tiling> tiling;  // singleton when FOUND
};

/// Searches for a decomposition of the sqrt(k)-scaled prototile into k
/// congruent copies. EXHAUSTED is a proof of impossibility; BUDGET is
/// reported separately.
ReptileResult reptile_search(const PolyQ& proto, long k, const SearchConfig& cfg);

}  // namespace reptiler
