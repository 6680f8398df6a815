#pragma once

#include <string>
#include <vector>

#include "fractop/interval_set.hpp"
#include "fractop/tops.hpp"

namespace fractop {

// Pair (blowup word . top word), e.g. "112.212". The empty pair names the seed
// tile A at level 0. In stopping-time tilings the top word may differ in length
// from the blowup word.
struct TileAddress {
    Word blowup;
    Word top;

    std::string str() const;
    static TileAddress parse(const std::string& text, int alphabet);
    bool operator==(const TileAddress&) const = default;
};

struct Tile {
    TileAddress address;
    AffineMap transform;  // the blowup map applied to the top cell
    long long cells = 0;
    BBox bbox;
    uint32_t label = 0;  // value this tile carries in the labels raster
};

// Level-k tiling of the blowup A(i|k), stored as a labeled raster: each covered
// cell carries the packed key of the top word whose transformed cell set owns it.
struct PartialTiling {
    int level = 0;
    InfiniteAddress address;
    PriorityOrder order;
    Viewport vp;
    std::vector<uint32_t> labels;
    std::vector<Tile> tiles;  // highest label first

    const Tile* find_top(const Word& top_word) const;
    uint32_t label_at(Vec2 p) const;  // 0 when outside every tile
    Raster tile_raster(const Word& top_word) const;
    Raster coverage() const;
};

// Raster of A(i|n) = f_{-i|n}(A) on a viewport that grows with the blowup.
Viewport blowup_viewport(const Ifs& ifs, const InfiniteAddress& i, int n, const Raster& base,
                         double max_extent = 1e6);
Raster blowup_region(const Ifs& ifs, const InfiniteAddress& i, int n, const Raster& base,
                     double max_extent = 1e6);

// One tile per surviving depth-k top word; level 0 is the single tile A.
PartialTiling partial_tiling(const Ifs& ifs, const InfiniteAddress& i, int k, const TopField* field,
                             const Raster& base, long long min_cells = 1, double max_extent = 1e6);

struct TransitionReport {
    int level_from = 0;
    struct ChildLink {
        Word parent;      // level-k top word
        Word child;       // level-(k+1) top word = i_{k+1} . parent
        double containment = 0.0;
    };
    std::vector<ChildLink> children;
    std::vector<Word> new_tiles;           // first symbol != i_{k+1}
    std::vector<Word> childless_parents;   // level-k tiles with no child tile
    std::vector<std::string> violations;   // containment/dichotomy/uniqueness failures
    bool reversible_precondition = true;

    bool clean() const { return violations.empty() && childless_parents.empty(); }
    std::string summary() const;
};

// Classifies every level-(k+1) tile as the child of a level-k tile or a new
// tile, verifying child containment, new-tile non-containment, the prepend rule
// for child addresses, and one-child-per-parent. With `strict`, a dirty report
// throws ClassificationFailure.
TransitionReport classify_transition(const Ifs& ifs, const InfiniteAddress& i, int k,
                                     const PartialTiling& at_k, const PartialTiling& at_k1,
                                     double containment_threshold = 0.98, bool strict = false);

// Per-level flags: every level-k tile reappears identically (within one cell)
// at level k+1. Only meaningful for the all-ones address; throws otherwise.
std::vector<uint8_t> verify_onebar_nesting(const Ifs& ifs, int K,
                                           const std::vector<PartialTiling>& tilings);

// Interval-exact twins for 1d systems.
struct OracleTiling {
    int level = 0;
    std::vector<std::pair<Word, IntervalSet>> tiles;  // highest priority first
    const IntervalSet* find(const Word& top_word) const;
};
OracleTiling oracle_partial_tiling(const Ifs& ifs, const InfiniteAddress& i, int k,
                                   const IntervalTops& tops);
TransitionReport oracle_classify(const Ifs& ifs, const InfiniteAddress& i, int k,
                                 const OracleTiling& at_k, const OracleTiling& at_k1);
std::vector<uint8_t> oracle_onebar_nesting(const Ifs& ifs, int K,
                                           const std::vector<OracleTiling>& tilings);

struct StoppingTimes {
    double eta_minus = 0.0;
    double eta = 0.0;
};
// eta = sum of the ratio exponents along the word; eta_minus drops the last term.
StoppingTimes stopping_times(const Word& w, const std::vector<double>& exponents);

// Stopping-time tiling of A(i|level): one tile f_{-i|level} o f_m (A) for every
// minimal word m with eta(m) >= eta(i|level). Under a single ratio this is
// exactly the set of length-`level` words.
PartialTiling stopping_tiling(const Ifs& ifs, const InfiniteAddress& i, int level, const Raster& base,
                              double max_extent = 1e6);

// Local finiteness probe: tiles whose bounding box meets the given ball.
int tiles_touching_ball(const PartialTiling& tiling, Vec2 center, double radius);

}  // namespace fractop
