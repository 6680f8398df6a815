#pragma once

#include <cstdint>
#include <vector>

#include "fractop/attractor.hpp"
#include "fractop/ifs.hpp"
#include "fractop/interval_set.hpp"
#include "fractop/raster.hpp"
#include "fractop/word.hpp"

namespace fractop {

// Depth-n top words with their cell counts, highest priority first.
struct TopWordSet {
    int depth = 0;
    struct Entry {
        Word word;
        long long cells = 0;
    };
    std::vector<Entry> entries;

    bool contains(const Word& w) const { return find(w) != nullptr; }
    const Entry* find(const Word& w) const;
    size_t size() const { return entries.size(); }
};

// Raster whose covered cells carry the priority-maximal depth-n word whose
// cylinder touches the cell. Stored as packed keys + 1; 0 marks uncovered cells.
struct TopField {
    int depth = 0;
    PriorityOrder order;
    Viewport vp;
    std::vector<uint32_t> keys;

    uint32_t raw(long long idx) const { return keys[static_cast<size_t>(idx)]; }
    bool covered(long long idx) const { return keys[static_cast<size_t>(idx)] != 0; }
    Word word_at(long long idx) const;  // throws when uncovered
};

// Paints every depth-n cylinder in increasing priority order with last-write-wins;
// realized as a per-cell max of packed keys so worker partitioning cannot change
// the result.
TopField top_field(const Ifs& ifs, int depth, const Raster& base, const PriorityOrder& order,
                   int workers = 1);

// max(1, cells(A) * s_min^depth / 16)
long long default_min_cells(const Ifs& ifs, const Raster& base, int depth);

TopWordSet top_words(const TopField& field, long long min_cells);

// Exact interval tops for 1d systems: processes words in decreasing priority
// order, subtracting already-claimed cylinders. Words whose residual keeps
// positive length are the depth-n top words; measure-zero residuals are kept
// separately.
struct IntervalTops {
    int depth = 0;
    PriorityOrder order;
    double hull_lo = 0.0, hull_hi = 1.0;
    struct Entry {
        Word word;
        IntervalSet residual;
        double length = 0.0;
    };
    std::vector<Entry> entries;     // positive length, highest priority first
    std::vector<Entry> degenerate;  // nonempty residual of zero length

    const Entry* find(const Word& w) const;
    bool contains(const Word& w) const { return find(w) != nullptr; }
    TopWordSet word_set() const;  // cell counts = number of residual pieces
};

IntervalTops interval_tops(const Ifs& ifs, int depth, const PriorityOrder& order);

// Cell-count view of the depth-n tops on a strip: winner per cell swept in
// decreasing priority order over cylinder images. Independent of top_field
// but numerically aligned with it; the two must agree cell for cell.
TopWordSet counted_strip_words(const Ifs& ifs, int depth, const PriorityOrder& order,
                               const Viewport& strip, long long min_cells);

// Itinerary of the tops dynamical system: i_n = label of x_n in the depth-1
// field, x_{n+1} = f_{i_n}^{-1}(x_n). Boundary cells are resolved within a
// 2-cell neighborhood; beyond that the orbit has escaped.
Word top_itinerary(const Ifs& ifs, Vec2 x, int steps, const TopField& depth1_field);

// flags[n-1] = reverse_prefix(a, n) is a depth-n top word, n = 1..N.
std::vector<uint8_t> reversibility_flags(const InfiniteAddress& a, int N,
                                         const std::vector<TopWordSet>& sets_by_depth);

}  // namespace fractop
