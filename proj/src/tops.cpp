#include "fractop/tops.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "fractop/errors.hpp"

namespace fractop {

const TopWordSet::Entry* TopWordSet::find(const Word& w) const {
    for (const Entry& e : entries)
        if (e.word == w) return &e;
    return nullptr;
}

Word TopField::word_at(long long idx) const {
    const uint32_t k = keys[static_cast<size_t>(idx)];
    if (k == 0) throw Error("cell is not covered by any cylinder");
    return unpack_word(k - 1, depth, order);
}

namespace {

void stamp_strip_words(const Ifs& ifs, int depth, const Raster& base, const PriorityOrder& order,
                       uint64_t key_begin, uint64_t key_end, std::vector<uint32_t>& field) {
    const auto runs = base.runs();
    const Viewport& vp = base.vp;
    for (uint64_t key = key_begin; key < key_end; ++key) {
        const Word w = unpack_word(static_cast<uint32_t>(key), depth, order);
        const Affine1d f = as_1d(compose_word(ifs, w, false));
        const uint32_t stored = static_cast<uint32_t>(key) + 1;
        for (const Raster::Run& run : runs) {
            const double a = vp.lo.x + run.first * vp.cw();
            const double b = vp.lo.x + (run.last + 1) * vp.cw();
            double ia = f(a), ib = f(b);
            bool ao = false, bo = true;
            if (f.alpha < 0) {
                std::swap(ia, ib);
                std::swap(ao, bo);
            }
            const auto [c0, c1] = vp.x_cell_range(ia, ib, ao, bo);
            for (int c = c0; c <= c1; ++c) {
                uint32_t& cell = field[static_cast<size_t>(c)];
                cell = std::max(cell, stored);
            }
        }
    }
}

void stamp_2d_words(const Ifs& ifs, int depth, const std::vector<Vec2>& centers, const Viewport& vp,
                    const PriorityOrder& order, uint64_t key_begin, uint64_t key_end,
                    std::vector<uint32_t>& field) {
    std::vector<uint8_t> scratch(static_cast<size_t>(vp.cells()), 0);
    std::vector<long long> touched;
    for (uint64_t key = key_begin; key < key_end; ++key) {
        const Word w = unpack_word(static_cast<uint32_t>(key), depth, order);
        const AffineMap m = compose_word(ifs, w, false);
        touched.clear();
        for (const Vec2& p : centers) {
            const long long idx = vp.cell_of(m(p));
            if (idx >= 0 && !scratch[static_cast<size_t>(idx)]) {
                scratch[static_cast<size_t>(idx)] = 1;
                touched.push_back(idx);
            }
        }
        // Conservative one-cell dilation of the stamped set.
        const uint32_t stored = static_cast<uint32_t>(key) + 1;
        for (const long long idx : touched) {
            const int ix = static_cast<int>(idx % vp.nx);
            const int iy = static_cast<int>(idx / vp.nx);
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const int jx = ix + dx, jy = iy + dy;
                    if (jx < 0 || jy < 0 || jx >= vp.nx || jy >= vp.ny) continue;
                    uint32_t& cell = field[static_cast<size_t>(jy) * vp.nx + jx];
                    cell = std::max(cell, stored);
                }
        }
        for (const long long idx : touched) scratch[static_cast<size_t>(idx)] = 0;
    }
}

}  // namespace

TopField top_field(const Ifs& ifs, int depth, const Raster& base, const PriorityOrder& order, int workers) {
    if (depth < 1) throw DepthTooLarge("top field depth must be >= 1");
    check_depth_guard(ifs.size(), depth);
    if (order.alphabet() != ifs.size()) throw BadSymbol("priority order alphabet mismatch");

    TopField out;
    out.depth = depth;
    out.order = order;
    out.vp = base.vp;
    out.keys.assign(static_cast<size_t>(base.vp.cells()), 0);

    const uint64_t total = word_count(ifs.size(), depth);
    workers = std::max(1, std::min<int>(workers, static_cast<int>(total)));

    std::vector<Vec2> centers;
    if (!base.vp.is_strip()) {
        for (int iy = 0; iy < base.vp.ny; ++iy)
            for (int ix = 0; ix < base.vp.nx; ++ix)
                if (base.get(ix, iy)) centers.push_back(base.vp.center(ix, iy));
    }

    if (workers == 1) {
        if (base.vp.is_strip())
            stamp_strip_words(ifs, depth, base, order, 0, total, out.keys);
        else
            stamp_2d_words(ifs, depth, centers, base.vp, order, 0, total, out.keys);
        return out;
    }

    std::vector<std::vector<uint32_t>> partial(
        static_cast<size_t>(workers), std::vector<uint32_t>(static_cast<size_t>(base.vp.cells()), 0));
    std::vector<std::thread> threads;
    const uint64_t chunk = (total + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        const uint64_t b = std::min<uint64_t>(t * chunk, total);
        const uint64_t e = std::min<uint64_t>(b + chunk, total);
        threads.emplace_back([&, t, b, e] {
            if (base.vp.is_strip())
                stamp_strip_words(ifs, depth, base, order, b, e, partial[static_cast<size_t>(t)]);
            else
                stamp_2d_words(ifs, depth, centers, base.vp, order, b, e, partial[static_cast<size_t>(t)]);
        });
    }
    for (auto& th : threads) th.join();
    // Per-cell max merge is commutative and associative: the schedule cannot matter.
    for (const auto& part : partial)
        for (size_t i = 0; i < out.keys.size(); ++i) out.keys[i] = std::max(out.keys[i], part[i]);
    return out;
}

long long default_min_cells(const Ifs& ifs, const Raster& base, int depth) {
    double s_min = 1.0;
    for (const AffineMap& m : ifs.maps())
        s_min = std::min(s_min, m.is_similitude() ? m.similitude_ratio() : m.max_scale());
    const double cells = static_cast<double>(base.count());
    return std::max<long long>(1, static_cast<long long>(cells * std::pow(s_min, depth) / 16.0));
}

TopWordSet top_words(const TopField& field, long long min_cells) {
    std::vector<std::pair<uint32_t, long long>> hist;  // key -> count
    {
        std::vector<long long> counts;
        const uint64_t total = word_count(field.order.alphabet(), field.depth);
        counts.assign(static_cast<size_t>(total), 0);
        for (const uint32_t k : field.keys)
            if (k != 0) ++counts[static_cast<size_t>(k - 1)];
        for (uint64_t key = 0; key < total; ++key)
            if (counts[static_cast<size_t>(key)] > 0)
                hist.emplace_back(static_cast<uint32_t>(key), counts[static_cast<size_t>(key)]);
    }
    std::sort(hist.begin(), hist.end(), [](auto& a, auto& b) { return a.first > b.first; });
    TopWordSet out;
    out.depth = field.depth;
    for (const auto& [key, count] : hist)
        if (count >= min_cells) out.entries.push_back({unpack_word(key, field.depth, field.order), count});
    return out;
}

const IntervalTops::Entry* IntervalTops::find(const Word& w) const {
    for (const Entry& e : entries)
        if (e.word == w) return &e;
    return nullptr;
}

TopWordSet IntervalTops::word_set() const {
    TopWordSet out;
    out.depth = depth;
    for (const Entry& e : entries)
        out.entries.push_back({e.word, static_cast<long long>(e.residual.parts().size())});
    return out;
}

TopWordSet counted_strip_words(const Ifs& ifs, int depth, const PriorityOrder& order,
                               const Viewport& strip, long long min_cells) {
    if (!strip.is_strip()) throw Error("counted word set needs a strip viewport");
    // First-write-wins sweep over cylinder images in decreasing priority order.
    // This mirrors the painted field at the same resolution (same cell-range
    // arithmetic, same endpoint doubles) without touching any raster code.
    const uint64_t total = word_count(ifs.size(), depth);
    std::vector<uint8_t> taken(static_cast<size_t>(strip.nx), 0);
    std::vector<long long> counts(static_cast<size_t>(total), 0);
    const double a = strip.lo.x;
    const double b = strip.lo.x + strip.nx * strip.cw();
    for (uint64_t shift = 0; shift < total; ++shift) {
        const uint32_t key = static_cast<uint32_t>(total - 1 - shift);
        const Word w = unpack_word(key, depth, order);
        const Affine1d f = as_1d(compose_word(ifs, w, false));
        double ia = f(a), ib = f(b);
        bool ao = false, bo = true;
        if (f.alpha < 0) {
            std::swap(ia, ib);
            std::swap(ao, bo);
        }
        const auto [c0, c1] = strip.x_cell_range(ia, ib, ao, bo);
        long long n = 0;
        for (int c = c0; c <= c1; ++c) {
            if (!taken[static_cast<size_t>(c)]) {
                taken[static_cast<size_t>(c)] = 1;
                ++n;
            }
        }
        counts[static_cast<size_t>(key)] = n;
    }
    TopWordSet out;
    out.depth = depth;
    for (uint64_t shift = 0; shift < total; ++shift) {
        const uint32_t key = static_cast<uint32_t>(total - 1 - shift);
        if (counts[static_cast<size_t>(key)] >= min_cells && counts[static_cast<size_t>(key)] > 0)
            out.entries.push_back({unpack_word(key, depth, order), counts[static_cast<size_t>(key)]});
    }
    return out;
}

IntervalTops interval_tops(const Ifs& ifs, int depth, const PriorityOrder& order) {
    if (!ifs.is_1d()) throw NotOneDimensional();
    if (depth < 1) throw DepthTooLarge("oracle depth must be >= 1");
    check_depth_guard(ifs.size(), depth);

    IntervalTops out;
    out.depth = depth;
    out.order = order;
    const auto [a0, a1] = ifs.interval_hull_1d();
    out.hull_lo = a0;
    out.hull_hi = a1;

    IntervalSet claimed;
    const uint64_t total = word_count(ifs.size(), depth);
    for (uint64_t shift = 0; shift < total; ++shift) {
        const uint32_t key = static_cast<uint32_t>(total - 1 - shift);
        const Word w = unpack_word(key, depth, order);
        const Affine1d f = as_1d(compose_word(ifs, w, false));
        const IntervalSet cylinder = IntervalSet::closed(a0, a1).affine_image(f.alpha, f.beta);
        const IntervalSet residual = cylinder.subtract(claimed);
        const IntervalSet positive = residual.positive_parts();
        if (!positive.empty()) {
            out.entries.push_back({w, residual, positive.length()});
        } else if (!residual.empty()) {
            out.degenerate.push_back({w, residual, 0.0});
        }
        claimed.add(cylinder);
    }
    return out;
}

Word top_itinerary(const Ifs& ifs, Vec2 x, int steps, const TopField& field1) {
    if (field1.depth != 1) throw Error("itinerary needs a depth-1 top field");
    std::vector<int> syms;
    syms.reserve(static_cast<size_t>(steps));
    for (int n = 0; n < steps; ++n) {
        const Viewport& vp = field1.vp;
        const double ux = (x.x - vp.lo.x) / vp.cw();
        const double uy = (x.y - vp.lo.y) / vp.ch();
        const int cx = static_cast<int>(std::floor(ux));
        const int cy = static_cast<int>(std::floor(uy));
        uint32_t best = 0;
        // Exact cell first, then growing neighborhoods up to 2 cells.
        for (int radius = 0; radius <= 2 && best == 0; ++radius) {
            for (int dy = -radius; dy <= radius && best == 0; ++dy)
                for (int dx = -radius; dx <= radius && best == 0; ++dx) {
                    if (std::max(std::abs(dx), std::abs(dy)) != radius) continue;
                    const int jx = cx + dx, jy = cy + dy;
                    if (jx < 0 || jy < 0 || jx >= vp.nx || jy >= vp.ny) continue;
                    best = field1.keys[static_cast<size_t>(jy) * vp.nx + jx];
                }
        }
        if (best == 0) throw EscapedAttractor("orbit point " + std::to_string(x.x) + "," + std::to_string(x.y));
        const int symbol = field1.order.symbol_at_rank(field1.order.alphabet() - 1 -
                                                       static_cast<int>(best - 1));
        syms.push_back(symbol);
        x = inverse(ifs.map(symbol))(x);
    }
    return Word(std::move(syms), ifs.size());
}

std::vector<uint8_t> reversibility_flags(const InfiniteAddress& a, int N,
                                         const std::vector<TopWordSet>& sets_by_depth) {
    std::vector<uint8_t> flags;
    flags.reserve(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) {
        if (n > static_cast<int>(sets_by_depth.size())) throw Error("missing top word set for depth " + std::to_string(n));
        const TopWordSet& set = sets_by_depth[static_cast<size_t>(n - 1)];
        if (set.depth != n) throw Error("top word set depth mismatch");
        flags.push_back(set.contains(reverse_prefix(a, n)) ? 1 : 0);
    }
    return flags;
}

}  // namespace fractop
