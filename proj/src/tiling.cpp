#include "fractop/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "fractop/errors.hpp"

namespace fractop {

std::string TileAddress::str() const {
    return blowup.str() + "." + top.str();
}

TileAddress TileAddress::parse(const std::string& text, int alphabet) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) throw BadSymbol("tile address needs a '.'");
    auto side = [&](const std::string& s) {
        return s == "-" ? Word({}, alphabet) : Word::parse(s, alphabet);
    };
    return TileAddress{side(text.substr(0, dot)), side(text.substr(dot + 1))};
}

const Tile* PartialTiling::find_top(const Word& top_word) const {
    for (const Tile& t : tiles)
        if (t.address.top == top_word) return &t;
    return nullptr;
}

uint32_t PartialTiling::label_at(Vec2 p) const {
    const long long idx = vp.cell_of(p);
    return idx < 0 ? 0 : labels[static_cast<size_t>(idx)];
}

Raster PartialTiling::tile_raster(const Word& top_word) const {
    const Tile* t = find_top(top_word);
    if (!t) return Raster(vp);
    Raster r(vp);
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == t->label) r.occ[i] = 1;
    return r;
}

Raster PartialTiling::coverage() const {
    Raster r(vp);
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != 0) r.occ[i] = 1;
    return r;
}

namespace {

AffineMap blowup_map(const Ifs& ifs, const InfiniteAddress& i, int n) {
    return compose_word(ifs, i.prefix(n), /*inverse_maps=*/true);
}

// Inverse of the blowup map: forward maps composed innermost-first.
AffineMap blowup_pullback(const Ifs& ifs, const InfiniteAddress& i, int n) {
    AffineMap acc{};
    for (int l = n - 1; l >= 0; --l) acc = compose(acc, ifs.map(i.symbol_at(l)));
    return acc;
}

}  // namespace

Viewport blowup_viewport(const Ifs& ifs, const InfiniteAddress& i, int n, const Raster& base,
                         double max_extent) {
    const AffineMap out_map = blowup_map(ifs, i, n);
    if (base.vp.is_strip()) {
        const Affine1d f = as_1d(out_map);
        double a = f(base.vp.lo.x), b = f(base.vp.hi.x);
        if (a > b) std::swap(a, b);
        if (b - a > max_extent) throw DepthTooLarge("blowup viewport exceeds the extent bound");
        return Viewport::strip(a, b, base.vp.nx);
    }
    BBox box = out_map.image_of(BBox{base.vp.lo, base.vp.hi});
    if (box.size().x > max_extent || box.size().y > max_extent)
        throw DepthTooLarge("blowup viewport exceeds the extent bound");
    return Viewport::square(box, base.vp.nx);
}

Raster blowup_region(const Ifs& ifs, const InfiniteAddress& i, int n, const Raster& base,
                     double max_extent) {
    if (n < 0) throw DepthTooLarge("blowup level must be >= 0");
    const Viewport vp = blowup_viewport(ifs, i, n, base, max_extent);
    const AffineMap pull = blowup_pullback(ifs, i, n);
    Raster out(vp);
    for (int iy = 0; iy < vp.ny; ++iy)
        for (int ix = 0; ix < vp.nx; ++ix)
            if (base.get_at(pull(vp.center(ix, iy)))) out.set(ix, iy);
    return out;
}

PartialTiling partial_tiling(const Ifs& ifs, const InfiniteAddress& i, int k, const TopField* field,
                             const Raster& base, long long min_cells, double max_extent) {
    PartialTiling out;
    out.level = k;
    out.address = i;
    out.order = field ? field->order : PriorityOrder::standard(ifs.size());
    out.vp = blowup_viewport(ifs, i, k, base, max_extent);
    out.labels.assign(static_cast<size_t>(out.vp.cells()), 0);

    const AffineMap pull = blowup_pullback(ifs, i, k);
    if (k == 0) {
        // tile(.) = A
        for (int iy = 0; iy < out.vp.ny; ++iy)
            for (int ix = 0; ix < out.vp.nx; ++ix)
                if (base.get_at(pull(out.vp.center(ix, iy))))
                    out.labels[static_cast<size_t>(iy) * out.vp.nx + ix] = 1;
        Tile t;
        t.address = TileAddress{Word({}, ifs.size()), Word({}, ifs.size())};
        t.transform = AffineMap{};
        t.label = 1;
        t.cells = 0;
        for (uint32_t l : out.labels) t.cells += l != 0;
        Raster cover = out.coverage();
        t.bbox = cover.occupied_bbox();
        if (t.cells >= min_cells) out.tiles.push_back(std::move(t));
        return out;
    }

    if (!field || field->depth != k) throw Error("partial tiling needs the depth-k top field");

    std::map<uint32_t, long long> counts;
    std::map<uint32_t, BBox> boxes;
    for (int iy = 0; iy < out.vp.ny; ++iy)
        for (int ix = 0; ix < out.vp.nx; ++ix) {
            const Vec2 c = out.vp.center(ix, iy);
            const long long cell = field->vp.cell_of(pull(c));
            if (cell < 0) continue;
            const uint32_t key = field->keys[static_cast<size_t>(cell)];
            if (key == 0) continue;
            out.labels[static_cast<size_t>(iy) * out.vp.nx + ix] = key;
            auto [it, fresh] = counts.try_emplace(key, 0);
            ++it->second;
            if (fresh) {
                boxes[key] = BBox{c, c};
            } else {
                boxes[key].expand(c);
            }
        }

    const Word blowup_word = i.prefix(k);
    const AffineMap transform = blowup_map(ifs, i, k);
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
        if (it->second < min_cells) continue;
        Tile t;
        t.address = TileAddress{blowup_word, unpack_word(it->first - 1, k, out.order)};
        t.transform = transform;
        t.label = it->first;
        t.cells = it->second;
        t.bbox = boxes[it->first];
        out.tiles.push_back(std::move(t));
    }
    return out;
}

namespace {

// Fraction of `tile` cells whose location in `other` carries `wanted` within a
// one-cell neighborhood.
double containment_fraction(const PartialTiling& child_tiling, uint32_t child_key,
                            const PartialTiling& parent_tiling, uint32_t parent_key) {
    long long total = 0, inside = 0;
    const Viewport& vp = child_tiling.vp;
    const Viewport& pv = parent_tiling.vp;
    for (int iy = 0; iy < vp.ny; ++iy)
        for (int ix = 0; ix < vp.nx; ++ix) {
            if (child_tiling.labels[static_cast<size_t>(iy) * vp.nx + ix] != child_key) continue;
            ++total;
            const Vec2 c = vp.center(ix, iy);
            const double ux = (c.x - pv.lo.x) / pv.cw();
            const double uy = (c.y - pv.lo.y) / pv.ch();
            const int cx = static_cast<int>(std::floor(ux));
            const int cy = static_cast<int>(std::floor(uy));
            bool hit = false;
            for (int dy = -1; dy <= 1 && !hit; ++dy)
                for (int dx = -1; dx <= 1 && !hit; ++dx) {
                    const int jx = cx + dx, jy = cy + dy;
                    if (jx < 0 || jy < 0 || jx >= pv.nx || jy >= pv.ny) continue;
                    if (pv.is_strip() && jy != 0) continue;
                    hit = parent_tiling.labels[static_cast<size_t>(jy) * pv.nx + jx] == parent_key;
                }
            inside += hit;
        }
    return total == 0 ? 0.0 : static_cast<double>(inside) / static_cast<double>(total);
}

}  // namespace

std::string TransitionReport::summary() const {
    std::string s = "level " + std::to_string(level_from) + "->" + std::to_string(level_from + 1) + ": " +
                    std::to_string(children.size()) + " children, " + std::to_string(new_tiles.size()) +
                    " new";
    if (!childless_parents.empty()) {
        s += "; childless parents:";
        for (const Word& w : childless_parents) s += " " + w.str();
    }
    for (const std::string& v : violations) s += "; " + v;
    return s;
}

TransitionReport classify_transition(const Ifs& ifs, const InfiniteAddress& i, int k,
                                     const PartialTiling& at_k, const PartialTiling& at_k1,
                                     double containment_threshold, bool strict) {
    if (at_k.level != k || at_k1.level != k + 1) throw Error("classify_transition level mismatch");
    TransitionReport rep;
    rep.level_from = k;
    const int next_symbol = i.symbol_at(k);  // i_{k+1}

    // Precondition probe: the reversed (k+1)-prefix should be a top word.
    rep.reversible_precondition = at_k1.find_top(reverse_prefix(i, k + 1)) != nullptr;

    std::map<Word, int> children_of_parent;
    for (const Tile& tile : at_k1.tiles) {
        const Word& s = tile.address.top;
        if (s.at(0) == next_symbol) {
            const Word parent = s.dropped_front();
            const Tile* ptile = at_k.find_top(parent);
            if (!ptile) {
                rep.violations.push_back("child tile " + tile.address.str() + " has no parent tile " +
                                         parent.str());
                continue;
            }
            const double frac = containment_fraction(at_k1, tile.label, at_k, ptile->label);
            if (frac < containment_threshold)
                rep.violations.push_back("child tile " + tile.address.str() + " only " +
                                         std::to_string(frac) + " inside parent " + parent.str());
            rep.children.push_back({parent, s, frac});
            ++children_of_parent[parent];
        } else {
            // New tile: must not be contained in any level-k tile.
            for (const Tile& parent : at_k.tiles) {
                const double frac = containment_fraction(at_k1, tile.label, at_k, parent.label);
                if (frac >= containment_threshold)
                    rep.violations.push_back("new tile " + tile.address.str() + " is contained in " +
                                             parent.address.str());
            }
            rep.new_tiles.push_back(s);
        }
    }
    for (const Tile& parent : at_k.tiles) {
        const auto it = children_of_parent.find(parent.address.top);
        const int n = it == children_of_parent.end() ? 0 : it->second;
        if (n == 0) rep.childless_parents.push_back(parent.address.top);
        if (n > 1)
            rep.violations.push_back("tile " + parent.address.str() + " has " + std::to_string(n) +
                                     " children");
    }
    if (strict && !rep.clean()) throw ClassificationFailure(rep.summary());
    return rep;
}

std::vector<uint8_t> verify_onebar_nesting(const Ifs& ifs, int K,
                                           const std::vector<PartialTiling>& tilings) {
    if (static_cast<int>(tilings.size()) < K + 1) throw Error("need tilings for levels 0..K");
    for (const PartialTiling& t : tilings)
        if (!(t.address == InfiniteAddress::constant(1, ifs.size())))
            throw Error("nesting verification only applies to the all-ones address");

    std::vector<uint8_t> flags;
    for (int k = 0; k < K; ++k) {
        const PartialTiling& cur = tilings[static_cast<size_t>(k)];
        const PartialTiling& next = tilings[static_cast<size_t>(k + 1)];
        bool ok = true;
        for (const Tile& tile : cur.tiles) {
            const Word lifted = tile.address.top.prepended(1);
            const Tile* twin = next.find_top(lifted);
            if (!twin) {
                ok = false;
                break;
            }
            // Same geometry both ways within a one-cell band.
            if (containment_fraction(cur, tile.label, next, twin->label) < 0.99 ||
                containment_fraction(next, twin->label, cur, tile.label) < 0.99) {
                ok = false;
                break;
            }
        }
        flags.push_back(ok ? 1 : 0);
    }
    return flags;
}

const IntervalSet* OracleTiling::find(const Word& top_word) const {
    for (const auto& [w, set] : tiles)
        if (w == top_word) return &set;
    return nullptr;
}

OracleTiling oracle_partial_tiling(const Ifs& ifs, const InfiniteAddress& i, int k,
                                   const IntervalTops& tops) {
    OracleTiling out;
    out.level = k;
    if (k == 0) {
        const auto [a0, a1] = ifs.interval_hull_1d();
        out.tiles.emplace_back(Word({}, ifs.size()), IntervalSet::closed(a0, a1));
        return out;
    }
    if (tops.depth != k) throw Error("oracle tiling needs depth-k tops");
    const Affine1d f = compose_word_1d(ifs, i.prefix(k), /*inverse_maps=*/true);
    for (const auto& e : tops.entries)
        out.tiles.emplace_back(e.word, e.residual.affine_image(f.alpha, f.beta));
    return out;
}

TransitionReport oracle_classify(const Ifs& ifs, const InfiniteAddress& i, int k,
                                 const OracleTiling& at_k, const OracleTiling& at_k1) {
    if (at_k.level != k || at_k1.level != k + 1) throw Error("oracle_classify level mismatch");
    TransitionReport rep;
    rep.level_from = k;
    const int next_symbol = i.symbol_at(k);
    rep.reversible_precondition = at_k1.find(reverse_prefix(i, k + 1)) != nullptr;

    std::map<Word, int> children_of_parent;
    for (const auto& [s, geometry] : at_k1.tiles) {
        if (s.at(0) == next_symbol) {
            const Word parent = s.dropped_front();
            const IntervalSet* pset = at_k.find(parent);
            if (!pset) {
                rep.violations.push_back("child tile ." + s.str() + " has no parent tile " + parent.str());
                continue;
            }
            const bool inside = geometry.subset_of(*pset, 1e-7);
            if (!inside)
                rep.violations.push_back("child tile ." + s.str() + " is not inside parent " + parent.str());
            rep.children.push_back({parent, s, inside ? 1.0 : 0.0});
            ++children_of_parent[parent];
        } else {
            for (const auto& [pw, pset] : at_k.tiles)
                if (geometry.subset_of(pset, 1e-7))
                    rep.violations.push_back("new tile ." + s.str() + " is contained in ." + pw.str());
            rep.new_tiles.push_back(s);
        }
    }
    for (const auto& [pw, pset] : at_k.tiles) {
        const auto it = children_of_parent.find(pw);
        const int n = it == children_of_parent.end() ? 0 : it->second;
        if (n == 0) rep.childless_parents.push_back(pw);
        if (n > 1) rep.violations.push_back("tile ." + pw.str() + " has " + std::to_string(n) + " children");
    }
    return rep;
}

std::vector<uint8_t> oracle_onebar_nesting(const Ifs& ifs, int K,
                                           const std::vector<OracleTiling>& tilings) {
    if (static_cast<int>(tilings.size()) < K + 1) throw Error("need oracle tilings for levels 0..K");
    std::vector<uint8_t> flags;
    for (int k = 0; k < K; ++k) {
        bool ok = true;
        for (const auto& [w, set] : tilings[static_cast<size_t>(k)].tiles) {
            const IntervalSet* twin = tilings[static_cast<size_t>(k + 1)].find(w.prepended(1));
            if (!twin || !set.same_set(*twin, 1e-7)) {
                ok = false;
                break;
            }
        }
        flags.push_back(ok ? 1 : 0);
        (void)ifs;
    }
    return flags;
}

StoppingTimes stopping_times(const Word& w, const std::vector<double>& exponents) {
    if (w.empty()) throw Error("stopping times need a nonempty word");
    StoppingTimes out;
    for (int i = 0; i < w.size(); ++i) out.eta += exponents.at(static_cast<size_t>(w.at(i) - 1));
    out.eta_minus = out.eta - exponents.at(static_cast<size_t>(w.at(w.size() - 1) - 1));
    return out;
}

PartialTiling stopping_tiling(const Ifs& ifs, const InfiniteAddress& i, int level, const Raster& base,
                              double max_extent) {
    const RatioInfo ratios = ifs.ratios();
    const double theta = level == 0 ? 0.0 : stopping_times(i.prefix(level), ratios.exponents).eta;

    PartialTiling out;
    out.level = level;
    out.address = i;
    out.order = PriorityOrder::standard(ifs.size());
    out.vp = blowup_viewport(ifs, i, level, base, max_extent);
    out.labels.assign(static_cast<size_t>(out.vp.cells()), 0);

    // Minimal words m with eta(m) >= theta; their stopping bands contain theta.
    std::vector<Word> stopped;
    std::vector<std::pair<Word, double>> frontier{{Word({}, ifs.size()), 0.0}};
    while (!frontier.empty()) {
        auto [w, eta] = frontier.back();
        frontier.pop_back();
        for (int j = 1; j <= ifs.size(); ++j) {
            const double eta2 = eta + ratios.exponents[static_cast<size_t>(j - 1)];
            const Word w2 = w.appended(j);
            if (eta2 >= theta - 1e-12) {
                stopped.push_back(w2);
            } else {
                frontier.emplace_back(w2, eta2);
            }
        }
        if (stopped.size() > 2'000'000) throw OrbitExplosion("stopping word tree too large");
    }
    std::sort(stopped.begin(), stopped.end(),
              [](const Word& a, const Word& b) { return a.symbols() < b.symbols(); });

    const AffineMap out_map = blowup_map(ifs, i, level);
    const Word blowup_word = i.prefix(level);
    uint32_t next_label = 1;
    const BBox base_box{base.vp.lo, base.vp.hi};
    for (const Word& m : stopped) {
        const AffineMap tf = compose(out_map, compose_word(ifs, m, false));
        const AffineMap back = inverse(tf);
        Tile t;
        t.address = TileAddress{blowup_word, m};
        t.transform = tf;
        // Inverse-sample the image of A over its bounding box only.
        const BBox img = tf.image_of(base_box);
        int x0 = std::max(0, static_cast<int>(std::floor((img.lo.x - out.vp.lo.x) / out.vp.cw())) - 1);
        int x1 = std::min(out.vp.nx - 1, static_cast<int>(std::ceil((img.hi.x - out.vp.lo.x) / out.vp.cw())));
        int y0 = std::max(0, static_cast<int>(std::floor((img.lo.y - out.vp.lo.y) / out.vp.ch())) - 1);
        int y1 = std::min(out.vp.ny - 1, static_cast<int>(std::ceil((img.hi.y - out.vp.lo.y) / out.vp.ch())));
        bool first = true;
        for (int iy = y0; iy <= y1; ++iy)
            for (int ix = x0; ix <= x1; ++ix) {
                const Vec2 c = out.vp.center(ix, iy);
                if (!base.get_at(back(c))) continue;
                out.labels[static_cast<size_t>(iy) * out.vp.nx + ix] = next_label;
                ++t.cells;
                if (first) {
                    t.bbox = BBox{c, c};
                    first = false;
                } else {
                    t.bbox.expand(c);
                }
            }
        t.label = next_label;
        ++next_label;
        out.tiles.push_back(std::move(t));
    }
    return out;
}

int tiles_touching_ball(const PartialTiling& tiling, Vec2 center, double radius) {
    int n = 0;
    for (const Tile& t : tiling.tiles) {
        const double dx = std::max({t.bbox.lo.x - center.x, center.x - t.bbox.hi.x, 0.0});
        const double dy = std::max({t.bbox.lo.y - center.y, center.y - t.bbox.hi.y, 0.0});
        if (std::hypot(dx, dy) <= radius) ++n;
    }
    return n;
}

}  // namespace fractop
