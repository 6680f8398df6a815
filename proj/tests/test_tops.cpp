#include <cmath>
#include <set>

#include "doctest.h"
#include "fractop/errors.hpp"
#include "fractop/systems.hpp"
#include "fractop/tops.hpp"

using namespace fractop;

TEST_SUITE_BEGIN("tops");

namespace {

const PriorityOrder kOneHigh = PriorityOrder::standard(2);
const PriorityOrder kTwoHigh = PriorityOrder::reversed(2);

std::set<std::string> word_names(const TopWordSet& s) {
    std::set<std::string> out;
    for (const auto& e : s.entries) out.insert(e.word.str());
    return out;
}

std::set<std::string> word_names(const IntervalTops& s) {
    std::set<std::string> out;
    for (const auto& e : s.entries) out.insert(e.word.str());
    return out;
}

}  // namespace

TEST_CASE("oracle: overlap3 depth 1 splits the hull at 2/3") {
    const IntervalTops t = interval_tops(systems::overlap3(), 1, kOneHigh);
    REQUIRE(t.entries.size() == 2);
    const auto* w1 = t.find(Word::parse("1", 2));
    const auto* w2 = t.find(Word::parse("2", 2));
    REQUIRE(w1);
    REQUIRE(w2);
    // Cell of word 1 is [0, 2/3]; cell of word 2 is (2/3, 1].
    CHECK(w1->residual.min() == doctest::Approx(0.0));
    CHECK(w1->residual.max() == doctest::Approx(2.0 / 3.0));
    CHECK(w1->length == doctest::Approx(2.0 / 3.0));
    REQUIRE(w2->residual.parts().size() == 1);
    CHECK(w2->residual.parts()[0].lo == doctest::Approx(2.0 / 3.0));
    CHECK(w2->residual.parts()[0].lo_open);
    CHECK(w2->residual.parts()[0].hi == doctest::Approx(1.0));
    CHECK(w2->length == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("oracle: overlap3 depth 2 keeps all four words") {
    const IntervalTops t = interval_tops(systems::overlap3(), 2, kOneHigh);
    CHECK(word_names(t) == std::set<std::string>{"11", "12", "21", "22"});
    // Residuals: [0,4/9], (4/9,2/3], (2/3,7/9], (7/9,1].
    CHECK(t.find(Word::parse("11", 2))->length == doctest::Approx(4.0 / 9.0));
    CHECK(t.find(Word::parse("12", 2))->length == doctest::Approx(2.0 / 3.0 - 4.0 / 9.0));
    CHECK(t.find(Word::parse("21", 2))->length == doctest::Approx(7.0 / 9.0 - 2.0 / 3.0));
    CHECK(t.find(Word::parse("22", 2))->length == doctest::Approx(1.0 - 7.0 / 9.0));
}

TEST_CASE("oracle: overlap3 loses 211 at depth 3") {
    const IntervalTops t = interval_tops(systems::overlap3(), 3, kOneHigh);
    CHECK(t.entries.size() == 7);
    CHECK(!t.contains(Word::parse("211", 2)));
    CHECK(t.contains(Word::parse("212", 2)));
    // 212's cell is (2/3, 7/9]: the length-1 cylinders cover [0, 2/3] and 211's
    // cylinder [1/3, 17/27] adds nothing beyond it.
    const auto* e = t.find(Word::parse("212", 2));
    CHECK(e->length == doctest::Approx(7.0 / 9.0 - 2.0 / 3.0));
    REQUIRE(e->residual.parts().size() == 1);
    CHECK(e->residual.parts()[0].lo == doctest::Approx(2.0 / 3.0));
    CHECK(e->residual.parts()[0].lo_open);
}

TEST_CASE("oracle: overlap3_flip drops every word containing 22") {
    const IntervalTops t2 = interval_tops(systems::overlap3_flip(), 2, kOneHigh);
    CHECK(word_names(t2) == std::set<std::string>{"11", "12", "21"});

    const IntervalTops t4 = interval_tops(systems::overlap3_flip(), 4, kOneHigh);
    std::set<std::string> expect;
    for (int a = 0; a < 16; ++a) {
        std::string w;
        for (int b = 3; b >= 0; --b) w.push_back(((a >> b) & 1) ? '2' : '1');
        if (w.find("22") == std::string::npos) expect.insert(w);
    }
    CHECK(word_names(t4) == expect);  // golden-mean structure at depth 4
}

TEST_CASE("oracle: overlap3_flip under the reversed order loses 121 at depth 3") {
    const IntervalTops t = interval_tops(systems::overlap3_flip(), 3, kTwoHigh);
    CHECK(t.entries.size() == 7);
    CHECK(!t.contains(Word::parse("121", 2)));
}

TEST_CASE("oracle: cantor keeps all words with hull-length residuals") {
    for (int n = 1; n <= 5; ++n) {
        const IntervalTops t = interval_tops(systems::cantor(), n, kOneHigh);
        CHECK(t.entries.size() == (1u << n));
        for (const auto& e : t.entries) CHECK(e.length == doctest::Approx(std::pow(1.0 / 3.0, n)));
    }
}

TEST_CASE("oracle: dyadic keeps all words as half-open pieces") {
    const IntervalTops t = interval_tops(systems::dyadic(), 2, kOneHigh);
    CHECK(word_names(t) == std::set<std::string>{"11", "12", "21", "22"});
    for (const auto& e : t.entries) {
        CHECK(e.length == doctest::Approx(0.25));
        CHECK(e.residual.parts().size() == 1);
    }
    // All but the highest piece are left-open.
    CHECK(!t.find(Word::parse("11", 2))->residual.parts()[0].lo_open);
    CHECK(t.find(Word::parse("12", 2))->residual.parts()[0].lo_open);
}

TEST_CASE("oracle: truncation lemma holds exactly for n <= 8") {
    for (const Ifs& ifs : {systems::overlap3(), systems::overlap3_flip()}) {
        std::vector<IntervalTops> tops;
        for (int n = 1; n <= 8; ++n) tops.push_back(interval_tops(ifs, n, kOneHigh));
        for (int n = 2; n <= 8; ++n) {
            for (const auto& e : tops[static_cast<size_t>(n - 1)].entries) {
                CHECK(tops[static_cast<size_t>(n - 2)].contains(e.word.dropped_front()));
                CHECK(tops[static_cast<size_t>(n - 2)].contains(e.word.dropped_back()));
            }
        }
    }
}

TEST_CASE("oracle: shift invariance at truncation level (both inclusions)") {
    for (const Ifs& ifs : {systems::overlap3(), systems::overlap3_flip()}) {
        for (int n = 1; n <= 6; ++n) {
            const IntervalTops deep = interval_tops(ifs, n + 1, kOneHigh);
            const IntervalTops shallow = interval_tops(ifs, n, kOneHigh);
            std::set<std::string> shifted;
            for (const auto& e : deep.entries) shifted.insert(e.word.dropped_front().str());
            CHECK(shifted == word_names(shallow));
        }
    }
}

TEST_CASE("raster field matches the counted sweep cell for cell") {
    for (const Ifs& ifs : {systems::overlap3(), systems::overlap3_flip(), systems::dyadic()}) {
        const Raster base = attractor_strip_raster(ifs, 1024);
        for (int n : {1, 3, 5}) {
            const TopField field = top_field(ifs, n, base, kOneHigh);
            const TopWordSet raster_set = top_words(field, 1);
            const TopWordSet sweep_set = counted_strip_words(ifs, n, kOneHigh, base.vp, 1);
            REQUIRE(raster_set.entries.size() == sweep_set.entries.size());
            for (size_t i = 0; i < raster_set.entries.size(); ++i) {
                CHECK(raster_set.entries[i].word == sweep_set.entries[i].word);
                CHECK(raster_set.entries[i].cells == sweep_set.entries[i].cells);
            }
        }
    }
}

TEST_CASE("raster top words equal oracle top words on full-interval systems") {
    for (const Ifs& ifs : {systems::overlap3(), systems::overlap3_flip()}) {
        const Raster base = attractor_strip_raster(ifs, 4096);
        for (int n = 1; n <= 6; ++n) {
            const TopField field = top_field(ifs, n, base, kOneHigh);
            // Every oracle word with room to spare shows up; no ghost words appear.
            const IntervalTops oracle = interval_tops(ifs, n, kOneHigh);
            const TopWordSet raster_set = top_words(field, 1);
            for (const auto& e : raster_set.entries) CHECK(oracle.contains(e.word));
            for (const auto& e : oracle.entries)
                if (e.length >= 3 * base.vp.cw()) CHECK(raster_set.contains(e.word));
        }
    }
}

TEST_CASE("2d paint equals brute-force per-cell maximum at small depth") {
    const Ifs leaf = systems::leaf();
    const auto pts = chaos_game(leaf, 300000, 77);
    const Viewport vp = auto_viewport(pts, 128);
    const Raster base = rasterize(pts, vp);
    const int depth = 3;
    const TopField field = top_field(leaf, depth, base, kOneHigh);

    // Brute force: per cell, scan all words' cylinder rasters, take the maximum.
    const uint64_t total = word_count(2, depth);
    std::vector<Raster> cyl;
    for (uint64_t key = 0; key < total; ++key)
        cyl.push_back(cylinder_raster(leaf, unpack_word(static_cast<uint32_t>(key), depth, kOneHigh), base));
    for (int iy = 0; iy < vp.ny; ++iy)
        for (int ix = 0; ix < vp.nx; ++ix) {
            uint32_t best = 0;
            for (uint64_t key = 0; key < total; ++key)
                if (cyl[static_cast<size_t>(key)].get(ix, iy)) best = static_cast<uint32_t>(key) + 1;
            CHECK(field.keys[static_cast<size_t>(iy) * vp.nx + ix] == best);
        }
}

TEST_CASE("field maximality: no higher word covers a cell (small depth, strip)") {
    const Ifs ifs = systems::overlap3();
    const Raster base = attractor_strip_raster(ifs, 512);
    const int depth = 4;
    const TopField field = top_field(ifs, depth, base, kOneHigh);
    const uint64_t total = word_count(2, depth);
    std::vector<Raster> cyl;
    for (uint64_t key = 0; key < total; ++key)
        cyl.push_back(cylinder_raster(ifs, unpack_word(static_cast<uint32_t>(key), depth, kOneHigh), base));
    for (int ix = 0; ix < 512; ++ix) {
        const uint32_t k = field.keys[static_cast<size_t>(ix)];
        if (k == 0) continue;
        for (uint32_t higher = k; higher < total; ++higher)
            CHECK(!cyl[static_cast<size_t>(higher)].get(ix, 0));  // keys above k-1 never touch this cell
    }
}

TEST_CASE("workers do not change the field") {
    const Ifs leaf = systems::leaf();
    const auto pts = chaos_game(leaf, 200000, 5);
    const Viewport vp = auto_viewport(pts, 128);
    const Raster base = rasterize(pts, vp);
    const TopField f1 = top_field(leaf, 4, base, kOneHigh, 1);
    const TopField f4 = top_field(leaf, 4, base, kOneHigh, 4);
    CHECK(f1.keys == f4.keys);
}

TEST_CASE("top_words filtering") {
    const Ifs cant = systems::cantor();
    const Raster base = attractor_strip_raster(cant, 729);
    const TopField f3 = top_field(cant, 3, base, kOneHigh);
    CHECK(top_words(f3, 1).size() == 8);
    CHECK(top_words(f3, 1LL << 40).size() == 0);  // effectively infinite threshold
}

TEST_CASE("itinerary: fixed points and flip system") {
    const Ifs ex3 = systems::overlap3();
    const Raster base = attractor_strip_raster(ex3, 2048);
    const TopField f1 = top_field(ex3, 1, base, kOneHigh);

    const Vec2 p1 = fixed_point(ex3.map(1));
    CHECK(top_itinerary(ex3, p1, 6, f1) == Word::parse("111111", 2));

    // x = 1 is f2's fixed point and lies in the cell of word 2.
    CHECK(top_itinerary(ex3, Vec2{1.0, 0.0}, 6, f1) == Word::parse("222222", 2));

    CHECK_THROWS_AS(top_itinerary(ex3, Vec2{9.0, 0.0}, 3, f1), EscapedAttractor);
}

TEST_CASE("itinerary agrees with the field word at matching depth") {
    const Ifs ifs = systems::overlap3_flip();
    const Raster base = attractor_strip_raster(ifs, 4096);
    const TopField f1 = top_field(ifs, 1, base, kOneHigh);
    const TopField f5 = top_field(ifs, 5, base, kOneHigh);
    for (int i = 0; i < 40; ++i) {
        const double x = 0.012 + i * 0.024;
        const long long cell = f5.vp.cell_of(Vec2{x, 0});
        if (cell < 0 || !f5.covered(cell)) continue;
        const Word field_word = f5.word_at(cell);
        const Word itin = top_itinerary(ifs, Vec2{x, 0}, 5, f1);
        // Boundary cells may disagree; interior points must match.
        const double d = std::fabs(x - f5.vp.center(cell).x);
        if (d < 0.2 * f5.vp.cw()) CHECK(field_word == itin);
    }
}

TEST_CASE("reversibility flags against the oracle") {
    const Ifs ex3 = systems::overlap3();
    std::vector<TopWordSet> sets;
    for (int n = 1; n <= 8; ++n) sets.push_back(interval_tops(ex3, n, kOneHigh).word_set());

    const auto onebar = InfiniteAddress::constant(1, 2);
    const auto twobar = InfiniteAddress::constant(2, 2);
    const auto onetwo = InfiniteAddress::parse("(12)", 2);

    for (uint8_t f : reversibility_flags(onebar, 8, sets)) CHECK(f == 1);
    for (uint8_t f : reversibility_flags(twobar, 8, sets)) CHECK(f == 1);

    // (12): reversible through depth 5, fails at 6 (212121 is not a top word).
    const auto flags = reversibility_flags(onetwo, 8, sets);
    CHECK(flags[4] == 1);
    CHECK(flags[5] == 0);
}

TEST_CASE("overlap3_flip: reversibility depends on the order") {
    const Ifs ex4 = systems::overlap3_flip();
    std::vector<TopWordSet> one_high, two_high;
    for (int n = 1; n <= 6; ++n) {
        one_high.push_back(interval_tops(ex4, n, kOneHigh).word_set());
        two_high.push_back(interval_tops(ex4, n, kTwoHigh).word_set());
    }
    const auto onebar = InfiniteAddress::constant(1, 2);
    const auto twobar = InfiniteAddress::constant(2, 2);
    const auto onetwo = InfiniteAddress::parse("(12)", 2);
    const auto twoone = InfiniteAddress::parse("(21)", 2);

    auto all_true = [](const std::vector<uint8_t>& v) {
        for (uint8_t f : v)
            if (!f) return false;
        return true;
    };
    // 1-highest: 1bar, (12), (21) reversible; 2bar is not (22 is never a top word).
    CHECK(all_true(reversibility_flags(onebar, 6, one_high)));
    CHECK(all_true(reversibility_flags(onetwo, 6, one_high)));
    CHECK(all_true(reversibility_flags(twoone, 6, one_high)));
    CHECK(reversibility_flags(twobar, 6, one_high)[1] == 0);
    // 2-highest: 1bar and 2bar reversible; (12) fails at depth 3.
    CHECK(all_true(reversibility_flags(onebar, 6, two_high)));
    CHECK(all_true(reversibility_flags(twobar, 6, two_high)));
    CHECK(reversibility_flags(onetwo, 6, two_high)[2] == 0);
}

TEST_CASE("depth guard") {
    const Ifs ex3 = systems::overlap3();
    const Raster base = attractor_strip_raster(ex3, 64);
    CHECK_THROWS_AS(top_field(ex3, 30, base, kOneHigh), DepthTooLarge);
    CHECK_THROWS_AS(interval_tops(ex3, 0, kOneHigh), DepthTooLarge);
    CHECK_THROWS_AS(interval_tops(systems::leaf(), 2, kOneHigh), NotOneDimensional);
}

TEST_SUITE_END();
