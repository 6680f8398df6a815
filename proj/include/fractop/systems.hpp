#pragma once

#include "fractop/ifs.hpp"

namespace fractop {
namespace systems {

// {x/3, x/3 + 2/3}: totally disconnected, cylinders never touch.
inline Ifs cantor() {
    return Ifs({affine_1d(1.0 / 3.0, 0.0), affine_1d(1.0 / 3.0, 2.0 / 3.0)}, "cantor");
}

// {x/2, x/2 + 1/2}: cylinders touch at endpoints.
inline Ifs dyadic() {
    return Ifs({affine_1d(0.5, 0.0), affine_1d(0.5, 0.5)}, "dyadic");
}

// {2x/3, 2x/3 + 1/3}: overlapping, both maps increasing.
inline Ifs overlap3() {
    return Ifs({affine_1d(2.0 / 3.0, 0.0), affine_1d(2.0 / 3.0, 1.0 / 3.0)}, "overlap3");
}

// {2x/3, 1 - 2x/3}: overlapping, second map reverses orientation.
inline Ifs overlap3_flip() {
    return Ifs({affine_1d(2.0 / 3.0, 0.0), affine_1d(-2.0 / 3.0, 1.0)}, "overlap3-flip");
}

// Two-map leaf-shaped overlapping attractor; equal scaling factors, the second
// map reflects.
inline Ifs leaf() {
    return Ifs({affine_from_rows(0.7526, -0.2190, 0.2474, 0.2190, 0.7526, -0.0726),
                affine_from_rows(-0.7526, 0.2190, 1.0349, 0.2190, 0.7526, 0.0678)},
               "leaf");
}

// Three corner maps of ratio 1/2 on the right triangle (0,0),(1,0),(0,1).
inline Ifs sierpinski() {
    return Ifs({affine_from_rows(0.5, 0.0, 0.0, 0.0, 0.5, 0.0),
                affine_from_rows(0.5, 0.0, 0.5, 0.0, 0.5, 0.0),
                affine_from_rows(0.5, 0.0, 0.0, 0.0, 0.5, 0.5)},
               "sierpinski");
}

// Three similitudes of ratio 1/2, one rotated a quarter turn.
inline Ifs threemap() {
    const AffineMap rot{Mat2::rotation(1.5707963267948966) * Mat2::scale(0.5), Vec2{1.0, 0.0}};
    return Ifs({affine_from_rows(0.5, 0.0, 0.0, 0.0, 0.5, 0.0), rot,
                affine_from_rows(0.5, 0.0, 0.25, 0.0, 0.5, 0.5)},
               "threemap");
}

// Dyadic with one-quarter second ratio; exercises the multi-ratio stopping times.
inline Ifs tworatio() {
    return Ifs({affine_1d(0.5, 0.0), affine_1d(0.25, 0.75)}, "tworatio");
}

}  // namespace systems
}  // namespace fractop
