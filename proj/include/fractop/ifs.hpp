#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fractop/geometry.hpp"
#include "fractop/word.hpp"

namespace fractop {

struct RatioInfo {
    std::optional<double> uniform;   // r when all ratios agree within 1e-9
    double r_max = 0.0;              // r = max_j s_j
    std::vector<double> exponents;   // a_j with s_j = r^{a_j}, min a_j = 1
    double a_max = 1.0;
};

// Ordered list of contractive invertible maps; the symbol j (1-based) names maps_[j-1].
class Ifs {
  public:
    Ifs(std::vector<AffineMap> maps, std::string name = "");

    int size() const { return static_cast<int>(maps_.size()); }
    const AffineMap& map(int symbol) const;  // throws BadSymbol
    const std::vector<AffineMap>& maps() const { return maps_; }
    const std::string& name() const { return name_; }

    RatioInfo ratios() const;

    // All maps are 1d embeddings (alpha x + beta acting on the x axis).
    bool is_1d(double tol = 1e-12) const;
    Affine1d map_1d(int symbol) const;

    // Smallest interval [lo, hi] with f_j([lo,hi]) inside it for all j;
    // equals the attractor hull for 1d systems.
    std::pair<double, double> interval_hull_1d() const;

  private:
    std::vector<AffineMap> maps_;
    std::string name_;
};

// f_{w1} o f_{w2} o ... o f_{wn}; with `inverse_maps`, f_{w1}^-1 o ... o f_{wn}^-1
// (composition of the inverses in word order, not the inverse of the composition).
AffineMap compose_word(const Ifs& ifs, const Word& w, bool inverse_maps = false);

// Scalar version of compose_word for 1d systems, composed in the same order.
Affine1d compose_word_1d(const Ifs& ifs, const Word& w, bool inverse_maps = false);

}  // namespace fractop
