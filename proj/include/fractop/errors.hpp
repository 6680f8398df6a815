#pragma once

#include <stdexcept>
#include <string>

namespace fractop {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMap : Error {
    explicit SingularMap(const std::string& w = "map is singular") : Error(w) {}
};
struct NoUniqueFixedPoint : Error {
    explicit NoUniqueFixedPoint(const std::string& w = "map has no unique fixed point") : Error(w) {}
};
struct BadSymbol : Error {
    explicit BadSymbol(const std::string& w = "symbol out of range") : Error(w) {}
};
struct DepthTooLarge : Error {
    explicit DepthTooLarge(const std::string& w = "depth too large") : Error(w) {}
};
struct ViewportMismatch : Error {
    explicit ViewportMismatch(const std::string& w = "rasters use different viewports") : Error(w) {}
};
struct NotOneDimensional : Error {
    explicit NotOneDimensional(const std::string& w = "ifs is not a one-dimensional embedding") : Error(w) {}
};
struct EscapedAttractor : Error {
    explicit EscapedAttractor(const std::string& w = "orbit left the attractor raster") : Error(w) {}
};
struct OrbitExplosion : Error {
    explicit OrbitExplosion(const std::string& w = "orbit exceeded the point cap") : Error(w) {}
};
struct DegenerateOrbit : Error {
    explicit DegenerateOrbit(const std::string& w = "orbit has too few points") : Error(w) {}
};
struct NotCommonRatio : Error {
    explicit NotCommonRatio(const std::string& w = "maps do not share a common ratio") : Error(w) {}
};
struct NotTranslationFamily : Error {
    explicit NotTranslationFamily(const std::string& w = "maps are not pure translations of rx") : Error(w) {}
};
struct ClassificationFailure : Error {
    explicit ClassificationFailure(const std::string& w) : Error(w) {}
};
struct IoError : Error {
    explicit IoError(const std::string& w) : Error(w) {}
};

}  // namespace fractop
