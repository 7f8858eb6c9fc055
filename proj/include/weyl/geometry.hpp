#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "weyl/bipoly.hpp"
#include "weyl/weyl_element.hpp"

namespace weyl {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Cross product of a and b (z-component).
inline std::int64_t cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

/// p divided by gcd(|x|, |y|); (0,0) stays (0,0).
Point primitive(const Point& p);

/// Vertices counterclockwise from the lexicographically smallest one. A
/// point has one vertex, a segment two, and the empty polygon none.
struct LatticePolygon {
  std::vector<Point> vertices;
  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;
};

/// Ordered from the (1,-1)-extreme end to the (-1,1)-extreme end.
struct RoofChain {
  std::vector<Point> points;
  friend bool operator==(const RoofChain&, const RoofChain&) = default;
};

LatticePolygon convex_hull(std::vector<Point> points);

std::vector<Point> support_points(const BiPoly& f);
std::vector<Point> support_points(const WeylElement& z);

/// Newton polygon: Convex(E(z)) swept along (-1,-1) into the closed first
/// quadrant. Empty for z = 0.
LatticePolygon ntp(const WeylElement& z);

/// Boundary chain of Convex(E(z)) whose outward normals have rho + sigma > 0.
RoofChain roof(const WeylElement& z);
RoofChain roof(const BiPoly& f);

/// NTP rebuilt from the roof alone.
LatticePolygon ntp_from_roof(const RoofChain& r);

/// One direction per distinct leading form along the roof: the outward normal
/// of every roof edge, then an interior direction of each vertex's normal cone.
/// All have rho + sigma > 0.
std::vector<Direction> fan_directions(const RoofChain& r);

enum class ConeKind { Origin, Ray, Sector };

/// {t v : t >= 0, v in S} inside the closed first quadrant. For Sector the
/// rays satisfy cross(first, second) > 0.
struct ConeSector {
  ConeKind kind = ConeKind::Origin;
  Point first{0, 0};
  Point second{0, 0};
  friend bool operator==(const ConeSector&, const ConeSector&) = default;
};

/// Points must lie in the closed first quadrant. Throws on empty input.
ConeSector cone_of(const std::vector<Point>& points);
ConeSector cone_of(const RoofChain& r);
bool contains(const ConeSector& cone, const Point& p);

/// The five equivalent statements for V+ = {y >= x >= 0} (or the mirror V-).
struct GeometryEquiv {
  bool grading;   ///< z in D_{>=0} (resp. D_{<=0})
  bool support;   ///< E(z) in V
  bool roof;      ///< Roof(z) in V
  bool cone;      ///< Cone(Roof(z)) in V
  bool ntp;       ///< NTP(z) in V

  bool all_agree() const {
    return grading == support && support == roof && roof == cone && cone == ntp;
  }
};

/// Throws std::invalid_argument for z = 0 and InvariantViolation if the
/// predicates disagree.
GeometryEquiv grading_geometry_equiv(const WeylElement& z);
GeometryEquiv grading_geometry_equiv_minus(const WeylElement& z);

/// The largest i >= 1 with (i, i) a vertex of NTP(z), if any.
std::optional<std::int64_t> diagonal_vertex(const WeylElement& z);

}  // namespace weyl
