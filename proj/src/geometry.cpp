#include "weyl/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

// Sweeps p along (-1,-1) onto the boundary of the first quadrant.
Point drop(const Point& p) {
  const std::int64_t m = std::min(p.x, p.y);
  return {p.x - m, p.y - m};
}

LatticePolygon swept_hull(std::vector<Point> pts) {
  if (pts.empty()) return {};
  std::int64_t lo = pts.front().y - pts.front().x;
  std::int64_t hi = lo;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    lo = std::min(lo, pts[i].y - pts[i].x);
    hi = std::max(hi, pts[i].y - pts[i].x);
    pts.push_back(drop(pts[i]));
  }
  if (lo <= 0 && hi >= 0) pts.push_back({0, 0});
  LatticePolygon out = convex_hull(std::move(pts));
  for (const auto& v : out.vertices) {
    if (v.x < 0 || v.y < 0) throw InvariantViolation("NTP vertex outside the first quadrant");
  }
  return out;
}

RoofChain roof_of_points(std::vector<Point> pts) {
  if (pts.empty()) throw std::invalid_argument("roof of zero");
  const LatticePolygon hull = convex_hull(std::move(pts));
  const auto& v = hull.vertices;
  std::size_t start = 0;
  std::size_t end = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const auto a = v[i].x - v[i].y;
    const auto b = v[start].x - v[start].y;
    if (a > b || (a == b && v[i].y > v[start].y)) start = i;
    const auto c = v[i].y - v[i].x;
    const auto e = v[end].y - v[end].x;
    if (c > e || (c == e && v[i].x > v[end].x)) end = i;
  }
  RoofChain out;
  for (std::size_t i = start;; i = (i + 1) % v.size()) {
    out.points.push_back(v[i]);
    if (i == end) break;
  }
  return out;
}

Point outward_normal(const Point& a, const Point& b) {
  return primitive({b.y - a.y, -(b.x - a.x)});
}

}  // namespace

Point primitive(const Point& p) {
  const std::int64_t g = std::gcd(p.x, p.y);
  if (g == 0) return p;
  return {p.x / g, p.y / g};
}

LatticePolygon convex_hull(std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull of an empty set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() == 1) return {points};

  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  const auto turn = [](const Point& o, const Point& a, const Point& b) {
    return cross({a.x - o.x, a.y - o.y}, {b.x - o.x, b.y - o.y});
  };
  for (const auto& p : points) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return {hull};
}

std::vector<Point> support_points(const BiPoly& f) {
  std::vector<Point> out;
  for (const auto& [m, c] : f) out.push_back({m.x, m.y});
  return out;
}

std::vector<Point> support_points(const WeylElement& z) { return support_points(phi(z)); }

LatticePolygon ntp(const WeylElement& z) { return swept_hull(support_points(z)); }

RoofChain roof(const WeylElement& z) { return roof_of_points(support_points(z)); }
RoofChain roof(const BiPoly& f) { return roof_of_points(support_points(f)); }

LatticePolygon ntp_from_roof(const RoofChain& r) { return swept_hull(r.points); }

std::vector<Direction> fan_directions(const RoofChain& r) {
  const auto& pts = r.points;
  if (pts.empty()) throw std::invalid_argument("fan of an empty roof");
  if (pts.size() == 1) return {Direction(1, 1)};
  std::vector<Point> normals;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) normals.push_back(outward_normal(pts[i], pts[i + 1]));

  std::vector<Direction> out;
  for (const auto& n : normals) out.emplace_back(n.x, n.y);
  out.emplace_back(1 + normals.front().x, -1 + normals.front().y);
  for (std::size_t i = 1; i < normals.size(); ++i) {
    out.emplace_back(normals[i - 1].x + normals[i].x, normals[i - 1].y + normals[i].y);
  }
  out.emplace_back(normals.back().x - 1, normals.back().y + 1);
  return out;
}

ConeSector cone_of(const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("cone of an empty set");
  ConeSector out;
  bool any = false;
  for (const auto& raw : points) {
    if (raw.x < 0 || raw.y < 0) throw std::invalid_argument("cone point outside the first quadrant");
    if (raw.x == 0 && raw.y == 0) continue;
    const Point p = primitive(raw);
    if (!any) {
      out.first = out.second = p;
      any = true;
      continue;
    }
    if (cross(p, out.first) > 0) out.first = p;
    if (cross(out.second, p) > 0) out.second = p;
  }
  if (!any) return out;
  out.kind = out.first == out.second ? ConeKind::Ray : ConeKind::Sector;
  return out;
}

ConeSector cone_of(const RoofChain& r) { return cone_of(r.points); }

bool contains(const ConeSector& cone, const Point& p) {
  if (p.x == 0 && p.y == 0) return true;
  switch (cone.kind) {
    case ConeKind::Origin:
      return false;
    case ConeKind::Ray:
      return cross(cone.first, p) == 0 && cone.first.x * p.x + cone.first.y * p.y > 0;
    case ConeKind::Sector:
      // Sectors are narrower than a half-plane, so the bisector separates p from -p.
      return cross(cone.first, p) >= 0 && cross(p, cone.second) >= 0 &&
             (cone.first.x + cone.second.x) * p.x + (cone.first.y + cone.second.y) * p.y > 0;
  }
  return false;
}

namespace {

GeometryEquiv evaluate_equiv(const WeylElement& z, bool plus) {
  if (z.is_zero()) throw std::invalid_argument("grading_geometry_equiv of zero");
  const auto inside = [plus](const Point& p) { return plus ? p.y >= p.x : p.x >= p.y; };
  const auto all_inside = [&](const std::vector<Point>& pts) {
    return std::all_of(pts.begin(), pts.end(), inside);
  };
  GeometryEquiv out{};
  out.grading = plus ? in_D_geq(z, 0) : in_D_leq(z, 0);
  out.support = all_inside(support_points(z));
  const RoofChain r = roof(z);
  out.roof = all_inside(r.points);
  const ConeSector c = cone_of(r);
  out.cone = c.kind == ConeKind::Origin || (inside(c.first) && inside(c.second));
  out.ntp = all_inside(ntp(z).vertices);
  if (!out.all_agree()) throw InvariantViolation("grading/geometry predicates disagree");
  return out;
}

}  // namespace

GeometryEquiv grading_geometry_equiv(const WeylElement& z) { return evaluate_equiv(z, true); }
GeometryEquiv grading_geometry_equiv_minus(const WeylElement& z) { return evaluate_equiv(z, false); }

std::optional<std::int64_t> diagonal_vertex(const WeylElement& z) {
  for (const auto& v : ntp(z).vertices) {
    if (v.x == v.y && v.x >= 1) return v.x;
  }
  return std::nullopt;
}

}  // namespace weyl
