#include "spectile/geometry.hpp"

#include "spectile/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spectile::geometry {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

Rational cross2(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Point cross3(const Point& u, const Point& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

// det(b-a, c-a, d-a); positive when d sees (a,b,c) counterclockwise.
Rational orient3(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Point n = cross3(sub(b, a), sub(c, a));
  return dot(n, sub(d, a));
}

// Scale to a primitive integer normal, preserving direction.
Halfspace make_halfspace(Point n, const Point& on_plane) {
  Int mult = 1;
  for (const Rational& x : n) mult = lcm(mult, denominator(x));
  Int g = 0;
  std::vector<Int> in(n.size());
  for (size_t i = 0; i < n.size(); ++i) {
    in[i] = numerator(Rational(n[i] * mult));
    g = gcd(g, in[i]);
  }
  if (g == 0) throw Error("zero facet normal");
  Point prim(n.size());
  for (size_t i = 0; i < n.size(); ++i) prim[i] = Rational(in[i] / g);
  Rational off = dot(prim, on_plane);
  return Halfspace{std::move(prim), std::move(off)};
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

void dedupe_points(std::vector<Point>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Andrew monotone chain; returns extreme points in CCW order.
std::vector<Point> hull_ring_2d(std::vector<Point> pts) {
  dedupe_points(pts);
  const size_t n = pts.size();
  if (n < 3) throw DegenerateBody("2d hull needs 3 affinely independent points");
  std::vector<Point> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) throw DegenerateBody("points are collinear");
  return h;
}

struct TriFace {
  int a, b, c;
  Point n;        // outward
  Rational off;   // <n, x> <= off on the hull
  bool alive = true;
};

TriFace make_face(int ia, int ib, int ic, const std::vector<Point>& pts,
                  const Point& interior) {
  Point n = cross3(sub(pts[ib], pts[ia]), sub(pts[ic], pts[ia]));
  Rational off = dot(n, pts[ia]);
  if (dot(n, interior) > off) {
    std::swap(ib, ic);
    n = negate(n);
    off = -off;
  }
  return TriFace{ia, ib, ic, std::move(n), std::move(off), true};
}

// Incremental 3d hull with exact predicates. Points must be deduplicated.
// Returned faces are outward-oriented triangles over point indices.
std::vector<TriFace> hull_faces_3d(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw DegenerateBody("3d hull needs 4 affinely independent points");

  // Initial affinely independent quadruple.
  const int i0 = 0;
  const int i1 = 1;  // deduped, so pts[1] != pts[0]
  int i2 = -1;
  for (int i = 2; i < n; ++i) {
    Point cr = cross3(sub(pts[i1], pts[i0]), sub(pts[i], pts[i0]));
    if (cr[0] != 0 || cr[1] != 0 || cr[2] != 0) {
      i2 = i;
      break;
    }
  }
  if (i2 < 0) throw DegenerateBody("points are collinear");
  int i3 = -1;
  for (int i = 2; i < n; ++i) {
    if (i == i2) continue;
    if (orient3(pts[i0], pts[i1], pts[i2], pts[i]) != 0) {
      i3 = i;
      break;
    }
  }
  if (i3 < 0) throw DegenerateBody("points are coplanar");

  Point interior(3, Rational(0));
  for (int i : {i0, i1, i2, i3}) interior = add(interior, pts[i]);
  interior = scale_point(interior, Rational(1, 4));

  std::vector<TriFace> faces;
  faces.push_back(make_face(i0, i1, i2, pts, interior));
  faces.push_back(make_face(i0, i1, i3, pts, interior));
  faces.push_back(make_face(i0, i2, i3, pts, interior));
  faces.push_back(make_face(i1, i2, i3, pts, interior));

  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<int> visible;
    for (size_t f = 0; f < faces.size(); ++f) {
      if (faces[f].alive && dot(faces[f].n, pts[p]) > faces[f].off)
        visible.push_back(static_cast<int>(f));
    }
    if (visible.empty()) continue;  // inside or on the current hull

    std::set<std::pair<int, int>> vis_edges;
    for (int f : visible) {
      const TriFace& t = faces[f];
      vis_edges.insert({t.a, t.b});
      vis_edges.insert({t.b, t.c});
      vis_edges.insert({t.c, t.a});
    }
    for (int f : visible) faces[f].alive = false;
    for (const auto& [u, v] : vis_edges) {
      if (vis_edges.count({v, u})) continue;  // internal to the visible patch
      faces.push_back(make_face(u, v, p, pts, interior));
    }
  }

  std::vector<TriFace> alive;
  for (auto& f : faces)
    if (f.alive) alive.push_back(std::move(f));
  return alive;
}

std::vector<Halfspace> dedupe_planes(const std::vector<TriFace>& faces,
                                     const std::vector<Point>& pts) {
  std::vector<Halfspace> planes;
  planes.reserve(faces.size());
  for (const auto& f : faces) planes.push_back(make_halfspace(f.n, pts[f.a]));
  std::sort(planes.begin(), planes.end(), halfspace_less);
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
  return planes;
}

// A surface point is a vertex exactly when its tight facet normals span R^3.
std::vector<Point> extreme_points_3d(const std::vector<TriFace>& faces,
                                     const std::vector<Halfspace>& planes,
                                     const std::vector<Point>& pts) {
  std::set<int> on_surface;
  for (const auto& f : faces) {
    on_surface.insert(f.a);
    on_surface.insert(f.b);
    on_surface.insert(f.c);
  }
  std::vector<Point> extreme;
  for (int idx : on_surface) {
    std::vector<Point> tight;
    for (const auto& pl : planes) {
      if (dot(pl.normal, pts[idx]) == pl.offset) tight.push_back(pl.normal);
    }
    if (tight.size() < 3) continue;
    Mat m(static_cast<int>(tight.size()), 3);
    for (size_t r = 0; r < tight.size(); ++r)
      for (int c = 0; c < 3; ++c) m.at(static_cast<int>(r), c) = tight[r][c];
    if (rank(m) == 3) extreme.push_back(pts[idx]);
  }
  return extreme;
}

int index_of(const std::vector<Point>& sorted, const Point& p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p, lex_less);
  return static_cast<int>(it - sorted.begin());
}

Rational shoelace_area(const std::vector<Point>& ring) {
  Rational acc(0);
  const size_t n = ring.size();
  if (n < 3) return acc;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    acc += a[0] * b[1] - b[0] * a[1];
  }
  return acc / 2;
}

}  // namespace

const std::vector<std::vector<int>>& Polytope::simplices() const {
  if (simplices_.empty() && dim_ > 3)
    throw UnsupportedDimension("no triangulation stored for d > 3 boxes");
  return simplices_;
}

const std::vector<int>& Polytope::ring() const {
  if (dim_ != 2) throw UnsupportedDimension("vertex ring is 2d only");
  return ring_;
}

Polytope Polytope::build_reduced(int dim, std::vector<Point> extreme_points) {
  Polytope p;
  p.dim_ = dim;
  p.kind_ = Kind::General;

  if (dim == 1) {
    p.vertices_ = std::move(extreme_points);
    const Point& lo = p.vertices_[0];
    const Point& hi = p.vertices_[1];
    p.facets_ = {Halfspace{{Rational(-1)}, -lo[0]}, Halfspace{{Rational(1)}, hi[0]}};
    p.simplices_ = {{0, 1}};
    p.volume_ = hi[0] - lo[0];
    p.centroid_ = {(lo[0] + hi[0]) / 2};
    return p;
  }

  if (dim == 2) {
    std::vector<Point> ring_pts = std::move(extreme_points);  // CCW already
    p.vertices_ = ring_pts;
    std::sort(p.vertices_.begin(), p.vertices_.end(), lex_less);
    const int n = static_cast<int>(ring_pts.size());
    // Rotate the cycle to start at the lex-min vertex.
    int start = 0;
    for (int i = 1; i < n; ++i)
      if (lex_less(ring_pts[i], ring_pts[start])) start = i;
    p.ring_.resize(n);
    for (int i = 0; i < n; ++i)
      p.ring_[i] = index_of(p.vertices_, ring_pts[(start + i) % n]);

    for (int i = 0; i < n; ++i) {
      const Point& a = ring_pts[i];
      const Point& b = ring_pts[(i + 1) % n];
      Point nrm = {b[1] - a[1], a[0] - b[0]};
      p.facets_.push_back(make_halfspace(std::move(nrm), a));
    }
    std::sort(p.facets_.begin(), p.facets_.end(), halfspace_less);

    // Fan triangulation from the canonical first vertex.
    const auto& rg = p.ring_;
    Rational vol(0);
    Point cen(2, Rational(0));
    for (int i = 1; i + 1 < n; ++i) {
      p.simplices_.push_back({rg[0], rg[i], rg[i + 1]});
      const Rational tri = cross2(p.vertices_[rg[0]], p.vertices_[rg[i]],
                                  p.vertices_[rg[i + 1]]) /
                           2;
      vol += tri;
      Point c = p.vertices_[rg[0]];
      c = add(c, p.vertices_[rg[i]]);
      c = add(c, p.vertices_[rg[i + 1]]);
      cen = add(cen, scale_point(c, tri / 3));
    }
    p.volume_ = vol;
    p.centroid_ = scale_point(cen, Rational(1) / vol);
    return p;
  }

  // dim == 3: callers pass extreme points; rebuild faces over them.
  auto faces = hull_faces_3d(extreme_points);
  p.vertices_ = std::move(extreme_points);  // already lex-sorted by caller
  p.facets_ = dedupe_planes(faces, p.vertices_);

  Rational vol(0);
  Point cen(3, Rational(0));
  for (const auto& f : faces) {
    if (f.a == 0 || f.b == 0 || f.c == 0) continue;
    const Rational v6 = orient3(p.vertices_[0], p.vertices_[f.a],
                                p.vertices_[f.b], p.vertices_[f.c]);
    if (v6 == 0) continue;
    // Outward faces keep the fan volumes nonnegative.
    p.simplices_.push_back({0, f.a, f.b, f.c});
    const Rational tv = v6 / 6;
    vol += tv;
    Point c = p.vertices_[0];
    c = add(c, p.vertices_[f.a]);
    c = add(c, p.vertices_[f.b]);
    c = add(c, p.vertices_[f.c]);
    cen = add(cen, scale_point(c, tv / 4));
  }
  if (vol <= 0) throw DegenerateBody("zero volume hull");
  p.volume_ = vol;
  p.centroid_ = scale_point(cen, Rational(1) / vol);
  return p;
}

Polytope Polytope::hull(int dim, std::vector<Point> points) {
  if (dim < 1) throw DimensionMismatch("dimension must be positive");
  if (points.empty()) throw DegenerateBody("no points");
  for (const auto& pt : points)
    if (static_cast<int>(pt.size()) != dim)
      throw DimensionMismatch("point arity does not match dimension");
  if (dim > 3)
    throw UnsupportedDimension("general hulls are supported for d <= 3");

  dedupe_points(points);

  if (dim == 1) {
    if (points.size() < 2) throw DegenerateBody("1d hull needs two distinct points");
    return build_reduced(1, {points.front(), points.back()});
  }
  if (dim == 2) {
    return build_reduced(2, hull_ring_2d(std::move(points)));
  }

  auto faces = hull_faces_3d(points);
  auto planes = dedupe_planes(faces, points);
  auto extreme = extreme_points_3d(faces, planes, points);
  std::sort(extreme.begin(), extreme.end(), lex_less);
  return build_reduced(3, std::move(extreme));
}

Polytope Polytope::box(Point lo, Point hi) {
  const int d = static_cast<int>(lo.size());
  if (d < 1 || hi.size() != lo.size()) throw DimensionMismatch("box corners");
  for (int i = 0; i < d; ++i)
    if (lo[i] >= hi[i]) throw DegenerateBody("box needs lo < hi on every axis");

  if (d <= 3) {
    std::vector<Point> corners;
    for (int mask = 0; mask < (1 << d); ++mask) {
      Point c(d);
      for (int i = 0; i < d; ++i) c[i] = (mask >> i) & 1 ? hi[i] : lo[i];
      corners.push_back(std::move(c));
    }
    Polytope p = hull(d, std::move(corners));
    p.kind_ = Kind::AxisBox;
    return p;
  }

  if (d > 12) throw UnsupportedDimension("box vertex enumeration capped at d = 12");
  Polytope p;
  p.dim_ = d;
  p.kind_ = Kind::AxisBox;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Point c(d);
    for (int i = 0; i < d; ++i) c[i] = (mask >> i) & 1 ? hi[i] : lo[i];
    p.vertices_.push_back(std::move(c));
  }
  std::sort(p.vertices_.begin(), p.vertices_.end(), lex_less);
  Rational vol(1);
  Point cen(d);
  for (int i = 0; i < d; ++i) {
    vol *= hi[i] - lo[i];
    cen[i] = (lo[i] + hi[i]) / 2;
    Point n_hi(d, Rational(0)), n_lo(d, Rational(0));
    n_hi[i] = 1;
    n_lo[i] = -1;
    p.facets_.push_back(Halfspace{std::move(n_hi), hi[i]});
    p.facets_.push_back(Halfspace{std::move(n_lo), -lo[i]});
  }
  std::sort(p.facets_.begin(), p.facets_.end(), halfspace_less);
  p.volume_ = vol;
  p.centroid_ = std::move(cen);
  return p;
}

Polytope Polytope::simplex(std::vector<Point> vertices) {
  if (vertices.empty()) throw DegenerateBody("no vertices");
  const int d = static_cast<int>(vertices[0].size());
  if (static_cast<int>(vertices.size()) != d + 1)
    throw DimensionMismatch("simplex needs d+1 vertices");

  if (d <= 3) {
    Polytope p = hull(d, std::move(vertices));
    if (static_cast<int>(p.vertices_.size()) != d + 1)
      throw DegenerateBody("simplex vertices are affinely dependent");
    p.kind_ = Kind::Simplex;
    return p;
  }

  Mat edges(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) edges.at(i, j) = vertices[i + 1][j] - vertices[0][j];
  const Rational dt = det(edges);
  if (dt == 0) throw DegenerateBody("simplex vertices are affinely dependent");

  Polytope p;
  p.dim_ = d;
  p.kind_ = Kind::Simplex;
  p.vertices_ = std::move(vertices);
  std::sort(p.vertices_.begin(), p.vertices_.end(), lex_less);
  std::vector<int> all(d + 1);
  for (int i = 0; i <= d; ++i) all[i] = i;
  p.simplices_ = {all};
  p.volume_ = boost::multiprecision::abs(dt);
  for (int k = 2; k <= d; ++k) p.volume_ /= k;
  Point cen(d, Rational(0));
  for (const auto& v : p.vertices_) cen = add(cen, v);
  p.centroid_ = scale_point(cen, Rational(1, d + 1));

  // Facet opposite each vertex via an exact nullspace solve.
  for (int opp = 0; opp <= d; ++opp) {
    std::vector<int> face;
    for (int i = 0; i <= d; ++i)
      if (i != opp) face.push_back(i);
    Mat m(d - 1, d);
    for (int r = 1; r < d; ++r)
      for (int c = 0; c < d; ++c)
        m.at(r - 1, c) = p.vertices_[face[r]][c] - p.vertices_[face[0]][c];
    auto ns = nullspace(m);
    if (ns.size() != 1) throw DegenerateBody("degenerate simplex facet");
    Point n = ns[0];
    Rational off = dot(n, p.vertices_[face[0]]);
    if (dot(n, p.vertices_[opp]) > off) {
      n = negate(n);
      off = -off;
    }
    p.facets_.push_back(make_halfspace(std::move(n), p.vertices_[face[0]]));
  }
  std::sort(p.facets_.begin(), p.facets_.end(), halfspace_less);
  return p;
}

Polytope Polytope::unit_cube(int dim) {
  Point lo(dim, Rational(-1, 2)), hi(dim, Rational(1, 2));
  return box(std::move(lo), std::move(hi));
}

Box Polytope::bounding_box() const {
  Point lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_) {
    for (int i = 0; i < dim_; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  }
  return Box{std::move(lo), std::move(hi)};
}

bool Polytope::contains(const Point& p, bool strictly) const {
  if (static_cast<int>(p.size()) != dim_) throw DimensionMismatch("point arity");
  for (const auto& f : facets_) {
    const Rational v = dot(f.normal, p);
    if (strictly ? v >= f.offset : v > f.offset) return false;
  }
  return true;
}

Rational volume(const Polytope& p) { return p.volume(); }

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("minkowski_sum dimensions");
  if (p.kind() == Polytope::Kind::AxisBox && q.kind() == Polytope::Kind::AxisBox) {
    const Box bp = p.bounding_box(), bq = q.bounding_box();
    return Polytope::box(add(bp.lo, bq.lo), add(bp.hi, bq.hi));
  }
  if (p.dim() > 3)
    throw UnsupportedDimension("general minkowski sums are supported for d <= 3");
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return Polytope::hull(p.dim(), std::move(sums));
}

Polytope minkowski_sum(const Polytope& p, const Point& translate_by) {
  return translate(p, translate_by);
}

Polytope translate(const Polytope& p, const Point& t) {
  if (static_cast<int>(t.size()) != p.dim()) throw DimensionMismatch("translate arity");
  // Translation preserves the whole combinatorial structure; shift in place.
  Polytope r = p;
  for (auto& v : r.vertices_) v = add(v, t);
  for (auto& f : r.facets_) f.offset += dot(f.normal, t);
  r.centroid_ = add(r.centroid_, t);
  return r;
}

Polytope reflect(const Polytope& p, const Point& center) {
  if (static_cast<int>(center.size()) != p.dim())
    throw DimensionMismatch("reflect center arity");
  std::vector<Point> mapped;
  mapped.reserve(p.vertices().size());
  const Point twice_c = add(center, center);
  for (const auto& v : p.vertices()) mapped.push_back(sub(twice_c, v));
  if (p.kind() == Polytope::Kind::AxisBox) {
    Point lo = mapped[0], hi = mapped[0];
    for (const auto& v : mapped)
      for (int i = 0; i < p.dim(); ++i) {
        if (v[i] < lo[i]) lo[i] = v[i];
        if (v[i] > hi[i]) hi[i] = v[i];
      }
    return Polytope::box(std::move(lo), std::move(hi));
  }
  if (p.kind() == Polytope::Kind::Simplex && p.dim() > 3)
    return Polytope::simplex(std::move(mapped));
  return Polytope::hull(p.dim(), std::move(mapped));
}

Polytope scale(const Polytope& p, const Rational& rho, const Point& center) {
  if (rho <= 0) throw NonpositiveScale("scale factor must be positive");
  if (static_cast<int>(center.size()) != p.dim())
    throw DimensionMismatch("scale center arity");
  std::vector<Point> mapped;
  mapped.reserve(p.vertices().size());
  for (const auto& v : p.vertices())
    mapped.push_back(add(center, scale_point(sub(v, center), rho)));
  if (p.kind() == Polytope::Kind::AxisBox) {
    Point lo = mapped[0], hi = mapped.back();
    for (const auto& v : mapped)
      for (int i = 0; i < p.dim(); ++i) {
        if (v[i] < lo[i]) lo[i] = v[i];
        if (v[i] > hi[i]) hi[i] = v[i];
      }
    return Polytope::box(std::move(lo), std::move(hi));
  }
  if (p.kind() == Polytope::Kind::Simplex && p.dim() > 3)
    return Polytope::simplex(std::move(mapped));
  return Polytope::hull(p.dim(), std::move(mapped));
}

SymmetryReport symmetry_report(const Polytope& p) {
  // A convex body can only be symmetric about its centroid.
  const Point& c = p.centroid();
  const Point twice_c = add(c, c);
  std::vector<Point> mapped;
  mapped.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) mapped.push_back(sub(twice_c, v));
  std::sort(mapped.begin(), mapped.end(), lex_less);
  if (mapped == p.vertices()) return SymmetryReport{true, c};
  return SymmetryReport{false, std::nullopt};
}

std::vector<Point> clip_ring(const std::vector<Point>& ring, const Halfspace& h) {
  std::vector<Point> out;
  const size_t n = ring.size();
  out.reserve(n + 1);
  for (size_t i = 0; i < n; ++i) {
    const Point& a = ring[i];
    const Point& b = ring[(i + 1) % n];
    const Rational fa = h.offset - dot(h.normal, a);  // >= 0 means inside
    const Rational fb = h.offset - dot(h.normal, b);
    if (fa >= 0) out.push_back(a);
    if ((fa > 0 && fb < 0) || (fa < 0 && fb > 0)) {
      const Rational t = fa / (fa - fb);
      out.push_back(add(a, scale_point(sub(b, a), t)));
    }
  }
  return out;
}

namespace {

std::vector<Point> ring_points(const Polytope& p) {
  std::vector<Point> pts;
  pts.reserve(p.ring().size());
  for (int i : p.ring()) pts.push_back(p.vertices()[i]);
  return pts;
}

Rational clip_area_2d(const Polytope& subject, const std::vector<Halfspace>& clips) {
  std::vector<Point> poly = ring_points(subject);
  for (const auto& h : clips) {
    poly = clip_ring(poly, h);
    if (poly.size() < 3) return Rational(0);
  }
  return shoelace_area(poly);
}

// Vertex enumeration over combined facet planes (d == 3).
std::vector<Point> intersection_candidates_3d(const Polytope& p, const Polytope& q) {
  std::vector<Halfspace> planes = p.facets();
  planes.insert(planes.end(), q.facets().begin(), q.facets().end());
  std::sort(planes.begin(), planes.end(), halfspace_less);
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());

  const int m = static_cast<int>(planes.size());
  std::vector<Point> cands;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Mat A(3, 3);
        for (int c = 0; c < 3; ++c) {
          A.at(0, c) = planes[i].normal[c];
          A.at(1, c) = planes[j].normal[c];
          A.at(2, c) = planes[k].normal[c];
        }
        auto x = solve(A, {planes[i].offset, planes[j].offset, planes[k].offset});
        if (!x) continue;
        bool ok = true;
        for (const auto& pl : planes) {
          if (dot(pl.normal, *x) > pl.offset) {
            ok = false;
            break;
          }
        }
        if (ok) cands.push_back(std::move(*x));
      }
  dedupe_points(cands);
  return cands;
}

}  // namespace

std::optional<Polytope> intersection(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("intersection dimensions");
  const int d = p.dim();

  if (p.kind() == Polytope::Kind::AxisBox && q.kind() == Polytope::Kind::AxisBox) {
    const Box bp = p.bounding_box(), bq = q.bounding_box();
    Point lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
      lo[i] = std::max(bp.lo[i], bq.lo[i]);
      hi[i] = std::min(bp.hi[i], bq.hi[i]);
      if (lo[i] >= hi[i]) return std::nullopt;
    }
    return Polytope::box(std::move(lo), std::move(hi));
  }
  if (d > 3) throw UnsupportedDimension("general intersections are d <= 3");

  if (d == 1) {
    const Rational lo = std::max(p.vertices().front()[0], q.vertices().front()[0]);
    const Rational hi = std::min(p.vertices().back()[0], q.vertices().back()[0]);
    if (lo >= hi) return std::nullopt;
    return Polytope::hull(1, {{lo}, {hi}});
  }

  if (d == 2) {
    std::vector<Point> poly = ring_points(p);
    for (const auto& h : q.facets()) {
      poly = clip_ring(poly, h);
      if (poly.size() < 3) return std::nullopt;
    }
    if (shoelace_area(poly) == 0) return std::nullopt;
    return Polytope::hull(2, std::move(poly));
  }

  auto cands = intersection_candidates_3d(p, q);
  if (cands.size() < 4) return std::nullopt;
  try {
    return Polytope::hull(3, std::move(cands));
  } catch (const DegenerateBody&) {
    return std::nullopt;  // contact has zero volume
  }
}

Rational intersection_volume(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("intersection dimensions");
  const int d = p.dim();
  if (d == 2) return clip_area_2d(p, q.facets());
  auto r = intersection(p, q);
  return r ? r->volume() : Rational(0);
}

Rational overlap_volume_translated(const Polytope& h, const Point& x) {
  if (static_cast<int>(x.size()) != h.dim()) throw DimensionMismatch("overlap arity");
  const int d = h.dim();
  if (d == 1) {
    const Rational lo = h.vertices().front()[0];
    const Rational hi = h.vertices().back()[0];
    const Rational lo_shift = lo + x[0];
    const Rational hi_shift = hi + x[0];
    const Rational a = std::max(lo, lo_shift);
    const Rational b = std::min(hi, hi_shift);
    return b > a ? b - a : Rational(0);
  }
  if (d == 2) {
    // Clip H by the facets of H + x (offsets shift by <n, x>).
    std::vector<Point> poly = ring_points(h);
    for (const auto& f : h.facets()) {
      Halfspace shifted{f.normal, f.offset + dot(f.normal, x)};
      poly = clip_ring(poly, shifted);
      if (poly.size() < 3) return Rational(0);
    }
    return shoelace_area(poly);
  }
  return intersection_volume(h, translate(h, x));
}

Polytope difference_body(const Polytope& p) {
  const Point origin(p.dim(), Rational(0));
  return minkowski_sum(p, reflect(p, origin));
}

}  // namespace spectile::geometry
