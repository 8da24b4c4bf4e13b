#include "frobcf/sail.hpp"

#include "frobcf/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace frobcf {

namespace {

using i128 = __int128;
using Wide = std::array<i128, 3>;

Wide widen(const Vec3& v) { return {v[0], v[1], v[2]}; }

Wide cross(const Wide& a, const Wide& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

i128 dot(const Wide& a, const Wide& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

i128 det3(const Wide& a, const Wide& b, const Wide& c) { return dot(a, cross(b, c)); }

int sign128(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

long dotl(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 narrow(const Wide& w) {
  for (const auto& x : w)
    if (x > (i128(1) << 62) || x < -(i128(1) << 62)) throw IntegrityError("sail coordinate overflow");
  return {static_cast<long>(w[0]), static_cast<long>(w[1]), static_cast<long>(w[2])};
}

Vec3 primitive(Vec3 v) {
  const long g = std::gcd(std::gcd(std::labs(v[0]), std::labs(v[1])), std::labs(v[2]));
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

FieldPoly poly_mul(const std::array<Int, 2>& a, const std::array<Int, 2>& b) {
  return {a[0] * b[0], a[0] * b[1] + a[1] * b[0], a[1] * b[1]};
}

FieldPoly poly_sub(const FieldPoly& a, const FieldPoly& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

bool is_zero(const FieldPoly& p) { return sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0; }

FieldPoly combine(const std::array<FieldPoly, 3>& v, const Vec3& p) {
  FieldPoly g{0, 0, 0};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) g[k] += v[j][k] * p[j];
  return g;
}

long double eval_ld(const FieldPoly& p, long double t) {
  return (p[2].get_d() * t + p[1].get_d()) * t + p[0].get_d();
}

}  // namespace

const std::array<ConeSigns, 4>& cone_classes() {
  static const std::array<ConeSigns, 4> classes{{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1}}};
  return classes;
}

int EigenCone::side(int i, const Vec3& p) const { return roots[i].sign(combine(left, p)); }

bool EigenCone::contains(const Vec3& p) const {
  for (int i = 0; i < 3; ++i)
    if (side(i, p) != signs[i]) return false;
  return true;
}

int EigenCone::functional_sign(int i, const Vec3& n) const {
  return orientation[i] * roots[i].sign(combine(right, n));
}

bool EigenCone::region_in_box(const Vec3& n, long h, long r) const {
  for (int i = 0; i < 3; ++i) {
    if (functional_sign(i, n) <= 0) return false;
    const FieldPoly nv = combine(right, n);
    for (int j = 0; j < 3; ++j)
      for (int s : {-1, 1}) {
        FieldPoly g;
        for (int k = 0; k < 3; ++k) g[k] = orientation[i] * (r * nv[k] + s * h * right[j][k]);
        if (roots[i].sign(g) <= 0) return false;
      }
  }
  return true;
}

std::array<double, 3> EigenCone::coordinates(const std::array<double, 3>& p) const {
  std::array<double, 3> x;
  for (int i = 0; i < 3; ++i) {
    double num = 0, den = 0;
    for (int j = 0; j < 3; ++j) {
      num += w_approx[i][j] * p[j];
      den += w_approx[i][j] * v_approx[i][j];
    }
    x[i] = num / den;
  }
  return x;
}

EigenCone eigen_cone(const IntMatrix& c, const ConeSigns& signs) {
  if (c.dim() != 3 || !is_hyperbolic(c)) throw InputError("eigen-cones need a matrix in H(3,Z)");
  EigenCone k;
  k.c = c;
  const CharCubic chi = char_cubic(c);
  k.f = MonicCubic{{-chi.a3, chi.a2, -chi.a1}};
  k.roots = isolate_real_roots(k.f, 48);
  // adj(C - tE), entries of degree <= 2 in t
  std::array<std::array<std::array<Int, 2>, 3>, 3> d;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d[i][j] = {c(i, j), Int(i == j ? -1 : 0)};
  std::array<std::array<FieldPoly, 3>, 3> adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj[i][j] = poly_sub(poly_mul(d[r0][c0], d[r1][c1]), poly_mul(d[r0][c1], d[r1][c0]));
    }
  bool have_left = false, have_right = false;
  for (int r = 0; r < 3 && !have_left; ++r)
    if (!is_zero(adj[r][0]) || !is_zero(adj[r][1]) || !is_zero(adj[r][2])) {
      k.left = adj[r];
      have_left = true;
    }
  for (int s = 0; s < 3 && !have_right; ++s)
    if (!is_zero(adj[0][s]) || !is_zero(adj[1][s]) || !is_zero(adj[2][s])) {
      k.right = {adj[0][s], adj[1][s], adj[2][s]};
      have_right = true;
    }
  if (!have_left || !have_right) throw IntegrityError("adjugate of C - tE vanishes");
  k.signs = signs;
  for (int i = 0; i < 3; ++i) {
    // w_i . v_i as an element of the field
    FieldPoly pairing{0, 0, 0};
    for (int j = 0; j < 3; ++j) {
      const FieldPoly t = k.f.multiply(k.left[j], k.right[j]);
      for (int m = 0; m < 3; ++m) pairing[m] += t[m];
    }
    const int s = k.roots[i].sign(pairing);
    if (s == 0) throw IntegrityError("left and right eigenvectors are orthogonal");
    k.orientation[i] = signs[i] * s;
    const long double l = k.roots[i].approx();
    // the root is within 2^-precision of l, allowing for the rounding of approx()
    const long double width = std::ldexp(1.0L, -k.roots[i].precision()) + 2e-16L * std::fabs(l);
    const long double al = std::fabs(l) + width;
    for (int j = 0; j < 3; ++j) {
      k.w_approx[i][j] = static_cast<double>(eval_ld(k.left[j], l));
      const FieldPoly& w = k.left[j];
      const long double deriv = 2 * std::fabs(w[2].get_d()) * al + std::fabs(w[1].get_d());
      const long double size = std::fabs(w[2].get_d()) * al * al + std::fabs(w[1].get_d()) * al + std::fabs(w[0].get_d());
      k.w_error[i][j] = static_cast<double>(deriv * width + 1e-15L * size);
      k.v_approx[i][j] = static_cast<double>(k.orientation[i] * eval_ld(k.right[j], l));
    }
  }
  return k;
}

EigenCone eigen_cone(const IntMatrix& c) {
  EigenCone probe = eigen_cone(c, {1, 1, 1});
  ConeSigns s;
  for (int i = 0; i < 3; ++i) {
    s[i] = probe.side(i, {0, 0, 1});
    if (s[i] == 0) throw IntegrityError("(0,0,1) lies on an eigenplane");
  }
  return eigen_cone(c, s);
}

std::size_t SailComplex::stable_count() const {
  return static_cast<std::size_t>(std::count_if(faces.begin(), faces.end(), [](const SailFace& f) { return f.stable; }));
}

namespace {

bool in_cone(const EigenCone& cone, const Vec3& p) {
  // numeric sign well away from the eigenplanes, exact otherwise
  for (int i = 0; i < 3; ++i) {
    double v = 0, err = 0;
    for (int j = 0; j < 3; ++j) {
      v += cone.w_approx[i][j] * p[j];
      err += (cone.w_error[i][j] + 4e-16 * std::fabs(cone.w_approx[i][j])) * std::labs(p[j]);
    }
    if (std::fabs(v) > 2 * err) {
      if ((v > 0 ? 1 : -1) != cone.signs[i]) return false;
    } else if (cone.side(i, p) != cone.signs[i]) {
      return false;
    }
  }
  return true;
}

std::vector<Vec3> cone_points(const EigenCone& cone, long r) {
  // one slab per x value; concatenation keeps the order fixed
  const auto slabs = parallel_map(static_cast<std::size_t>(2 * r + 1), default_workers(), [&](std::size_t i) {
    const long x = static_cast<long>(i) - r;
    std::vector<Vec3> out;
    for (long y = -r; y <= r; ++y)
      for (long z = -r; z <= r; ++z) {
        if (std::gcd(std::gcd(std::labs(x), std::labs(y)), std::labs(z)) != 1) continue;
        const Vec3 p{x, y, z};
        if (in_cone(cone, p)) out.push_back(p);
      }
    return out;
  });
  std::vector<Vec3> out;
  for (const auto& s : slabs) out.insert(out.end(), s.begin(), s.end());
  return out;
}

// Rotates the plane through `a` containing direction e and the reference
// ray r, toward the side where det(e, r, .) has sign s0, until it touches
// the last point. Returns that point minus a.
Wide pivot(const std::vector<Vec3>& pts, const Vec3& a, const Wide& e, const Wide& r, int s0) {
  Wide best = r;
  for (const auto& q : pts) {
    const Wide d = widen(sub(q, a));
    if (sign128(det3(e, best, d)) == s0) best = d;
  }
  if (best == r) throw RadiusTooSmall("no cone point off the pivot plane; increase radius");
  return best;
}

// Orientation of a plane through a with normal n so that the point set lies
// on the nonnegative side.
Wide orient(const std::vector<Vec3>& pts, const Vec3& a, Wide n) {
  for (const auto& q : pts) {
    const i128 v = dot(n, widen(sub(q, a)));
    if (v != 0) return v > 0 ? n : Wide{-n[0], -n[1], -n[2]};
  }
  throw RadiusTooSmall("all cone points are coplanar; increase radius");
}

std::vector<Vec3> on_plane(const std::vector<Vec3>& pts, const Vec3& n, long h) {
  std::vector<Vec3> out;
  for (const auto& q : pts) {
    const long v = dotl(n, q);
    if (v < h) throw IntegrityError("point below a supporting plane");
    if (v == h) out.push_back(q);
  }
  return out;
}

bool collinear(const std::vector<Vec3>& s) {
  for (std::size_t i = 2; i < s.size(); ++i) {
    const Wide c = cross(widen(sub(s[1], s[0])), widen(sub(s[i], s[0])));
    if (c != Wide{0, 0, 0}) return false;
  }
  return true;
}

// Convex polygon of coplanar points, cyclic order, no collinear vertices.
std::vector<Vec3> polygon(std::vector<Vec3> s, const Vec3& n) {
  int drop = 0;
  for (int k = 1; k < 3; ++k)
    if (std::labs(n[k]) > std::labs(n[drop])) drop = k;
  const int u = (drop + 1) % 3, v = (drop + 2) % 3;
  std::sort(s.begin(), s.end(), [&](const Vec3& a, const Vec3& b) {
    return std::tie(a[u], a[v]) < std::tie(b[u], b[v]);
  });
  auto turn = [&](const Vec3& o, const Vec3& a, const Vec3& b) {
    return (a[u] - o[u]) * (b[v] - o[v]) - (a[v] - o[v]) * (b[u] - o[u]);
  };
  std::vector<Vec3> hull(2 * s.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], s[i]) <= 0) --k;
    hull[k++] = s[i];
  }
  for (std::size_t i = s.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && turn(hull[k - 2], hull[k - 1], s[i]) <= 0) --k;
    hull[k++] = s[i];
  }
  hull.resize(k - 1);
  return hull;
}

long lattice_area(const std::vector<Vec3>& poly) {
  long area = 0;
  for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
    const Wide c = cross(widen(sub(poly[k], poly[0])), widen(sub(poly[k + 1], poly[0])));
    const Vec3 cv = narrow(c);
    area += std::gcd(std::gcd(std::labs(cv[0]), std::labs(cv[1])), std::labs(cv[2]));
  }
  return area;
}

std::optional<SailFace> make_face(const EigenCone& cone, const std::vector<Vec3>& pts, const Wide& normal,
                                  const Vec3& anchor, long radius) {
  SailFace f;
  f.normal = primitive(narrow(normal));
  f.height = dotl(f.normal, anchor);
  if (f.height <= 0) return std::nullopt;
  f.points = on_plane(pts, f.normal, f.height);
  if (f.points.size() < 3 || collinear(f.points)) throw IntegrityError("degenerate sail face");
  std::sort(f.points.begin(), f.points.end());
  f.vertices = polygon(f.points, f.normal);
  f.neighbors.assign(f.vertices.size(), -1);
  f.area = lattice_area(f.vertices);
  f.stable = cone.region_in_box(f.normal, f.height, radius);
  return f;
}

std::vector<Vec3> face_key(const SailFace& f) {
  std::vector<Vec3> k = f.vertices;
  std::sort(k.begin(), k.end());
  return k;
}

// Integer functional positive on the cone, near its axis.
Vec3 axis_functional(const EigenCone& cone, long scale) {
  std::array<double, 3> s{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    double norm = 0;
    for (double w : cone.w_approx[i]) norm += w * w;
    norm = std::sqrt(norm);
    for (int j = 0; j < 3; ++j) s[j] += cone.signs[i] * cone.w_approx[i][j] / norm;
  }
  Vec3 n;
  for (int j = 0; j < 3; ++j) n[j] = std::lround(s[j] * scale);
  return n;
}

SailFace initial_face(const EigenCone& cone, const std::vector<Vec3>& pts, long radius) {
  Vec3 n0{};
  bool ok = false;
  for (long scale = 1000; scale <= 1000000000L && !ok; scale *= 10) {
    n0 = axis_functional(cone, scale);
    ok = true;
    for (int i = 0; i < 3; ++i) ok = ok && cone.functional_sign(i, n0) > 0;
  }
  if (!ok) throw IntegrityError("no integral functional positive on the cone");
  // unique minimiser, perturbing deterministically on ties
  Vec3 v0{};
  for (long t = 0;; ++t) {
    long best = 0;
    int count = 0;
    for (const auto& p : pts) {
      const long v = dotl(n0, p);
      if (count == 0 || v < best) {
        best = v;
        count = 1;
        v0 = p;
      } else if (v == best) {
        ++count;
      }
    }
    if (count == 1) break;
    if (t > 50) throw IntegrityError("could not isolate a sail vertex");
    const Vec3 trial{n0[0] * 64 + 1, n0[1] * 64 + (t % 5) + 2, n0[2] * 64 + (t % 7) + 3};
    bool pos = true;
    for (int i = 0; i < 3; ++i) pos = pos && cone.functional_sign(i, trial) > 0;
    if (pos) n0 = trial;
    else n0 = {n0[0] * 2 + 1, n0[1] * 2, n0[2] * 2};
  }
  const Wide wn0 = widen(n0);
  int k = 0;
  for (int j = 1; j < 3; ++j)
    if (std::labs(n0[j]) < std::labs(n0[k])) k = j;
  Wide ek{0, 0, 0};
  ek[k] = 1;
  const Wide d = cross(wn0, ek);
  const Wide r = cross(wn0, d);
  const Wide b1 = pivot(pts, v0, d, r, sign128(det3(d, r, wn0)));
  const Wide n1 = orient(pts, v0, cross(d, b1));
  const Vec3 n1p = primitive(narrow(n1));
  const auto s1 = on_plane(pts, n1p, dotl(n1p, v0));
  Wide normal = n1;
  if (s1.size() < 3 || collinear(s1)) {
    Vec3 far = v0;
    for (const auto& q : s1)
      if (q != v0) far = q;
    const Wide e2 = widen(primitive(sub(far, v0)));
    const Wide r2 = cross(widen(n1p), e2);
    const Wide b2 = pivot(pts, v0, e2, r2, sign128(det3(e2, r2, widen(n1p))));
    normal = orient(pts, v0, cross(e2, b2));
  }
  auto f = make_face(cone, pts, normal, v0, radius);
  if (!f) throw RadiusTooSmall("initial hull face passes through the origin; increase radius");
  return *f;
}

}  // namespace

SailComplex compute_sail(const EigenCone& cone, long radius, std::size_t max_faces) {
  if (radius < 1 || radius > kMaxRadius)
    throw InputError("radius must lie in [1, " + std::to_string(kMaxRadius) + "]");
  const std::vector<Vec3> pts = cone_points(cone, radius);
  if (pts.size() < 4) throw RadiusTooSmall("too few lattice points in the cone; increase radius");
  SailComplex cx;
  cx.radius = radius;
  cx.point_count = pts.size();
  std::map<std::vector<Vec3>, int> index;
  cx.faces.push_back(initial_face(cone, pts, radius));
  index[face_key(cx.faces[0])] = 0;
  std::deque<int> queue;
  if (cx.faces[0].stable) queue.push_back(0);
  while (!queue.empty()) {
    const int fi = queue.front();
    queue.pop_front();
    const std::size_t m = cx.faces[fi].vertices.size();
    for (std::size_t k = 0; k < m; ++k) {
      if (cx.faces[fi].neighbors[k] >= 0) continue;
      const SailFace& f = cx.faces[fi];
      const Vec3 a = f.vertices[k], b = f.vertices[(k + 1) % m], c = f.vertices[(k + 2) % m];
      const Wide e = widen(sub(b, a)), r = widen(sub(c, a)), n = widen(f.normal);
      const Wide best = pivot(pts, a, e, r, sign128(det3(e, r, n)));
      Wide nn = cross(e, best);
      if (dot(nn, widen(sub(c, a))) < 0) nn = {-nn[0], -nn[1], -nn[2]};
      auto g = make_face(cone, pts, nn, a, radius);
      if (!g) continue;
      const auto key = face_key(*g);
      auto it = index.find(key);
      int gi;
      if (it == index.end()) {
        if (cx.faces.size() >= max_faces) continue;
        gi = static_cast<int>(cx.faces.size());
        index[key] = gi;
        const bool stable = g->stable;
        cx.faces.push_back(std::move(*g));
        if (stable) queue.push_back(gi);
      } else {
        gi = it->second;
      }
      cx.faces[fi].neighbors[k] = gi;
    }
  }
  return cx;
}

}  // namespace frobcf
