#include "frobcf/sail.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace frobcf {

namespace {

using Real = long double;
using RVec = std::array<Real, 3>;

Real rdot(const RVec& a, const RVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// LLL on three real row vectors. `t` accumulates the integer transform.
void lll(std::array<RVec, 3>& b, std::array<std::array<long, 3>, 3>& t) {
  t = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  auto gram_schmidt = [&](std::array<RVec, 3>& bs, std::array<std::array<Real, 3>, 3>& mu) {
    for (int i = 0; i < 3; ++i) {
      bs[i] = b[i];
      for (int j = 0; j < i; ++j) {
        mu[i][j] = rdot(b[i], bs[j]) / rdot(bs[j], bs[j]);
        for (int k = 0; k < 3; ++k) bs[i][k] -= mu[i][j] * bs[j][k];
      }
    }
  };
  std::array<RVec, 3> bs;
  std::array<std::array<Real, 3>, 3> mu{};
  int k = 1;
  for (int guard = 0; k < 3; ++guard) {
    if (guard > 10000) throw IntegrityError("LLL did not terminate");
    gram_schmidt(bs, mu);
    for (int j = k - 1; j >= 0; --j) {
      const long q = std::lround(static_cast<double>(mu[k][j]));
      if (q == 0) continue;
      for (int m = 0; m < 3; ++m) {
        b[k][m] -= q * b[j][m];
        t[k][m] -= q * t[j][m];
      }
      gram_schmidt(bs, mu);
    }
    if (rdot(bs[k], bs[k]) >= (0.75L - mu[k][k - 1] * mu[k][k - 1]) * rdot(bs[k - 1], bs[k - 1])) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      std::swap(t[k], t[k - 1]);
      k = std::max(k - 1, 1);
    }
  }
}

std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm3(const std::array<double, 3>& a) { return std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]); }

struct Unit {
  IntMatrix x;
  std::array<double, 3> log{};
  double norm = 0;
};

}  // namespace

DirichletGroup dirichlet_generators(const IntMatrix& c, double max_exponent) {
  if (c.dim() != 3 || !is_hyperbolic(c)) throw InputError("unit group needs a matrix in H(3,Z)");
  const CommutantBasis basis = commutant_basis(c);
  const CharCubic chi = char_cubic(c);
  const auto roots = isolate_real_roots(MonicCubic{{-chi.a3, chi.a2, -chi.a1}}, 60);
  std::array<IntMatrix, 3> elems{basis.e, basis.a, basis.b};
  std::array<RVec, 3> emb;
  for (int k = 0; k < 3; ++k) {
    const PowerCoefficients p = express_in_powers(c, elems[k]);
    for (int i = 0; i < 3; ++i) {
      const Real l = roots[i].approx();
      emb[k][i] = (p.alpha.get_d() * l + p.beta.get_d()) * l + p.gamma.get_d();
    }
  }
  std::array<RVec, 3> red = emb;
  std::array<std::array<long, 3>, 3> t;
  lll(red, t);
  // inverse of the reduced matrix (rows are the vectors)
  const Real d = rdot(red[0], {red[1][1] * red[2][2] - red[1][2] * red[2][1], red[1][2] * red[2][0] - red[1][0] * red[2][2],
                               red[1][0] * red[2][1] - red[1][1] * red[2][0]});
  std::array<RVec, 3> inv;  // inv[i][k]: y = c R  =>  c_k = sum_i y_i inv[i][k]
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) {
      const int r0 = (k + 1) % 3, r1 = (k + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      inv[i][k] = (red[r0][c0] * red[r1][c1] - red[r0][c1] * red[r1][c0]) / d;
    }
  for (double expo = 1.5; expo <= max_exponent + 1e-9; expo += 0.5) {
    const Real y = std::exp(static_cast<Real>(expo));
    std::array<long, 2> bound;
    for (int k = 0; k < 2; ++k) {
      Real s = 0;
      for (int i = 0; i < 3; ++i) s += std::fabs(inv[i][k]);
      bound[k] = static_cast<long>(std::ceil(y * s)) + 1;
    }
    if (static_cast<double>(2 * bound[0] + 1) * (2 * bound[1] + 1) > 4e8)
      throw RadiusTooSmall("unit search box too large; the regulator exceeds the search bound");
    std::vector<Unit> units;
    for (long c0 = -bound[0]; c0 <= bound[0]; ++c0)
      for (long c1 = -bound[1]; c1 <= bound[1]; ++c1) {
        RVec part;
        for (int i = 0; i < 3; ++i) part[i] = c0 * red[0][i] + c1 * red[1][i];
        // c2 range where every eigenvalue is positive and at most y
        Real lo = -1e30L, hi = 1e30L;
        for (int i = 0; i < 3; ++i) {
          const Real r = red[2][i];
          if (std::fabs(r) < 1e-300L) {
            if (part[i] <= 0 || part[i] > y) lo = 1, hi = 0;
            continue;
          }
          // 0 < part_i + c2 r <= y
          Real a = -part[i] / r, b = (y - part[i]) / r;
          if (a > b) std::swap(a, b);
          lo = std::max(lo, a);
          hi = std::min(hi, b);
        }
        if (lo > hi) continue;
        // log of the eigenvalue product is concave in c2 on the positive part,
        // so the units sit next to at most two crossings of zero
        auto f = [&](long c2) {
          Real sum = 0;
          for (int i = 0; i < 3; ++i) {
            const Real v = part[i] + c2 * red[2][i];
            if (v <= 0) return -std::numeric_limits<Real>::infinity();
            sum += std::log(v);
          }
          return sum;
        };
        long a = static_cast<long>(std::ceil(lo - 1e-9L)), b = static_cast<long>(std::floor(hi + 1e-9L));
        if (a > b) continue;
        long m = a;
        for (long l = a, h = b; l < h;) {
          const long mid = l + (h - l) / 2;
          if (f(mid + 1) > f(mid)) l = mid + 1;
          else h = mid;
          m = l;
        }
        constexpr Real eps = 1e-6L;
        if (f(m) < -eps) continue;
        long first = m;
        for (long l = a, h = m; l < h;) {
          const long mid = l + (h - l) / 2;
          if (f(mid) >= -eps) h = mid;
          else l = mid + 1;
          first = l;
        }
        long last = m;
        for (long l = m, h = b; l < h;) {
          const long mid = h - (h - l) / 2;
          if (f(mid) >= -eps) l = mid;
          else h = mid - 1;
          last = l;
        }
        std::set<long> tried;
        for (long c2 = first; c2 <= m && f(c2) <= eps; ++c2) tried.insert(c2);
        for (long c2 = last; c2 >= m && f(c2) <= eps; --c2) tried.insert(c2);
        for (long c2 : tried) {
          RVec v;
          bool pos = true;
          Real prod = 1;
          for (int i = 0; i < 3; ++i) {
            v[i] = part[i] + c2 * red[2][i];
            pos = pos && v[i] > 0;
            prod *= v[i];
          }
          if (!pos || std::fabs(prod - 1) > 1e-6L) continue;
          const std::array<long, 3> cc{c0, c1, c2};
          IntMatrix x(3);
          for (int k = 0; k < 3; ++k) {
            long coeff = 0;
            for (int j = 0; j < 3; ++j) coeff += cc[j] * t[j][k];
            x += Int(coeff) * elems[k];
          }
          const CharCubic xc = char_cubic(x);
          if (xc.a3 != 1 || sgn(xc.a1) <= 0 || sgn(xc.a2) <= 0) continue;
          Unit u{x, {}, 0};
          for (int i = 0; i < 3; ++i) u.log[i] = static_cast<double>(std::log(v[i]));
          u.norm = norm3(u.log);
          if (u.norm > 1e-9) units.push_back(std::move(u));
        }
      }
    std::sort(units.begin(), units.end(), [](const Unit& a, const Unit& b) {
      if (std::fabs(a.norm - b.norm) > 1e-9) return a.norm < b.norm;
      return a.x < b.x;
    });
    if (units.empty()) continue;
    const Unit& u1 = units.front();
    for (const auto& u : units) {
      if (u.norm > expo) break;
      if (norm3(cross3(u1.log, u.log)) > 1e-6 * u1.norm * u.norm) {
        if (!commutes(u1.x, u.x) || !commutes(u1.x, c)) throw IntegrityError("units do not commute");
        return DirichletGroup{u1.x, u.x, u1.log, u.log, expo};
      }
    }
  }
  throw RadiusTooSmall("no independent pair of units within the search bound");
}

std::string format_invariant(const TorusInvariant& t) {
  std::ostringstream os;
  auto list = [&](const std::vector<long>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
  };
  os << "V=" << t.vertex_orbits << " E=" << t.edge_orbits << " F=" << t.face_orbits << " areas=";
  list(t.face_areas);
  os << " sides=";
  list(t.face_vertex_counts);
  os << " heights=";
  list(t.face_distances);
  return os.str();
}

namespace {

std::array<double, 2> chart(const EigenCone& cone, const DirichletGroup& g, const std::array<double, 3>& p) {
  const auto x = cone.coordinates(p);
  std::array<double, 3> l;
  for (int i = 0; i < 3; ++i) l[i] = std::log(x[i]);
  const double mean = (l[0] + l[1] + l[2]) / 3;
  for (auto& v : l) v -= mean;
  auto d = [](const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  };
  const double g11 = d(g.log1, g.log1), g12 = d(g.log1, g.log2), g22 = d(g.log2, g.log2);
  const double r1 = d(g.log1, l), r2 = d(g.log2, l);
  const double det = g11 * g22 - g12 * g12;
  return {(r1 * g22 - r2 * g12) / det, (g11 * r2 - g12 * r1) / det};
}

std::array<double, 3> as_real(const Vec3& v) {
  return {static_cast<double>(v[0]), static_cast<double>(v[1]), static_cast<double>(v[2])};
}

std::array<double, 3> centroid(const std::vector<Vec3>& pts) {
  std::array<double, 3> s{0, 0, 0};
  for (const auto& p : pts)
    for (int k = 0; k < 3; ++k) s[k] += static_cast<double>(p[k]) / static_cast<double>(pts.size());
  return s;
}

class GroupPowers {
 public:
  explicit GroupPowers(const DirichletGroup& g)
      : g1_(g.g1), g2_(g.g2), i1_(unimodular_inverse(g.g1)), i2_(unimodular_inverse(g.g2)) {}

  const IntMatrix& element(long i, long j) {
    auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    IntMatrix m = IntMatrix::identity(3);
    for (long k = 0; k < std::labs(i); ++k) m = m * (i > 0 ? g1_ : i1_);
    for (long k = 0; k < std::labs(j); ++k) m = m * (j > 0 ? g2_ : i2_);
    return cache_.emplace(key, std::move(m)).first->second;
  }

  std::optional<Vec3> apply(long i, long j, const Vec3& p) {
    const IntMatrix& m = element(i, j);
    Vec3 out;
    for (int r = 0; r < 3; ++r) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s += m(r, k) * p[k];
      if (!fits_i64(s)) return std::nullopt;
      out[r] = s.get_si();
    }
    return out;
  }

  // True when g(i,j) maps the point set `from` onto `to`.
  bool maps(long i, long j, const std::vector<Vec3>& from, const std::vector<Vec3>& to) {
    if (from.size() != to.size()) return false;
    std::vector<Vec3> img;
    for (const auto& p : from) {
      const auto q = apply(i, j, p);
      if (!q) return false;
      img.push_back(*q);
    }
    std::sort(img.begin(), img.end());
    std::vector<Vec3> target = to;
    std::sort(target.begin(), target.end());
    return img == target;
  }

 private:
  IntMatrix g1_, g2_, i1_, i2_;
  std::map<std::pair<long, long>, IntMatrix> cache_;
};

// Groups items by the group action, using chart positions to guess the
// group element and the exact action to confirm it.
template <class Item>
std::vector<std::vector<int>> group_orbits(const std::vector<Item>& items, const std::vector<std::array<double, 2>>& pos,
                                           GroupPowers& gp) {
  std::vector<std::vector<int>> orbits;
  for (int f = 0; f < static_cast<int>(items.size()); ++f) {
    bool placed = false;
    for (auto& orbit : orbits) {
      const int r = orbit.front();
      const double da = pos[f][0] - pos[r][0], db = pos[f][1] - pos[r][1];
      const long i = std::lround(da), j = std::lround(db);
      if (std::fabs(da - i) > 1e-4 || std::fabs(db - j) > 1e-4) continue;
      if (!gp.maps(i, j, items[r], items[f])) continue;
      orbit.push_back(f);
      placed = true;
      break;
    }
    if (!placed) orbits.push_back({f});
  }
  return orbits;
}

}  // namespace

std::array<double, 2> chart_position(const SailAnalysis& s, const std::array<double, 3>& p) {
  return chart(s.cone, s.group, p);
}

SailAnalysis torus_decomposition(const EigenCone& cone, const SailComplex& complex, const DirichletGroup& group) {
  SailAnalysis s{cone, complex, group, {}, {}, {}, {}};
  GroupPowers gp(group);
  std::vector<int> stable;
  for (int f = 0; f < static_cast<int>(complex.faces.size()); ++f)
    if (complex.faces[f].stable) stable.push_back(f);
  if (stable.empty()) throw RadiusTooSmall("no stable sail face; increase radius");

  std::vector<std::vector<Vec3>> face_items;
  std::vector<std::array<double, 2>> face_pos;
  for (int f : stable) {
    face_items.push_back(complex.faces[f].vertices);
    face_pos.push_back(chart(cone, group, centroid(complex.faces[f].vertices)));
  }
  const auto face_orbits = group_orbits(face_items, face_pos, gp);

  // closure: each orbit has a member surrounded by stable faces
  for (const auto& orbit : face_orbits) {
    bool closed = false;
    for (int m : orbit) {
      const SailFace& f = complex.faces[stable[m]];
      bool all = true;
      for (int nb : f.neighbors) all = all && nb >= 0 && complex.faces[nb].stable;
      closed = closed || all;
    }
    if (!closed) throw RadiusTooSmall("stable faces do not yet cover a fundamental domain; increase radius");
  }

  std::set<std::array<Vec3, 2>> edge_set;
  std::set<Vec3> vertex_set;
  for (int f : stable) {
    const auto& v = complex.faces[f].vertices;
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::array<Vec3, 2> e{v[k], v[(k + 1) % v.size()]};
      if (e[1] < e[0]) std::swap(e[0], e[1]);
      edge_set.insert(e);
      vertex_set.insert(v[k]);
    }
  }
  std::vector<std::vector<Vec3>> edge_items, vertex_items;
  std::vector<std::array<double, 2>> edge_pos, vertex_pos;
  for (const auto& e : edge_set) {
    edge_items.push_back({e[0], e[1]});
    std::array<double, 3> mid;
    for (int k = 0; k < 3; ++k) mid[k] = (static_cast<double>(e[0][k]) + static_cast<double>(e[1][k])) / 2;
    edge_pos.push_back(chart(cone, group, mid));
  }
  for (const auto& v : vertex_set) {
    vertex_items.push_back({v});
    vertex_pos.push_back(chart(cone, group, as_real(v)));
  }
  const auto edge_orbits = group_orbits(edge_items, edge_pos, gp);
  const auto vertex_orbits = group_orbits(vertex_items, vertex_pos, gp);

  const long euler = static_cast<long>(vertex_orbits.size()) - static_cast<long>(edge_orbits.size()) +
                     static_cast<long>(face_orbits.size());
  if (euler != 0) throw IntegrityError("torus Euler characteristic is " + std::to_string(euler));

  TorusInvariant& inv = s.invariant;
  inv.vertex_orbits = static_cast<int>(vertex_orbits.size());
  inv.edge_orbits = static_cast<int>(edge_orbits.size());
  inv.face_orbits = static_cast<int>(face_orbits.size());
  for (const auto& orbit : face_orbits) {
    Orbit o{stable[orbit.front()], {}};
    for (int m : orbit) o.members.push_back(stable[m]);
    const SailFace& f = complex.faces[o.representative];
    inv.face_areas.push_back(f.area);
    inv.face_vertex_counts.push_back(static_cast<long>(f.vertices.size()));
    inv.face_distances.push_back(f.height);
    s.face_orbits.push_back(std::move(o));
  }
  std::sort(inv.face_areas.begin(), inv.face_areas.end());
  std::sort(inv.face_vertex_counts.begin(), inv.face_vertex_counts.end());
  std::sort(inv.face_distances.begin(), inv.face_distances.end());
  for (const auto& orbit : vertex_orbits) s.vertex_reps.push_back(vertex_items[orbit.front()][0]);
  for (const auto& orbit : edge_orbits) s.edge_reps.push_back({edge_items[orbit.front()][0], edge_items[orbit.front()][1]});
  return s;
}

TorusInvariant torus_invariants(const SailComplex& complex, const DirichletGroup& group, const EigenCone& cone) {
  return torus_decomposition(cone, complex, group).invariant;
}

namespace {

Vec3 map_point(const IntMatrix& m, const Vec3& v) {
  Vec3 out;
  for (int r = 0; r < 3; ++r) {
    Int s = 0;
    for (int k = 0; k < 3; ++k) s += m(r, k) * v[k];
    out[r] = to_i64(s);
  }
  return out;
}

// A lattice point inside the open cone, near its axis.
Vec3 interior_point(const EigenCone& cone) {
  for (double scale = 10; scale <= 1e9; scale *= 10) {
    std::array<double, 3> s{0, 0, 0};
    for (const auto& v : cone.v_approx) {
      const double n = norm3(v);
      for (int j = 0; j < 3; ++j) s[j] += v[j] / n;
    }
    const Vec3 q{std::lround(s[0] * scale), std::lround(s[1] * scale), std::lround(s[2] * scale)};
    if (cone.contains(q)) return q;
  }
  throw IntegrityError("no lattice point found near the cone axis");
}

SailAnalysis analyze_with(const IntMatrix& c, const ConeSigns& signs, const DirichletGroup& group,
                          const std::vector<long>& radii) {
  if (radii.empty()) throw InputError("empty radius schedule");
  const EigenCone cone = eigen_cone(c, signs);
  const IntMatrix p = reduction_frame(cone), pi = unimodular_inverse(p);
  const IntMatrix c2 = pi * c * p;
  const Vec3 q = map_point(pi, interior_point(cone));
  const EigenCone probe = eigen_cone(c2, {1, 1, 1});
  ConeSigns s2;
  for (int i = 0; i < 3; ++i) s2[i] = probe.side(i, q);
  const EigenCone cone2 = eigen_cone(c2, s2);
  const DirichletGroup group2{pi * group.g1 * p, pi * group.g2 * p, group.log1, group.log2, group.search_exponent};
  std::string last;
  for (long r : radii) {
    try {
      SailAnalysis a = torus_decomposition(cone2, compute_sail(cone2, r), group2);
      // back to the original coordinates
      for (auto& f : a.complex.faces) {
        for (auto& v : f.vertices) v = map_point(p, v);
        for (auto& v : f.points) v = map_point(p, v);
        std::sort(f.points.begin(), f.points.end());
        f.normal = map_point(transpose(pi), f.normal);
      }
      for (auto& v : a.vertex_reps) v = map_point(p, v);
      for (auto& e : a.edge_reps) e = {map_point(p, e[0]), map_point(p, e[1])};
      a.cone = cone;
      a.group = group;
      a.frame = p;
      return a;
    } catch (const RadiusTooSmall& e) {
      last = e.what();
    }
  }
  throw RadiusTooSmall(last + " (radius " + std::to_string(radii.back()) + ")");
}

}  // namespace

IntMatrix reduction_frame(const EigenCone& cone) {
  std::array<RVec, 3> b;
  std::array<double, 3> norms;
  for (int i = 0; i < 3; ++i) norms[i] = norm3(cone.w_approx[i]);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) b[k][i] = cone.w_approx[i][k] / norms[i];
  std::array<std::array<long, 3>, 3> t;
  lll(b, t);
  IntMatrix p(3);
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m) p(m, k) = t[k][m];
  if (abs(det(p)) != 1) throw IntegrityError("reduction frame is not unimodular");
  return p;
}

SailAnalysis analyze_sail(const IntMatrix& c, const ConeSigns& signs, const std::vector<long>& radii) {
  return analyze_with(c, signs, dirichlet_generators(c), radii);
}

SailAnalysis analyze_sail(const IntMatrix& c, const std::vector<long>& radii) {
  return analyze_with(c, eigen_cone(c).signs, dirichlet_generators(c), radii);
}

std::vector<TorusInvariant> fraction_invariant(const IntMatrix& c, const std::vector<long>& radii) {
  const DirichletGroup group = dirichlet_generators(c);
  std::vector<TorusInvariant> out;
  for (const auto& s : cone_classes()) out.push_back(analyze_with(c, s, group, radii).invariant);
  std::sort(out.begin(), out.end());
  return out;
}

Distinction invariant_distinguish(const IntMatrix& c1, const IntMatrix& c2) {
  return fraction_invariant(c1) == fraction_invariant(c2) ? Distinction::Indistinguishable : Distinction::Distinct;
}

std::string sail_svg(const SailAnalysis& s) {
  // orthonormal frame of the plane sum(log) = 0
  const double r2 = std::sqrt(2.0), r6 = std::sqrt(6.0);
  auto frame = [&](const std::array<double, 3>& l) {
    return std::array<double, 2>{(l[0] - l[1]) / r2, (l[0] + l[1] - 2 * l[2]) / r6};
  };
  const auto e1 = frame(s.group.log1), e2 = frame(s.group.log2);
  auto to_plane = [&](const std::array<double, 2>& ab) {
    return std::array<double, 2>{ab[0] * e1[0] + ab[1] * e2[0], ab[0] * e1[1] + ab[1] * e2[1]};
  };
  const double ext = (std::fabs(e1[0]) + std::fabs(e2[0]) + std::fabs(e1[1]) + std::fabs(e2[1])) * 1.2 + 1e-9;
  const double size = 600, scale = size / (2 * ext);
  auto px = [&](const std::array<double, 2>& q) {
    std::ostringstream o;
    o << (size / 2 + q[0] * scale) << ',' << (size / 2 - q[1] * scale);
    return o.str();
  };
  static const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                  "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << ' ' << size << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t o = 0; o < s.face_orbits.size(); ++o)
    for (int fi : s.face_orbits[o].members) {
      const SailFace& f = s.complex.faces[fi];
      const auto c = chart(s.cone, s.group, centroid(f.vertices));
      if (c[0] < -0.6 || c[0] > 1.6 || c[1] < -0.6 || c[1] > 1.6) continue;
      os << "<polygon fill=\"" << palette[o % 10] << "\" fill-opacity=\"0.6\" stroke=\"black\" stroke-width=\"1\" points=\"";
      for (std::size_t k = 0; k < f.vertices.size(); ++k)
        os << (k ? " " : "") << px(to_plane(chart(s.cone, s.group, as_real(f.vertices[k]))));
      os << "\"><title>area " << f.area << ", height " << f.height << "</title></polygon>\n";
    }
  os << "<polygon fill=\"none\" stroke=\"red\" stroke-width=\"2\" points=\"" << px(to_plane({0, 0})) << ' '
     << px(to_plane({1, 0})) << ' ' << px(to_plane({1, 1})) << ' ' << px(to_plane({0, 1})) << "\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace frobcf
