#pragma once

// Sails of hyperbolic 3x3 integer matrices: the boundary of the convex hull
// of the nonzero lattice points in one open eigen-cone, and the face complex
// it induces on the torus obtained by dividing out the positive units of
// the commutant.

#include "frobcf/commutant.hpp"
#include "frobcf/real_root.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobcf {

using Vec3 = std::array<long, 3>;

/// Largest enumeration radius accepted by compute_sail.
inline constexpr long kMaxRadius = 256;

/// The computation needs a larger enumeration radius (or unit search bound).
struct RadiusTooSmall : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sign pattern of an open eigen-cone: sign(w_i . p) = signs[i] for the left
/// eigenvectors w_i, eigenvalues in increasing order.
using ConeSigns = std::array<int, 3>;

/// The four cones up to p -> -p, each with signs[0] = +1.
const std::array<ConeSigns, 4>& cone_classes();

struct EigenCone {
  IntMatrix c;
  MonicCubic f;                     // det(tE - C)
  std::vector<RealRoot> roots;      // increasing
  std::array<FieldPoly, 3> left;    // w(t): a nonzero row of adj(C - tE)
  std::array<FieldPoly, 3> right;   // v(t): a nonzero column of adj(C - tE)
  ConeSigns signs{};
  std::array<int, 3> orientation{};  // edge generator i is orientation[i] * v(lambda_i)
  std::array<std::array<double, 3>, 3> w_approx{};  // left eigenvectors
  std::array<std::array<double, 3>, 3> w_error{};   // bound on |w_approx - w(lambda_i)|
  std::array<std::array<double, 3>, 3> v_approx{};  // oriented edge generators

  /// Exact sign of w_i . p.
  int side(int i, const Vec3& p) const;
  bool contains(const Vec3& p) const;
  /// Exact sign of n . (edge generator i).
  int functional_sign(int i, const Vec3& n) const;
  /// Exact test that {p in cone : n . p <= h} lies in the box [-r, r]^3.
  bool region_in_box(const Vec3& n, long h, long r) const;
  /// Positive coordinates of p in the basis of edge generators (numeric).
  std::array<double, 3> coordinates(const std::array<double, 3>& p) const;
};

/// The cone containing (0,0,1). That point never lies on an eigenplane of a
/// matrix in H(3,Z), so the cone is always defined.
EigenCone eigen_cone(const IntMatrix& c);
EigenCone eigen_cone(const IntMatrix& c, const ConeSigns& signs);

struct SailFace {
  Vec3 normal{};   // primitive; n . p >= height on the cone points
  long height = 0;  // integer distance of the face plane from the origin
  std::vector<Vec3> vertices;  // convex polygon, cyclic order
  std::vector<Vec3> points;    // every lattice point of the face, sorted
  std::vector<int> neighbors;  // across edge (vertices[k], vertices[k+1]); -1 if not computed
  bool stable = false;         // certified to be a face of the full sail
  long area = 0;               // lattice area, unit triangle = 1
};

struct SailComplex {
  long radius = 0;
  std::size_t point_count = 0;  // lattice points enumerated in the cone
  std::vector<SailFace> faces;  // breadth-first from the face nearest the cone axis
  std::size_t stable_count() const;
};

/// Hull faces of the primitive lattice points of the cone inside [-r, r]^3,
/// explored breadth-first through stable faces. A face is stable when the
/// region of the cone below its plane fits in the box; then no lattice point
/// outside the box can change it, in particular doubling the radius keeps it.
SailComplex compute_sail(const EigenCone& cone, long radius, std::size_t max_faces = 3000);

/// Generators of the group of units of the commutant with all eigenvalues
/// positive (the cone-preserving part of the Dirichlet group).
struct DirichletGroup {
  IntMatrix g1;
  IntMatrix g2;
  std::array<double, 3> log1{};  // log of eigenvalues, roots in increasing order
  std::array<double, 3> log2{};
  double search_exponent = 0;    // units with all |eigenvalues| <= e^this were enumerated
};

/// Two generators of the positive units, found as successive minima of the
/// log embedding. Throws RadiusTooSmall if the search bound is exhausted.
DirichletGroup dirichlet_generators(const IntMatrix& c, double max_exponent = 9.0);

struct TorusInvariant {
  int vertex_orbits = 0;
  int edge_orbits = 0;
  int face_orbits = 0;
  std::vector<long> face_areas;          // sorted
  std::vector<long> face_vertex_counts;  // sorted
  std::vector<long> face_distances;      // sorted integer distances to the origin
  friend bool operator==(const TorusInvariant&, const TorusInvariant&) = default;
  friend auto operator<=>(const TorusInvariant&, const TorusInvariant&) = default;
};

std::string format_invariant(const TorusInvariant& t);

struct Orbit {
  int representative;          // face index in the complex
  std::vector<int> members;    // stable faces in the orbit
};

struct SailAnalysis {
  EigenCone cone;
  SailComplex complex;
  DirichletGroup group;
  TorusInvariant invariant;
  std::vector<Orbit> face_orbits;
  std::vector<Vec3> vertex_reps;
  std::vector<std::array<Vec3, 2>> edge_reps;
  /// Unimodular P such that the complex was computed for P^-1 C P and mapped
  /// back by p -> P p. The radius refers to that reduced frame.
  IntMatrix frame = IntMatrix::identity(3);
};

/// Chart coordinates (a, b) of a point: its log-coordinates modulo the
/// diagonal, written in the basis of the generators' log vectors.
std::array<double, 2> chart_position(const SailAnalysis& s, const std::array<double, 3>& p);

/// Orbit structure of the stable faces. Throws RadiusTooSmall when some face
/// orbit has no member whose neighbours are all stable (the computed part
/// does not yet cover a fundamental domain).
SailAnalysis torus_decomposition(const EigenCone& cone, const SailComplex& complex, const DirichletGroup& group);

TorusInvariant torus_invariants(const SailComplex& complex, const DirichletGroup& group, const EigenCone& cone);

/// Unimodular P for which the cone of P^-1 C P is well shaped for box
/// enumeration: an LLL basis for the form sum_i (w_i . p)^2 / |w_i|^2.
IntMatrix reduction_frame(const EigenCone& cone);

/// Runs the radius schedule until the torus decomposition closes. The sail
/// is computed in the reduced frame and mapped back.
SailAnalysis analyze_sail(const IntMatrix& c, const ConeSigns& signs, const std::vector<long>& radii = {16, 32, 64});
SailAnalysis analyze_sail(const IntMatrix& c, const std::vector<long>& radii = {16, 32, 64});

/// Invariants of all four cone classes, sorted. Invariant under GL(3,Z)
/// conjugation of the matrix.
std::vector<TorusInvariant> fraction_invariant(const IntMatrix& c, const std::vector<long>& radii = {16, 32, 64});

enum class Distinction { Distinct, Indistinguishable };
Distinction invariant_distinguish(const IntMatrix& c1, const IntMatrix& c2);

/// Static SVG of the faces around one fundamental domain, in chart coordinates.
std::string sail_svg(const SailAnalysis& s);

}  // namespace frobcf
