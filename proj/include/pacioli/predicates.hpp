#ifndef PACIOLI_PREDICATES_HPP
#define PACIOLI_PREDICATES_HPP

#include <array>
#include <map>
#include <span>
#include <vector>

#include "pacioli/catalog.hpp"
#include "pacioli/elevate.hpp"

namespace pacioli {

// Oriented plane {x : normal . x = offset}. The normal direction is the
// "outward" side; constructors guarantee it has certified nonzero length.
struct Plane {
  Vec3R normal;
  Real offset;
};

struct CoplanarityVerdict {
  enum class Kind { CoplanarExact, NotCoplanar, Undecided } kind;
  enum class Certificate { None, RationalRank, SymmetryOrbit } certificate = Certificate::None;
  int witness = -1;                        // NotCoplanar: first certified off-plane point
  std::optional<Interval> signed_distance; // NotCoplanar: excludes 0
  std::optional<Dyadic> final_width;       // Undecided
  unsigned precision_reached = 0;
};

// Decides whether >= 4 points are coplanar. All-exact inputs are decided
// exactly by rank computation over Q(sqrt 5); mixed inputs use certified
// signs of orientation determinants against the plane through the first
// three points. Throws CollinearBase when those three span no plane.
CoplanarityVerdict coplanarity(std::span<const Vec3R> points, const SignPolicy& policy = {});

// Exact order-5 rotation about a pentagon axis, with the objects it permutes.
struct SymmetryCertificate {
  std::array<std::array<Q5, 3>, 3> rotation;
  std::array<int, 5> orbit;              // the 5 adjacent triangle faces, cyclic order
  std::vector<int> vertex_permutation;   // seed vertex i -> image vertex index
};

struct RingPlane {
  Plane plane;  // normal = pentagon outward unit axis; offset = apex-ring support
  SymmetryCertificate certificate;
};

// The plane through the apexes of the 5 triangles edge-adjacent to the given
// pentagon, proven exactly coplanar by the symmetry orbit argument.
// Throws NotAPentagon, SymmetryUnavailable.
RingPlane ring_plane(const ElevatedSolid& e, int pentagon);

// Signed axial distance of the pentagon apex from its ring plane, positive =
// outward, in units of the base edge length.
Real apex_deviation(const ElevatedSolid& e, int pentagon);

struct ContactReport {
  Vec3R direction;
  std::vector<int> touching;        // sorted vertex indices achieving max support
  std::vector<int> marginal;        // subset of touching whose tie is uncertified
  std::map<int, Interval> margins;  // non-touching vertex -> support deficit (> 0)
  enum class Stability { Yes, No, Marginal } stable = Stability::No;
  unsigned bits_used = 0;
};

// Which vertices the solid rests on when pressed along -direction onto a
// plane orthogonal to `direction`, and whether that rest is statically
// stable. Throws ZeroDirection.
ContactReport contact_and_stability(const Polyhedron& mesh, const Vec3R& direction,
                                    const SignPolicy& policy = {});
ContactReport contact_and_stability(const ElevatedSolid& e, const Vec3R& direction,
                                    const SignPolicy& policy = {});

struct HeightSolution {
  Interval bracket;    // width <= tol; delta(lo) certified Negative, delta(hi) Positive
  Real value;          // exact expression for the root h_p*
  unsigned bits_used;
};

// The pentagon-pyramid height h_p* that puts the pentagon apex exactly on the
// ring plane, given a fixed triangle height. delta is affine and strictly
// increasing in h_p, so the secant through two evaluations is exact.
// Throws ToleranceUnreachable when the bracket cannot be certified.
HeightSolution solve_coplanar_height(SeedId seed, const Real& triangle_height, const Rat& tol,
                                     const SignPolicy& policy = {});

}  // namespace pacioli

#endif
