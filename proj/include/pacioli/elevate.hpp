#ifndef PACIOLI_ELEVATE_HPP
#define PACIOLI_ELEVATE_HPP

#include <map>

#include "pacioli/polyhedron.hpp"

namespace pacioli {

// How apex heights are chosen, in edge-length units.
struct HeightRule {
  enum class Mode { Equilateral, Explicit, Zero } mode = Mode::Equilateral;
  std::map<int, Real> heights;  // Explicit only: face arity -> height

  static HeightRule equilateral() { return {Mode::Equilateral, {}}; }
  static HeightRule zero() { return {Mode::Zero, {}}; }
  static HeightRule explicit_heights(std::map<int, Real> h) {
    return {Mode::Explicit, std::move(h)};
  }
};

// The equilateral pyramid height over a regular n-gon with unit edge:
// sqrt(1 - r_n^2) where r_n is the circumradius. Exists only for n in
// {3, 4, 5}; throws EquilateralInfeasible otherwise.
Real equilateral_height(int arity);
// Squared circumradius of a regular unit-edge n-gon, exact for n in {3,4,5}.
Q5 circumradius_sq(int arity);

// A base solid with one pyramid apex per face. The apexes are stored
// alongside the base; mesh() lowers the pair to a closed triangle mesh.
struct ElevatedSolid {
  Polyhedron base;
  std::vector<Vec3R> apexes;     // aligned with base.faces
  std::map<int, Real> heights;   // actually used height per arity, edge units
  HeightRule::Mode mode;
  Real edge;                     // base edge length (the unit of the heights)

  // Derived mesh: base vertices first (order preserved), then one apex per
  // base face in face order. Faces: for base face k with cycle v0..v_{n-1},
  // triangles (vi, v_{i+1}, apex_k). Labels record which base face each
  // triangle came from.
  Polyhedron mesh() const;

  int apex_vertex(int face) const { return base.vertex_count() + face; }
};

// Raises one pyramid over every face of `base`. Heights are measured along
// the outward face normal in units of the base edge length.
// Throws EquilateralInfeasible (arity >= 6 under the Equilateral rule),
// NegativeHeight, MissingExplicitHeight.
ElevatedSolid elevate(const Polyhedron& base, const HeightRule& rule,
                      const SignPolicy& policy = {});

}  // namespace pacioli

#endif
