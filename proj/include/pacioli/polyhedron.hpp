#ifndef PACIOLI_POLYHEDRON_HPP
#define PACIOLI_POLYHEDRON_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pacioli/vec.hpp"

namespace pacioli {

// Closed oriented polyhedral surface. Faces are vertex-index cycles, oriented
// counterclockwise seen from outside. Catalog solids also carry their exact
// coordinates, which downstream predicates use for exact-path decisions.
struct Polyhedron {
  std::string name;
  std::vector<Vec3R> vertices;
  std::vector<std::vector<int>> faces;
  std::optional<std::vector<Vec3Q>> exact_vertices;  // aligned with `vertices` when present
  std::vector<std::string> face_labels;              // empty, or aligned with `faces`

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int face_count() const { return static_cast<int>(faces.size()); }
  std::map<int, int> faces_by_arity() const;
};

// Edge/adjacency structure derived from the face cycles.
struct Topology {
  struct Edge {
    int a, b;        // a < b
    int faces[2];    // the two incident faces, smaller index first
  };
  std::vector<Edge> edges;                      // sorted by (a, b)
  std::vector<std::vector<int>> vertex_faces;   // per vertex, sorted face indices
  std::vector<std::vector<int>> face_adjacency; // per face, sorted edge-sharing neighbors

  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Derives the edge set and adjacency, checking that every edge borders
// exactly two faces with opposite traversal directions.
// Throws NonManifoldEdge / OrientationMismatch.
Topology derive_topology(const Polyhedron& p);

// Centroid and outward unit normal of one face.
struct FaceFrame {
  Vec3R centroid;
  Vec3R unit_normal;
  Real normal_norm2;  // squared length of the un-normalized Newell normal
};

// Throws DegenerateFace when the face normal cannot be certified nonzero.
FaceFrame face_frame(const Polyhedron& p, int face, const SignPolicy& policy = {});

// Exact squared edge length, available when exact vertices are present and
// the first edge of the first face is representative (catalog solids are
// edge-transitive, so it is).
std::optional<Q5> exact_edge_sq(const Polyhedron& p);

}  // namespace pacioli

#endif
