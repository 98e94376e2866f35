#ifndef PACIOLI_CATALOG_HPP
#define PACIOLI_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "pacioli/polyhedron.hpp"

namespace pacioli {

enum class SeedId {
  Tetrahedron,
  Cube,
  Octahedron,
  Icosahedron,
  Dodecahedron,
  Cuboctahedron,
  Icosidodecahedron,
  TruncatedDodecahedron,
};

struct SeedInfo {
  SeedId id;
  std::string name;
  int vertices, edges, faces;
  std::map<int, int> faces_by_arity;
  Q5 edge_sq;  // exact squared edge length
};

const std::vector<SeedInfo>& list_seeds();
std::string seed_name(SeedId id);
std::optional<SeedId> seed_from_name(const std::string& name);

// Builds the seed in canonical form: exact coordinates centered on the
// origin, vertices sorted lexicographically, faces derived by exact
// support-plane enumeration and sorted by (arity, vertex cycle). Results are
// cached; the returned reference is immutable and lives for the process.
const Polyhedron& build_seed(SeedId id);

// Support-plane face derivation for any exact, origin-interior convex vertex
// set whose minimal pairwise distance is the edge length. Exposed for tests.
std::vector<std::vector<int>> derive_faces(const std::vector<Vec3Q>& verts);

}  // namespace pacioli

#endif
