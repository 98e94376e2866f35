#include "pacioli/catalog.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

#include "pacioli/errors.hpp"

namespace pacioli {

namespace {

const Q5 kHalf(make_rat(1, 2));
const Q5 kPhi = Q5::phi();

void push_cyclic(std::vector<Vec3Q>& out, const Q5& x, const Q5& y, const Q5& z) {
  out.push_back({x, y, z});
  out.push_back({y, z, x});
  out.push_back({z, x, y});
}

// Emits all sign combinations of the nonzero components, cyclically permuted
// when `cyclic` is set.
void push_orbit(std::vector<Vec3Q>& out, const Q5& x, const Q5& y, const Q5& z, bool cyclic) {
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        if (x.is_zero() && sx < 0) continue;
        if (y.is_zero() && sy < 0) continue;
        if (z.is_zero() && sz < 0) continue;
        Q5 px = Q5(sx) * x, py = Q5(sy) * y, pz = Q5(sz) * z;
        if (cyclic)
          push_cyclic(out, px, py, pz);
        else
          out.push_back({px, py, pz});
      }
}

std::vector<Vec3Q> seed_vertices(SeedId id) {
  std::vector<Vec3Q> v;
  const Q5 one(1), two(2);
  const Q5 phi2 = Q5::phi_sq();
  switch (id) {
    case SeedId::Tetrahedron:
      v = {{kHalf, kHalf, kHalf},
           {kHalf, -kHalf, -kHalf},
           {-kHalf, kHalf, -kHalf},
           {-kHalf, -kHalf, kHalf}};
      break;
    case SeedId::Cube:
      push_orbit(v, kHalf, kHalf, kHalf, false);
      break;
    case SeedId::Octahedron:
      push_orbit(v, one, Q5(), Q5(), true);
      break;
    case SeedId::Icosahedron:
      push_orbit(v, Q5(), kHalf, kHalf * kPhi, true);
      break;
    case SeedId::Dodecahedron:
      push_orbit(v, kHalf * kPhi, kHalf * kPhi, kHalf * kPhi, false);
      push_orbit(v, Q5(), kHalf, kHalf * phi2, true);
      break;
    case SeedId::Cuboctahedron:
      push_orbit(v, one, one, Q5(), true);
      break;
    case SeedId::Icosidodecahedron:
      push_orbit(v, Q5(), Q5(), kPhi, true);
      push_orbit(v, kHalf, kHalf * kPhi, kHalf * phi2, true);
      break;
    case SeedId::TruncatedDodecahedron: {
      const Q5 inv_phi = kPhi - one;  // 1/phi
      std::vector<Vec3Q> raw;
      push_orbit(raw, Q5(), inv_phi, two + kPhi, true);
      push_orbit(raw, inv_phi, kPhi, two * kPhi, true);
      push_orbit(raw, kPhi, two, phi2, true);
      const Q5 scale = kHalf * kPhi;  // rescales the classical coordinates to edge 1
      for (const auto& p : raw) v.push_back(scale * p);
      break;
    }
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

Q5 min_pair_dist_sq(const std::vector<Vec3Q>& verts) {
  std::optional<Q5> best;
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j) {
      Q5 d = (verts[i] - verts[j]).norm2();
      if (!best || d < *best) best = d;
    }
  return *best;
}

}  // namespace

std::vector<std::vector<int>> derive_faces(const std::vector<Vec3Q>& verts) {
  int n = static_cast<int>(verts.size());
  Q5 edge_sq = min_pair_dist_sq(verts);
  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((verts[i] - verts[j]).norm2() == edge_sq) {
        nbr[i].push_back(j);
        nbr[j].push_back(i);
      }

  // Candidate supporting planes through two edges (u,v), (v,w); every face
  // plane arises from three consecutive boundary vertices this way.
  std::set<std::vector<int>> face_sets;
  for (int v = 0; v < n; ++v) {
    const auto& nv = nbr[v];
    for (size_t a = 0; a < nv.size(); ++a)
      for (size_t b = a + 1; b < nv.size(); ++b) {
        int u = nv[a], w = nv[b];
        Vec3Q nrm = (verts[v] - verts[u]).cross(verts[w] - verts[u]);
        if (nrm.is_zero()) continue;
        Q5 d = nrm.dot(verts[u]);
        bool pos = false, neg = false;
        std::vector<int> on;
        for (int m = 0; m < n && !(pos && neg); ++m) {
          int s = (nrm.dot(verts[m]) - d).sign();
          if (s > 0) pos = true;
          else if (s < 0) neg = true;
          else on.push_back(m);
        }
        if (pos && neg) continue;  // interior plane, not supporting
        face_sets.insert(std::move(on));
      }
  }

  std::vector<std::vector<int>> faces;
  for (const auto& fs : face_sets) {
    // Boundary walk via edges inside the face.
    std::map<int, std::vector<int>> ring;
    for (int i : fs)
      for (int j : nbr[i])
        if (std::binary_search(fs.begin(), fs.end(), j)) ring[i].push_back(j);
    for (const auto& [i, adj] : ring)
      if (adj.size() != 2)
        throw std::logic_error("face candidate is not a simple polygon at vertex " + std::to_string(i));
    std::vector<int> cycle{fs[0], ring[fs[0]][0]};
    while (true) {
      int prev = cycle[cycle.size() - 2], cur = cycle.back();
      int next = ring[cur][0] == prev ? ring[cur][1] : ring[cur][0];
      if (next == cycle[0]) break;
      cycle.push_back(next);
    }
    if (cycle.size() != fs.size())
      throw std::logic_error("face candidate boundary does not cover its vertex set");

    // Orient outward: the Newell normal must point away from the origin.
    Vec3Q newell{Q5(), Q5(), Q5()};
    Vec3Q sum{Q5(), Q5(), Q5()};
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
      newell = newell + verts[cycle[i]].cross(verts[cycle[(i + 1) % k]]);
      sum = sum + verts[cycle[i]];
    }
    int side = newell.dot(sum).sign();
    assert(side != 0);
    if (side < 0) std::reverse(cycle.begin(), cycle.end());

    // Canonical rotation: start at the smallest index, keep direction.
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
    faces.push_back(std::move(cycle));
  }

  std::sort(faces.begin(), faces.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return faces;
}

namespace {

Polyhedron make_seed(SeedId id) {
  Polyhedron p;
  p.name = seed_name(id);
  auto verts = seed_vertices(id);
  p.faces = derive_faces(verts);
  p.vertices.reserve(verts.size());
  for (const auto& v : verts) p.vertices.emplace_back(v);
  p.exact_vertices = std::move(verts);
  // Euler check: the derivation must produce a closed convex surface.
  long edge2 = 0;
  for (const auto& f : p.faces) edge2 += static_cast<long>(f.size());
  if (p.vertex_count() - edge2 / 2 + p.face_count() != 2)
    throw std::logic_error("seed fails Euler check: " + p.name);
  return p;
}

}  // namespace

const Polyhedron& build_seed(SeedId id) {
  static const std::map<SeedId, Polyhedron> cache = [] {
    std::map<SeedId, Polyhedron> m;
    for (SeedId s : {SeedId::Tetrahedron, SeedId::Cube, SeedId::Octahedron, SeedId::Icosahedron,
                     SeedId::Dodecahedron, SeedId::Cuboctahedron, SeedId::Icosidodecahedron,
                     SeedId::TruncatedDodecahedron})
      m.emplace(s, make_seed(s));
    return m;
  }();
  return cache.at(id);
}

std::string seed_name(SeedId id) {
  switch (id) {
    case SeedId::Tetrahedron: return "tetrahedron";
    case SeedId::Cube: return "cube";
    case SeedId::Octahedron: return "octahedron";
    case SeedId::Icosahedron: return "icosahedron";
    case SeedId::Dodecahedron: return "dodecahedron";
    case SeedId::Cuboctahedron: return "cuboctahedron";
    case SeedId::Icosidodecahedron: return "icosidodecahedron";
    case SeedId::TruncatedDodecahedron: return "truncated_dodecahedron";
  }
  return "?";
}

std::optional<SeedId> seed_from_name(const std::string& name) {
  for (SeedId s : {SeedId::Tetrahedron, SeedId::Cube, SeedId::Octahedron, SeedId::Icosahedron,
                   SeedId::Dodecahedron, SeedId::Cuboctahedron, SeedId::Icosidodecahedron,
                   SeedId::TruncatedDodecahedron})
    if (seed_name(s) == name) return s;
  return std::nullopt;
}

const std::vector<SeedInfo>& list_seeds() {
  static const std::vector<SeedInfo> table = [] {
    std::vector<SeedInfo> out;
    for (SeedId s : {SeedId::Tetrahedron, SeedId::Cube, SeedId::Octahedron, SeedId::Icosahedron,
                     SeedId::Dodecahedron, SeedId::Cuboctahedron, SeedId::Icosidodecahedron,
                     SeedId::TruncatedDodecahedron}) {
      const Polyhedron& p = build_seed(s);
      size_t edge2 = 0;
      for (const auto& f : p.faces) edge2 += f.size();
      out.push_back(SeedInfo{s, p.name, p.vertex_count(), static_cast<int>(edge2 / 2),
                             p.face_count(), p.faces_by_arity(), *exact_edge_sq(p)});
    }
    return out;
  }();
  return table;
}

}  // namespace pacioli
