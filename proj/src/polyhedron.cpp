#include "pacioli/polyhedron.hpp"

#include <algorithm>
#include <map>

#include "pacioli/errors.hpp"

namespace pacioli {

std::map<int, int> Polyhedron::faces_by_arity() const {
  std::map<int, int> out;
  for (const auto& f : faces) out[static_cast<int>(f.size())]++;
  return out;
}

Topology derive_topology(const Polyhedron& p) {
  // key (a,b) with a < b -> {face of forward traversal a->b, face of b->a}
  std::map<std::pair<int, int>, std::pair<int, int>> half;
  for (int fi = 0; fi < p.face_count(); ++fi) {
    const auto& f = p.faces[fi];
    int n = static_cast<int>(f.size());
    for (int k = 0; k < n; ++k) {
      int u = f[k], v = f[(k + 1) % n];
      bool forward = u < v;
      auto key = forward ? std::make_pair(u, v) : std::make_pair(v, u);
      auto [it, inserted] = half.try_emplace(key, -1, -1);
      int& slot = forward ? it->second.first : it->second.second;
      if (slot != -1) throw OrientationMismatch(u, v);
      slot = fi;
    }
  }
  Topology t;
  t.vertex_faces.resize(p.vertices.size());
  t.face_adjacency.resize(p.faces.size());
  for (const auto& [key, fs] : half) {
    if (fs.first == -1 || fs.second == -1) throw NonManifoldEdge(key.first, key.second, 1);
    Topology::Edge e{key.first, key.second, {std::min(fs.first, fs.second), std::max(fs.first, fs.second)}};
    t.edges.push_back(e);
    t.face_adjacency[e.faces[0]].push_back(e.faces[1]);
    t.face_adjacency[e.faces[1]].push_back(e.faces[0]);
  }
  for (int fi = 0; fi < p.face_count(); ++fi)
    for (int v : p.faces[fi]) t.vertex_faces[v].push_back(fi);
  for (auto& vf : t.vertex_faces) std::sort(vf.begin(), vf.end());
  for (auto& fa : t.face_adjacency) std::sort(fa.begin(), fa.end());
  return t;
}

FaceFrame face_frame(const Polyhedron& p, int face, const SignPolicy& policy) {
  const auto& f = p.faces.at(face);
  int n = static_cast<int>(f.size());
  Vec3R c = p.vertices[f[0]];
  for (int k = 1; k < n; ++k) c = c + p.vertices[f[k]];
  c = Real(make_rat(1, n)) * c;
  // Newell normal: robust for any planar polygon, exact on exact input.
  Vec3R nrm(Real(0), Real(0), Real(0));
  for (int k = 0; k < n; ++k)
    nrm = nrm + p.vertices[f[k]].cross(p.vertices[f[(k + 1) % n]]);
  Real nn = nrm.norm2();
  SignVerdict s = nn.sign(policy);
  if (!s.decided() || s.value() <= 0) throw DegenerateFace(face);
  Real inv_len = Real(1) / Real::sqrt(nn);
  return FaceFrame{c, inv_len * nrm, nn};
}

std::optional<Q5> exact_edge_sq(const Polyhedron& p) {
  if (!p.exact_vertices || p.faces.empty() || p.faces[0].size() < 2) return std::nullopt;
  const auto& ev = *p.exact_vertices;
  Vec3Q d = ev[p.faces[0][1]] - ev[p.faces[0][0]];
  return d.norm2();
}

}  // namespace pacioli
