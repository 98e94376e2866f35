#include "pacioli/elevate.hpp"

#include <set>

#include "pacioli/errors.hpp"

namespace pacioli {

Q5 circumradius_sq(int arity) {
  switch (arity) {
    case 3: return Q5(make_rat(1, 3));
    case 4: return Q5(make_rat(1, 2));
    // Regular pentagon: r^2 = (5 + sqrt 5)/10.
    case 5: return Q5(make_rat(1, 2), make_rat(1, 10));
    default: throw EquilateralInfeasible(arity);
  }
}

Real equilateral_height(int arity) {
  Q5 h_sq = Q5(1) - circumradius_sq(arity);
  if (h_sq.sign() <= 0) throw EquilateralInfeasible(arity);
  return Real::sqrt(Real(h_sq));
}

ElevatedSolid elevate(const Polyhedron& base, const HeightRule& rule, const SignPolicy& policy) {
  ElevatedSolid out;
  out.base = base;
  out.mode = rule.mode;

  // Edge length: exact when the base is a catalog solid, else measured from
  // the first edge of the first face.
  Real edge_sq(0);
  if (auto es = exact_edge_sq(base)) {
    edge_sq = Real(*es);
  } else {
    const auto& f0 = base.faces.at(0);
    edge_sq = (base.vertices[f0[1]] - base.vertices[f0[0]]).norm2();
  }
  out.edge = Real::sqrt(edge_sq);

  std::set<int> arities;
  for (const auto& f : base.faces) arities.insert(static_cast<int>(f.size()));

  for (int a : arities) {
    switch (rule.mode) {
      case HeightRule::Mode::Equilateral:
        out.heights.emplace(a, equilateral_height(a));
        break;
      case HeightRule::Mode::Zero:
        out.heights.emplace(a, Real(0));
        break;
      case HeightRule::Mode::Explicit: {
        auto it = rule.heights.find(a);
        if (it == rule.heights.end()) throw MissingExplicitHeight(a);
        SignVerdict s = it->second.sign(policy);
        if (s.decided() && s.value() < 0) throw NegativeHeight(a);
        out.heights.emplace(a, it->second);
        break;
      }
    }
  }

  out.apexes.reserve(base.faces.size());
  for (int fi = 0; fi < base.face_count(); ++fi) {
    const Real& h = out.heights.at(static_cast<int>(base.faces[fi].size()));
    FaceFrame frame = face_frame(base, fi, policy);
    if (h.exact() && h.exact()->is_zero()) {
      out.apexes.push_back(frame.centroid);  // zero rule: apex is the centroid, exactly
    } else {
      out.apexes.push_back(frame.centroid + (h * out.edge) * frame.unit_normal);
    }
  }
  return out;
}

Polyhedron ElevatedSolid::mesh() const {
  Polyhedron m;
  m.name = base.name.empty() ? "elevated" : "elevated_" + base.name;
  m.vertices = base.vertices;
  m.vertices.insert(m.vertices.end(), apexes.begin(), apexes.end());

  bool all_exact = base.exact_vertices.has_value();
  std::vector<Vec3Q> exact;
  if (all_exact) {
    exact = *base.exact_vertices;
    for (const auto& a : apexes) {
      auto e = a.exact();
      if (!e) {
        all_exact = false;
        break;
      }
      exact.push_back(*e);
    }
  }
  if (all_exact) m.exact_vertices = std::move(exact);

  for (int fi = 0; fi < base.face_count(); ++fi) {
    const auto& f = base.faces[fi];
    int n = static_cast<int>(f.size());
    int apex = apex_vertex(fi);
    for (int k = 0; k < n; ++k) {
      m.faces.push_back({f[k], f[(k + 1) % n], apex});
      m.face_labels.push_back("base_face:" + std::to_string(fi));
    }
  }
  return m;
}

}  // namespace pacioli
