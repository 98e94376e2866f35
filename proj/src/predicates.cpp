#include "pacioli/predicates.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "pacioli/errors.hpp"

namespace pacioli {

namespace {

// Enclosure of a value already known to be nonzero (exactly or by a certified
// sign), escalated until the interval excludes zero. Returns nullopt if even
// max_bits cannot separate it (does not happen for the magnitudes in scope).
std::optional<Interval> nonzero_enclosure(const Real& x, const SignPolicy& policy,
                                          unsigned& bits_used) {
  std::optional<Interval> acc;
  unsigned bits = policy.start_bits;
  for (;;) {
    acc = acc ? Interval::intersect(*acc, x.eval(bits)) : x.eval(bits);
    if (acc->sign() != 0) {
      bits_used = std::max(bits_used, bits);
      return acc;
    }
    if (bits >= policy.max_bits) return std::nullopt;
    bits = std::min(bits * 2, policy.max_bits);
  }
}

}  // namespace

CoplanarityVerdict coplanarity(std::span<const Vec3R> points, const SignPolicy& policy) {
  if (points.size() < 4) throw std::invalid_argument("coplanarity requires at least 4 points");

  Vec3R b1 = points[1] - points[0];
  Vec3R b2 = points[2] - points[0];
  Vec3R nrm = b1.cross(b2);
  SignVerdict base = nrm.norm2().sign(policy);
  if (!base.decided() || base.value() <= 0) throw CollinearBase();

  bool all_exact = true;
  for (const auto& p : points)
    if (!p.exact()) {
      all_exact = false;
      break;
    }

  CoplanarityVerdict out;
  unsigned used = base.bits_used;

  if (all_exact) {
    Vec3Q n = *nrm.exact();
    Vec3Q p0 = *points[0].exact();
    for (size_t i = 3; i < points.size(); ++i) {
      Q5 det = n.dot(*points[i].exact() - p0);
      if (det.sign() == 0) continue;
      out.kind = CoplanarityVerdict::Kind::NotCoplanar;
      out.witness = static_cast<int>(i);
      Real dist = Real(det) / Real::sqrt(nrm.norm2());
      out.signed_distance = nonzero_enclosure(dist, policy, used);
      if (!out.signed_distance) throw std::logic_error("exact nonzero distance not separable");
      out.precision_reached = used;
      return out;
    }
    out.kind = CoplanarityVerdict::Kind::CoplanarExact;
    out.certificate = CoplanarityVerdict::Certificate::RationalRank;
    out.precision_reached = 0;
    return out;
  }

  bool any_undecided = false;
  std::optional<Dyadic> worst;
  for (size_t i = 3; i < points.size(); ++i) {
    Real det = nrm.dot(points[i] - points[0]);
    SignVerdict v = det.sign(policy);
    if (v.is_zero()) continue;
    if (v.decided()) {
      out.kind = CoplanarityVerdict::Kind::NotCoplanar;
      out.witness = static_cast<int>(i);
      used = std::max(used, v.bits_used);
      Real dist = det / Real::sqrt(nrm.norm2());
      out.signed_distance = nonzero_enclosure(dist, policy, used);
      if (!out.signed_distance) throw std::logic_error("certified nonzero distance not separable");
      out.precision_reached = used;
      return out;
    }
    any_undecided = true;
    if (v.final_width && (!worst || v.final_width->cmp(*worst) > 0)) worst = v.final_width;
  }
  if (any_undecided) {
    out.kind = CoplanarityVerdict::Kind::Undecided;
    out.final_width = worst;
    out.precision_reached = policy.max_bits;
    return out;
  }
  out.kind = CoplanarityVerdict::Kind::CoplanarExact;
  out.certificate = CoplanarityVerdict::Certificate::RationalRank;
  out.precision_reached = used;
  return out;
}

namespace {

// Exact 3x3 matrices over Q(sqrt 5), used only for the symmetry certificate.
using Mat3 = std::array<std::array<Q5, 3>, 3>;

Mat3 from_columns(const Vec3Q& c0, const Vec3Q& c1, const Vec3Q& c2) {
  return Mat3{{{c0.x, c1.x, c2.x}, {c0.y, c1.y, c2.y}, {c0.z, c1.z, c2.z}}};
}

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

Q5 det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 adjugate(const Mat3& m) {
  Mat3 r;
  r[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  r[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  r[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  r[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  r[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  r[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  r[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  r[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  r[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return r;
}

Mat3 scale(const Mat3& m, const Q5& s) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = s * m[i][j];
  return r;
}

Mat3 identity3() {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = Q5(i == j ? 1 : 0);
  return r;
}

bool mat_eq(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

Mat3 transpose(const Mat3& m) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
  return r;
}

Vec3Q mat_apply(const Mat3& m, const Vec3Q& v) {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

}  // namespace

RingPlane ring_plane(const ElevatedSolid& e, int pentagon) {
  const Polyhedron& base = e.base;
  if (pentagon < 0 || pentagon >= base.face_count())
    throw std::out_of_range("no such face: " + std::to_string(pentagon));
  const auto& pf = base.faces[pentagon];
  if (pf.size() != 5) throw NotAPentagon(pentagon);
  if (!base.exact_vertices) throw SymmetryUnavailable("exact base coordinates required");
  const auto& ev = *base.exact_vertices;

  Topology topo = derive_topology(base);
  std::vector<int> ring;
  for (const auto& edge : topo.edges) {
    if (edge.faces[0] == pentagon) ring.push_back(edge.faces[1]);
    if (edge.faces[1] == pentagon) ring.push_back(edge.faces[0]);
  }
  std::sort(ring.begin(), ring.end());
  ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  if (ring.size() != 5) throw SymmetryUnavailable("pentagon does not have 5 edge-neighbors");
  for (int f : ring)
    if (base.faces[f].size() != 3)
      throw SymmetryUnavailable("pentagon neighbors must be triangles");

  // The rotation advancing the pentagon cycle by one step: R w_k = w_{k+1}.
  // A linear map is pinned by its action on a basis, so R is the (unique)
  // order-5 symmetry about this pentagon's axis; everything below verifies
  // that exactly.
  const Vec3Q w0 = ev[pf[0]], w1 = ev[pf[1]], w2 = ev[pf[2]], w3 = ev[pf[3]];
  Mat3 A = from_columns(w0, w1, w2);
  Q5 dA = det3(A);
  if (dA.is_zero()) throw SymmetryUnavailable("pentagon frame is degenerate");
  Mat3 R = scale(matmul(from_columns(w1, w2, w3), adjugate(A)), dA.inverse());

  if (!mat_eq(matmul(transpose(R), R), identity3()))
    throw SymmetryUnavailable("candidate map is not orthogonal");
  if (det3(R) != Q5(1)) throw SymmetryUnavailable("candidate map is not a rotation");
  Mat3 R5 = matmul(matmul(matmul(matmul(R, R), R), R), R);
  if (!mat_eq(R5, identity3())) throw SymmetryUnavailable("candidate rotation is not of order 5");

  std::map<Vec3Q, int> vertex_index;
  for (int i = 0; i < base.vertex_count(); ++i) vertex_index.emplace(ev[i], i);
  std::vector<int> perm(base.vertex_count());
  for (int i = 0; i < base.vertex_count(); ++i) {
    auto it = vertex_index.find(mat_apply(R, ev[i]));
    if (it == vertex_index.end())
      throw SymmetryUnavailable("rotation does not preserve the vertex set");
    perm[i] = it->second;
  }

  std::map<std::vector<int>, int> face_index;
  for (int f = 0; f < base.face_count(); ++f) {
    std::vector<int> key = base.faces[f];
    std::sort(key.begin(), key.end());
    face_index.emplace(std::move(key), f);
  }
  auto face_image = [&](int f) {
    std::vector<int> key;
    for (int v : base.faces[f]) key.push_back(perm[v]);
    std::sort(key.begin(), key.end());
    auto it = face_index.find(key);
    if (it == face_index.end()) throw SymmetryUnavailable("rotation does not preserve the face set");
    return it->second;
  };
  if (face_image(pentagon) != pentagon)
    throw SymmetryUnavailable("rotation does not fix the pentagon");

  std::array<int, 5> orbit{};
  orbit[0] = ring[0];
  for (int k = 1; k < 5; ++k) orbit[k] = face_image(orbit[k - 1]);
  std::set<int> orbit_set(orbit.begin(), orbit.end());
  if (orbit_set != std::set<int>(ring.begin(), ring.end()) || face_image(orbit[4]) != orbit[0])
    throw SymmetryUnavailable("adjacent triangles do not form one 5-cycle");

  // Axis: the pentagon centroid direction, fixed by R. Apexes of one rotation
  // orbit share their axis support, so the ring plane is axis-orthogonal; its
  // offset is averaged only to keep the expression symmetric in the 5 apexes.
  Vec3Q c5{Q5(), Q5(), Q5()};
  for (int v : pf) c5 = c5 + ev[v];
  c5 = Q5(make_rat(1, 5)) * c5;
  if (c5.norm2().sign() <= 0) throw SymmetryUnavailable("pentagon centroid is at the origin");
  assert(mat_apply(R, c5) == c5);

  Real inv_len = Real(1) / Real::sqrt(Real(c5.norm2()));
  Vec3R axis = inv_len * Vec3R(c5);
  Real offset(0);
  for (int k = 0; k < 5; ++k) offset = offset + axis.dot(e.apexes[orbit[k]]);
  offset = offset * Real(make_rat(1, 5));

  RingPlane out;
  out.plane = Plane{axis, offset};
  out.certificate.rotation = R;
  out.certificate.orbit = orbit;
  out.certificate.vertex_permutation = std::move(perm);
  return out;
}

Real apex_deviation(const ElevatedSolid& e, int pentagon) {
  RingPlane rp = ring_plane(e, pentagon);
  return (rp.plane.normal.dot(e.apexes[pentagon]) - rp.plane.offset) / e.edge;
}

ContactReport contact_and_stability(const Polyhedron& mesh, const Vec3R& direction,
                                    const SignPolicy& policy) {
  SignVerdict dn = direction.norm2().sign(policy);
  if (!dn.decided() || dn.value() <= 0) throw ZeroDirection();

  ContactReport out;
  out.direction = direction;
  out.bits_used = dn.bits_used;

  const int n = mesh.vertex_count();
  if (n == 0) throw std::invalid_argument("contact analysis on an empty mesh");
  std::vector<Real> support;
  support.reserve(n);
  for (const auto& v : mesh.vertices) support.push_back(direction.dot(v));

  bool all_exact = true;
  for (const auto& s : support)
    if (!s.exact()) {
      all_exact = false;
      break;
    }

  std::vector<char> alive(n, 1);
  if (all_exact) {
    Q5 best = *support[0].exact();
    for (int i = 1; i < n; ++i)
      if (*support[i].exact() > best) best = *support[i].exact();
    for (int i = 0; i < n; ++i) alive[i] = (*support[i].exact() == best);
  } else {
    std::vector<std::optional<Interval>> acc(n);
    unsigned bits = policy.start_bits;
    for (;;) {
      bool evaluated = false;
      try {
        for (int i = 0; i < n; ++i) {
          if (!alive[i]) continue;
          Interval iv = support[i].eval(bits);
          acc[i] = acc[i] ? Interval::intersect(*acc[i], iv) : iv;
        }
        evaluated = true;
      } catch (const DivisorStraddlesZero&) {
        if (bits >= policy.max_bits) throw;
      } catch (const SqrtOfNegative& e2) {
        if (!e2.straddled || bits >= policy.max_bits) throw;
      }
      bool unresolved = false;
      if (evaluated) {
        // Prune everything certifiably below the best lower bound.
        const Dyadic* best_lo = nullptr;
        for (int i = 0; i < n; ++i)
          if (alive[i] && (!best_lo || acc[i]->lo.cmp(*best_lo) > 0)) best_lo = &acc[i]->lo;
        for (int i = 0; i < n; ++i)
          if (alive[i] && acc[i]->hi.cmp(*best_lo) < 0) alive[i] = 0;
        // Pairwise ties: the difference expression cancels shared error.
        std::vector<int> live;
        for (int i = 0; i < n; ++i)
          if (alive[i]) live.push_back(i);
        for (size_t a = 0; a < live.size(); ++a) {
          if (!alive[live[a]]) continue;
          for (size_t b = a + 1; b < live.size(); ++b) {
            if (!alive[live[a]] || !alive[live[b]]) continue;
            SignVerdict v = (support[live[a]] - support[live[b]]).sign(SignPolicy{bits, bits});
            if (v.kind == SignVerdict::Kind::Positive)
              alive[live[b]] = 0;
            else if (v.kind == SignVerdict::Kind::Negative)
              alive[live[a]] = 0;
            else if (!v.decided())
              unresolved = true;
          }
        }
      } else {
        unresolved = true;
      }
      out.bits_used = std::max(out.bits_used, bits);
      if (!unresolved) break;
      if (bits >= policy.max_bits) {
        // Ties that survive max precision: flag every still-alive vertex
        // involved in an uncertified pair.
        std::vector<int> live;
        for (int i = 0; i < n; ++i)
          if (alive[i]) live.push_back(i);
        std::set<int> marg;
        for (size_t a = 0; a < live.size(); ++a)
          for (size_t b = a + 1; b < live.size(); ++b) {
            SignVerdict v =
                (support[live[a]] - support[live[b]]).sign(SignPolicy{policy.max_bits, policy.max_bits});
            if (!v.decided()) {
              marg.insert(live[a]);
              marg.insert(live[b]);
            }
          }
        out.marginal.assign(marg.begin(), marg.end());
        break;
      }
      bits = std::min(bits * 2, policy.max_bits);
    }
  }

  for (int i = 0; i < n; ++i)
    if (alive[i]) out.touching.push_back(i);

  // Margins: certified support deficit of each non-touching vertex against
  // the first touching vertex.
  int anchor = out.touching.front();
  for (int i = 0; i < n; ++i) {
    if (alive[i]) continue;
    Real deficit = support[anchor] - support[i];
    auto enc = nonzero_enclosure(deficit, policy, out.bits_used);
    if (!enc) throw std::logic_error("non-touching vertex margin not separable from zero");
    out.margins.emplace(i, *enc);
  }

  // Static balance: centroid projection strictly inside the hull of the
  // touching projections. Vertex centroid; for the symmetric solids in scope
  // it coincides with the volume centroid.
  if (out.touching.size() <= 2) {
    out.stable = ContactReport::Stability::No;
    return out;
  }
  Vec3R m(Real(0), Real(0), Real(0));
  for (const auto& v : mesh.vertices) m = m + v;
  m = Real(make_rat(1, n)) * m;

  Vec3R e1, e2;
  bool have_basis = false;
  for (const Vec3Q& g : {Vec3Q{Q5(1), Q5(), Q5()}, Vec3Q{Q5(), Q5(1), Q5()}, Vec3Q{Q5(), Q5(), Q5(1)}}) {
    Vec3R cand = direction.cross(Vec3R(g));
    SignVerdict v = cand.norm2().sign(policy);
    if (v.decided() && v.value() > 0) {
      e1 = cand;
      have_basis = true;
      break;
    }
  }
  if (!have_basis) throw std::logic_error("no projection basis for a certified nonzero direction");
  e2 = direction.cross(e1);

  struct P2 {
    Real x, y;
  };
  std::vector<P2> pts;
  for (int i : out.touching) {
    Vec3R d = mesh.vertices[i] - m;
    Real px = d.dot(e1), py = d.dot(e2);
    bool zx = px.exact() && px.exact()->is_zero();
    bool zy = py.exact() && py.exact()->is_zero();
    if (zx && zy) continue;  // a contact exactly under the centroid never hurts balance
    pts.push_back(P2{px, py});
  }
  if (pts.size() <= 1) {
    out.stable = ContactReport::Stability::No;
    return out;
  }
  bool all_two_sided = true, any_certified_one_sided = false;
  for (size_t k = 0; k < pts.size(); ++k) {
    bool has_pos = false, has_neg = false, undecided = false;
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == k) continue;
      Real cr = pts[k].x * pts[j].y - pts[k].y * pts[j].x;
      SignVerdict v = cr.sign(policy);
      out.bits_used = std::max(out.bits_used, v.bits_used);
      if (v.kind == SignVerdict::Kind::Positive) has_pos = true;
      else if (v.kind == SignVerdict::Kind::Negative) has_neg = true;
      else if (!v.decided()) undecided = true;
    }
    if (!(has_pos && has_neg)) all_two_sided = false;
    if (!undecided && (!has_pos || !has_neg)) any_certified_one_sided = true;
  }
  out.stable = all_two_sided ? ContactReport::Stability::Yes
             : any_certified_one_sided ? ContactReport::Stability::No
                                       : ContactReport::Stability::Marginal;
  return out;
}

ContactReport contact_and_stability(const ElevatedSolid& e, const Vec3R& direction,
                                    const SignPolicy& policy) {
  return contact_and_stability(e.mesh(), direction, policy);
}

HeightSolution solve_coplanar_height(SeedId seed, const Real& triangle_height, const Rat& tol,
                                     const SignPolicy& policy) {
  if (sgn(tol) <= 0) throw std::invalid_argument("tol must be positive");
  SignVerdict hs = triangle_height.sign(policy);
  if (hs.decided() && hs.value() < 0) throw NegativeHeight(3);

  const Polyhedron& base = build_seed(seed);
  int pentagon = -1;
  for (int f = 0; f < base.face_count(); ++f)
    if (base.faces[f].size() == 5) {
      pentagon = f;
      break;
    }
  if (pentagon < 0) throw NotAPentagon(-1);

  // Ring plane and triangle apexes depend only on the fixed triangle height.
  ElevatedSolid e0 = elevate(
      base, HeightRule::explicit_heights({{3, triangle_height}, {5, Real(0)}}), policy);

  auto deviation_at = [&](const Real& hp) {
    // Trial heights may be negative (the coplanarizing offset can point into
    // the solid), so apexes are placed directly instead of going through
    // elevate's sign guard.
    ElevatedSolid e = e0;
    for (int fi = 0; fi < base.face_count(); ++fi) {
      if (base.faces[fi].size() != 5) continue;
      FaceFrame frame = face_frame(base, fi, policy);
      e.apexes[fi] = frame.centroid + (hp * e.edge) * frame.unit_normal;
    }
    e.heights.at(5) = hp;
    return apex_deviation(e, pentagon);
  };

  // delta is affine in h_p (the apex slides along the fixed pentagon axis),
  // so the secant through h_p = 0 and h_p = 1 is the exact root.
  Real d0 = deviation_at(Real(0));
  Real d1 = deviation_at(Real(1));
  Real root = d0 / (d0 - d1);

  Real::Refined r = root.refine(tol, policy);
  if (!r.reached)
    throw ToleranceUnreachable("root interval width exceeds tol at max precision");

  SignVerdict at_lo = deviation_at(Real(r.interval.lo.to_rat())).sign(policy);
  SignVerdict at_hi = deviation_at(Real(r.interval.hi.to_rat())).sign(policy);
  if (at_lo.kind != SignVerdict::Kind::Negative || at_hi.kind != SignVerdict::Kind::Positive)
    throw ToleranceUnreachable("bracket endpoint signs not certifiable at max precision");

  HeightSolution out{r.interval, root,
                     std::max({r.bits_used, at_lo.bits_used, at_hi.bits_used})};
  return out;
}

}  // namespace pacioli
