#include <doctest.h>

#include <algorithm>
#include <set>

#include "pacioli/catalog.hpp"
#include "pacioli/elevate.hpp"
#include "pacioli/errors.hpp"
#include "pacioli/model_io.hpp"
#include "support.hpp"

using namespace pacioli;
using namespace pacioli::testsupport;

namespace {

Polyhedron dummy(int vertex_count, std::vector<std::vector<int>> faces) {
  Polyhedron p;
  for (int i = 0; i < vertex_count; ++i)
    p.vertices.push_back(Vec3R(Real(i), Real(i * i), Real(i * i * i)));
  p.faces = std::move(faces);
  return p;
}

bool small_magnitude(const Interval& i, const Rat& bound) {
  return i.hi.cmp_rat(bound) < 0 && i.lo.cmp_rat(-bound) > 0;
}

}  // namespace

TEST_CASE("derive_topology flags bad meshes") {
  // A lone triangle leaves every edge with a single face.
  CHECK_THROWS_AS(derive_topology(dummy(3, {{0, 1, 2}})), NonManifoldEdge);
  CHECK_THROWS_AS(derive_topology(dummy(4, {{0, 1, 2}, {0, 1, 3}})), OrientationMismatch);
}

TEST_CASE("adjacency structure of catalog seeds") {
  const Polyhedron& icosi = build_seed(SeedId::Icosidodecahedron);
  Topology t = derive_topology(icosi);
  for (int f = 0; f < icosi.face_count(); ++f) {
    if (icosi.faces[f].size() != 5) continue;
    CHECK(t.face_adjacency[f].size() == 5);
    for (int g : t.face_adjacency[f]) CHECK(icosi.faces[g].size() == 3);
  }

  const Polyhedron& cube = build_seed(SeedId::Cube);
  for (const auto& adj : derive_topology(cube).face_adjacency) CHECK(adj.size() == 4);

  const Polyhedron& tet = build_seed(SeedId::Tetrahedron);
  Topology tt = derive_topology(tet);
  CHECK(tt.edge_count() == 6);
  for (const auto& adj : tt.face_adjacency) CHECK(adj.size() == 3);
}

TEST_CASE("face_frame on an octahedron face") {
  const Polyhedron& octa = build_seed(SeedId::Octahedron);
  const auto& vs = *octa.exact_vertices;
  Q5 one(1), zero;
  int face = -1;
  for (int f = 0; f < octa.face_count(); ++f) {
    std::set<std::string> got;
    for (int v : octa.faces[f]) got.insert(vs[v].x.str() + "|" + vs[v].y.str() + "|" + vs[v].z.str());
    if (got == std::set<std::string>{"1|0|0", "0|1|0", "0|0|1"}) face = f;
  }
  REQUIRE(face >= 0);

  FaceFrame fr = face_frame(octa, face);
  REQUIRE(fr.centroid.exact());
  Q5 third(make_rat(1, 3));
  CHECK(*fr.centroid.exact() == Vec3Q{third, third, third});

  // Unit normal along (1,1,1)/sqrt(3): parallel to (1,1,1), unit length,
  // positive outward component.
  Vec3R ones(Vec3Q{one, one, one});
  Interval cross_sq = fr.unit_normal.cross(ones).norm2().eval(128);
  CHECK(small_magnitude(cross_sq, pow2_inv(100)));
  CHECK(fr.unit_normal.norm2().eval(128).contains_rat(1));
  CHECK(fr.unit_normal.dot(ones).sign().kind == SignVerdict::Kind::Positive);
}

TEST_CASE("face_frame on the cube is exact") {
  const Polyhedron& cube = build_seed(SeedId::Cube);
  const auto& vs = *cube.exact_vertices;
  Q5 half(make_rat(1, 2));
  for (int f = 0; f < cube.face_count(); ++f) {
    bool top = true;
    for (int v : cube.faces[f]) top = top && vs[v].z == half;
    if (!top) continue;
    FaceFrame fr = face_frame(cube, f);
    REQUIRE(fr.unit_normal.exact());
    CHECK(*fr.unit_normal.exact() == Vec3Q{Q5(), Q5(), Q5(1)});
    CHECK(*fr.centroid.exact() == Vec3Q{Q5(), Q5(), half});
    return;
  }
  FAIL("cube has no top face");
}

TEST_CASE("face_frame points outward on every catalog face") {
  for (const auto& s : list_seeds()) {
    const Polyhedron& p = build_seed(s.id);
    CAPTURE(s.name);
    for (int f = 0; f < p.face_count(); ++f) {
      FaceFrame fr = face_frame(p, f);
      SignVerdict v = fr.unit_normal.dot(fr.centroid).sign();  // solid centroid is the origin
      CHECK(v.kind == SignVerdict::Kind::Positive);
    }
  }
}

TEST_CASE("face_frame rejects degenerate faces") {
  Polyhedron p;
  p.vertices = {Vec3R(Real(0), Real(0), Real(0)), Vec3R(Real(1), Real(0), Real(0)),
                Vec3R(Real(2), Real(0), Real(0))};
  p.faces = {{0, 1, 2}};
  CHECK_THROWS_AS(face_frame(p, 0), DegenerateFace);
}

TEST_CASE("equilateral elevation of the icosidodecahedron") {
  const Polyhedron& base = build_seed(SeedId::Icosidodecahedron);
  ElevatedSolid e = elevate(base, HeightRule::equilateral());

  // h(3)^2 = 2/3, h(5)^2 = (5 - sqrt5)/10, exactly.
  CHECK(Real::sq(e.heights.at(3)).eval(128).contains_rat(make_rat(2, 3)));
  Interval h5sq = Real::sq(e.heights.at(5)).eval(128);
  Q5 want(make_rat(1, 2), make_rat(-1, 10));
  Interval h5ref = Interval::from_q5(want, 128);
  CHECK(h5sq.lo.cmp(h5ref.hi) <= 0);
  CHECK(h5ref.lo.cmp(h5sq.hi) <= 0);

  // Lateral edges equal the base edge: |apex - v|^2 - 1 is a true zero.
  for (int f : {0, 20}) {  // one triangle, one pentagon
    for (int v : base.faces[f]) {
      Real resid = (e.apexes[f] - base.vertices[v]).norm2() - Real(1);
      CHECK(resid.sign({64, 128}).kind == SignVerdict::Kind::Undecided);
      CHECK(small_magnitude(resid.eval(128), pow2_inv(100)));
    }
  }
  // Containment of the exact value 1 at every precision, all faces.
  for (int f = 0; f < base.face_count(); ++f)
    for (int v : base.faces[f])
      for (unsigned bits : {64u, 256u})
        CHECK((e.apexes[f] - base.vertices[v]).norm2().eval(bits).contains_rat(1));

  Polyhedron m = e.mesh();
  Topology t = derive_topology(m);
  CHECK(m.vertex_count() == 62);
  CHECK(t.edge_count() == 180);
  CHECK(m.face_count() == 120);
  CHECK(m.vertex_count() - t.edge_count() + m.face_count() == 2);
  CHECK(base.faces_by_arity() == std::map<int, int>{{3, 20}, {5, 12}});
  CHECK(m.face_labels.size() == m.faces.size());
  CHECK(m.face_labels[0] == "base_face:0");
}

TEST_CASE("elevated meshes stay closed for every feasible rule") {
  for (const auto& s : list_seeds()) {
    const Polyhedron& p = build_seed(s.id);
    CAPTURE(s.name);

    std::vector<HeightRule> rules{HeightRule::zero()};
    if (!s.faces_by_arity.count(10)) {
      rules.push_back(HeightRule::equilateral());
    } else {
      rules.push_back(HeightRule::explicit_heights(
          {{3, Real(make_rat(1, 2))}, {10, Real(make_rat(1, 4))}}));
    }
    for (const auto& rule : rules) {
      ElevatedSolid e = elevate(p, rule);
      Polyhedron m = e.mesh();
      Topology t = derive_topology(m);
      long sum_arity = 0;
      for (const auto& f : p.faces) sum_arity += static_cast<long>(f.size());
      CHECK(m.vertex_count() == p.vertex_count() + p.face_count());
      CHECK(m.face_count() == sum_arity);
      CHECK(t.edge_count() == s.edges + sum_arity);
      CHECK(m.vertex_count() - t.edge_count() + m.face_count() == 2);
    }
  }
}

TEST_CASE("zero rule pins apexes to centroids") {
  const Polyhedron& base = build_seed(SeedId::Icosidodecahedron);
  ElevatedSolid e = elevate(base, HeightRule::zero());
  for (int f = 0; f < base.face_count(); ++f) {
    auto apex = e.apexes[f].exact();
    auto centroid = face_frame(base, f).centroid.exact();
    REQUIRE(apex);
    REQUIRE(centroid);
    CHECK(*apex == *centroid);
  }
}

TEST_CASE("explicit heights equal to the closed forms reproduce equilateral apexes") {
  const Polyhedron& base = build_seed(SeedId::Icosidodecahedron);
  ElevatedSolid eq = elevate(base, HeightRule::equilateral());
  ElevatedSolid ex = elevate(base, HeightRule::explicit_heights(
                                       {{3, equilateral_height(3)}, {5, equilateral_height(5)}}));
  for (unsigned bits : {64u, 128u}) {
    auto overlap = [&](const Real& a, const Real& b) {
      Interval ia = a.eval(bits), ib = b.eval(bits);
      return ia.lo.cmp(ib.hi) <= 0 && ib.lo.cmp(ia.hi) <= 0;
    };
    for (int f = 0; f < base.face_count(); ++f) {
      CHECK(overlap(eq.apexes[f].x, ex.apexes[f].x));
      CHECK(overlap(eq.apexes[f].y, ex.apexes[f].y));
      CHECK(overlap(eq.apexes[f].z, ex.apexes[f].z));
    }
  }
}

TEST_CASE("raising a height moves the apex outward") {
  const Polyhedron& base = build_seed(SeedId::Icosidodecahedron);
  ElevatedSolid low = elevate(base, HeightRule::explicit_heights(
                                        {{3, Real(make_rat(4, 5))}, {5, Real(make_rat(1, 2))}}));
  ElevatedSolid high = elevate(base, HeightRule::explicit_heights(
                                         {{3, Real(make_rat(9, 10))}, {5, Real(make_rat(3, 5))}}));
  for (int f = 0; f < base.face_count(); ++f) {
    SignVerdict v = (high.apexes[f].norm2() - low.apexes[f].norm2()).sign();
    CHECK(v.kind == SignVerdict::Kind::Positive);
  }
}

TEST_CASE("elevation rejects infeasible rules") {
  const Polyhedron& trunc = build_seed(SeedId::TruncatedDodecahedron);
  try {
    elevate(trunc, HeightRule::equilateral());
    FAIL("expected EquilateralInfeasible");
  } catch (const EquilateralInfeasible& e) {
    CHECK(e.arity == 10);
  }
  CHECK_THROWS_AS(equilateral_height(6), EquilateralInfeasible);
  CHECK_THROWS_AS(equilateral_height(10), EquilateralInfeasible);

  const Polyhedron& icosi = build_seed(SeedId::Icosidodecahedron);
  CHECK_THROWS_AS(
      elevate(icosi, HeightRule::explicit_heights({{3, Real(make_rat(-1, 2))}, {5, Real(1)}})),
      NegativeHeight);
  try {
    elevate(icosi, HeightRule::explicit_heights({{3, Real(1)}}));
    FAIL("expected MissingExplicitHeight");
  } catch (const MissingExplicitHeight& e) {
    CHECK(e.arity == 5);
  }
}

TEST_CASE("OFF export layout") {
  std::string off = export_model(build_seed(SeedId::Cube), ModelFormat::Off);
  CHECK(off.substr(0, 11) == "OFF\n8 6 12\n");
  CHECK(off.back() == '\n');
  CHECK(off.find("\r") == std::string::npos);

  std::string elevated =
      export_model(elevate(build_seed(SeedId::Icosidodecahedron), HeightRule::equilateral()).mesh(),
                   ModelFormat::Off);
  CHECK(elevated.substr(0, 15) == "OFF\n62 120 180\n");

  CHECK_THROWS_AS(export_model(build_seed(SeedId::Cube), ModelFormat::Off, 5),
                  std::invalid_argument);
  CHECK_THROWS_AS(export_model(build_seed(SeedId::Cube), ModelFormat::Off, 41),
                  std::invalid_argument);
}

TEST_CASE("OBJ export layout") {
  std::string obj = export_model(build_seed(SeedId::Cube), ModelFormat::Obj);
  CHECK(obj.rfind("v ", 0) == 0);
  size_t vlines = 0, flines = 0;
  std::istringstream is(obj);
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("v ", 0) == 0) ++vlines;
    if (line.rfind("f ", 0) == 0) ++flines;
  }
  CHECK(vlines == 8);
  CHECK(flines == 6);
  CHECK(obj.find("f 0") == std::string::npos);  // OBJ indices are 1-based
}

TEST_CASE("OFF round-trips for all seeds and the elevated solid") {
  auto check_roundtrip = [](const Polyhedron& p) {
    Polyhedron q = parse_off(export_model(p, ModelFormat::Off));
    REQUIRE(q.vertex_count() == p.vertex_count());
    REQUIRE(q.face_count() == p.face_count());
    CHECK(q.faces == p.faces);
    Topology tp = derive_topology(p), tq = derive_topology(q);
    CHECK(tp.edge_count() == tq.edge_count());
  };
  for (const auto& s : list_seeds()) check_roundtrip(build_seed(s.id));
  check_roundtrip(
      elevate(build_seed(SeedId::Icosidodecahedron), HeightRule::equilateral()).mesh());
}

TEST_CASE("OFF export is deterministic") {
  std::string a = export_model(build_seed(SeedId::Icosidodecahedron), ModelFormat::Off);
  std::string b = export_model(build_seed(SeedId::Icosidodecahedron), ModelFormat::Off);
  CHECK(a == b);
}

TEST_CASE("parse_off rejects malformed input") {
  CHECK_THROWS_AS(parse_off("OF\n8 6 12\n"), MalformedHeader);
  CHECK_THROWS_AS(parse_off("OFF\n8 6\n"), MalformedHeader);
  CHECK_THROWS_AS(parse_off("OFF\na b c\n"), MalformedHeader);
  CHECK_THROWS_AS(parse_off("OFF\n1 1 0\n0 0 0\n"), CountMismatch);            // missing face line
  CHECK_THROWS_AS(parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n2 0 1\n"), CountMismatch);
  CHECK_THROWS_AS(parse_off("OFF\n3 1 5\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n"), CountMismatch);
  CHECK_THROWS_AS(parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 99\n"), IndexOutOfRange);

  // Declared E = 0 is the common OFF convention and must be accepted.
  Polyhedron p = parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n3 0 1 2\n");
  CHECK(p.vertex_count() == 3);
  CHECK(p.faces == std::vector<std::vector<int>>{{0, 1, 2}});

  // Comments and blank lines are tolerated.
  Polyhedron q = parse_off("OFF\n# a comment\n\n3 1 0\n0 0 0\n1 0 0\n0 1 0\n\n3 0 1 2\n");
  CHECK(q.vertex_count() == 3);
}
