#include "pacioli/claim.hpp"

#include "pacioli/errors.hpp"

namespace pacioli {

namespace {

// Outward-rounded decimal endpoints: the printed interval contains the dyadic
// one, which contains the true value.
std::string decimal_lo(const Dyadic& d, size_t digits = 40) { return d.decimal(digits, MPFR_RNDD); }
std::string decimal_hi(const Dyadic& d, size_t digits = 40) { return d.decimal(digits, MPFR_RNDU); }

Rat pow10_inv(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return make_rat(mpz_class(1), p);
}

std::string point_decimal(const Real& x, const SignPolicy& policy, unsigned& used) {
  Real::Refined r = x.refine(pow10_inv(36), policy);
  used = std::max(used, r.bits_used);
  return r.interval.midpoint(192).decimal(34, MPFR_RNDN);
}

}  // namespace

nlohmann::ordered_json ClaimReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim_id"] = claim_id;
  j["seed"] = seed;
  j["height_rule"] = {{"triangle", height_triangle}, {"pentagon", height_pentagon}, {"mode", mode}};
  j["verdict"] = verdict;
  j["delta"] = {{"lo", delta_lo}, {"hi", delta_hi}, {"relative_to_edge", true}};
  j["ring_certificate"] = ring_certificate;
  j["contact"] = nlohmann::ordered_json::object();
  j["contact"]["direction"] = contact_direction;
  j["contact"]["touching"] = touching;
  if (stable == "marginal")
    j["contact"]["stable"] = "marginal";
  else
    j["contact"]["stable"] = (stable == "yes");
  j["corrected_pentagon_height"] = {{"lo", corrected_lo}, {"hi", corrected_hi}};
  j["precision"] = {{"start_bits", start_bits}, {"used_bits", used_bits}, {"max_bits", max_bits}};
  j["tool_version"] = tool_version;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

ClaimReport run_claim(const ClaimSpec& spec, const SignPolicy& policy) {
  if (spec.claim_id != kPacioliClaimId)
    throw std::invalid_argument("unknown claim id: " + spec.claim_id);

  const Polyhedron& base = build_seed(spec.seed);

  // Elevation first: an infeasible rule (truncated dodecahedron + Equilateral)
  // must surface as the structured refusal even when the seed also lacks a
  // pentagon.
  ElevatedSolid e = elevate(base, spec.rule, policy);

  int pentagon = -1;
  if (spec.pentagon) {
    pentagon = *spec.pentagon;
  } else {
    for (int f = 0; f < base.face_count(); ++f)
      if (base.faces[f].size() == 5) {
        pentagon = f;
        break;
      }
  }
  if (pentagon < 0) throw NotAPentagon(-1);
  if (!base.faces_by_arity().count(3))
    throw SymmetryUnavailable("the claim needs triangular faces adjacent to a pentagon");

  ClaimReport rep;
  rep.claim_id = spec.claim_id;
  rep.seed = base.name;
  rep.start_bits = policy.start_bits;
  rep.max_bits = policy.max_bits;
  switch (spec.rule.mode) {
    case HeightRule::Mode::Equilateral: rep.mode = "equilateral"; break;
    case HeightRule::Mode::Explicit: rep.mode = "explicit"; break;
    case HeightRule::Mode::Zero: rep.mode = "zero"; break;
  }

  unsigned used = 0;
  rep.height_triangle = point_decimal(e.heights.at(3), policy, used);
  rep.height_pentagon = point_decimal(e.heights.at(5), policy, used);

  RingPlane rp = ring_plane(e, pentagon);
  Real delta = apex_deviation(e, pentagon);

  std::vector<Vec3R> six;
  for (int t : rp.certificate.orbit) six.push_back(e.apexes[t]);
  six.push_back(e.apexes[pentagon]);
  CoplanarityVerdict cv = coplanarity(six, policy);
  used = std::max(used, cv.precision_reached);
  switch (cv.kind) {
    case CoplanarityVerdict::Kind::CoplanarExact: rep.verdict = "coplanar"; break;
    case CoplanarityVerdict::Kind::NotCoplanar: rep.verdict = "not_coplanar"; break;
    case CoplanarityVerdict::Kind::Undecided: rep.verdict = "undecided"; break;
  }

  // Delta enclosure: tight, and excluding zero whenever the verdict says so.
  bool need_sign = cv.kind == CoplanarityVerdict::Kind::NotCoplanar;
  std::optional<Interval> acc;
  {
    Rat target = pow10_inv(35);
    unsigned bits = policy.start_bits;
    for (;;) {
      Interval iv = delta.eval(bits);
      acc = acc ? Interval::intersect(*acc, iv) : iv;
      bool tight = acc->width(bits).cmp_rat(target) <= 0;
      bool signed_ok = !need_sign || acc->sign() != 0;
      if ((tight && signed_ok) || bits >= policy.max_bits) {
        used = std::max(used, bits);
        break;
      }
      bits = std::min(bits * 2, policy.max_bits);
    }
  }
  rep.delta_lo = decimal_lo(acc->lo);
  rep.delta_hi = decimal_hi(acc->hi);

  // Contact along the pentagon's outward axis (exact direction).
  Vec3Q axis{Q5(), Q5(), Q5()};
  for (int v : base.faces[pentagon]) axis = axis + (*base.exact_vertices)[v];
  ContactReport contact = contact_and_stability(e, Vec3R(axis), policy);
  used = std::max(used, contact.bits_used);
  rep.touching = contact.touching;
  switch (contact.stable) {
    case ContactReport::Stability::Yes: rep.stable = "yes"; break;
    case ContactReport::Stability::No: rep.stable = "no"; break;
    case ContactReport::Stability::Marginal: rep.stable = "marginal"; break;
  }

  HeightSolution sol = solve_coplanar_height(spec.seed, e.heights.at(3), pow10_inv(30), policy);
  used = std::max(used, sol.bits_used);
  rep.corrected_lo = decimal_lo(sol.bracket.lo);
  rep.corrected_hi = decimal_hi(sol.bracket.hi);

  rep.used_bits = used;
  if (spec.seed == SeedId::Icosidodecahedron)
    rep.notes.push_back(
        "The 1509 source calls the base a 'truncated dodecahedron' while describing 12 pentagonal "
        "and 20 triangular pyramid bases; those counts identify the icosidodecahedron, which this "
        "claim uses. The actual truncated dodecahedron (12 decagons) admits no equilateral "
        "elevation.");
  return rep;
}

nlohmann::ordered_json make_refusal(const ClaimSpec& spec, const EquilateralInfeasible& err) {
  nlohmann::ordered_json j;
  j["claim_id"] = spec.claim_id;
  j["seed"] = seed_name(spec.seed);
  j["refusal"] = {{"error", "equilateral_infeasible"},
                  {"arity", err.arity},
                  {"detail", std::string(err.what())}};
  j["tool_version"] = kToolVersion;
  return j;
}

}  // namespace pacioli
