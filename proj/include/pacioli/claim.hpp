#ifndef PACIOLI_CLAIM_HPP
#define PACIOLI_CLAIM_HPP

#include <json.hpp>

#include "pacioli/errors.hpp"
#include "pacioli/predicates.hpp"

namespace pacioli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kPacioliClaimId = "pacioli-lii";

struct ClaimSpec {
  std::string claim_id = kPacioliClaimId;
  SeedId seed = SeedId::Icosidodecahedron;
  HeightRule rule = HeightRule::equilateral();
  std::optional<int> pentagon;  // default: first pentagonal face in canonical order
};

// Machine-readable verdict on the claim that the six pyramid tips around one
// pentagon lie in a plane. Decimal fields are strings: interval endpoints are
// rounded outward so the printed interval still certifies.
struct ClaimReport {
  std::string claim_id;
  std::string seed;
  std::string height_triangle, height_pentagon, mode;
  std::string verdict;  // "coplanar" | "not_coplanar" | "undecided"
  std::string delta_lo, delta_hi;
  std::string ring_certificate = "symmetry_orbit";
  std::string contact_direction = "pentagon_axis";
  std::vector<int> touching;
  std::string stable;  // "yes" | "no" | "marginal"
  std::string corrected_lo, corrected_hi;
  unsigned start_bits = 0, used_bits = 0, max_bits = 0;
  std::string tool_version = kToolVersion;
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const;
};

// Runs the full pipeline: build, elevate, ring plane, apex deviation,
// six-apex coplanarity, contact along the pentagon axis, corrected-height
// solve. Throws module errors (notably EquilateralInfeasible).
ClaimReport run_claim(const ClaimSpec& spec, const SignPolicy& policy = {});

// Structured refusal document for infeasible configurations.
nlohmann::ordered_json make_refusal(const ClaimSpec& spec, const EquilateralInfeasible& err);

}  // namespace pacioli

#endif
