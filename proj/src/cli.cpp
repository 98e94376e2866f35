#include "pacioli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pacioli/claim.hpp"
#include "pacioli/errors.hpp"
#include "pacioli/model_io.hpp"

namespace pacioli {

namespace {

std::vector<std::string> seed_names() {
  std::vector<std::string> out;
  for (const auto& s : list_seeds()) out.push_back(s.name);
  return out;
}

int height_key_arity(const std::string& key) {
  if (key == "tri" || key == "triangle" || key == "3") return 3;
  if (key == "square" || key == "quad" || key == "4") return 4;
  if (key == "pent" || key == "pentagon" || key == "5") return 5;
  if (key == "decagon" || key == "10") return 10;
  throw std::invalid_argument("unknown face class '" + key + "' (use tri/square/pent/decagon)");
}

HeightRule parse_heights(const std::string& arg) {
  std::map<int, Real> h;
  std::istringstream is(arg);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("height entry '" + item + "' is not key=value");
    h.emplace(height_key_arity(item.substr(0, eq)), Real(rat_from_decimal(item.substr(eq + 1))));
  }
  if (h.empty()) throw std::invalid_argument("--heights given but empty");
  return HeightRule::explicit_heights(std::move(h));
}

std::optional<HeightRule> rule_from_flags(const std::string& elevate_mode,
                                          const std::string& heights) {
  if (!heights.empty()) return parse_heights(heights);
  if (elevate_mode == "equilateral") return HeightRule::equilateral();
  if (elevate_mode == "zero") return HeightRule::zero();
  return std::nullopt;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return 1;
  }
  return 0;
}

// face selector "pentagon:0" / "triangle:7" / bare index
int resolve_face(const Polyhedron& p, const std::string& sel) {
  auto colon = sel.find(':');
  if (colon == std::string::npos) {
    int idx = std::stoi(sel);
    if (idx < 0 || idx >= p.face_count())
      throw std::invalid_argument("face index out of range: " + sel);
    return idx;
  }
  int arity = 0;
  std::string cls = sel.substr(0, colon);
  if (cls == "triangle") arity = 3;
  else if (cls == "square") arity = 4;
  else if (cls == "pentagon") arity = 5;
  else if (cls == "decagon") arity = 10;
  else throw std::invalid_argument("unknown face class '" + cls + "'");
  int k = std::stoi(sel.substr(colon + 1));
  int seen = 0;
  for (int f = 0; f < p.face_count(); ++f) {
    if (static_cast<int>(p.faces[f].size()) != arity) continue;
    if (seen++ == k) return f;
  }
  throw std::invalid_argument("no " + cls + " number " + std::to_string(k));
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int run_catalog() {
  std::ostringstream os;
  for (const auto& s : list_seeds()) {
    os << s.name << "  V=" << s.vertices << " E=" << s.edges << " F=" << s.faces << "  faces:";
    for (const auto& [arity, count] : s.faces_by_arity) os << ' ' << arity << 'x' << count;
    os << "  edge^2=" << s.edge_sq.str() << "\n";
  }
  std::cout << os.str();
  return 0;
}

int run_build(const std::string& seed_arg, const std::string& elevate_mode,
              const std::string& heights, const std::string& out_path, int digits) {
  ModelFormat fmt;
  if (out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".off")
    fmt = ModelFormat::Off;
  else if (out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".obj")
    fmt = ModelFormat::Obj;
  else {
    std::cerr << "error: --out must end in .off or .obj\n";
    return 2;
  }
  const Polyhedron& seed = build_seed(*seed_from_name(seed_arg));
  std::optional<HeightRule> rule = rule_from_flags(elevate_mode, heights);
  std::string text =
      rule ? export_model(elevate(seed, *rule).mesh(), fmt, digits) : export_model(seed, fmt, digits);
  return emit(text, out_path);
}

int run_verify(const std::string& claim, const std::string& seed_arg,
               const std::string& elevate_mode, const std::string& heights, unsigned start_bits,
               unsigned max_bits, const std::string& json_path) {
  ClaimSpec spec;
  spec.claim_id = claim;
  spec.seed = *seed_from_name(seed_arg);
  if (auto rule = rule_from_flags(elevate_mode, heights)) spec.rule = *rule;
  SignPolicy policy{start_bits, max_bits};
  try {
    ClaimReport rep = run_claim(spec, policy);
    int rc = emit(dump(rep.to_json()), json_path);
    if (rc != 0) return rc;
    return rep.verdict == "undecided" ? 3 : 0;
  } catch (const EquilateralInfeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    int rc = emit(dump(make_refusal(spec, e)), json_path);
    return rc != 0 ? rc : 4;
  }
}

int run_solve(const std::string& fixed_tri, const std::string& tol_text,
              const std::string& json_path, unsigned start_bits, unsigned max_bits) {
  SignPolicy policy{start_bits, max_bits};
  Real h_t = fixed_tri == "equilateral" ? equilateral_height(3) : Real(rat_from_decimal(fixed_tri));
  Rat tol = rat_from_decimal(tol_text);
  HeightSolution sol = solve_coplanar_height(SeedId::Icosidodecahedron, h_t, tol, policy);
  nlohmann::ordered_json j;
  unsigned used = sol.bits_used;
  j["fixed_triangle_height"] =
      fixed_tri == "equilateral"
          ? h_t.refine(rat_from_decimal("1e-36"), policy).interval.midpoint(192).decimal(34, MPFR_RNDN)
          : fixed_tri;
  j["tol"] = tol_text;
  j["corrected_pentagon_height"] = {{"lo", sol.bracket.lo.decimal(40, MPFR_RNDD)},
                                    {"hi", sol.bracket.hi.decimal(40, MPFR_RNDU)}};
  j["delta_signs"] = {{"at_lo", "negative"}, {"at_hi", "positive"}};
  j["precision"] = {{"start_bits", start_bits}, {"used_bits", used}, {"max_bits", max_bits}};
  j["tool_version"] = kToolVersion;
  return emit(dump(j), json_path);
}

int run_contact(const std::string& seed_arg, const std::string& elevate_mode,
                const std::string& heights, const std::string& face_sel, unsigned start_bits,
                unsigned max_bits) {
  SignPolicy policy{start_bits, max_bits};
  const Polyhedron& seed = build_seed(*seed_from_name(seed_arg));
  int face = resolve_face(seed, face_sel);
  Vec3Q axis{Q5(), Q5(), Q5()};
  for (int v : seed.faces[face]) axis = axis + (*seed.exact_vertices)[v];

  std::optional<HeightRule> rule = rule_from_flags(elevate_mode, heights);
  ContactReport rep = rule ? contact_and_stability(elevate(seed, *rule, policy), Vec3R(axis), policy)
                           : contact_and_stability(seed, Vec3R(axis), policy);

  nlohmann::ordered_json j;
  j["seed"] = seed_arg;
  j["face"] = face_sel;
  j["face_index"] = face;
  j["direction"] = "face_axis";
  j["elevated"] = rule.has_value();
  j["touching"] = rep.touching;
  j["marginal"] = rep.marginal;
  switch (rep.stable) {
    case ContactReport::Stability::Yes: j["stable"] = true; break;
    case ContactReport::Stability::No: j["stable"] = false; break;
    case ContactReport::Stability::Marginal: j["stable"] = "marginal"; break;
  }
  j["tool_version"] = kToolVersion;
  return emit(dump(j), "");
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"certified analysis of pyramid-elevated polyhedra (Pacioli's 1509 claim)"};
  app.require_subcommand(1);

  auto seed_check = CLI::IsMember(seed_names());
  unsigned start_bits = 64, max_bits = 4096;

  auto* cat = app.add_subcommand("catalog", "list seed solids with counts");

  auto* build = app.add_subcommand("build", "export a seed or its elevation to OFF/OBJ");
  std::string b_seed, b_elevate, b_heights, b_out;
  int b_digits = 17;
  build->add_option("seed", b_seed, "seed name")->required()->check(seed_check);
  build->add_option("--elevate", b_elevate, "elevation rule")
      ->check(CLI::IsMember({"equilateral", "zero"}));
  build->add_option("--heights", b_heights, "explicit heights, e.g. tri=0.8,pent=0.5");
  build->add_option("--out", b_out, "output file (.off or .obj)")->required();
  build->add_option("--digits", b_digits, "significant digits")->check(CLI::Range(6, 40));

  auto* verify = app.add_subcommand("verify", "run a registered claim and report JSON");
  std::string v_claim, v_seed = "icosidodecahedron", v_elevate, v_heights, v_json;
  verify->add_option("claim", v_claim, "claim id")->required()->check(CLI::IsMember({kPacioliClaimId}));
  verify->add_option("--seed", v_seed, "seed name")->check(seed_check);
  verify->add_option("--elevate", v_elevate, "height rule override")
      ->check(CLI::IsMember({"equilateral", "zero"}));
  verify->add_option("--heights", v_heights, "explicit heights, e.g. tri=0.8,pent=0.5");
  verify->add_option("--precision-start", start_bits, "starting precision (bits)");
  verify->add_option("--precision-max", max_bits, "maximum precision (bits)");
  verify->add_option("--json", v_json, "write the report here instead of stdout");

  auto* solve = app.add_subcommand("solve-height", "pentagon height that flattens the six tips");
  std::string s_tri = "equilateral", s_tol = "1e-30", s_json;
  solve->add_option("--fixed-tri", s_tri, "triangle height: 'equilateral' or a decimal");
  solve->add_option("--tol", s_tol, "target interval width (decimal)");
  solve->add_option("--json", s_json, "write the result here instead of stdout");
  solve->add_option("--precision-start", start_bits, "starting precision (bits)");
  solve->add_option("--precision-max", max_bits, "maximum precision (bits)");

  auto* contact = app.add_subcommand("contact", "which tips touch the table along a face axis");
  std::string c_seed, c_elevate, c_heights, c_face;
  contact->add_option("--seed", c_seed, "seed name")->required()->check(seed_check);
  contact->add_option("--elevate", c_elevate, "elevation rule")
      ->check(CLI::IsMember({"equilateral", "zero"}));
  contact->add_option("--heights", c_heights, "explicit heights");
  contact->add_option("--face", c_face, "face selector, e.g. pentagon:0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (start_bits < 8 || start_bits > max_bits) {
    std::cerr << "error: require 8 <= precision-start <= precision-max\n";
    return 2;
  }

  try {
    if (cat->parsed()) return run_catalog();
    if (build->parsed()) return run_build(b_seed, b_elevate, b_heights, b_out, b_digits);
    if (verify->parsed())
      return run_verify(v_claim, v_seed, v_elevate, v_heights, start_bits, max_bits, v_json);
    if (solve->parsed()) return run_solve(s_tri, s_tol, s_json, start_bits, max_bits);
    if (contact->parsed())
      return run_contact(c_seed, c_elevate, c_heights, c_face, start_bits, max_bits);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const EquilateralInfeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const NegativeHeight& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const MissingExplicitHeight& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const NotAPentagon& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const SymmetryUnavailable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ZeroDirection& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ToleranceUnreachable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace pacioli
