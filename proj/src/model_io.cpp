#include "pacioli/model_io.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "pacioli/errors.hpp"

namespace pacioli {

namespace {

std::string coord(const Real& x, int digits) {
  if (x.exact() && x.exact()->is_zero()) return "0";
  return x.eval(128).midpoint(128).decimal(static_cast<size_t>(digits), MPFR_RNDN);
}

long edge_count(const Polyhedron& p) {
  long twice = 0;
  for (const auto& f : p.faces) twice += static_cast<long>(f.size());
  return twice / 2;
}

}  // namespace

std::string export_model(const Polyhedron& mesh, ModelFormat format, int digits) {
  if (digits < 6 || digits > 40)
    throw std::invalid_argument("digits must be in [6, 40], got " + std::to_string(digits));
  std::ostringstream os;
  if (format == ModelFormat::Off) {
    os << "OFF\n";
    os << mesh.vertex_count() << ' ' << mesh.face_count() << ' ' << edge_count(mesh) << '\n';
    for (const auto& v : mesh.vertices)
      os << coord(v.x, digits) << ' ' << coord(v.y, digits) << ' ' << coord(v.z, digits) << '\n';
    for (const auto& f : mesh.faces) {
      os << f.size();
      for (int i : f) os << ' ' << i;
      os << '\n';
    }
  } else {
    for (const auto& v : mesh.vertices)
      os << "v " << coord(v.x, digits) << ' ' << coord(v.y, digits) << ' ' << coord(v.z, digits)
         << '\n';
    for (const auto& f : mesh.faces) {
      os << 'f';
      for (int i : f) os << ' ' << i + 1;
      os << '\n';
    }
  }
  return os.str();
}

namespace {

// Content lines: comments ('#' to end of line) stripped, blanks skipped.
std::vector<std::string> content_lines(const std::string& bytes) {
  std::vector<std::string> out;
  std::istringstream is(bytes);
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    out.push_back(line.substr(start));
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string t;
  while (is >> t) out.push_back(t);
  return out;
}

long parse_long(const std::string& t, const char* what) {
  char* end = nullptr;
  long v = std::strtol(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size()) throw MalformedHeader(std::string(what) + ": '" + t + "'");
  return v;
}

double parse_double(const std::string& t) {
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size())
    throw CountMismatch("bad coordinate token '" + t + "'");
  return v;
}

}  // namespace

Polyhedron parse_off(const std::string& bytes) {
  auto lines = content_lines(bytes);
  if (lines.empty()) throw MalformedHeader("empty input");
  if (lines[0] != "OFF") throw MalformedHeader("expected 'OFF', got '" + lines[0] + "'");
  if (lines.size() < 2) throw CountMismatch("missing count line");
  auto counts = tokens(lines[1]);
  if (counts.size() != 3) throw MalformedHeader("count line needs 3 numbers");
  long nv = parse_long(counts[0], "vertex count");
  long nf = parse_long(counts[1], "face count");
  long ne = parse_long(counts[2], "edge count");
  if (nv < 0 || nf < 0 || ne < 0) throw MalformedHeader("negative count");
  if (lines.size() != static_cast<size_t>(2 + nv + nf))
    throw CountMismatch("expected " + std::to_string(nv) + " vertex and " + std::to_string(nf) +
                        " face lines, found " + std::to_string(lines.size() - 2));

  Polyhedron p;
  for (long i = 0; i < nv; ++i) {
    auto t = tokens(lines[2 + i]);
    if (t.size() != 3) throw CountMismatch("vertex line needs 3 coordinates");
    p.vertices.push_back(Vec3R(Real::from_double(parse_double(t[0])),
                               Real::from_double(parse_double(t[1])),
                               Real::from_double(parse_double(t[2]))));
  }
  long arity_total = 0;
  for (long i = 0; i < nf; ++i) {
    auto t = tokens(lines[2 + nv + i]);
    if (t.empty()) throw CountMismatch("empty face line");
    long arity = parse_long(t[0], "face arity");
    if (arity < 3) throw CountMismatch("face arity below 3");
    if (static_cast<long>(t.size()) != arity + 1)
      throw CountMismatch("face line declares " + std::to_string(arity) + " vertices but has " +
                          std::to_string(t.size() - 1));
    std::vector<int> cycle;
    for (long k = 1; k <= arity; ++k) {
      long idx = parse_long(t[k], "face index");
      if (idx < 0 || idx >= nv) throw IndexOutOfRange(idx, nv);
      cycle.push_back(static_cast<int>(idx));
    }
    arity_total += arity;
    p.faces.push_back(std::move(cycle));
  }
  if (ne != 0 && ne != arity_total / 2)
    throw CountMismatch("declared " + std::to_string(ne) + " edges, face cycles give " +
                        std::to_string(arity_total / 2));
  return p;
}

}  // namespace pacioli
