#ifndef PACIOLI_TESTS_SUPPORT_HPP
#define PACIOLI_TESTS_SUPPORT_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacioli/vec.hpp"

namespace pacioli::testsupport {

struct CmdResult {
  std::string out;
  int rc;
};

// Runs a shell command, capturing stdout bytes and the exit code. Callers
// append "2>&1" or "2>/dev/null" themselves when stderr matters.
inline CmdResult run_cmd(const std::string& cmd) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed: " + cmd);
  std::array<char, 4096> buf;
  std::string out;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  int rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {out, rc};
}

inline std::string quoted(const std::string& s) { return "'" + s + "'"; }

// "name = decimal" lines, '#' comments.
inline std::map<std::string, Rat> load_oracle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open oracle fixture: " + path);
  std::map<std::string, Rat> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    out.emplace(trim(line.substr(0, eq)), rat_from_decimal(trim(line.substr(eq + 1))));
  }
  return out;
}

inline Rat pow10_inv(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
  return make_rat(mpz_class(1), p);
}

inline Rat pow2_inv(int k) {
  return make_rat(mpz_class(1), mpz_class(mpz_class(1) << k));
}

// --- randomized rational point sets and the exact rank oracle -------------

inline Rat rnd_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return make_rat(num(rng), den(rng));
}

inline Vec3Q rnd_pt(std::mt19937& rng) {
  return {Q5(rnd_rat(rng)), Q5(rnd_rat(rng)), Q5(rnd_rat(rng))};
}

inline Rat det3_rat(const Vec3Q& a, const Vec3Q& b, const Vec3Q& c) {
  Q5 d = a.dot(b.cross(c));
  if (d.b() != 0) throw std::logic_error("rank oracle expects rational points");
  return d.a();
}

// Rank of the (n-1) x 3 difference matrix over Q, by fraction-free
// elimination. This is the independent oracle coplanarity is tested against.
inline int rational_rank(const std::vector<Vec3Q>& pts) {
  std::vector<std::array<Rat, 3>> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    Vec3Q d = pts[i] - pts[0];
    rows.push_back({d.x.a(), d.y.a(), d.z.a()});
  }
  int rank = 0;
  for (int col = 0; col < 3 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (int c = col; c < 3; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// 4..8 rational points; first three never collinear; about half the sets are
// forced coplanar by construction.
inline std::vector<Vec3Q> random_point_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(4, 8), coin(0, 1);
  int n = size(rng);
  bool force_coplanar = coin(rng) == 1;
  std::vector<Vec3Q> pts;
  for (;;) {
    pts.assign({rnd_pt(rng), rnd_pt(rng), rnd_pt(rng)});
    if (!(pts[1] - pts[0]).cross(pts[2] - pts[0]).is_zero()) break;
  }
  while (static_cast<int>(pts.size()) < n) {
    if (force_coplanar) {
      Q5 u(rnd_rat(rng)), v(rnd_rat(rng));
      pts.push_back(pts[0] + u * (pts[1] - pts[0]) + v * (pts[2] - pts[0]));
    } else {
      pts.push_back(rnd_pt(rng));
    }
  }
  return pts;
}

}  // namespace pacioli::testsupport

#endif
