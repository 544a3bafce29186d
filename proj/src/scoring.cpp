#include "ncluster/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ncl {

int omega(const Int& n) {
  if (n < 2) return 0;
  if (!n.fits_ulong_p()) throw std::domain_error("omega: value too large");
  unsigned long v = n.get_ui();
  int count = 0;
  for (unsigned long p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
    if (v % p == 0) {
      ++count;
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) ++count;
  return count;
}

double score_neg_diameter(const HeronTriangle& t) { return -t.a.get_d(); }

double score1(const HeronTriangle& t) {
  double sum = 0;
  for (const Int* s : {&t.a, &t.b, &t.c})
    sum += omega(*s) / std::log(std::log(s->get_d()));
  return sum;
}

double score2(const HeronTriangle& t) {
  double sum = 0;
  for (const Int* s : {&t.a, &t.b, &t.c})
    sum += omega(*s) / std::log(s->get_d());
  return sum;
}

std::vector<ScoredTriangle> score_triangles(
    const std::vector<HeronTriangle>& L, ScoreMethod method) {
  std::vector<ScoredTriangle> out;
  out.reserve(L.size());
  for (const auto& t : L) {
    double s = 0;
    switch (method) {
      case ScoreMethod::kNegDiameter: s = score_neg_diameter(t); break;
      case ScoreMethod::kScore1: s = score1(t); break;
      case ScoreMethod::kScore2: s = score2(t); break;
    }
    out.push_back({t, s, method});
  }
  return out;
}

std::map<HeronTriangle, std::size_t> frequency_rank(
    const std::vector<Cluster>& clusters) {
  std::map<HeronTriangle, std::size_t> freq;
  for (const auto& c : clusters)
    for (const auto& [t, mult] : sub_triangles_with_multiplicity(c))
      freq[t] += mult;
  return freq;
}

std::array<Rat, 3> ellipse_keys(const HeronTriangle& t) {
  std::array<Rat, 3> keys{Rat(t.b + t.c, t.a), Rat(t.a + t.c, t.b),
                          Rat(t.a + t.b, t.c)};
  for (auto& k : keys) k.canonicalize();
  return keys;
}

std::vector<HeronTriangle> select_top(std::vector<ScoredTriangle> scored,
                                      std::size_t m) {
  if (m < 1) throw std::invalid_argument("select_top: m must be >= 1");
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ScoredTriangle& x, const ScoredTriangle& y) {
                     if (x.score != y.score) return x.score > y.score;
                     return x.t < y.t;
                   });
  if (scored.size() > m) scored.resize(m);
  std::vector<HeronTriangle> out;
  out.reserve(scored.size());
  for (auto& s : scored) out.push_back(std::move(s.t));
  return out;
}

}  // namespace ncl
