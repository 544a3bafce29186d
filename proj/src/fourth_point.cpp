#include "ncluster/fourth_point.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace ncl {

namespace {

void check_params(const ParamPair& p) {
  if (p.r <= 0 || p.r >= 1 || p.s <= 0 || p.s >= 1)
    throw std::invalid_argument("parameters must lie in (0,1)");
}

Rat rat_abs(const Rat& v) { return v < 0 ? Rat(-v) : v; }

}  // namespace

ArctanCandidate pyth_arctan_candidate(const Rat& c, const RatPoint& C,
                                      const ParamPair& p) {
  check_params(p);
  const Rat& r = p.r;
  const Rat& s = p.s;
  Rat Y = r + s - r * s * (r + s);
  if (Y == 0) throw std::domain_error("degenerate parameters: Y = 0");
  ArctanCandidate out;
  out.D = {c * s * (1 - r * r) / Y, 2 * c * r * s / Y};
  out.dA = rat_abs(c * s * (1 + r * r) / Y);
  out.dB = rat_abs(c * r * (1 + s * s) / Y);
  out.dC = rational_distance(out.D, C);
  return out;
}

CevaCandidate ceva_candidate(const Rat& c, const RatPoint& C,
                             const ParamPair& p) {
  check_params(p);
  const Rat& r = p.r;
  const Rat& s = p.s;
  Rat den = -1 + s - r * s;
  if (den == 0) throw std::domain_error("degenerate parameters: denominator 0");
  CevaCandidate out;
  out.O = {(1 - s) * (-c + c * r - r * C.x) / den,
           -r * C.y * (1 - s) / den};
  out.dA = rational_distance(out.O, RatPoint{Rat(0), Rat(0)});
  out.dB = rational_distance(out.O, RatPoint{c, Rat(0)});
  out.dC = rational_distance(out.O, C);
  return out;
}

std::vector<ScanCandidate> scan_parameters(const Rat& c, const RatPoint& C,
                                           unsigned height_bound) {
  std::vector<Rat> params;
  for (unsigned q = 2; q <= height_bound; ++q)
    for (unsigned pnum = 1; pnum < q; ++pnum)
      if (std::gcd(pnum, q) == 1) params.emplace_back(pnum, q);
  std::map<std::pair<Rat, Rat>, ScanCandidate> found;
  auto keep = [&](const RatPoint& pt, const Rat& dA, const Rat& dB,
                  const Rat& dC) {
    found.emplace(std::make_pair(pt.x, pt.y), ScanCandidate{pt, dA, dB, dC});
  };
  for (const Rat& r : params)
    for (const Rat& s : params) {
      ParamPair p{r, s};
      ArctanCandidate a = pyth_arctan_candidate(c, C, p);
      if (a.dC) keep(a.D, a.dA, a.dB, *a.dC);
      CevaCandidate v = ceva_candidate(c, C, p);
      if (v.dA && v.dB && v.dC) keep(v.O, *v.dA, *v.dB, *v.dC);
    }
  std::vector<ScanCandidate> out;
  out.reserve(found.size());
  for (auto& [key, cand] : found) out.push_back(std::move(cand));
  return out;
}

}  // namespace ncl
