#pragma once

// Two generators of candidate points at rational distance from the vertices
// of a rational triangle placed as A=(0,0), B=(c,0), C=(x0,y0): the
// Pythagorean-arctangent intersection and the Ceva-point construction.

#include <optional>
#include <vector>

#include "ncluster/geometry.hpp"

namespace ncl {

// Rational parameter pair; both coordinates must lie in the open unit
// interval. Operations throw std::invalid_argument otherwise.
struct ParamPair {
  Rat r, s;
};

struct ArctanCandidate {
  RatPoint D;
  Rat dA, dB;               // rational by construction
  std::optional<Rat> dC;    // present iff the remaining radicand is square
};

struct CevaCandidate {
  RatPoint O;
  std::optional<Rat> dA, dB, dC;
};

// Intersection of rays from A and B at Pythagorean-arctangent angles
// parameterized by p.r and p.s. Throws std::domain_error if the shared
// denominator r + s - rs(r+s) vanishes.
ArctanCandidate pyth_arctan_candidate(const Rat& c, const RatPoint& C,
                                      const ParamPair& p);

// Common cevian intersection point for side-ratio parameters p.r, p.s.
// Throws std::domain_error if the denominator -1 + s - rs vanishes.
CevaCandidate ceva_candidate(const Rat& c, const RatPoint& C,
                             const ParamPair& p);

struct ScanCandidate {
  RatPoint p;
  Rat dA, dB, dC;
};

// All candidates from both methods over parameter pairs with numerator and
// denominator at most height_bound, keeping only points with all three
// distances rational. Deduplicated by coordinates, sorted.
std::vector<ScanCandidate> scan_parameters(const Rat& c, const RatPoint& C,
                                           unsigned height_bound);

}  // namespace ncl
