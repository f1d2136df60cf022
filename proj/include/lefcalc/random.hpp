#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lefcalc/ladder.hpp"

namespace lefcalc {

struct RandomLadderOptions {
  Rank max_ambient_rank = 20;
  Rank max_primitive = 3;
  bool symmetric = true;
};

/// Random valid ladder with 1 <= m < N <= max_ambient_rank. Asymmetric ladders
/// get a reshuffled left side with the same q_0 = p_0, center and total rank.
template <class Rng>
LefschetzLadder random_moderate_ladder(Rng& rng, const RandomLadderOptions& opt = {}, const std::string& name = "random") {
  std::uniform_int_distribution<Rank> ambient(2, opt.max_ambient_rank);
  const Rank n = ambient(rng);
  std::uniform_int_distribution<int> length(1, static_cast<int>(n - 1));
  const int m = length(rng);
  std::uniform_int_distribution<Rank> prim(0, opt.max_primitive);
  std::uniform_int_distribution<Rank> top(1, opt.max_primitive);

  std::vector<Rank> p(static_cast<std::size_t>(m));
  for (auto& x : p) x = prim(rng);
  p.back() = top(rng);
  LefschetzLadder l = make_symmetric_ladder(name, n, p);
  if (opt.symmetric || m == 1) return l;

  // Left side: start from the mirror and apply moves (+1, -1) at (a, a+1) and
  // (-1, +1) at (b, b+1). Each keeps q_0, the center rank and the total rank.
  std::vector<Rank> q = p;
  const int moves = m >= 4 ? std::uniform_int_distribution<int>(1, 2 * m)(rng) : 0;
  for (int t = 0; t < moves; ++t) {
    std::uniform_int_distribution<int> pick(1, m - 3);
    const int a = pick(rng);
    const int b = std::uniform_int_distribution<int>(a + 1, m - 2)(rng);
    auto next = q;
    next[a] += 1;
    next[a + 1] -= 1;
    next[b] -= 1;
    next[b + 1] += 1;
    bool ok = next.back() > 0;
    for (Rank x : next) ok = ok && x >= 0;
    if (ok) q = std::move(next);
  }
  l.left = std::move(q);
  return l;
}

}  // namespace lefcalc
