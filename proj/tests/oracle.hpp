#pragma once

// Reference distance computed directly from the definition: every partial
// injection of X's points into Y's points, unmatched points go to the
// diagonal. Independent of the augmented-slot construction.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "pdg/diagram.hpp"

namespace oracle {

using pdg::operator-;

inline double definition_distance(const pdg::Diagram& x, const pdg::Diagram& y, const pdg::MetricParams& mp) {
  const bool inf = mp.p.is_infinite();
  const double p = inf ? 0.0 : mp.p.value();
  auto fold = [&](double acc, double c) { return inf ? std::max(acc, c) : acc + std::pow(c, p); };

  std::vector<char> used(y.size(), 0);
  double best = std::numeric_limits<double>::infinity();
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double acc) {
    if (i == x.size()) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (!used[j]) acc = fold(acc, pdg::diagonal_distance(y[j], mp.q));
      }
      best = std::min(best, acc);
      return;
    }
    rec(i + 1, fold(acc, pdg::diagonal_distance(x[i], mp.q)));
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      rec(i + 1, fold(acc, pdg::ground_norm(x[i].coords() - y[j].coords(), mp.q)));
      used[j] = 0;
    }
  };
  rec(0, 0.0);
  return inf ? best : std::pow(best, 1.0 / p);
}

}  // namespace oracle
