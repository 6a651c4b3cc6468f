#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pdg/diagram.hpp"
#include "pdg/error.hpp"

namespace pdg {

/// A curve in diagram space known at finitely many times.
struct SampledCurve {
  std::vector<double> times;
  std::vector<Diagram> frames;

  std::size_t size() const { return times.size(); }

  void validate() const {
    if (times.size() != frames.size()) {
      throw Error(ErrorKind::Structural, "curve has " + std::to_string(times.size()) + " times but " +
                                             std::to_string(frames.size()) + " frames");
    }
    if (times.size() < 2) throw Error(ErrorKind::Structural, "curve needs at least two samples");
    if (times.front() != 0.0 || times.back() != 1.0) {
      throw Error(ErrorKind::Structural, "curve times must start at 0 and end at 1");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
      if (!(times[i] > times[i - 1])) throw Error(ErrorKind::Structural, "curve times must be strictly increasing");
    }
    for (const Diagram& d : frames) pdg::validate(d);
  }
};

/// grid uniform times i / (grid - 1).
inline std::vector<double> uniform_times(std::size_t grid) {
  if (grid < 2) throw Error(ErrorKind::ParameterDomain, "grid must be >= 2");
  std::vector<double> t(grid);
  for (std::size_t i = 0; i < grid; ++i) t[i] = static_cast<double>(i) / static_cast<double>(grid - 1);
  t.back() = 1.0;
  return t;
}

/// Reverse the time direction: t -> 1 - t.
inline SampledCurve reversed(const SampledCurve& c) {
  SampledCurve r;
  for (std::size_t i = c.size(); i-- > 0;) {
    r.times.push_back(1.0 - c.times[i]);
    r.frames.push_back(c.frames[i]);
  }
  return r;
}

}  // namespace pdg
