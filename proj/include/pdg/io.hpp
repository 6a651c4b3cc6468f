#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pdg/curve.hpp"
#include "pdg/diagram.hpp"
#include "pdg/error.hpp"

namespace pdg::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, "malformed JSON at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

inline double number_at(const Json& j, const std::string& field) {
  if (!j.is_number()) throw Error(ErrorKind::Parse, field + ": expected a number");
  return j.get<double>();
}

inline Diagram diagram_from_json(const Json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("points")) {
    throw Error(ErrorKind::Parse, field + ": expected an object with key \"points\"");
  }
  const Json& pts = j.at("points");
  if (!pts.is_array()) throw Error(ErrorKind::Parse, field + ".points: expected an array");
  Diagram d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string where = field + ".points[" + std::to_string(i) + "]";
    const Json& e = pts[i];
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
      throw Error(ErrorKind::Parse, where + ": expected [birth, death] or [birth, death, index]");
    }
    Point pt;
    pt.birth = number_at(e[0], where + "[0]");
    pt.death = number_at(e[1], where + "[1]");
    pt.index = i;
    if (e.size() == 3) {
      if (!e[2].is_number_unsigned()) throw Error(ErrorKind::Parse, where + "[2]: expected a nonnegative integer");
      pt.index = e[2].get<std::size_t>();
    }
    if (!(pt.death > pt.birth)) {
      throw Error(ErrorKind::Validation, where + " = (" + e[0].dump() + ", " + e[1].dump() +
                                             ") is not strictly above the diagonal");
    }
    d.points.push_back(pt);
  }
  return d;
}

}  // namespace detail

/// Points whose index equals their position are written as pairs, others as
/// triples, so parse followed by serialize reproduces the input.
inline Json to_json(const Diagram& d) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Point& pt = d[i];
    if (pt.index == i) {
      pts.push_back(Json::array({pt.birth, pt.death}));
    } else {
      pts.push_back(Json::array({pt.birth, pt.death, pt.index}));
    }
  }
  Json out = Json::object();
  out["points"] = std::move(pts);
  return out;
}

inline Json to_json(const SampledCurve& c) {
  Json frames = Json::array();
  for (const Diagram& d : c.frames) frames.push_back(to_json(d));
  Json out = Json::object();
  out["times"] = c.times;
  out["frames"] = std::move(frames);
  return out;
}

inline Diagram parse_diagram(std::string_view text) {
  return detail::diagram_from_json(detail::parse_text(text), "diagram");
}

inline std::string serialize_diagram(const Diagram& d) { return to_json(d).dump(); }

inline SampledCurve parse_curve(std::string_view text) {
  const Json j = detail::parse_text(text);
  if (!j.is_object() || !j.contains("times") || !j.contains("frames")) {
    throw Error(ErrorKind::Parse, "curve: expected an object with keys \"times\" and \"frames\"");
  }
  const Json& times = j.at("times");
  const Json& frames = j.at("frames");
  if (!times.is_array()) throw Error(ErrorKind::Parse, "curve.times: expected an array");
  if (!frames.is_array()) throw Error(ErrorKind::Parse, "curve.frames: expected an array");
  SampledCurve c;
  for (std::size_t i = 0; i < times.size(); ++i) {
    c.times.push_back(detail::number_at(times[i], "curve.times[" + std::to_string(i) + "]"));
  }
  for (std::size_t i = 0; i < frames.size(); ++i) {
    c.frames.push_back(detail::diagram_from_json(frames[i], "curve.frames[" + std::to_string(i) + "]"));
  }
  try {
    c.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::Validation, e.what());
  }
  return c;
}

inline std::string serialize_curve(const SampledCurve& c) { return to_json(c).dump(); }

}  // namespace pdg::io
