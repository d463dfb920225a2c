#pragma once

#include <json.hpp>

#include "modlab/matrix.hpp"

namespace modlab {

using json = nlohmann::json;

inline json to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_json(x));
  return a;
}

inline json to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

}  // namespace modlab
