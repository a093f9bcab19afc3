#pragma once

// Outcome of a verification: pass/fail plus machine-readable evidence.

#include <string>

#include "json.hpp"
#include "stein/exact.hpp"
#include "stein/gf_matrix.hpp"
#include "stein/group_algebra.hpp"

namespace stein {

struct Witness {
  bool pass = true;
  nlohmann::json data = nlohmann::json::object();

  /// Records a named sub-check; the witness passes only if every sub-check does.
  void require(const std::string& key, bool ok) {
    data["clauses"][key] = ok;
    pass = pass && ok;
  }
};

nlohmann::json to_json(const GFMatrix& m);
nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Integer& z);
/// The first differing coefficient of two algebra elements, or null.
nlohmann::json difference_json(const AlgebraElement& x, const AlgebraElement& y);

}  // namespace stein
