#include "stein/witness.hpp"

namespace stein {

nlohmann::json to_json(const GFMatrix& m) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const Rational& q) {
  if (denominator(q) == 1 && abs(numerator(q)) < Integer(1'000'000'000)) return numerator(q).convert_to<long long>();
  return q.str();
}

nlohmann::json to_json(const Integer& z) {
  if (abs(z) < Integer(1'000'000'000)) return z.convert_to<long long>();
  return z.str();
}

nlohmann::json difference_json(const AlgebraElement& x, const AlgebraElement& y) {
  const auto d = AlgebraElement::first_difference(x, y);
  if (!d) return nullptr;
  return {{"element", to_json(d->element)}, {"left", to_json(d->left.value())}, {"right", to_json(d->right.value())}};
}

}  // namespace stein
