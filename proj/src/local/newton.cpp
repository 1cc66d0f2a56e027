#include "mvf/local/newton.hpp"

#include <algorithm>

#include "mvf/errors.hpp"

namespace mvf {

NewtonPolygonResult newton_polygon(const Poly& f, const Integer& p) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "Newton polygon of zero polynomial");
  NewtonPolygonResult res;
  int lo = 0;
  while (f.coeff(lo) == 0) ++lo;
  res.zero_roots = lo;
  std::vector<std::pair<int, int64_t>> pts;
  for (int i = lo; i <= f.degree(); ++i)
    if (f.coeff(i) != 0) pts.emplace_back(i, valuation(f.coeff(i), p));
  // Lower hull (monotone chain).
  std::vector<std::pair<int, int64_t>> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // Drop b if it lies on or above segment a-q.
      Integer lhs = Integer(b.second - a.second) * (q.first - a.first);
      Integer rhs = Integer(q.second - a.second) * (b.first - a.first);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  for (size_t k = 1; k < hull.size(); ++k) {
    int len = hull[k].first - hull[k - 1].first;
    Rat slope = make_rat(Integer(hull[k - 1].second - hull[k].second), Integer(len));
    res.slopes.push_back({slope, len});
  }
  std::sort(res.slopes.begin(), res.slopes.end(),
            [](const NewtonSegment& a, const NewtonSegment& b) { return a.slope < b.slope; });
  return res;
}

}  // namespace mvf
