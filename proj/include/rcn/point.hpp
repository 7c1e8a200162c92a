#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace rcn {

/// Exact signed integer of unbounded magnitude. All coordinate arithmetic in
/// this library is exact; nothing is ever rounded.
using BigInt = boost::multiprecision::cpp_int;

/// A plane point with exact integer coordinates.
struct Point {
  BigInt x;
  BigInt y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

/// An ordered sequence of points (the set S). Counting and search operations
/// require general position: no duplicate points, no three collinear.
using PointSet = std::vector<Point>;

inline Point make_point(long long x, long long y) { return Point{BigInt(x), BigInt(y)}; }

inline PointSet make_pointset(std::initializer_list<std::pair<long long, long long>> coords) {
  PointSet s;
  s.reserve(coords.size());
  for (const auto& [x, y] : coords) s.push_back(make_point(x, y));
  return s;
}

}  // namespace rcn
