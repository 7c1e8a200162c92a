#pragma once

#include <cstdint>

#include "rcn/point.hpp"

namespace rcn {

/// Largest coordinate magnitude admitted to the fixed-width 128-bit path.
/// For |coordinates| <= 2^62 the orientation determinant is twice a signed
/// triangle area inside a box of side 2^63, so |det| <= 4 * (2^62)^2 = 2^126
/// and signed 128-bit arithmetic cannot overflow.
inline constexpr std::int64_t kFixedPathCoordLimit = std::int64_t{1} << 62;

/// Sign of the determinant (qx-px)(ry-py) - (qy-py)(rx-px):
/// +1 when r lies counterclockwise of the ray p->q, -1 when clockwise,
/// 0 when p, q, r are collinear. Exact for any input.
int orientation(const Point& p, const Point& q, const Point& r);

/// Fixed-width evaluation. Callers must guarantee that every |coordinate|
/// is at most kFixedPathCoordLimit.
int orient_sign_i128(std::int64_t px, std::int64_t py, std::int64_t qx, std::int64_t qy,
                     std::int64_t rx, std::int64_t ry) noexcept;

/// Arbitrary-precision evaluation.
int orient_sign_big(const BigInt& px, const BigInt& py, const BigInt& qx, const BigInt& qy,
                    const BigInt& rx, const BigInt& ry);

/// True when |v| <= kFixedPathCoordLimit.
bool fits_fixed_path(const BigInt& v);

}  // namespace rcn
