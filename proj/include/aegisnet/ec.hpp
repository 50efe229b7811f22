#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>

#include "aegisnet/bytes.hpp"

namespace aegisnet {

using BigInt = boost::multiprecision::cpp_int;

/// Point on a short-Weierstrass curve, affine coordinates or the point at
/// infinity.
struct CurvePoint {
    bool infinity = true;
    BigInt x;
    BigInt y;

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(BigInt px, BigInt py) {
        return CurvePoint{false, std::move(px), std::move(py)};
    }

    bool operator==(const CurvePoint& other) const {
        if (infinity || other.infinity) return infinity == other.infinity;
        return x == other.x && y == other.y;
    }
};

/// y^2 = x^3 + ax + b over F_p with generator g of prime order n.
struct CurveParams {
    BigInt p;
    BigInt a;
    BigInt b;
    CurvePoint g;
    BigInt n;

    /// Throws std::invalid_argument when the parameters do not describe a
    /// usable curve (singular, generator off curve, or wrong order).
    void validate() const;

    bool contains(const CurvePoint& pt) const;
    std::size_t field_bytes() const;

    /// 0x00 for infinity, else 0x04 || x || y with fixed field width.
    Bytes encode_point(const CurvePoint& pt) const;
    /// Throws std::invalid_argument on malformed or off-curve input.
    CurvePoint decode_point(std::span<const std::uint8_t> data) const;
};

/// Modular inverse via extended Euclid. Throws when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

CurvePoint ec_point_negate(const CurveParams& params, const CurvePoint& pt);

/// Group law: identity, inverse, tangent and chord cases. Rejects off-curve
/// inputs with std::invalid_argument.
CurvePoint ec_point_add(const CurveParams& params, const CurvePoint& p1, const CurvePoint& p2);

/// Double-and-add; k = 0 yields infinity.
CurvePoint ec_scalar_mul(const CurveParams& params, const BigInt& k, const CurvePoint& pt);

/// y^2 = x^3 + 2x + 2 over F_17, G = (5,1), order 19. Small enough for
/// exhaustive verification, large enough to exercise every group-law case.
const CurveParams& toy_curve();

}  // namespace aegisnet
