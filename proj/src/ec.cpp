#include "aegisnet/ec.hpp"

#include <stdexcept>

namespace aegisnet {

namespace {

BigInt mod_reduce(BigInt v, const BigInt& m) {
    v %= m;
    if (v < 0) v += m;
    return v;
}

void require_on_curve(const CurveParams& params, const CurvePoint& pt) {
    if (!params.contains(pt)) throw std::invalid_argument("point not on curve");
}

}  // namespace

void CurveParams::validate() const {
    if (p <= 3) throw std::invalid_argument("field prime too small");
    BigInt discriminant = mod_reduce(4 * a * a * a + 27 * b * b, p);
    if (discriminant == 0) throw std::invalid_argument("singular curve");
    if (!contains(g)) throw std::invalid_argument("generator not on curve");
    if (n <= 0 || !ec_scalar_mul(*this, n, g).infinity)
        throw std::invalid_argument("generator order mismatch");
}

bool CurveParams::contains(const CurvePoint& pt) const {
    if (pt.infinity) return true;
    if (pt.x < 0 || pt.x >= p || pt.y < 0 || pt.y >= p) return false;
    BigInt lhs = mod_reduce(pt.y * pt.y, p);
    BigInt rhs = mod_reduce(pt.x * pt.x * pt.x + a * pt.x + b, p);
    return lhs == rhs;
}

std::size_t CurveParams::field_bytes() const {
    std::size_t bits = boost::multiprecision::msb(p) + 1;
    return (bits + 7) / 8;
}

Bytes CurveParams::encode_point(const CurvePoint& pt) const {
    if (pt.infinity) return Bytes{0x00};
    const std::size_t width = field_bytes();
    Bytes out;
    out.reserve(1 + 2 * width);
    out.push_back(0x04);
    auto push_coord = [&](const BigInt& v) {
        Bytes coord(width, 0);
        BigInt rest = v;
        for (std::size_t i = 0; i < width; ++i) {
            coord[width - 1 - i] = static_cast<std::uint8_t>(rest & 0xff);
            rest >>= 8;
        }
        append(out, coord);
    };
    push_coord(pt.x);
    push_coord(pt.y);
    return out;
}

CurvePoint CurveParams::decode_point(std::span<const std::uint8_t> data) const {
    if (data.size() == 1 && data[0] == 0x00) return CurvePoint::at_infinity();
    const std::size_t width = field_bytes();
    if (data.size() != 1 + 2 * width || data[0] != 0x04)
        throw std::invalid_argument("malformed point encoding");
    auto read_coord = [&](std::size_t start) {
        BigInt v = 0;
        for (std::size_t i = 0; i < width; ++i) v = (v << 8) | data[start + i];
        return v;
    };
    CurvePoint pt = CurvePoint::affine(read_coord(1), read_coord(1 + width));
    if (!contains(pt)) throw std::invalid_argument("point not on curve");
    return pt;
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt r0 = m, r1 = mod_reduce(a, m);
    BigInt t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        BigInt t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("value not invertible");
    return mod_reduce(t0, m);
}

CurvePoint ec_point_negate(const CurveParams& params, const CurvePoint& pt) {
    require_on_curve(params, pt);
    if (pt.infinity) return pt;
    return CurvePoint::affine(pt.x, mod_reduce(-pt.y, params.p));
}

CurvePoint ec_point_add(const CurveParams& params, const CurvePoint& p1, const CurvePoint& p2) {
    require_on_curve(params, p1);
    require_on_curve(params, p2);
    if (p1.infinity) return p2;
    if (p2.infinity) return p1;

    const BigInt& p = params.p;
    BigInt lambda;
    if (p1.x == p2.x) {
        if (mod_reduce(p1.y + p2.y, p) == 0) return CurvePoint::at_infinity();
        // tangent: lambda = (3x^2 + a) / 2y
        lambda = mod_reduce((3 * p1.x * p1.x + params.a) * mod_inverse(2 * p1.y, p), p);
    } else {
        // chord: lambda = (y2 - y1) / (x2 - x1)
        lambda = mod_reduce((p2.y - p1.y) * mod_inverse(p2.x - p1.x, p), p);
    }
    BigInt x3 = mod_reduce(lambda * lambda - p1.x - p2.x, p);
    BigInt y3 = mod_reduce(lambda * (p1.x - x3) - p1.y, p);
    return CurvePoint::affine(x3, y3);
}

CurvePoint ec_scalar_mul(const CurveParams& params, const BigInt& k, const CurvePoint& pt) {
    require_on_curve(params, pt);
    if (k < 0) throw std::invalid_argument("negative scalar");
    CurvePoint result = CurvePoint::at_infinity();
    CurvePoint addend = pt;
    BigInt rest = k;
    while (rest > 0) {
        if ((rest & 1) != 0) result = ec_point_add(params, result, addend);
        rest >>= 1;
        if (rest > 0) addend = ec_point_add(params, addend, addend);
    }
    return result;
}

const CurveParams& toy_curve() {
    static const CurveParams params = [] {
        CurveParams c;
        c.p = 17;
        c.a = 2;
        c.b = 2;
        c.g = CurvePoint::affine(5, 1);
        c.n = 19;
        return c;
    }();
    return params;
}

}  // namespace aegisnet
