#include "aegisnet/auth.hpp"

#include <cstring>

#include "aegisnet/errors.hpp"
#include "aegisnet/sha256.hpp"

namespace aegisnet {

namespace {

std::array<std::uint8_t, 16> compute_aid(const Bytes& id, std::uint64_t t1) {
    Bytes input = id;
    put_be64(input, t1);
    auto digest = Sha256::digest(input);
    std::array<std::uint8_t, 16> aid;
    std::memcpy(aid.data(), digest.data(), 16);
    return aid;
}

Bytes msg1_mac_input(const std::array<std::uint8_t, 16>& aid, const Bytes& r1_point,
                     std::uint64_t t1) {
    Bytes input(aid.begin(), aid.end());
    append(input, r1_point);
    put_be64(input, t1);
    return input;
}

Bytes msg2_mac_input(const Bytes& r2_point, const Bytes& r1_point, std::uint64_t t2) {
    Bytes input = r2_point;
    append(input, r1_point);
    put_be64(input, t2);
    return input;
}

Bytes msg3_mac_input(std::uint64_t t1, std::uint64_t t2) {
    Bytes input = to_bytes("confirm");
    put_be64(input, t1);
    put_be64(input, t2);
    return input;
}

std::array<std::uint8_t, 16> derive_session_key(const CurveParams& curve, const CurvePoint& shared,
                                                const std::array<std::uint8_t, 16>& aid,
                                                std::uint64_t t1, std::uint64_t t2) {
    // x-coordinate, field width, big-endian
    Bytes input;
    const std::size_t width = curve.field_bytes();
    Bytes coord(width, 0);
    BigInt rest = shared.x;
    for (std::size_t i = 0; i < width; ++i) {
        coord[width - 1 - i] = static_cast<std::uint8_t>(rest & 0xff);
        rest >>= 8;
    }
    append(input, coord);
    input.insert(input.end(), aid.begin(), aid.end());
    put_be64(input, t1);
    put_be64(input, t2);
    auto digest = Sha256::digest(input);
    std::array<std::uint8_t, 16> key;
    std::memcpy(key.data(), digest.data(), 16);
    return key;
}

bool within_window(std::uint64_t clock_ms, std::uint64_t t, std::uint64_t window_ms) {
    std::uint64_t diff = clock_ms >= t ? clock_ms - t : t - clock_ms;
    return diff <= window_ms;
}

std::array<std::uint8_t, 16> take16(std::span<const std::uint8_t> data) {
    std::array<std::uint8_t, 16> out;
    std::memcpy(out.data(), data.data(), 16);
    return out;
}

}  // namespace

const char* reject_reason_name(RejectReason reason) {
    switch (reason) {
        case RejectReason::None: return "none";
        case RejectReason::StaleTimestamp: return "stale_timestamp";
        case RejectReason::ReplayDetected: return "replay_detected";
        case RejectReason::UnknownIdentity: return "unknown_identity";
        case RejectReason::TagInvalid: return "tag_invalid";
        case RejectReason::Malformed: return "malformed";
        case RejectReason::Dropped: return "dropped";
    }
    return "?";
}

Registration make_registration(const SymmetricKey& master, const Bytes& id) {
    auto digest = Sha256::digest(id);
    std::uint64_t counter = get_be64(digest);
    Registration reg;
    reg.id = id;
    reg.token.bytes = kdf(master, "reg", counter);
    return reg;
}

Bytes Msg1::wire() const {
    Bytes out(aid.begin(), aid.end());
    append(out, r1_point);
    put_be64(out, t1);
    out.insert(out.end(), tag.begin(), tag.end());
    return out;
}

Bytes Msg2::wire() const {
    Bytes out = r2_point;
    put_be64(out, t2);
    out.insert(out.end(), tag.begin(), tag.end());
    return out;
}

Bytes Msg3::wire() const { return Bytes(tag.begin(), tag.end()); }

std::optional<Msg1> parse_msg1(std::span<const std::uint8_t> wire, std::size_t point_len) {
    if (wire.size() != 16 + point_len + 8 + 16) return std::nullopt;
    Msg1 m;
    m.aid = take16(wire.subspan(0, 16));
    m.r1_point = Bytes(wire.begin() + 16, wire.begin() + 16 + static_cast<std::ptrdiff_t>(point_len));
    m.t1 = get_be64(wire.subspan(16 + point_len, 8));
    m.tag = take16(wire.subspan(16 + point_len + 8, 16));
    return m;
}

std::optional<Msg2> parse_msg2(std::span<const std::uint8_t> wire, std::size_t point_len) {
    if (wire.size() != point_len + 8 + 16) return std::nullopt;
    Msg2 m;
    m.r2_point = Bytes(wire.begin(), wire.begin() + static_cast<std::ptrdiff_t>(point_len));
    m.t2 = get_be64(wire.subspan(point_len, 8));
    m.tag = take16(wire.subspan(point_len + 8, 16));
    return m;
}

std::optional<Msg3> parse_msg3(std::span<const std::uint8_t> wire) {
    if (wire.size() != 16) return std::nullopt;
    Msg3 m;
    m.tag = take16(wire);
    return m;
}

BigInt random_scalar(Rng& rng, const BigInt& n) {
    const std::size_t bits = boost::multiprecision::msb(n) + 1;
    const std::size_t width = (bits + 7) / 8;
    const unsigned excess = static_cast<unsigned>(width * 8 - bits);
    for (;;) {
        Bytes buf(width);
        rng.fill(buf);
        buf[0] = static_cast<std::uint8_t>(buf[0] & (0xffu >> excess));
        BigInt v = 0;
        for (std::uint8_t b : buf) v = (v << 8) | b;
        if (v >= 1 && v < n) return v;
    }
}

BaseStationAuth::BaseStationAuth(SymmetricKey master, CurveParams curve,
                                 std::uint64_t freshness_window_ms)
    : master_(master), curve_(std::move(curve)), freshness_window_ms_(freshness_window_ms) {}

const Registration& BaseStationAuth::register_identity(const Bytes& id) {
    if (registrations_.count(id)) throw DuplicateIdentity("identity already registered");
    auto [it, inserted] = registrations_.emplace(id, make_registration(master_, id));
    (void)inserted;
    return it->second;
}

void BaseStationAuth::revoke(const Bytes& id) {
    auto it = registrations_.find(id);
    if (it != registrations_.end()) it->second.revoked = true;
}

bool BaseStationAuth::is_registered(const Bytes& id) const {
    auto it = registrations_.find(id);
    return it != registrations_.end() && !it->second.revoked;
}

void BaseStationAuth::evict_stale(std::uint64_t clock_ms) {
    for (auto it = replay_cache_.begin(); it != replay_cache_.end();) {
        if (it->second + freshness_window_ms_ < clock_ms) {
            it = replay_cache_.erase(it);
        } else {
            ++it;
        }
    }
}

std::variant<BaseStationAuth::PendingSession, RejectReason> BaseStationAuth::handle_msg1(
    const Msg1& m1, std::uint64_t clock_ms, Rng& rng) {
    evict_stale(clock_ms);
    if (!within_window(clock_ms, m1.t1, freshness_window_ms_)) return RejectReason::StaleTimestamp;
    if (replay_cache_.count({m1.aid, m1.t1})) return RejectReason::ReplayDetected;

    const Registration* reg = nullptr;
    for (const auto& [id, r] : registrations_) {
        if (r.revoked) continue;
        if (equal_bytes(compute_aid(id, m1.t1), m1.aid)) {
            reg = &r;
            break;
        }
    }
    if (reg == nullptr) return RejectReason::UnknownIdentity;

    if (!mac_verify(reg->token, msg1_mac_input(m1.aid, m1.r1_point, m1.t1), m1.tag))
        return RejectReason::TagInvalid;

    CurvePoint r1_pt;
    try {
        r1_pt = curve_.decode_point(m1.r1_point);
    } catch (const std::invalid_argument&) {
        return RejectReason::Malformed;
    }
    if (r1_pt.infinity) return RejectReason::Malformed;

    replay_cache_.insert({m1.aid, m1.t1});

    BigInt r2 = random_scalar(rng, curve_.n);
    CurvePoint r2_pt = ec_scalar_mul(curve_, r2, curve_.g);
    CurvePoint shared = ec_scalar_mul(curve_, r2, r1_pt);
    if (shared.infinity) return RejectReason::Malformed;

    PendingSession pending;
    pending.aid = m1.aid;
    pending.t1 = m1.t1;
    pending.m2.r2_point = curve_.encode_point(r2_pt);
    pending.m2.t2 = clock_ms;
    pending.m2.tag = mac_tag(reg->token,
                             msg2_mac_input(pending.m2.r2_point, m1.r1_point, pending.m2.t2));
    pending.session_key = derive_session_key(curve_, shared, m1.aid, m1.t1, pending.m2.t2);
    return pending;
}

bool BaseStationAuth::verify_msg3(const PendingSession& pending, const Msg3& m3) const {
    SymmetricKey sk;
    sk.bytes = pending.session_key;
    return mac_verify(sk, msg3_mac_input(pending.t1, pending.m2.t2), m3.tag);
}

InitiatorSession::InitiatorSession(Registration registration, CurveParams curve,
                                   std::uint64_t freshness_window_ms)
    : registration_(std::move(registration)),
      curve_(std::move(curve)),
      freshness_window_ms_(freshness_window_ms) {}

Msg1 InitiatorSession::start(std::uint64_t clock_ms, Rng& rng) {
    r1_ = random_scalar(rng, curve_.n);
    r1_point_ = curve_.encode_point(ec_scalar_mul(curve_, r1_, curve_.g));
    t1_ = clock_ms;
    aid_ = compute_aid(registration_.id, t1_);
    started_ = true;

    Msg1 m1;
    m1.aid = aid_;
    m1.r1_point = r1_point_;
    m1.t1 = t1_;
    m1.tag = mac_tag(registration_.token, msg1_mac_input(aid_, r1_point_, t1_));
    return m1;
}

std::variant<InitiatorSession::Finalized, RejectReason> InitiatorSession::finalize(
    const Msg2& m2, std::uint64_t clock_ms) {
    if (!started_) return RejectReason::Malformed;
    if (!within_window(clock_ms, m2.t2, freshness_window_ms_)) return RejectReason::StaleTimestamp;
    if (!mac_verify(registration_.token, msg2_mac_input(m2.r2_point, r1_point_, m2.t2), m2.tag))
        return RejectReason::TagInvalid;

    CurvePoint r2_pt;
    try {
        r2_pt = curve_.decode_point(m2.r2_point);
    } catch (const std::invalid_argument&) {
        return RejectReason::Malformed;
    }
    if (r2_pt.infinity) return RejectReason::Malformed;

    CurvePoint shared = ec_scalar_mul(curve_, r1_, r2_pt);
    if (shared.infinity) return RejectReason::Malformed;

    Finalized out;
    out.session_key = derive_session_key(curve_, shared, aid_, t1_, m2.t2);
    SymmetricKey sk;
    sk.bytes = out.session_key;
    out.m3.tag = mac_tag(sk, msg3_mac_input(t1_, m2.t2));
    return out;
}

HandshakeResult run_handshake(const Registration& registration, BaseStationAuth& bs,
                              std::uint64_t clock_ms, Rng& rng, AuthHook* hook) {
    HandshakeResult result;
    AuthTranscript& tr = result.transcript;

    InitiatorSession initiator(registration, bs.curve(), bs.freshness_window_ms());
    Msg1 m1 = initiator.start(clock_ms, rng);
    tr.m1 = m1;

    Bytes wire1 = m1.wire();
    if (hook != nullptr && !hook->on_auth_message(1, wire1, clock_ms)) {
        tr.reason = RejectReason::Dropped;
        return result;
    }
    auto parsed1 = parse_msg1(wire1, bs.point_len());
    if (!parsed1) {
        tr.reason = RejectReason::Malformed;
        return result;
    }

    auto r1_outcome = bs.handle_msg1(*parsed1, clock_ms, rng);
    if (std::holds_alternative<RejectReason>(r1_outcome)) {
        tr.reason = std::get<RejectReason>(r1_outcome);
        return result;
    }
    auto pending = std::get<BaseStationAuth::PendingSession>(r1_outcome);
    tr.m2 = pending.m2;

    Bytes wire2 = pending.m2.wire();
    if (hook != nullptr && !hook->on_auth_message(2, wire2, clock_ms)) {
        tr.reason = RejectReason::Dropped;
        return result;
    }
    auto parsed2 = parse_msg2(wire2, bs.point_len());
    if (!parsed2) {
        tr.reason = RejectReason::Malformed;
        return result;
    }

    auto fin = initiator.finalize(*parsed2, clock_ms);
    if (std::holds_alternative<RejectReason>(fin)) {
        tr.reason = std::get<RejectReason>(fin);
        return result;
    }
    auto finalized = std::get<InitiatorSession::Finalized>(fin);
    tr.m3 = finalized.m3;

    Bytes wire3 = finalized.m3.wire();
    if (hook != nullptr && !hook->on_auth_message(3, wire3, clock_ms)) {
        tr.reason = RejectReason::Dropped;
        return result;
    }
    auto parsed3 = parse_msg3(wire3);
    if (!parsed3 || !bs.verify_msg3(pending, *parsed3)) {
        tr.reason = RejectReason::TagInvalid;
        return result;
    }

    tr.accepted = true;
    tr.session_key = finalized.session_key;
    result.initiator_key = finalized.session_key;
    result.responder_key = pending.session_key;
    return result;
}

}  // namespace aegisnet
