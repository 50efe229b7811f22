#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <variant>

#include "aegisnet/bytes.hpp"
#include "aegisnet/crypto.hpp"
#include "aegisnet/ec.hpp"
#include "aegisnet/rng.hpp"

namespace aegisnet {

/// Pre-deployment registration record shared between one cluster head and the
/// base station.
struct Registration {
    Bytes id;
    SymmetricKey token;
    bool revoked = false;
};

/// Deterministic token derivation from the base-station master secret.
Registration make_registration(const SymmetricKey& master, const Bytes& id);

/// Per-session pseudonym: first 16 bytes of SHA-256(id || t1). Computable by
/// anyone who knows the (public) identity bytes; unlinkable across sessions.
std::array<std::uint8_t, 16> compute_aid(const Bytes& id, std::uint64_t t1);

struct Msg1 {
    std::array<std::uint8_t, 16> aid{};
    Bytes r1_point;
    std::uint64_t t1 = 0;
    std::array<std::uint8_t, 16> tag{};

    Bytes wire() const;
};

struct Msg2 {
    Bytes r2_point;
    std::uint64_t t2 = 0;
    std::array<std::uint8_t, 16> tag{};

    Bytes wire() const;
};

struct Msg3 {
    std::array<std::uint8_t, 16> tag{};

    Bytes wire() const;
};

enum class RejectReason {
    None,
    StaleTimestamp,
    ReplayDetected,
    UnknownIdentity,
    TagInvalid,
    Malformed,
    Dropped,
};

const char* reject_reason_name(RejectReason reason);

std::optional<Msg1> parse_msg1(std::span<const std::uint8_t> wire, std::size_t point_len);
std::optional<Msg2> parse_msg2(std::span<const std::uint8_t> wire, std::size_t point_len);
std::optional<Msg3> parse_msg3(std::span<const std::uint8_t> wire);

struct AuthTranscript {
    std::optional<Msg1> m1;
    std::optional<Msg2> m2;
    std::optional<Msg3> m3;
    std::optional<std::array<std::uint8_t, 16>> session_key;  // present iff accepted
    bool accepted = false;
    RejectReason reason = RejectReason::None;
};

/// Base-station authenticator: registration store, freshness window, replay
/// cache, and the responder side of the handshake.
class BaseStationAuth {
public:
    BaseStationAuth(SymmetricKey master, CurveParams curve, std::uint64_t freshness_window_ms = 500);

    /// Throws DuplicateIdentity when the id is already registered.
    const Registration& register_identity(const Bytes& id);
    void revoke(const Bytes& id);
    bool is_registered(const Bytes& id) const;

    /// Responder state pinned between msg2 and msg3 of one session.
    struct PendingSession {
        Msg2 m2;
        std::array<std::uint8_t, 16> session_key{};
        std::array<std::uint8_t, 16> aid{};
        std::uint64_t t1 = 0;
    };

    /// Freshness check, replay-cache check, identity lookup by AID
    /// recomputation, tag verification, then the ECDH response.
    std::variant<PendingSession, RejectReason> handle_msg1(const Msg1& m1, std::uint64_t clock_ms,
                                                           Rng& rng);

    /// Mutual-authentication confirmation: verifies tag3 under the pending
    /// session key.
    bool verify_msg3(const PendingSession& pending, const Msg3& m3) const;

    const CurveParams& curve() const { return curve_; }
    std::uint64_t freshness_window_ms() const { return freshness_window_ms_; }
    std::size_t point_len() const { return 1 + 2 * curve_.field_bytes(); }

private:
    SymmetricKey master_;
    CurveParams curve_;
    std::uint64_t freshness_window_ms_;
    std::map<Bytes, Registration> registrations_;
    std::set<std::pair<std::array<std::uint8_t, 16>, std::uint64_t>> replay_cache_;

    void evict_stale(std::uint64_t clock_ms);
};

/// Initiator (cluster-head) side of one handshake attempt.
class InitiatorSession {
public:
    InitiatorSession(Registration registration, CurveParams curve,
                     std::uint64_t freshness_window_ms = 500);

    Msg1 start(std::uint64_t clock_ms, Rng& rng);

    struct Finalized {
        Msg3 m3;
        std::array<std::uint8_t, 16> session_key{};
    };

    std::variant<Finalized, RejectReason> finalize(const Msg2& m2, std::uint64_t clock_ms);

    const std::array<std::uint8_t, 16>& aid() const { return aid_; }

private:
    Registration registration_;
    CurveParams curve_;
    std::uint64_t freshness_window_ms_;
    BigInt r1_;
    Bytes r1_point_;
    std::array<std::uint8_t, 16> aid_{};
    std::uint64_t t1_ = 0;
    bool started_ = false;
};

/// Per-message intercept for handshake traffic; may mutate the wire bytes or
/// return false to drop the message.
class AuthHook {
public:
    virtual ~AuthHook() = default;
    virtual bool on_auth_message(int msg_index, Bytes& wire, std::uint64_t time_ms) = 0;
};

struct HandshakeResult {
    AuthTranscript transcript;
    std::optional<std::array<std::uint8_t, 16>> initiator_key;
    std::optional<std::array<std::uint8_t, 16>> responder_key;
};

/// Drives one full handshake through an optional in-path adversary. On any
/// rejection both sides discard key material.
HandshakeResult run_handshake(const Registration& registration, BaseStationAuth& bs,
                              std::uint64_t clock_ms, Rng& rng, AuthHook* hook = nullptr);

/// Uniform scalar in [1, n-1].
BigInt random_scalar(Rng& rng, const BigInt& n);

}  // namespace aegisnet
