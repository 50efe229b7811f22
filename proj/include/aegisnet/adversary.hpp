#pragma once

#include <functional>
#include <vector>

#include "aegisnet/attack_spec.hpp"
#include "aegisnet/auth.hpp"
#include "aegisnet/collect.hpp"

namespace aegisnet {

/// Passive decryptor holding stolen link keys. Tries every packet it sees on
/// every link, ratcheting its copies forward as epochs advance (the ratchet
/// derivation is public; only the key material is secret).
class LinkCompromiser {
public:
    void steal(const LinkKeyState& state);

    /// Returns the recovered plaintext when the stolen material verifies.
    std::optional<AggregatePayload> observe(const DataPacket& packet);

    const AttackOutcome& outcome() const { return outcome_; }
    bool holds_keys() const { return !stolen_.empty(); }

private:
    std::map<LinkId, LinkKeyState> stolen_;
    AttackOutcome outcome_;
};

/// Re-presents recorded packets to a victim delivery path.
AttackOutcome replay_attack(std::span<const DataPacket> recorded,
                            const std::function<DeliveryStatus(const DataPacket&)>& present,
                            const AttackSpec& spec);

/// Forges msg1 attempts without the registration token: correct pseudonym and
/// a fresh curve point, random tag. `id` is the impersonated identity (node
/// identities are public).
AttackOutcome impersonation_attack(BaseStationAuth& bs, const Bytes& id, const AttackSpec& spec,
                                   Rng& rng, std::uint64_t clock_ms);

Msg1 forge_msg1(const CurveParams& curve, const Bytes& id, std::uint64_t clock_ms, Rng& rng);

enum class HookAction { Pass, Tampered, Dropped };

/// Event-loop adversary: executes every configured AttackSpec against a
/// running simulation. All honest code paths are untouched when the spec list
/// is empty.
class Adversary : public PacketHook {
public:
    Adversary(std::vector<AttackSpec> specs, std::uint64_t seed);

    bool empty() const { return specs_.empty(); }
    const std::vector<AttackSpec>& specs() const { return specs_; }

    void begin_round(std::uint32_t round);

    /// Executes compromise specs whose start round has arrived; candidates
    /// are the currently keyed live links.
    void maybe_compromise(std::uint32_t round, const std::vector<LinkId>& candidates,
                          const std::function<const LinkKeyState*(const LinkId&)>& lookup);

    /// PacketHook entry used by collect_round; combines observe + act.
    bool on_data_packet(DataPacket& packet, const LinkId& link, std::uint64_t time_ms) override;

    /// Sim-facing variant that reports what happened.
    HookAction act_on_data_packet(DataPacket& packet, const LinkId& link, std::uint64_t time_ms);
    void record_tamper_result(bool accepted);

    HookAction act_on_auth_wire(int msg_index, Bytes& wire, std::uint64_t time_ms);
    void record_auth_tamper_result(bool accepted);

    /// Data packets to re-inject this round (consumed).
    std::vector<DataPacket> take_data_injections(std::uint32_t round);
    void record_injection_result(bool accepted, const LinkId& link);

    /// Number of forged msg1 attempts to fire this round.
    std::uint32_t impersonation_attempts(std::uint32_t round);
    void record_forgery_result(bool accepted);

    /// msg1 wires recorded for replay (consumed).
    std::vector<Bytes> take_auth_injections(std::uint32_t round);
    void record_auth_injection_result(bool accepted);

    void record_flagged_link(const LinkId& link);

    const LinkCompromiser& compromiser() const { return compromiser_; }
    LinkCompromiser& compromiser() { return compromiser_; }

    std::uint64_t total_attempts() const;
    std::uint64_t total_accepted() const;
    AttackOutcome outcome_for(std::size_t spec_index) const;

    /// Exact per-event log; outcome tallies reconcile against it.
    struct Record {
        std::uint64_t time_ms;
        std::size_t spec_index;
        AttackKind kind;
        bool accepted;
    };
    const std::vector<Record>& log() const { return log_; }

private:
    bool budget_left(std::size_t index) const;

    std::vector<AttackSpec> specs_;
    Rng rng_;
    std::uint32_t round_ = 0;
    LinkCompromiser compromiser_;
    std::optional<std::size_t> compromise_spec_;
    std::vector<AttackOutcome> outcomes_;
    std::vector<Record> log_;
    std::vector<DataPacket> replay_store_;
    std::vector<LinkId> replay_links_;
    std::vector<Bytes> auth_replay_store_;
    std::optional<std::size_t> pending_tamper_spec_;
    std::optional<std::size_t> pending_auth_tamper_spec_;
    std::optional<std::size_t> pending_injection_spec_;
    std::optional<std::size_t> pending_forgery_spec_;
    std::optional<std::size_t> pending_auth_injection_spec_;
    std::uint64_t last_time_ms_ = 0;
};

}  // namespace aegisnet
