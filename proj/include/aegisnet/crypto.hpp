#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "aegisnet/bytes.hpp"
#include "aegisnet/rail_fence.hpp"

namespace aegisnet {

/// 16-byte link/session secret plus its ratchet epoch.
struct SymmetricKey {
    std::array<std::uint8_t, 16> bytes{};
    std::uint64_t epoch = 0;

    bool operator==(const SymmetricKey&) const = default;
};

/// First 16 bytes of SHA-256(key || label || counter_be64).
std::array<std::uint8_t, 16> kdf(const SymmetricKey& key, std::span<const std::uint8_t> label,
                                 std::uint64_t counter);

inline std::array<std::uint8_t, 16> kdf(const SymmetricKey& key, std::string_view label,
                                        std::uint64_t counter) {
    return kdf(key, std::span<const std::uint8_t>(
                        reinterpret_cast<const std::uint8_t*>(label.data()), label.size()),
               counter);
}

/// Deterministic expansion of kdf blocks under label "ks" || nonce_be64,
/// truncated to len. Prefixes agree for equal (key, nonce).
Bytes keystream(const SymmetricKey& key, std::uint64_t nonce, std::size_t len);

/// HMAC-SHA-256 truncated to 16 bytes.
std::array<std::uint8_t, 16> mac_tag(const SymmetricKey& key, std::span<const std::uint8_t> message);

/// Recomputation plus fixed-shape comparison.
bool mac_verify(const SymmetricKey& key, std::span<const std::uint8_t> message,
                std::span<const std::uint8_t> tag);

/// Transposition parameters derived from the key: rails = 2 + (key[0] mod 6),
/// offset = key[1] mod (2*(rails-1)). Always valid.
RailFenceParams hop_cipher_params(const SymmetricKey& key);

/// Hop encryption: XOR with keystream(key, ctr), then key-derived rail fence
/// transposition. Length preserving.
Bytes hop_encrypt(const SymmetricKey& key, std::uint64_t ctr, std::span<const std::uint8_t> plain);
Bytes hop_decrypt(const SymmetricKey& key, std::uint64_t ctr, std::span<const std::uint8_t> body);

}  // namespace aegisnet
