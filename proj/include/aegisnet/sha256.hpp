#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace aegisnet {

/// Incremental SHA-256 (FIPS 180-4). Self-contained so the protocol library
/// carries no runtime crypto dependency; the test suite cross-checks every
/// primitive against OpenSSL.
class Sha256 {
public:
    Sha256() { reset(); }

    void reset();
    void update(std::span<const std::uint8_t> data);
    std::array<std::uint8_t, 32> finish();

    static std::array<std::uint8_t, 32> digest(std::span<const std::uint8_t> data) {
        Sha256 h;
        h.update(data);
        return h.finish();
    }

private:
    void compress(const std::uint8_t* block);

    std::array<std::uint32_t, 8> state_{};
    std::array<std::uint8_t, 64> buffer_{};
    std::uint64_t total_len_ = 0;
    std::size_t buffer_len_ = 0;
};

std::array<std::uint8_t, 32> hmac_sha256(std::span<const std::uint8_t> key,
                                         std::span<const std::uint8_t> message);

}  // namespace aegisnet
