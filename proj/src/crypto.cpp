#include "aegisnet/crypto.hpp"

#include <cstring>

#include "aegisnet/sha256.hpp"

namespace aegisnet {

std::array<std::uint8_t, 16> kdf(const SymmetricKey& key, std::span<const std::uint8_t> label,
                                 std::uint64_t counter) {
    Sha256 h;
    h.update(key.bytes);
    h.update(label);
    Bytes ctr;
    put_be64(ctr, counter);
    h.update(ctr);
    auto digest = h.finish();

    std::array<std::uint8_t, 16> out;
    std::memcpy(out.data(), digest.data(), 16);
    return out;
}

Bytes keystream(const SymmetricKey& key, std::uint64_t nonce, std::size_t len) {
    Bytes label = to_bytes("ks");
    put_be64(label, nonce);

    Bytes out;
    out.reserve(len);
    for (std::uint64_t block = 0; out.size() < len; ++block) {
        auto chunk = kdf(key, label, block);
        std::size_t take = std::min<std::size_t>(16, len - out.size());
        out.insert(out.end(), chunk.begin(), chunk.begin() + static_cast<std::ptrdiff_t>(take));
    }
    return out;
}

std::array<std::uint8_t, 16> mac_tag(const SymmetricKey& key, std::span<const std::uint8_t> message) {
    auto full = hmac_sha256(key.bytes, message);
    std::array<std::uint8_t, 16> out;
    std::memcpy(out.data(), full.data(), 16);
    return out;
}

bool mac_verify(const SymmetricKey& key, std::span<const std::uint8_t> message,
                std::span<const std::uint8_t> tag) {
    auto expected = mac_tag(key, message);
    return equal_bytes(expected, tag);
}

RailFenceParams hop_cipher_params(const SymmetricKey& key) {
    RailFenceParams params;
    params.rails = 2 + key.bytes[0] % 6;
    params.offset = key.bytes[1] % (2 * (params.rails - 1));
    return params;
}

Bytes hop_encrypt(const SymmetricKey& key, std::uint64_t ctr, std::span<const std::uint8_t> plain) {
    Bytes ks = keystream(key, ctr, plain.size());
    Bytes xored(plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i) xored[i] = plain[i] ^ ks[i];
    return rail_fence_encode(xored, hop_cipher_params(key));
}

Bytes hop_decrypt(const SymmetricKey& key, std::uint64_t ctr, std::span<const std::uint8_t> body) {
    Bytes xored = rail_fence_decode(body, hop_cipher_params(key));
    Bytes ks = keystream(key, ctr, xored.size());
    for (std::size_t i = 0; i < xored.size(); ++i) xored[i] ^= ks[i];
    return xored;
}

}  // namespace aegisnet
