#pragma once

// Thin OpenSSL wrappers: SHA-256 digests, ed25519 identities, and
// AES-256-GCM authenticated encryption for signal/dataset envelopes.
// Key material is always caller-supplied so simulations stay deterministic.

#include <memory>
#include <optional>
#include <stdexcept>

#include <openssl/evp.h>

#include "scynet/common.hpp"

namespace scynet {

using AeadKey = std::array<uint8_t, 32>;

inline Hash256 sha256(const uint8_t* data, size_t n) {
    Hash256 out{};
    unsigned int len = 32;
    if (EVP_Digest(data, n, out.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    return out;
}

inline Hash256 sha256(const Bytes& b) { return sha256(b.data(), b.size()); }

struct EvpKeyDeleter {
    void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
using EvpKeyPtr = std::unique_ptr<EVP_PKEY, EvpKeyDeleter>;

// Ed25519 identity derived from a 32-byte seed. The seed comes from the
// simulation's master RNG, never from the system entropy pool.
class KeyPair {
public:
    static KeyPair from_seed(const std::array<uint8_t, 32>& seed) {
        KeyPair kp;
        kp.key_.reset(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr,
                                                   seed.data(), seed.size()));
        if (!kp.key_) throw std::runtime_error("ed25519 keygen failed");
        size_t len = 32;
        if (EVP_PKEY_get_raw_public_key(kp.key_.get(), kp.pub_.data(), &len) != 1 || len != 32)
            throw std::runtime_error("ed25519 pubkey extraction failed");
        return kp;
    }

    const Address& public_key() const { return pub_; }

    Signature sign(const Bytes& msg) const {
        Signature sig{};
        size_t siglen = sig.size();
        EVP_MD_CTX* ctx = EVP_MD_CTX_new();
        bool ok = EVP_DigestSignInit(ctx, nullptr, nullptr, nullptr, key_.get()) == 1 &&
                  EVP_DigestSign(ctx, sig.data(), &siglen, msg.data(), msg.size()) == 1;
        EVP_MD_CTX_free(ctx);
        if (!ok || siglen != sig.size()) throw std::runtime_error("ed25519 sign failed");
        return sig;
    }

private:
    EvpKeyPtr key_;
    Address pub_{};
};

inline bool verify_signature(const Address& pub, const Bytes& msg, const Signature& sig) {
    EvpKeyPtr key(EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr, pub.data(), pub.size()));
    if (!key) return false;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    bool ok = EVP_DigestVerifyInit(ctx, nullptr, nullptr, nullptr, key.get()) == 1 &&
              EVP_DigestVerify(ctx, sig.data(), sig.size(), msg.data(), msg.size()) == 1;
    EVP_MD_CTX_free(ctx);
    return ok;
}

// Nonce is derived from the key; keys are single-use per envelope, so
// (key, nonce) pairs never repeat.
inline std::array<uint8_t, 12> derive_nonce(const AeadKey& key) {
    Bytes material;
    const char* tag = "scynet.envelope.nonce";
    material.insert(material.end(), tag, tag + 21);
    material.insert(material.end(), key.begin(), key.end());
    Hash256 h = sha256(material);
    std::array<uint8_t, 12> nonce{};
    std::memcpy(nonce.data(), h.data(), 12);
    return nonce;
}

// AES-256-GCM; returns ciphertext || 16-byte tag.
inline Bytes aead_seal(const AeadKey& key, const Bytes& plaintext) {
    auto nonce = derive_nonce(key);
    Bytes out(plaintext.size() + 16);
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    int len = 0;
    bool ok = EVP_EncryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, nullptr, nullptr) == 1 &&
              EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_IVLEN, 12, nullptr) == 1 &&
              EVP_EncryptInit_ex(ctx, nullptr, nullptr, key.data(), nonce.data()) == 1;
    if (ok && !plaintext.empty())
        ok = EVP_EncryptUpdate(ctx, out.data(), &len, plaintext.data(), int(plaintext.size())) == 1;
    int total = len;
    if (ok) ok = EVP_EncryptFinal_ex(ctx, out.data() + total, &len) == 1;
    total += len;
    if (ok) ok = EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_GET_TAG, 16, out.data() + total) == 1;
    EVP_CIPHER_CTX_free(ctx);
    if (!ok) throw std::runtime_error("aead seal failed");
    out.resize(total + 16);
    return out;
}

inline std::optional<Bytes> aead_open(const AeadKey& key, const Bytes& sealed) {
    if (sealed.size() < 16) return std::nullopt;
    auto nonce = derive_nonce(key);
    size_t ctlen = sealed.size() - 16;
    Bytes out(ctlen);
    uint8_t tag[16];
    std::memcpy(tag, sealed.data() + ctlen, 16);
    EVP_CIPHER_CTX* ctx = EVP_CIPHER_CTX_new();
    int len = 0;
    bool ok = EVP_DecryptInit_ex(ctx, EVP_aes_256_gcm(), nullptr, nullptr, nullptr) == 1 &&
              EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_IVLEN, 12, nullptr) == 1 &&
              EVP_DecryptInit_ex(ctx, nullptr, nullptr, key.data(), nonce.data()) == 1;
    if (ok && ctlen > 0)
        ok = EVP_DecryptUpdate(ctx, out.data(), &len, sealed.data(), int(ctlen)) == 1;
    int total = len;
    if (ok) ok = EVP_CIPHER_CTX_ctrl(ctx, EVP_CTRL_GCM_SET_TAG, 16, tag) == 1;
    if (ok) ok = EVP_DecryptFinal_ex(ctx, out.data() + total, &len) == 1;
    EVP_CIPHER_CTX_free(ctx);
    if (!ok) return std::nullopt;
    out.resize(total + len);
    return out;
}

}  // namespace scynet
