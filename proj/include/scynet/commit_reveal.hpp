#pragma once

// Commit-reveal envelopes. A signal is sealed together with the submitter's
// public key under a fresh 256-bit key; the key is revealed only after the
// submission deadline. Binding the public key inside the ciphertext is what
// defeats ciphertext copying: a thief can replay bytes but the plaintext
// names the original author.
//
// Plaintext package layout (bit-exact):
//   4-byte big-endian signal length || signal bytes || 32-byte public key

#include <optional>

#include "scynet/blob_store.hpp"
#include "scynet/codec.hpp"
#include "scynet/common.hpp"
#include "scynet/crypto.hpp"

namespace scynet {

struct SignalEnvelope {
    Uuid agent_uuid{};
    int64_t context = 0;  // tick timestamp (RealTime) or tournament index (Dataset)
    Bytes ciphertext;
    Hash256 commitment{};  // digest of ciphertext; lets validators confirm the
                           // revealed key opens exactly what was on-chain

    void encode(Encoder& e) const {
        e.fixed(agent_uuid);
        e.i64(context);
        e.bytes(ciphertext);
        e.fixed(commitment);
    }
    static SignalEnvelope decode(Decoder& d) {
        SignalEnvelope env;
        env.agent_uuid = d.fixed<16>();
        env.context = d.i64();
        env.ciphertext = d.bytes();
        env.commitment = d.fixed<32>();
        return env;
    }
    bool well_formed() const { return commitment == sha256(ciphertext); }
};

inline Bytes pack_signal(const Bytes& signal, const Address& submitter) {
    Bytes package;
    package.reserve(4 + signal.size() + 32);
    uint32_t n = uint32_t(signal.size());
    package.push_back(uint8_t(n >> 24));
    package.push_back(uint8_t(n >> 16));
    package.push_back(uint8_t(n >> 8));
    package.push_back(uint8_t(n));
    package.insert(package.end(), signal.begin(), signal.end());
    package.insert(package.end(), submitter.begin(), submitter.end());
    return package;
}

inline bool unpack_signal(const Bytes& package, Bytes& signal_out, Address& submitter_out) {
    if (package.size() < 36) return false;
    uint32_t n = (uint32_t(package[0]) << 24) | (uint32_t(package[1]) << 16) |
                 (uint32_t(package[2]) << 8) | uint32_t(package[3]);
    if (package.size() != 4 + size_t(n) + 32) return false;
    signal_out.assign(package.begin() + 4, package.begin() + 4 + n);
    std::copy(package.begin() + 4 + n, package.end(), submitter_out.begin());
    return true;
}

inline SignalEnvelope seal_signal(const AeadKey& key, const Bytes& signal,
                                  const Address& submitter, const Uuid& agent_uuid,
                                  int64_t context) {
    SignalEnvelope env;
    env.agent_uuid = agent_uuid;
    env.context = context;
    env.ciphertext = aead_seal(key, pack_signal(signal, submitter));
    env.commitment = sha256(env.ciphertext);
    return env;
}

enum class OpenStatus : uint8_t { Ok = 0, CopyDetected = 1, DecryptFailure = 2 };

struct OpenResult {
    OpenStatus status = OpenStatus::DecryptFailure;
    Bytes signal;
    Address embedded_submitter{};
};

// Decrypt-and-attribute. claimed_signer is the account that signed the
// submit_signal transaction; a mismatch with the sealed-in key is a copy.
inline OpenResult open_signal(const SignalEnvelope& env, const AeadKey& key,
                              const Address& claimed_signer) {
    OpenResult res;
    if (!env.well_formed()) return res;
    auto plain = aead_open(key, env.ciphertext);
    if (!plain) return res;
    Bytes signal;
    Address embedded{};
    if (!unpack_signal(*plain, signal, embedded)) return res;
    res.embedded_submitter = embedded;
    if (embedded != claimed_signer) {
        res.status = OpenStatus::CopyDetected;
        return res;
    }
    res.status = OpenStatus::Ok;
    res.signal = std::move(signal);
    return res;
}

// Challenger-side commitment: public inputs plus encrypted ground-truth
// outputs, both bound by digest.
struct DatasetCommitment {
    Hash256 inputs_blob_id{};
    Hash256 inputs_hash{};
    Hash256 encrypted_outputs_blob_id{};
    Hash256 outputs_hash{};
};

enum class DatasetVerifyStatus : uint8_t { Ok = 0, Mismatch = 1, DecryptFailure = 2 };

struct DatasetVerifyResult {
    DatasetVerifyStatus status = DatasetVerifyStatus::Mismatch;
    Bytes outputs;
};

inline DatasetVerifyResult verify_dataset(const DatasetCommitment& c, const AeadKey& key,
                                          const BlobStore& store) {
    DatasetVerifyResult res;
    const Bytes* inputs = store.get(c.inputs_blob_id);
    const Bytes* outputs_ct = store.get(c.encrypted_outputs_blob_id);
    if (!inputs || !outputs_ct) return res;
    if (sha256(*inputs) != c.inputs_hash || sha256(*outputs_ct) != c.outputs_hash) return res;
    auto plain = aead_open(key, *outputs_ct);
    if (!plain) {
        res.status = DatasetVerifyStatus::DecryptFailure;
        return res;
    }
    res.status = DatasetVerifyStatus::Ok;
    res.outputs = std::move(*plain);
    return res;
}

}  // namespace scynet
