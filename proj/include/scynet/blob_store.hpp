#pragma once

// In-memory content-addressed store standing in for off-chain dataset URLs.
// The blob id is the SHA-256 of the content, so the URL/hash pair the
// protocol publishes is verifiable by construction.

#include <map>
#include <optional>

#include "scynet/common.hpp"
#include "scynet/crypto.hpp"

namespace scynet {

class BlobStore {
public:
    Hash256 put(Bytes content) {
        Hash256 id = sha256(content);
        blobs_[id] = std::move(content);
        return id;
    }

    const Bytes* get(const Hash256& id) const {
        auto it = blobs_.find(id);
        return it == blobs_.end() ? nullptr : &it->second;
    }

    // Test hook: replaces content under an existing id without rehashing,
    // simulating a swapped blob behind a published URL.
    void tamper(const Hash256& id, Bytes content) { blobs_[id] = std::move(content); }

    size_t size() const { return blobs_.size(); }

private:
    std::map<Hash256, Bytes> blobs_;
};

}  // namespace scynet
