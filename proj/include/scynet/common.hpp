#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace scynet {

using Bytes = std::vector<uint8_t>;
using Amount = uint64_t;     // smallest indivisible token unit
using Timestamp = int64_t;   // virtual milliseconds since epoch
using Duration = int64_t;    // milliseconds

using Hash256 = std::array<uint8_t, 32>;
using Address = std::array<uint8_t, 32>;  // ed25519 public key
using Uuid = std::array<uint8_t, 16>;
using Signature = std::array<uint8_t, 64>;

inline constexpr Address kBurnAddress{};  // all zeros, nothing ever spends from it

inline std::string to_hex(const uint8_t* data, size_t n) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(n * 2);
    for (size_t i = 0; i < n; ++i) {
        out.push_back(digits[data[i] >> 4]);
        out.push_back(digits[data[i] & 0xf]);
    }
    return out;
}

template <size_t N>
std::string to_hex(const std::array<uint8_t, N>& a) {
    return to_hex(a.data(), N);
}

inline std::string to_hex(const Bytes& b) { return to_hex(b.data(), b.size()); }

// Short prefix for logs.
template <size_t N>
std::string short_hex(const std::array<uint8_t, N>& a) {
    return to_hex(a.data(), 6);
}

}  // namespace scynet
