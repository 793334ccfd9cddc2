#pragma once

// Canonical byte encoding shared by transaction signing, block logs, and
// state hashing. Rules: integers are 8-byte big-endian; variable-length
// byte strings carry a u64 length prefix; fixed-size arrays are raw;
// doubles are the big-endian IEEE-754 bit pattern. Fields are concatenated
// in declaration order.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "scynet/common.hpp"

namespace scynet {

class Encoder {
public:
    void u64(uint64_t v) {
        for (int i = 7; i >= 0; --i) buf_.push_back(uint8_t(v >> (i * 8)));
    }
    void i64(int64_t v) { u64(uint64_t(v)); }
    void f64(double v) {
        uint64_t bits;
        std::memcpy(&bits, &v, 8);
        u64(bits);
    }
    void raw(const uint8_t* data, size_t n) { buf_.insert(buf_.end(), data, data + n); }
    template <size_t N>
    void fixed(const std::array<uint8_t, N>& a) { raw(a.data(), N); }
    void bytes(const Bytes& b) {
        u64(b.size());
        raw(b.data(), b.size());
    }
    void str(const std::string& s) {
        u64(s.size());
        raw(reinterpret_cast<const uint8_t*>(s.data()), s.size());
    }

    const Bytes& data() const { return buf_; }
    Bytes take() { return std::move(buf_); }
    void clear() { buf_.clear(); }

private:
    Bytes buf_;
};

struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

class Decoder {
public:
    Decoder(const uint8_t* data, size_t n) : data_(data), size_(n) {}
    explicit Decoder(const Bytes& b) : Decoder(b.data(), b.size()) {}

    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_ + i];
        pos_ += 8;
        return v;
    }
    int64_t i64() { return int64_t(u64()); }
    double f64() {
        uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }
    template <size_t N>
    std::array<uint8_t, N> fixed() {
        need(N);
        std::array<uint8_t, N> a;
        std::memcpy(a.data(), data_ + pos_, N);
        pos_ += N;
        return a;
    }
    Bytes bytes() {
        uint64_t n = u64();
        need(n);
        Bytes b(data_ + pos_, data_ + pos_ + n);
        pos_ += n;
        return b;
    }
    std::string str() {
        Bytes b = bytes();
        return std::string(b.begin(), b.end());
    }

    bool done() const { return pos_ == size_; }
    size_t remaining() const { return size_ - pos_; }

private:
    void need(uint64_t n) const {
        if (n > size_ - pos_) throw DecodeError("truncated input");
    }
    const uint8_t* data_;
    size_t size_;
    size_t pos_ = 0;
};

}  // namespace scynet
