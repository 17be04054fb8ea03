#pragma once

// MSB-first bit packing used by the container.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ibtc {

class BitWriter {
public:
    explicit BitWriter(std::vector<std::uint8_t>& out) : out_(out) {}

    /// Appends the low `count` bits of `value`, most significant first.
    void write(std::uint32_t value, int count) {
        for (int i = count - 1; i >= 0; --i) {
            if (fill_ == 0) out_.push_back(0);
            if ((value >> i) & 1u) out_.back() |= static_cast<std::uint8_t>(0x80u >> fill_);
            fill_ = (fill_ + 1) & 7;
            ++bits_;
        }
    }

    std::size_t bits_written() const { return bits_; }

private:
    std::vector<std::uint8_t>& out_;
    int fill_ = 0;
    std::size_t bits_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> data) : data_(data) {}

    /// Caller guarantees `count` bits remain.
    std::uint32_t read(int count) {
        std::uint32_t v = 0;
        for (int i = 0; i < count; ++i) {
            const std::uint8_t byte = data_[cursor_ >> 3];
            v = (v << 1) | ((byte >> (7 - (cursor_ & 7))) & 1u);
            ++cursor_;
        }
        return v;
    }

    std::size_t position() const { return cursor_; }
    std::size_t remaining() const { return data_.size() * 8 - cursor_; }

private:
    std::span<const std::uint8_t> data_;
    std::size_t cursor_ = 0;
};

}  // namespace ibtc
