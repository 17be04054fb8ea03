#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ibtc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument to an in-memory operation (empty image, size mismatch, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Container header is not an IBTC v1 header.
class FormatError : public Error {
public:
    using Error::Error;
};

/// Container payload is shorter or longer than the header implies.
class LengthError : public Error {
public:
    LengthError(const std::string& what, std::size_t expected_bits, std::size_t actual_bits)
        : Error(what), expected_bits_(expected_bits), actual_bits_(actual_bits) {}

    std::size_t expected_bits() const noexcept { return expected_bits_; }
    std::size_t actual_bits() const noexcept { return actual_bits_; }

private:
    std::size_t expected_bits_;
    std::size_t actual_bits_;
};

/// A block payload does not match its declared mode.
class DecodeError : public Error {
public:
    DecodeError(const std::string& what, std::size_t block_index)
        : Error(what), block_index_(block_index) {}

    std::size_t block_index() const noexcept { return block_index_; }

private:
    std::size_t block_index_;
};

/// CompressedImage whose block list does not match its dimensions.
class StructureError : public Error {
public:
    using Error::Error;
};

/// PGM parse failure at a byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace ibtc
