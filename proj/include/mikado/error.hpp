#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mikado {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument values: out-of-range exponents, mismatched grids, bad configs.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A numerical precondition does not hold (non-finite samples, nonzero mean
/// handed to the anti-divergence, inadmissible plan, diffusion gating, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The grid cannot resolve a concentrated building block.
class ResolutionError : public PreconditionError {
public:
    ResolutionError(const std::string& what, std::size_t required_n)
        : PreconditionError(what), required_n_(required_n) {}

    std::size_t required_n() const noexcept { return required_n_; }

private:
    std::size_t required_n_;
};

/// Malformed binary field container.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::uint64_t offset)
        : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::uint64_t offset() const noexcept { return offset_; }

private:
    std::uint64_t offset_;
};

}  // namespace mikado
