#ifndef SUMPROD_ERRORS_HPP
#define SUMPROD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sumprod {

/// Base class for all structured errors raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input stream; carries 1-based line and byte offset within that line.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t offset, const std::string& what_arg)
      : Error("line " + std::to_string(line) + ", offset " + std::to_string(offset) + ": " +
              what_arg),
        line_(line),
        offset_(offset) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t line_;
  std::size_t offset_;
};

/// Requested interval exceeds the supported width (2^32 - 1 elements).
class DomainTooLarge : public Error {
public:
  using Error::Error;
};

/// A clique search exhausted its range without finding the required
/// monochromatic structure. The caller may retry with a larger domain.
class RamseyFailure : public Error {
public:
  RamseyFailure(std::uint32_t level, std::uint64_t searched_range, const std::string& stage)
      : Error("no monochromatic clique found (stage: " + stage + ", level " +
              std::to_string(level) + ", searched range [1," + std::to_string(searched_range) +
              "])"),
        level_(level),
        searched_range_(searched_range),
        stage_(stage) {}

  std::uint32_t level() const noexcept { return level_; }
  std::uint64_t searched_range() const noexcept { return searched_range_; }
  const std::string& stage() const noexcept { return stage_; }

private:
  std::uint32_t level_;
  std::uint64_t searched_range_;
  std::string stage_;
};

/// An exact value was requested but its computation exceeds the configured budget.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A construction failed its own validation. Indicates a bug, never expected.
class SelfCheckFailure : public Error {
public:
  using Error::Error;
};

}  // namespace sumprod

#endif
