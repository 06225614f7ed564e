#ifndef POLYGRAPH_ERROR_HPP
#define POLYGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace polygraph {

/// Base class of every error raised by the library. `kind()` is a stable
/// machine-readable tag used by the CLI error JSON.
class Error : public std::runtime_error
{
  public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind))
    {
    }
    const std::string& kind() const { return kind_; }

  private:
    std::string kind_;
};

/// Precondition violated by the caller (a = 0 in an affine map, 0 in a
/// Cayley generator set, ...).
class DomainError : public Error
{
  public:
    explicit DomainError(const std::string& message) : Error("domain", message) {}
};

/// Operation requires exact arithmetic but was given float input.
class ModeError : public Error
{
  public:
    explicit ModeError(const std::string& message) : Error("mode", message) {}
};

/// NaN/Inf, overflow, or a decision too close to the tolerance to make.
class NumericalError : public Error
{
  public:
    explicit NumericalError(const std::string& message) : Error("numerical", message) {}

  protected:
    NumericalError(std::string kind, const std::string& message) : Error(std::move(kind), message) {}
};

/// A float input sits inside a tolerance band where the answer could go
/// either way (near-parabolic Moebius maps, cosine values near the cutoff).
class AmbiguousError : public NumericalError
{
  public:
    explicit AmbiguousError(const std::string& message) : NumericalError("ambiguous", message) {}
};

class ParseError : public Error
{
  public:
    ParseError(const std::string& message, std::size_t position)
        : Error("syntax", message + " at position " + std::to_string(position)),
          position_(position)
    {
    }
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

} // namespace polygraph

#endif
