#pragma once

#include <stdexcept>
#include <string>

namespace schwarz {

/// Base of every error raised by the library. `kind()` is a stable,
/// machine-readable tag used by the CLI's JSON error channel.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SCHWARZ_DEFINE_ERROR(Name, Tag)                                   \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(Tag, what) {}      \
    };

SCHWARZ_DEFINE_ERROR(DomainError, "domain")
SCHWARZ_DEFINE_ERROR(UnsupportedError, "unsupported")
SCHWARZ_DEFINE_ERROR(ResourceError, "resource")
SCHWARZ_DEFINE_ERROR(UnivalenceError, "univalence")
SCHWARZ_DEFINE_ERROR(NormalizationError, "normalization")
SCHWARZ_DEFINE_ERROR(GridError, "grid")
SCHWARZ_DEFINE_ERROR(QuadratureError, "quadrature")
SCHWARZ_DEFINE_ERROR(CriticalPointError, "critical_point")
SCHWARZ_DEFINE_ERROR(SpecFormatError, "spec_format")

#undef SCHWARZ_DEFINE_ERROR

} // namespace schwarz
