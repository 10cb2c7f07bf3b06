#pragma once

#include <stdexcept>
#include <string>

namespace sol {

/// Field or potential evaluated at the singular point r = 0.
class SingularPointError : public std::domain_error {
public:
  explicit SingularPointError(const std::string& what) : std::domain_error(what) {}
};

/// Operation that needs one-sided smoothness was evaluated on the shell r = r0.
class ShellError : public std::domain_error {
public:
  explicit ShellError(const std::string& what) : std::domain_error(what) {}
};

/// A finite-difference stencil would straddle r = 0 or the discontinuity shell.
class StencilCollisionError : public std::domain_error {
public:
  explicit StencilCollisionError(const std::string& what) : std::domain_error(what) {}
};

/// A quadrature failed its self-check against the requested relative tolerance.
class ToleranceError : public std::runtime_error {
public:
  explicit ToleranceError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sol
