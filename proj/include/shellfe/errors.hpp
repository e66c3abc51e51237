#pragma once

#include <stdexcept>
#include <string>

namespace shellfe {

/// Base class for all solver-facing errors.
class ShellError : public std::runtime_error {
public:
    explicit ShellError(const std::string& what) : std::runtime_error(what) {}
};

/// The volume-element density became non-positive (inverted element or
/// invalid geometry). Carries enough context to locate the offending point.
class NonpositiveJacobian : public ShellError {
public:
    explicit NonpositiveJacobian(const std::string& what) : ShellError(what) {}
};

/// Evaluation outside the valid parametric domain (e.g. the polar axis of a
/// spherical patch).
class DomainError : public ShellError {
public:
    explicit DomainError(const std::string& what) : ShellError(what) {}
};

class InvalidOrder : public ShellError {
public:
    explicit InvalidOrder(const std::string& what) : ShellError(what) {}
};

class ExpressionParseError : public ShellError {
public:
    explicit ExpressionParseError(const std::string& what) : ShellError(what) {}
};

class ConfigError : public ShellError {
public:
    explicit ConfigError(const std::string& what) : ShellError(what) {}
};

class UnknownNode : public ShellError {
public:
    explicit UnknownNode(const std::string& what) : ShellError(what) {}
};

class BadSurfaceSelector : public ShellError {
public:
    explicit BadSurfaceSelector(const std::string& what) : ShellError(what) {}
};

/// Constrained system still contains rigid modes (or is otherwise singular).
class SingularSystem : public ShellError {
public:
    explicit SingularSystem(const std::string& what) : ShellError(what) {}
};

class NonConvergence : public ShellError {
public:
    explicit NonConvergence(const std::string& what) : ShellError(what) {}
};

class IoError : public ShellError {
public:
    explicit IoError(const std::string& what) : ShellError(what) {}
};

} // namespace shellfe
