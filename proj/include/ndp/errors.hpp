#ifndef NDP_ERRORS_HPP
#define NDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ndp {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Monomials from different ambient rings were combined.
class AmbientMismatchError : public Error {
public:
    explicit AmbientMismatchError(const std::string& what) : Error(what) {}
};

/// A configured size cap was exceeded.  Never a wrong answer: callers that
/// see this must treat the computation as unfinished, not as a verdict.
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& what) : Error(what) {}
};

/// Operation requires an m-primary ideal.
class NotPrimaryError : public Error {
public:
    explicit NotPrimaryError(const std::string& what) : Error(what) {}
};

/// Operation requires all generators in a single degree.
class NotEquigeneratedError : public Error {
public:
    explicit NotEquigeneratedError(const std::string& what) : Error(what) {}
};

/// Operation requires a square-free ideal.
class NotSquarefreeError : public Error {
public:
    explicit NotSquarefreeError(const std::string& what) : Error(what) {}
};

/// Unsupported coefficient field.
class FieldError : public Error {
public:
    explicit FieldError(const std::string& what) : Error(what) {}
};

/// A supplied certificate fails its own invariants.
class CertificateError : public Error {
public:
    explicit CertificateError(const std::string& what) : Error(what) {}
};

/// Malformed input file or text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line), column(column) {}
    int line;
    int column;
};

/// A documented operation precondition does not hold.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

} // namespace ndp

#endif
