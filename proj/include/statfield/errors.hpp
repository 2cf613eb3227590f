#ifndef STATFIELD_ERRORS_HPP
#define STATFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace statfield {

/// Broad failure classes, mirrored by the C API status codes and CLI exit codes.
enum class ErrorKind {
  Internal,   // programming error / unexpected state
  Config,     // invalid scenario configuration or input file
  Numeric,    // runtime numerical failure (node, blow-up, floor division, ...)
  Verify,     // a verification check failed
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

struct ConfigError : Error {
  explicit ConfigError(std::string msg) : Error(ErrorKind::Config, std::move(msg)) {}
};

/// Numerical failure with a named sub-kind (NodeError, BlowUp, ...).
struct NumericError : Error {
  NumericError(std::string what_kind, std::string msg)
      : Error(ErrorKind::Numeric, what_kind + ": " + std::move(msg)),
        sub_kind(std::move(what_kind)) {}
  std::string sub_kind;
};

inline NumericError node_error(std::string msg) { return {"NodeError", std::move(msg)}; }
inline NumericError division_by_floor(std::string msg) { return {"DivisionByFloor", std::move(msg)}; }
inline NumericError blow_up(std::string msg) { return {"BlowUp", std::move(msg)}; }
inline NumericError norm_drift(std::string msg) { return {"NormDrift", std::move(msg)}; }
inline NumericError out_of_range(std::string msg) { return {"OutOfRange", std::move(msg)}; }

struct BadIndexError : Error {
  explicit BadIndexError(std::string msg) : Error(ErrorKind::Config, std::move(msg)) {}
};

struct JetOverflowError : Error {
  explicit JetOverflowError(std::string msg) : Error(ErrorKind::Numeric, std::move(msg)) {}
};

}  // namespace statfield

#endif
