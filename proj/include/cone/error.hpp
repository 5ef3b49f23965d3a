#ifndef CONE_ERROR_HPP_
#define CONE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cone {

enum class ErrorKind {
  DegenerateMetric,
  InvalidInput,
  UnderResolved,
  WraparoundRisk,
  SupportViolation,
  InvalidCase,
  MalformedConfig,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateMetric: return "degenerate-metric";
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::UnderResolved: return "under-resolved";
    case ErrorKind::WraparoundRisk: return "wraparound-risk";
    case ErrorKind::SupportViolation: return "support-violation";
    case ErrorKind::InvalidCase: return "invalid-case";
    case ErrorKind::MalformedConfig: return "malformed-config";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

}  // namespace cone

#endif  // CONE_ERROR_HPP_
