#ifndef TKT_ERRORS_HPP
#define TKT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tkt {

/// Domain error carrying a stable machine-readable name alongside the message.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(detail.empty() ? name : name + ": " + detail),
        name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& detail = "") {
  throw DomainError(name, detail);
}

}  // namespace tkt

#endif
