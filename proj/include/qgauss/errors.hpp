#pragma once

#include <stdexcept>
#include <string>

namespace qgauss {

// Every failure raised by the library carries a stable kind string so the CLI can
// report it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& m) : Error("InvalidArgument", m) {}
};
struct CapExceeded : Error {
  explicit CapExceeded(const std::string& m) : Error("CapExceeded", m) {}
};
struct WindowExceeded : Error {
  explicit WindowExceeded(const std::string& m) : Error("WindowExceeded", m) {}
};
struct TruncationExceeded : Error {
  explicit TruncationExceeded(const std::string& m) : Error("TruncationExceeded", m) {}
};
struct SizeGuard : Error {
  explicit SizeGuard(const std::string& m) : Error("SizeGuard", m) {}
};
struct InvalidGroup : Error {
  explicit InvalidGroup(const std::string& m) : Error("InvalidGroup", m) {}
};
struct InvalidAlgebra : Error {
  explicit InvalidAlgebra(const std::string& m) : Error("InvalidAlgebra", m) {}
};
struct SingularSystem : Error {
  explicit SingularSystem(const std::string& m) : Error("SingularSystem", m) {}
};

}  // namespace qgauss
