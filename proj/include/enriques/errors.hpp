#pragma once

#include <stdexcept>
#include <string>

namespace enriques {

// A mathematical precondition was violated (H^2 <= 0, wrong cone component,
// k < 1, ...). The message states the failing numeric fact.
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace enriques
