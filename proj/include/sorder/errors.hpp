#pragma once

#include <stdexcept>
#include <string>

namespace sorder {

// Every failure the library reports on purpose (degree caps, ordering
// poles, bad dimensions) is thrown as sorder::error with a short reason.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sorder
