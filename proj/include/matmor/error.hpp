#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

namespace matmor {

// Domain error with a machine-readable kind and optional structured payload
// (witnesses, offending indices). The CLI maps these to error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message,
        nlohmann::json details = nullptr)
      : std::runtime_error(message),
        kind_(std::move(kind)),
        details_(std::move(details)) {}

  const std::string& kind() const { return kind_; }
  const nlohmann::json& details() const { return details_; }

 private:
  std::string kind_;
  nlohmann::json details_;
};

}  // namespace matmor
