#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace greyfrac {

enum class errc {
  invalid_argument,
  domain,
  insufficient_data,
  degenerate_design,
  no_feasible_order,
  parse,
  io,
};

class Error : public std::runtime_error {
public:
  Error(errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, std::string msg) {
  throw Error(code, std::move(msg));
}

}  // namespace greyfrac
