#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vlic {

enum class Errc {
  shape,
  invalid_problem,
  antidote_count,
  class_condition,
  lambda_required,
  not_scalar,
  undecodable_receiver,
  interference,
  schedule_mismatch,
  instance_too_large,
  parse,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::shape: return "shape";
    case Errc::invalid_problem: return "invalid problem";
    case Errc::antidote_count: return "antidote count";
    case Errc::class_condition: return "class condition";
    case Errc::lambda_required: return "lambda required";
    case Errc::not_scalar: return "not scalar";
    case Errc::undecodable_receiver: return "undecodable receiver";
    case Errc::interference: return "interference";
    case Errc::schedule_mismatch: return "schedule mismatch";
    case Errc::instance_too_large: return "instance too large";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

/// Library error. what() is "<kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace vlic
