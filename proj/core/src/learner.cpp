#include "boks/learner.hpp"

#include <string>

#include "boks/error.hpp"

namespace boks {

LambdaMode parse_lambda_mode(std::string_view name) {
  if (name == "experimental") return LambdaMode::experimental;
  if (name == "theoretical") return LambdaMode::theoretical;
  throw ConfigError("unknown lambda mode '" + std::string(name) + "'");
}

RemovalMode parse_removal_mode(std::string_view name) {
  if (name == "half") return RemovalMode::half;
  if (name == "restart") return RemovalMode::restart;
  throw ConfigError("unknown removal mode '" + std::string(name) + "'");
}

std::string_view to_string(LambdaMode mode) {
  return mode == LambdaMode::experimental ? "experimental" : "theoretical";
}

std::string_view to_string(RemovalMode mode) { return mode == RemovalMode::half ? "half" : "restart"; }

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::no_loss: return "no_loss";
    case Branch::proxy: return "proxy";
    case Branch::skipped: return "skipped";
    case Branch::inserted: return "inserted";
    case Branch::removed: return "removed";
  }
  return "?";
}

}  // namespace boks
