#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hfkit {

// First-order signature: function symbols and predicate symbols with arities.
struct Signature {
  std::string name;
  std::vector<std::pair<std::string, int>> functions;
  std::vector<std::pair<std::string, int>> predicates;

  std::optional<int> function_arity(const std::string& symbol) const {
    for (const auto& [s, a] : functions)
      if (s == symbol) return a;
    return std::nullopt;
  }
  std::optional<int> predicate_arity(const std::string& symbol) const {
    for (const auto& [s, a] : predicates)
      if (s == symbol) return a;
    return std::nullopt;
  }

  bool operator==(const Signature& other) const { return name == other.name; }

  // {0, S, +, *}
  static const Signature& arith() {
    static const Signature sig{
        "arith", {{"0", 0}, {"S", 1}, {"+", 2}, {"*", 2}}, {}};
    return sig;
  }
  // arith extended with a primitive exponential
  static const Signature& arith_exp() {
    static const Signature sig{
        "arith+", {{"0", 0}, {"S", 1}, {"+", 2}, {"*", 2}, {"exp", 2}}, {}};
    return sig;
  }
  // pure membership language
  static const Signature& set() {
    static const Signature sig{"set", {}, {{"in", 2}}};
    return sig;
  }

  static const Signature* by_name(const std::string& n) {
    if (n == "arith") return &arith();
    if (n == "arith+") return &arith_exp();
    if (n == "set") return &set();
    return nullptr;
  }
};

}  // namespace hfkit
