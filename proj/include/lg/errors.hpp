#pragma once

#include <stdexcept>
#include <string>

namespace lg {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " (at offset " + std::to_string(at) + ")"), pos(at) {}
};

enum class TypeErrorKind {
  UnboundVariable,
  VariableUsedTwice,
  VariableUnused,
  TypeMismatch,
  MissingAnnotation,
};

struct TypeError : std::runtime_error {
  TypeErrorKind kind;
  TypeError(TypeErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct Diverged : std::runtime_error {
  Diverged() : std::runtime_error("normalization exceeded its fuel bound") {}
};

struct DepthExceeded : std::runtime_error {
  DepthExceeded() : std::runtime_error("proof search hit a resource cap before finding a derivation") {}
};

enum class SemanticsErrorKind { UnknownWord, UnknownAtom, UnknownConstant, NoDerivation, BadLexicon };

struct SemanticsError : std::runtime_error {
  SemanticsErrorKind kind;
  SemanticsError(SemanticsErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct UnsupportedConnective : std::runtime_error {
  explicit UnsupportedConnective(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lg
