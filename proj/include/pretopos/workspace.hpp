#pragma once

// The text DSL and the command surface behind pretopos-lab.
//
//   set A = 3;
//   map f : A -> A = [0, 0, 1];
//   rel R on A = {(0, 1), (1, 0)};
//   setoid S = (A, R);
//   square q = (top, right, bottom, left);
//
// Whitespace is insignificant and `#` starts a line comment.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pretopos/core.hpp"
#include "pretopos/exactness.hpp"
#include "pretopos/limits.hpp"

namespace pretopos {

/// An error pinned to a position in DSL source (1-based).
class SourceError : public Error {
 public:
  SourceError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct SetoidBinding {
  std::string set;
  std::string relation;
  Setoid setoid;
};

struct SquareBinding {
  std::string top, right, bottom, left;
  Square square;
};

using Binding = std::variant<FinSet, FinMap, Relation, SetoidBinding, SquareBinding>;

class Workspace {
 public:
  std::uint64_t cap = kDefaultCap;
  std::optional<std::uint64_t> seed;

  /// Throws DuplicateName.
  void define(const std::string& name, Binding value);
  bool contains(const std::string& name) const { return bindings_.count(name) != 0; }
  /// Throws UnknownBinding.
  const Binding& at(const std::string& name) const;
  /// Typed lookups; a binding of the wrong sort is a ValidationError.
  const FinSet& set(const std::string& name) const;
  const FinMap& map(const std::string& name) const;
  const Relation& relation(const std::string& name) const;
  const Setoid& setoid(const std::string& name) const;
  const Square& square(const std::string& name) const;

  /// Names in definition order.
  const std::vector<std::string>& names() const noexcept { return order_; }

 private:
  std::map<std::string, Binding> bindings_;
  std::vector<std::string> order_;
};

/// Throws SourceError with kind ParseError, ValidationError or DuplicateName.
Workspace parse(std::string_view source);

/// Canonical source: one statement per line in definition order.
std::string render(const Workspace& w);

/// `construct <what> ARGS...` or `verify <what> ARGS... [--option value]...`.
/// Throws UnknownCommand, UnknownBinding, CapExceeded and module errors.
Certificate run_command(const Workspace& w, std::string_view command);

}  // namespace pretopos
