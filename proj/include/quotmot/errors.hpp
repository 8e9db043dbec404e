#ifndef QUOTMOT_ERRORS_HPP
#define QUOTMOT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quotmot {

struct InexactDivision : std::runtime_error {
  explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvertible : std::runtime_error {
  explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

struct VariableCountMismatch : std::runtime_error {
  explicit VariableCountMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct LengthTooLarge : std::runtime_error {
  explicit LengthTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct LengthTooSmall : std::runtime_error {
  explicit LengthTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasibleSize : std::runtime_error {
  explicit InfeasibleSize(const std::string& what) : std::runtime_error(what) {}
};

struct InternalMismatch : std::logic_error {
  explicit InternalMismatch(const std::string& what) : std::logic_error(what) {}
};

struct InvalidArgument : std::invalid_argument {
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace quotmot

#endif
