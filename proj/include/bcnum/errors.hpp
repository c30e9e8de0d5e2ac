#ifndef BCNUM_ERRORS_HPP
#define BCNUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bcn {

/// Base error for all domain failures. `code()` is the stable,
/// machine-readable identifier surfaced by the CLI.
class error : public std::runtime_error {
public:
  error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

class invalid_value_error : public error {
public:
  explicit invalid_value_error(const std::string& what)
      : error("InvalidValue", what) {}
};

class zero_divisor_error : public error {
public:
  explicit zero_divisor_error(const std::string& what)
      : error("ZeroDivisor", what) {}
};

class shape_mismatch_error : public error {
public:
  explicit shape_mismatch_error(const std::string& what)
      : error("ShapeMismatch", what) {}
};

class not_square_error : public error {
public:
  explicit not_square_error(const std::string& what)
      : error("NotSquare", what) {}
};

class singular_error : public error {
public:
  singular_error(int component, const std::string& what)
      : error("Singular", what), component_(component) {}

  /// 1-based idempotent component that failed.
  int component() const noexcept { return component_; }

private:
  int component_;
};

class not_positive_error : public error {
public:
  explicit not_positive_error(const std::string& what)
      : error("NotPositive", what) {}
};

class not_in_cone_error : public error {
public:
  explicit not_in_cone_error(const std::string& what)
      : error("NotInCone", what) {}
};

class empty_set_error : public error {
public:
  explicit empty_set_error(const std::string& what)
      : error("EmptySet", what) {}
};

class outside_domain_error : public error {
public:
  explicit outside_domain_error(const std::string& what)
      : error("OutsideDomain", what) {}
};

class degenerate_parameter_error : public error {
public:
  explicit degenerate_parameter_error(const std::string& what)
      : error("DegenerateParameter", what) {}
};

class non_vanishing_error : public error {
public:
  explicit non_vanishing_error(const std::string& what)
      : error("NonVanishing", what) {}
};

class not_schur_error : public error {
public:
  explicit not_schur_error(const std::string& what)
      : error("NotSchur", what) {}
};

class resolvent_singular_error : public error {
public:
  explicit resolvent_singular_error(const std::string& what)
      : error("ResolventSingular", what) {}
};

class zero_divisor_denominator_error : public error {
public:
  explicit zero_divisor_denominator_error(const std::string& what)
      : error("ZeroDivisorDenominator", what) {}
};

} // namespace bcn

#endif // BCNUM_ERRORS_HPP
