#ifndef F5_PARSE_HPP
#define F5_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "f5/polynomial.hpp"

namespace f5 {

/// A diagnostic with a 1-based source location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Parses text such as `3*x^2*y - 1/2*z*t^3`. The `*` between factors is
/// optional and juxtaposed variable names (`yz^3`) are split against the
/// ring's variable list, longest name first. `line` and `column_offset`
/// place diagnostics inside a larger file.
template <class Field>
Polynomial<Field> parse_polynomial(std::string_view text, const PolyRing<Field>& ring,
                                   std::size_t line = 1, std::size_t column_offset = 0);

extern template Polynomial<RationalField> parse_polynomial(std::string_view,
                                                           const PolyRing<RationalField>&,
                                                           std::size_t, std::size_t);
extern template Polynomial<PrimeField> parse_polynomial(std::string_view,
                                                        const PolyRing<PrimeField>&, std::size_t,
                                                        std::size_t);

}  // namespace f5

#endif  // F5_PARSE_HPP
