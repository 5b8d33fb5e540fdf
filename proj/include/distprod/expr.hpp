#pragma once

// Mini-language for integrands.
//
//   expr   := term (('+' | '-') term)*          leading '-' allowed
//   term   := item ('*'? item)*
//   item   := rational | symbol ('^' int)?
//   symbol := 'D' | 'dD' | 'ddD' | 'delta'     integrand factors, power >= 0
//           | 'w' | 'd0' | 'a' | 'g'            coefficient symbols
//
// Only w may take a negative power. A term without integrand factors
// denotes the bare Int dtau and is rejected later by the reducer.
// Example: "dD^2 + w^2 D^2", "-3/32 w^-1 D^2 ddD^2".

#include "distprod/integrand.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace distprod {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourcePos pos);

  SourcePos pos() const { return pos_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

struct ExprTerm {
  SourcePos pos;
  ValuePoly coeff{1};
  Powers factors;
};

struct ExprAst {
  std::vector<ExprTerm> terms;
};

ExprAst parse(std::string_view text);
IntegrandSum lower(const ExprAst& ast);

inline IntegrandSum parse_integrand(std::string_view text) { return lower(parse(text)); }

}  // namespace distprod
