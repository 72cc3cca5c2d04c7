#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "nctorus/torus_element.hpp"

namespace nctorus {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Evaluates an infix expression over the generators to normal form.
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | primary ('^' ( '*' | ['-'] integer ))*
///   primary := integer ['/' integer] | 'u' | 'v' | 'U' | 'V' | 'Q'
///            | 'z(' ['-'] integer ['/' integer] ')'
///            | 'trace(' expr ')' | 'star(' expr ')' | '(' expr ')'
///
/// U and V are u^* and v^*; z(c) is exp(2 pi i c); Q is exp(2 pi i theta).
TorusElement evaluate_expression(const std::string& text, ThetaContext ctx = {});

}  // namespace nctorus
