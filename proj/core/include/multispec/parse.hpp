#ifndef MULTISPEC_PARSE_HPP
#define MULTISPEC_PARSE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "multispec/poly.hpp"

namespace multispec {

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

   private:
    std::size_t position_;
};

// Polynomial grammar: rational literals "p" and "p/q", the variable z,
// operators + - * ^ and parentheses; ^ takes nonnegative integer exponents;
// no implicit multiplication. Whitespace is ignored.
Poly parse_poly(const std::string& text);

}  // namespace multispec

#endif
