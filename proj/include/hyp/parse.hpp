// Polynomial text grammar: parsing and the canonical renderer.
#ifndef HYP_PARSE_HPP
#define HYP_PARSE_HPP

#include <hyp/bipoly.hpp>
#include <hyp/multipoly.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyp {

// Grammar: + - * ^ with standard precedence, parentheses, rational
// literals p/q, non-negative integer exponents, '*' required between
// factors. Variables are x1..xN, with aliases x,y,z,w when N <= 4.
struct ParseError : std::runtime_error {
  std::size_t position;  // 1-based character position
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

MultiPoly parse_poly(std::string_view text, int nvars);

// Display name of a variable; inverse of parse_var_name.
std::string var_name(int index, int nvars);
// Resolve a variable name to its 0-based index; throws ParseError(pos=1).
int parse_var_name(std::string_view name, int nvars);

// Canonical rendering: terms in descending graded-lexicographic order.
// parse_poly(render(p), p.nvars()) == p, exactly.
std::string render(const MultiPoly& p);
std::string render(const UniPoly& p, std::string_view var = "t");
std::string render(const BiPoly& b);  // variables z, w

// Comma-separated rational list, e.g. "0,0,1" or "-1/2,3".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace hyp

#endif
