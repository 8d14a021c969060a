#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hopftwist/geometry.hpp"

namespace hopftwist {

/// Syntax error or unknown symbol; `position` is a 0-based offset into the text.
class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t position, const std::string& what);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Symbols known to the parser: coordinates x1..xD, del1..delD, dx1..dxD,
/// the basis of `algebra`, the listed parameters, hbar, i and sqrt(p).
struct ParseContext {
    LiePtr algebra;
    int dim = 3;
    std::vector<std::string> parameters{"a", "c"};
};

using Expr = std::variant<HbarSeries, Geom, PBWElement, TensorElement>;

/// Grammar: sum := term (('+'|'-') term)*, term := product ('ox' product)*,
/// product := unary (('*'|'/'|'&') unary)*, unary := '-' unary | power,
/// power := atom ('^' integer)?, atom := number | symbol | sqrt(p) | (sum).
/// Division is by hbar-free scalars only.
Expr parse_expr(std::string_view text, const ParseContext& ctx);

/// Typed front ends; scalar results are promoted.
Geom parse_geom(std::string_view text, const ParseContext& ctx);
PBWElement parse_pbw(std::string_view text, const ParseContext& ctx);
TensorElement parse_tensor(std::string_view text, const ParseContext& ctx);
Scalar parse_scalar(std::string_view text, const ParseContext& ctx = {});

std::string print_expr(const Expr& e);

}  // namespace hopftwist
