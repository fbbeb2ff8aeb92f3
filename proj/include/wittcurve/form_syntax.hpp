#pragma once

// ASCII concrete syntax for diagonal forms:
//
//   form  := '<' [entry (',' entry)*] '>'
//   entry := ['-'] term ('*' term)*
//   term  := '1' | 's' | 'pi' | 'L' digits
//
// Whitespace between tokens is ignored. The unicode brackets U+27E8/U+27E9 are accepted
// in place of '<' and '>'. '-' multiplies the entry by <-1>; repeated terms multiply in
// their component groups, so "s*s" is 1 and "L1*L1" is the trivial bundle.

#include <string>
#include <string_view>

#include "wittcurve/base_groups.hpp"
#include "wittcurve/quadratic_forms.hpp"

namespace wittcurve {

/// Throws ParseError on malformed input or a bundle label L<k> with k > picard rank.
DiagonalForm parse_form(std::string_view text, const CurveConfig& cfg);

/// Canonical spelling of a square class: "1", or '*'-joined "s", "pi", "L<k>" in that order.
std::string format_square_class(const GlobalSquareClass& c);
std::string format_generator(const Generator& g);
/// Never emits '-' or unicode; parse_form(format_form(e)) == e.
std::string format_form(const DiagonalForm& e);
/// Quaternion notation "(x,pi)"; the trivial class prints as "(1,pi)".
std::string format_brauer_class(const BrauerClass& b);

}  // namespace wittcurve
