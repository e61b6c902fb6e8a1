#pragma once

// Text front ends shared by the CLI.
//
// Representation expressions:
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | primary
//   primary := 'std' | 'ext' '(' INT ',' expr ')' | 'sym' '(' INT ',' expr ')'
//            | 'dual' '(' expr ')' | 'weights' '[' weight (',' weight)* ']'
//            | [INT] weight | INT | '(' expr ')'
//   weight  := '[' INT (',' INT)* ']'
// A bare integer n is n[0], so the canonical character text
// "2[1,0] + [0,1] - 1[0,0]" parses back to itself.
//
// Polynomials: sums of products of rationals, variables <prefix><k> with
// 1-based k, '^' with a nonnegative integer exponent, and division by a
// nonzero constant; parentheses and unary minus allowed.

#include "chern/char_ring.h"
#include "chern/invariants.h"
#include "chern/polynomial.h"
#include "chern/weyl.h"

#include <memory>
#include <string_view>
#include <vector>

namespace chern {

struct RepExpression
{
	enum class Kind
	{
		standard,
		exterior,
		symmetric,
		dual,
		add,
		subtract,
		multiply,
		negate,
		literal,
	};

	Kind kind;
	int power = 0; // ext / sym
	std::vector<RepExpression> children;
	std::shared_ptr<VirtualCharacter const> literal;
};

/** Throws SyntaxError (with position) on malformed input or rank mismatch. */
RepExpression parse_rep(std::string_view src, GroupSpec const &g);

VirtualCharacter evaluate(RepExpression const &e, GroupSpec const &g);

/** Parses the canonical character text (or any literal-only expression). */
VirtualCharacter parse_character(std::string_view src, int rank);

SymbolicPolynomial parse_polynomial(std::string_view src, int rank,
                                    std::string_view prefix = "x");

GeneratorExpression parse_generator_expression(std::string_view src, GroupSpec const &g);

} // namespace chern
