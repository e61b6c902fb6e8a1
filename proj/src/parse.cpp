#include "chern/parse.h"

#include "chern/error.h"
#include "chern/reps.h"

#include <cctype>
#include <fmt/format.h>

namespace chern {

namespace {

class Cursor
{
  public:
	explicit Cursor(std::string_view src) : src_(src) {}

	void skip_space()
	{
		while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
			++pos_;
	}

	bool at_end()
	{
		skip_space();
		return pos_ >= src_.size();
	}

	char peek()
	{
		skip_space();
		return pos_ < src_.size() ? src_[pos_] : '\0';
	}

	bool accept(char c)
	{
		if (peek() != c)
			return false;
		++pos_;
		return true;
	}

	void expect(char c)
	{
		if (!accept(c))
			throw error(fmt::format("expected '{}'", c));
	}

	bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
	bool peek_alpha() { return std::isalpha(static_cast<unsigned char>(peek())) != 0; }

	Integer integer()
	{
		skip_space();
		std::size_t start = pos_;
		while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
			++pos_;
		if (start == pos_)
			throw error("expected an integer");
		return Integer(std::string(src_.substr(start, pos_ - start)));
	}

	long small_integer()
	{
		auto start = position();
		auto v = integer();
		if (!v.fits_sint_p() || v > 1'000'000)
			throw SyntaxError(start, "integer literal too large");
		return v.get_si();
	}

	/** Signed integer, for weight coordinates. */
	std::int64_t coordinate()
	{
		bool neg = accept('-');
		auto v = small_integer();
		return neg ? -v : v;
	}

	std::string_view identifier()
	{
		skip_space();
		std::size_t start = pos_;
		while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_])))
			++pos_;
		return src_.substr(start, pos_ - start);
	}

	std::size_t position()
	{
		skip_space();
		return pos_;
	}

	SyntaxError error(std::string const &what)
	{
		std::string near = pos_ < src_.size() ? fmt::format("'{}'", src_[pos_]) : "end of input";
		return SyntaxError(pos_, fmt::format("{} (found {})", what, near));
	}

  private:
	std::string_view src_;
	std::size_t pos_ = 0;
};

class RepParser
{
  public:
	RepParser(std::string_view src, GroupSpec const &g, bool allow_std)
	    : cur_(src), group_(g), allow_std_(allow_std)
	{}

	RepExpression parse()
	{
		auto e = expr();
		if (!cur_.at_end())
			throw cur_.error("unexpected trailing input");
		return e;
	}

  private:
	static RepExpression node(RepExpression::Kind k, std::vector<RepExpression> children,
	                          int power = 0)
	{
		return RepExpression{k, power, std::move(children), nullptr};
	}

	RepExpression literal(VirtualCharacter x)
	{
		return RepExpression{RepExpression::Kind::literal, 0, {},
		                     std::make_shared<VirtualCharacter const>(std::move(x))};
	}

	RepExpression expr()
	{
		auto e = term();
		while (true)
		{
			if (cur_.accept('+'))
				e = node(RepExpression::Kind::add, {std::move(e), term()});
			else if (cur_.accept('-'))
				e = node(RepExpression::Kind::subtract, {std::move(e), term()});
			else
				return e;
		}
	}

	RepExpression term()
	{
		auto e = unary();
		while (cur_.accept('*'))
			e = node(RepExpression::Kind::multiply, {std::move(e), unary()});
		return e;
	}

	RepExpression unary()
	{
		if (cur_.accept('-'))
			return node(RepExpression::Kind::negate, {unary()});
		return primary();
	}

	Weight weight()
	{
		auto start = cur_.position();
		cur_.expect('[');
		std::vector<std::int64_t> coords{cur_.coordinate()};
		while (cur_.accept(','))
			coords.push_back(cur_.coordinate());
		cur_.expect(']');
		if (static_cast<int>(coords.size()) != group_.rank())
			throw SyntaxError(start, fmt::format("weight literal has {} coordinates, "
			                                     "torus rank is {}",
			                                     coords.size(), group_.rank()));
		return Weight(std::move(coords));
	}

	int power_argument()
	{
		cur_.expect('(');
		auto p = cur_.small_integer();
		cur_.expect(',');
		return static_cast<int>(p);
	}

	RepExpression primary()
	{
		auto start = cur_.position();
		if (cur_.accept('('))
		{
			auto e = expr();
			cur_.expect(')');
			return e;
		}
		if (cur_.peek() == '[')
			return literal(VirtualCharacter::basis(weight()));
		if (cur_.peek_digit())
		{
			auto n = cur_.integer();
			if (cur_.peek() == '[')
				return literal(VirtualCharacter::basis(weight(), n));
			return literal(VirtualCharacter::basis(Weight::zero(group_.rank()), n));
		}
		if (!cur_.peek_alpha())
			throw cur_.error("expected a representation");
		auto name = cur_.identifier();
		if (name == "std")
		{
			if (!allow_std_)
				throw SyntaxError(start, "'std' is not available here");
			return node(RepExpression::Kind::standard, {});
		}
		if (name == "ext" || name == "sym")
		{
			int p = power_argument();
			auto inner = expr();
			cur_.expect(')');
			return node(name == "ext" ? RepExpression::Kind::exterior
			                          : RepExpression::Kind::symmetric,
			            {std::move(inner)}, p);
		}
		if (name == "dual")
		{
			cur_.expect('(');
			auto inner = expr();
			cur_.expect(')');
			return node(RepExpression::Kind::dual, {std::move(inner)});
		}
		if (name == "weights")
		{
			cur_.expect('[');
			VirtualCharacter x(group_.rank());
			if (!cur_.accept(']'))
			{
				x.add_term(weight(), 1);
				while (cur_.accept(','))
					x.add_term(weight(), 1);
				cur_.expect(']');
			}
			return literal(std::move(x));
		}
		throw SyntaxError(start, fmt::format("unknown name '{}'", name));
	}

	Cursor cur_;
	GroupSpec group_;
	bool allow_std_;
};

class PolynomialParser
{
  public:
	PolynomialParser(std::string_view src, int rank, std::string_view prefix)
	    : cur_(src), rank_(rank), prefix_(prefix)
	{}

	SymbolicPolynomial parse()
	{
		auto f = expr();
		if (!cur_.at_end())
			throw cur_.error("unexpected trailing input");
		return f;
	}

  private:
	SymbolicPolynomial expr()
	{
		auto f = term();
		while (true)
		{
			if (cur_.accept('+'))
				f += term();
			else if (cur_.accept('-'))
				f -= term();
			else
				return f;
		}
	}

	SymbolicPolynomial term()
	{
		auto f = unary();
		while (true)
		{
			if (cur_.accept('*'))
				f = f * unary();
			else if (cur_.peek() == '/')
			{
				auto at = cur_.position();
				cur_.accept('/');
				auto g = unary();
				if (g.is_zero() || g.degree() != 0)
					throw SyntaxError(at, "division is only by a nonzero constant");
				f *= 1 / g.coefficient(Exponents(rank_, 0));
			}
			else
				return f;
		}
	}

	SymbolicPolynomial unary()
	{
		if (cur_.accept('-'))
			return -unary();
		if (cur_.accept('+'))
			return unary();
		return power();
	}

	SymbolicPolynomial power()
	{
		auto f = atom();
		if (cur_.accept('^'))
		{
			auto e = cur_.small_integer();
			f = pow(f, static_cast<unsigned>(e));
		}
		return f;
	}

	SymbolicPolynomial atom()
	{
		auto start = cur_.position();
		if (cur_.accept('('))
		{
			auto f = expr();
			cur_.expect(')');
			return f;
		}
		if (cur_.peek_digit())
			return SymbolicPolynomial::constant(rank_, Rational(cur_.integer()));
		if (cur_.peek_alpha())
		{
			auto name = cur_.identifier();
			if (name != prefix_ || !cur_.peek_digit())
				throw SyntaxError(start, fmt::format("expected a variable {}<k>", prefix_));
			auto k = cur_.small_integer();
			if (k < 1 || k > rank_)
				throw SyntaxError(start, fmt::format("variable {}{} out of range 1..{}",
				                                     prefix_, k, rank_));
			return SymbolicPolynomial::variable(rank_, static_cast<int>(k - 1));
		}
		throw cur_.error("expected a number, variable or '('");
	}

	Cursor cur_;
	int rank_;
	std::string_view prefix_;
};

} // namespace

RepExpression parse_rep(std::string_view src, GroupSpec const &g)
{
	return RepParser(src, g, true).parse();
}

VirtualCharacter evaluate(RepExpression const &e, GroupSpec const &g)
{
	using K = RepExpression::Kind;
	auto child = [&](std::size_t i) { return evaluate(e.children.at(i), g); };
	switch (e.kind)
	{
	case K::standard: return standard(g);
	case K::exterior: return exterior(child(0), e.power);
	case K::symmetric: return symmetric(child(0), e.power);
	case K::dual: return dual(child(0));
	case K::add: return child(0) + child(1);
	case K::subtract: return child(0) - child(1);
	case K::multiply: return child(0) * child(1);
	case K::negate: return -child(0);
	case K::literal: return *e.literal;
	}
	throw Error(ErrorCode::defect, "unknown representation node");
}

VirtualCharacter parse_character(std::string_view src, int rank)
{
	GroupSpec torus(Family::Torus, rank);
	return evaluate(RepParser(src, torus, false).parse(), torus);
}

SymbolicPolynomial parse_polynomial(std::string_view src, int rank, std::string_view prefix)
{
	return PolynomialParser(src, rank, prefix).parse();
}

GeneratorExpression parse_generator_expression(std::string_view src, GroupSpec const &g)
{
	return GeneratorExpression(g, parse_polynomial(src, g.rank(), "I"));
}

} // namespace chern
