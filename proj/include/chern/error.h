#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chern {

enum class ErrorCode
{
	dimension,           // weight / polynomial length mismatch
	rank_mismatch,       // operands live over different tori
	enumeration_refused, // Weyl group too large to enumerate
	invalid_argument,    // precondition on a scalar argument
	augmentation,        // element must lie in the augmentation ideal
	cap,                 // filtration degree beyond the requested cap
	invariance,          // polynomial / character is not W-invariant
	no_generators,       // family has no canonical invariant generators
	defect,              // internal algorithm failed an invariant
	size_guard,          // truncated model too large
	syntax,              // parse failure
};

std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error
{
  public:
	Error(ErrorCode code, std::string const &what)
	    : std::runtime_error(what), code_(code)
	{}
	ErrorCode code() const noexcept { return code_; }

  private:
	ErrorCode code_;
};

/** Parse failure; `position()` is a byte offset into the source text. */
class SyntaxError : public Error
{
  public:
	SyntaxError(std::size_t position, std::string const &what)
	    : Error(ErrorCode::syntax,
	            what + " at position " + std::to_string(position)),
	      position_(position)
	{}
	std::size_t position() const noexcept { return position_; }

  private:
	std::size_t position_;
};

} // namespace chern
