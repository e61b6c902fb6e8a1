#pragma once

// Exact rational subspaces of Q^n held in reduced row-echelon form.

#include "chern/numeric.h"

#include <cstddef>
#include <span>
#include <vector>

namespace chern {

using Vector = std::vector<Rational>;

bool is_zero(Vector const &v);

/**
 * Row space of a rational matrix. The basis is kept in reduced row-echelon
 * form with rows sorted by pivot column, which is unique per subspace, so
 * equality is a direct comparison.
 */
class Subspace
{
  public:
	explicit Subspace(std::size_t ambient);

	static Subspace span(std::size_t ambient, std::span<Vector const> vectors);
	static Subspace full(std::size_t ambient);

	std::size_t ambient_dimension() const { return ambient_; }
	std::size_t dimension() const { return rows_.size(); }
	std::vector<Vector> const &basis() const { return rows_; }
	std::vector<std::size_t> const &pivots() const { return pivots_; }

	/** Adds v to the span; returns true when the dimension grew. */
	bool insert(Vector v);

	/** v minus its projection along the pivots; zero iff v is in the span. */
	Vector residual(Vector v) const;

	bool contains(Vector const &v) const;
	bool contains(Subspace const &other) const;

	bool operator==(Subspace const &) const = default;

  private:
	std::size_t ambient_;
	std::vector<Vector> rows_;
	std::vector<std::size_t> pivots_;
};

/** {v : M v = 0} for M given by rows of length `columns`. */
Subspace kernel(std::span<Vector const> rows, std::size_t columns);

Subspace intersect(Subspace const &a, Subspace const &b);

} // namespace chern
