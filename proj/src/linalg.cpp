#include "chern/linalg.h"

#include "chern/error.h"

#include <algorithm>
#include <fmt/format.h>

namespace chern {

bool is_zero(Vector const &v)
{
	return std::all_of(v.begin(), v.end(), [](Rational const &c) { return c == 0; });
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient) {}

Subspace Subspace::span(std::size_t ambient, std::span<Vector const> vectors)
{
	Subspace s(ambient);
	for (auto const &v : vectors)
		s.insert(v);
	return s;
}

Subspace Subspace::full(std::size_t ambient)
{
	Subspace s(ambient);
	for (std::size_t i = 0; i < ambient; ++i)
	{
		Vector e(ambient, 0);
		e[i] = 1;
		s.rows_.push_back(std::move(e));
		s.pivots_.push_back(i);
	}
	return s;
}

Vector Subspace::residual(Vector v) const
{
	if (v.size() != ambient_)
		throw Error(ErrorCode::dimension,
		            fmt::format("vector of length {} in a subspace of Q^{}",
		                        v.size(), ambient_));
	for (std::size_t r = 0; r < rows_.size(); ++r)
	{
		Rational c = v[pivots_[r]];
		if (c == 0)
			continue;
		auto const &row = rows_[r];
		for (std::size_t j = pivots_[r]; j < ambient_; ++j)
			if (row[j] != 0)
				v[j] -= c * row[j];
	}
	return v;
}

bool Subspace::insert(Vector v)
{
	v = residual(std::move(v));
	auto it = std::find_if(v.begin(), v.end(), [](Rational const &c) { return c != 0; });
	if (it == v.end())
		return false;
	std::size_t pivot = static_cast<std::size_t>(it - v.begin());
	Rational inv = 1 / v[pivot];
	for (std::size_t j = pivot; j < ambient_; ++j)
		v[j] *= inv;
	// clear the new pivot column from the existing rows
	for (auto &row : rows_)
	{
		Rational c = row[pivot];
		if (c == 0)
			continue;
		for (std::size_t j = pivot; j < ambient_; ++j)
			if (v[j] != 0)
				row[j] -= c * v[j];
	}
	auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
	pivots_.insert(pivots_.begin() + pos, pivot);
	rows_.insert(rows_.begin() + pos, std::move(v));
	return true;
}

bool Subspace::contains(Vector const &v) const
{
	return is_zero(residual(v));
}

bool Subspace::contains(Subspace const &other) const
{
	if (other.ambient_ != ambient_)
		return false;
	return std::all_of(other.rows_.begin(), other.rows_.end(),
	                   [&](Vector const &v) { return contains(v); });
}

Subspace kernel(std::span<Vector const> rows, std::size_t columns)
{
	auto echelon = Subspace::span(columns, rows);
	auto const &pivots = echelon.pivots();
	Subspace out(columns);
	std::size_t next_pivot = 0;
	for (std::size_t free = 0; free < columns; ++free)
	{
		if (next_pivot < pivots.size() && pivots[next_pivot] == free)
		{
			++next_pivot;
			continue;
		}
		// x_free = 1, pivot variables solved from the reduced rows
		Vector v(columns, 0);
		v[free] = 1;
		for (std::size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = -echelon.basis()[r][free];
		out.insert(std::move(v));
	}
	return out;
}

Subspace intersect(Subspace const &a, Subspace const &b)
{
	if (a.ambient_dimension() != b.ambient_dimension())
		throw Error(ErrorCode::dimension, "intersecting subspaces of different ambient spaces");
	std::size_t n = a.ambient_dimension();
	std::size_t ka = a.dimension(), kb = b.dimension();
	// sum_i s_i A_i - sum_j t_j B_j = 0; one equation per ambient coordinate
	std::vector<Vector> equations(n, Vector(ka + kb, 0));
	for (std::size_t i = 0; i < ka; ++i)
		for (std::size_t c = 0; c < n; ++c)
			equations[c][i] = a.basis()[i][c];
	for (std::size_t j = 0; j < kb; ++j)
		for (std::size_t c = 0; c < n; ++c)
			equations[c][ka + j] = -b.basis()[j][c];
	auto relations = kernel(equations, ka + kb);
	Subspace out(n);
	for (auto const &rel : relations.basis())
	{
		Vector v(n, 0);
		for (std::size_t i = 0; i < ka; ++i)
			if (rel[i] != 0)
				for (std::size_t c = 0; c < n; ++c)
					v[c] += rel[i] * a.basis()[i][c];
		out.insert(std::move(v));
	}
	return out;
}

} // namespace chern
