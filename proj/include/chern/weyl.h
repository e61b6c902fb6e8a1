#pragma once

// Classical group descriptors and their Weyl groups, realized as (signed)
// permutations of the standard coordinates of the weight lattice.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace chern {

enum class Family
{
	GL,     // GL(n), torus rank n
	Sp,     // Sp(2l), torus rank l
	SOodd,  // SO(2l+1), torus rank l
	SOeven, // SO(2l), torus rank l
	Torus,  // T = G_m^n, trivial Weyl group
};

class GroupSpec
{
  public:
	/** `rank` is always the torus rank (n for GL(n) and T<n>, l otherwise). */
	GroupSpec(Family family, int rank);

	/** Parses "GL<n>", "Sp<2l>", "SO<m>", "T<n>" (case-sensitive). */
	static GroupSpec parse(std::string_view text);

	Family family() const { return family_; }
	int rank() const { return rank_; }

	/** Dimension of the standard representation (n, 2l, 2l+1, 2l; n for tori). */
	int ambient_dimension() const;

	/** Inverse of parse(): "GL3", "Sp4", "SO5", "SO4", "T2". */
	std::string name() const;

	bool operator==(GroupSpec const &) const = default;

  private:
	Family family_;
	int rank_;
};

/** Element of the character lattice X = Z^n of the maximal torus. */
struct Weight
{
	std::vector<std::int64_t> coords;

	Weight() = default;
	explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
	Weight(std::initializer_list<std::int64_t> c) : coords(c) {}
	static Weight zero(int rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }

	int rank() const { return static_cast<int>(coords.size()); }
	bool is_zero() const;
	std::int64_t operator[](int i) const { return coords[i]; }

	auto operator<=>(Weight const &) const = default;
	bool operator==(Weight const &) const = default;
};

Weight operator+(Weight const &a, Weight const &b);
Weight operator-(Weight const &a);
Weight operator*(std::int64_t k, Weight const &a);

std::string to_string(Weight const &a); // "[1,0,-2]"

/**
 * Signed permutation w acting on Z^n by
 *   (w.a)[i] = signs[i] * a[perm^{-1}(i)],
 * i.e. slot j is sent to slot perm[j] and then multiplied by the sign there.
 */
struct SignedPermutation
{
	std::vector<int> perm; // 0-based, perm[j] = image of j
	std::vector<int> signs;

	static SignedPermutation identity(int n);
	int size() const { return static_cast<int>(perm.size()); }
	int sign_product() const;

	auto operator<=>(SignedPermutation const &) const = default;
	bool operator==(SignedPermutation const &) const = default;
};

/** (a*b).x == a.(b.x) */
SignedPermutation compose(SignedPermutation const &a, SignedPermutation const &b);
SignedPermutation inverse(SignedPermutation const &w);

Weight act(SignedPermutation const &w, Weight const &a);

/** |W| saturated at UINT64_MAX. */
std::uint64_t weyl_order(GroupSpec const &g);

inline constexpr std::uint64_t max_weyl_enumeration = 1'000'000;

/** All elements of W, each exactly once. Refuses when |W| > 10^6. */
std::vector<SignedPermutation> weyl_elements(GroupSpec const &g);

/**
 * A generating set of W: adjacent transpositions, plus the last-slot sign
 * flip for Sp/SOodd, or the double flip-swap of the last two slots for
 * SOeven. Empty for tori and for SO(2).
 */
std::vector<SignedPermutation> weyl_generators(GroupSpec const &g);

std::set<Weight> orbit(GroupSpec const &g, Weight const &a);

} // namespace chern
