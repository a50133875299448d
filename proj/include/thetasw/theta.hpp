#pragma once

// Theta characteristics of a hyperelliptic genus-g curve with Weierstrass
// points c_1..c_{2g+2}. A subset T of I = {1..2g+2} names
// theta_T = sum_{i in T}(c_i - c_{2g+2}) + (g-1) c_{2g+2}; T, T xor {2g+2}
// and I \ T all name the same class.
//
// Subsets are bitmasks with bit (i-1) standing for point i.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "thetasw/etale.hpp"

namespace thetasw {

inline constexpr int kMinGenus = 2;
inline constexpr int kMaxGenus = 7;

using PointSet = std::uint32_t;

enum class Parity { Even, Odd };
enum class ThetaFilter { Odd, Even, All };

struct ThetaChar {
    int g = 0;
    PointSet T = 0;

    int size() const;
    friend bool operator==(const ThetaChar&, const ThetaChar&) = default;
    friend auto operator<=>(const ThetaChar&, const ThetaChar&) = default;
};

/// Two-torsion point alpha_T of the Jacobian, T normalized to avoid 2g+2.
struct AlphaClass {
    int g = 0;
    PointSet T = 0;

    static AlphaClass canonical(int g, PointSet T);
    friend bool operator==(const AlphaClass&, const AlphaClass&) = default;
};

/// (Z/2)^g acting on the branch points: generator j swaps the points of pair j.
/// Points outside every pair are fixed (they are rational).
class GaloisAction {
public:
    GaloisAction(int g, std::vector<std::pair<int, int>> pairs);

    /// Pairs (2j-1, 2j) for j = 1..g; points 2g+1 and 2g+2 rational.
    static GaloisAction standard(int g);

    int g() const { return g_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    /// Image of a point set under the group element whose generator set is `element`.
    PointSet apply(std::uint32_t element, PointSet T) const;

private:
    int g_;
    std::vector<std::pair<int, int>> pairs_;
};

PointSet all_points(int g);
void check_genus(int g);

ThetaChar canonicalize(int g, PointSet T);
Parity parity(const ThetaChar& t);
bool passes(const ThetaChar& t, ThetaFilter filter);

/// Canonical representatives passing the filter, in increasing bitmask order.
std::vector<ThetaChar> enumerate(int g, ThetaFilter filter);

/// Theta characteristic translated by a two-torsion point.
ThetaChar translate(const ThetaChar& t, const AlphaClass& a);

/// A = { j : exactly one point of pair j lies in T }, as a bitmask over 1..g.
std::uint64_t field_of_definition(const ThetaChar& t, const GaloisAction& act);

std::vector<ThetaChar> orbit(const ThetaChar& t, const GaloisAction& act);

/// Orbit counts per field of definition: A -> number of orbits.
std::map<std::uint64_t, std::uint64_t> orbit_multiplicities(int g, ThetaFilter filter, const GaloisAction& act);

/// Etale algebra over k(a_1..a_g) with one factor E_A per orbit.
EtaleAlgebra decompose(int g, ThetaFilter filter, const GaloisAction& act);
EtaleAlgebra decompose(int g, ThetaFilter filter);

struct Multiplicities {
    std::uint64_t n_minus = 0;
    std::uint64_t n_plus = 0;
    friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

/// A -> (n_minus, n_plus) for every subset A of {1..g}, standard action.
std::map<std::uint64_t, Multiplicities> multiplicity_table(int g);

}  // namespace thetasw
