#pragma once

// Stiefel-Whitney classes of diagonal quadratic forms and trace forms of
// multiquadratic extensions F(sqrt d_1, ..., sqrt d_k) / F.

#include <vector>

#include "thetasw/symbols.hpp"

namespace thetasw {

struct DiagonalForm {
    int ambient_n = 0;
    std::vector<SquareClass> coeffs;

    DiagonalForm(int ambient_n, std::vector<SquareClass> coeffs);

    std::size_t rank() const { return coeffs.size(); }
};

/// Orthogonal sum.
DiagonalForm concat(const DiagonalForm& x, const DiagonalForm& y);

class MultiquadraticField {
public:
    /// Throws UsageError when the generators are dependent in the square-class group.
    MultiquadraticField(int ambient_n, std::vector<SquareClass> generators);

    /// The untwisted field E_A = F(sqrt a_j : j in A), A given as a bitmask.
    static MultiquadraticField untwisted(int ambient_n, std::uint64_t mask);

    int ambient_n() const { return ambient_n_; }
    const std::vector<SquareClass>& generators() const { return generators_; }
    int k() const { return static_cast<int>(generators_.size()); }
    std::uint64_t degree() const { return std::uint64_t{1} << generators_.size(); }

    friend bool operator==(const MultiquadraticField&, const MultiquadraticField&) = default;
    friend auto operator<=>(const MultiquadraticField&, const MultiquadraticField&) = default;

private:
    int ambient_n_;
    std::vector<SquareClass> generators_;
};

/// Trace form in the basis prod_{j in S} sqrt d_j: coefficients 2^k prod_{j in S} d_j.
DiagonalForm trace_form(const MultiquadraticField& e);

/// sw[i] = i-th elementary symmetric polynomial in the coefficient symbols, 0 <= i <= max_i.
std::vector<RingElement> sw_classes(const DiagonalForm& q, int max_i);

/// Which parity of i carries the {2}-twist when passing from SW to Galois SW classes.
enum class GswConvention {
    EvenTwisted,  // alpha_i = sw_i + t sw_{i-1} for even i (default)
    OddTwisted,   // alpha_i = sw_i + t sw_{i-1} for odd i
};

std::vector<RingElement> gsw_from_sw(const std::vector<RingElement>& sw,
                                     GswConvention convention = GswConvention::EvenTwisted);

/// w_2 of the conic cut out by a rank-3 form: sigma_2(q) + {-1,-1}.
RingElement w2_conic(const DiagonalForm& q);

}  // namespace thetasw
