#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thetasw/quadform.hpp"

namespace thetasw {

/// Truncated total class: entry i is the homogeneous degree-i component.
using ClassSeries = std::vector<RingElement>;

/// Product of two series, truncated to the shorter length.
ClassSeries series_mul(const ClassSeries& x, const ClassSeries& y);
ClassSeries series_pow(const ClassSeries& x, unsigned exponent);

/// Series with entry 0 equal to 1 and zeros up to max_degree.
ClassSeries series_one(int ambient_n, int max_degree);

/// Galois Stiefel-Whitney classes read off a single form, entries 0..max_degree.
ClassSeries gsw_of_form(const DiagonalForm& q, int max_degree,
                        GswConvention convention = GswConvention::EvenTwisted);

/// Finite product of multiquadratic fields with multiplicities.
class EtaleAlgebra {
public:
    struct Factor {
        MultiquadraticField field;
        std::uint64_t multiplicity;
    };

    explicit EtaleAlgebra(int ambient_n) : ambient_n_(ambient_n) {}

    /// Adds `multiplicity` copies of `field`, merging with an equal factor.
    EtaleAlgebra& add(const MultiquadraticField& field, std::uint64_t multiplicity = 1);

    int ambient_n() const { return ambient_n_; }
    const std::vector<Factor>& factors() const { return factors_; }
    std::uint64_t degree() const;

    /// Orthogonal sum of the trace forms of all copies of all factors.
    DiagonalForm concatenated_trace_form() const;

private:
    int ambient_n_;
    std::vector<Factor> factors_;  // sorted by field
};

EtaleAlgebra product(const EtaleAlgebra& a, const EtaleAlgebra& b);

inline std::uint64_t degree(const EtaleAlgebra& a) { return a.degree(); }

/// Total Galois Stiefel-Whitney class via multiplicativity over the factors.
/// max_degree defaults to floor(degree / 2).
ClassSeries alpha_total(const EtaleAlgebra& a, std::optional<int> max_degree = std::nullopt,
                        GswConvention convention = GswConvention::EvenTwisted);

}  // namespace thetasw
