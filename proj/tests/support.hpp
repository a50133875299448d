#pragma once

// Random generators shared by the property tests. Seeds are fixed so failures
// reproduce.

#include <random>
#include <vector>

#include "thetasw/quadform.hpp"
#include "thetasw/ring.hpp"

namespace testgen {

using thetasw::Monomial;
using thetasw::RingElement;
using thetasw::SquareClass;

inline constexpr int kPropertyCases = 250;

inline Monomial monomial(std::mt19937_64& rng, int n, bool allow_tau = true) {
    Monomial m;
    m.vars = n == 0 ? 0 : rng() & ((std::uint64_t{1} << n) - 1);
    if (allow_tau && rng() % 5 == 0) {
        m.tau = 1;
    } else {
        m.eps = static_cast<std::uint32_t>(rng() % 4);
    }
    return m;
}

inline RingElement element(std::mt19937_64& rng, int n, int max_terms = 6, bool allow_tau = true) {
    std::vector<Monomial> terms;
    const int count = static_cast<int>(rng() % (max_terms + 1));
    for (int k = 0; k < count; ++k) terms.push_back(monomial(rng, n, allow_tau));
    return RingElement(n, std::move(terms));
}

inline SquareClass square_class(std::mt19937_64& rng, int n, bool allow_two = true) {
    SquareClass c;
    c.sign = rng() & 1u;
    c.two = allow_two && (rng() % 4 == 0);
    c.vars = n == 0 ? 0 : rng() & ((std::uint64_t{1} << n) - 1);
    return c;
}

inline thetasw::DiagonalForm form(std::mt19937_64& rng, int n, int rank) {
    std::vector<SquareClass> coeffs;
    for (int k = 0; k < rank; ++k) coeffs.push_back(square_class(rng, n));
    return thetasw::DiagonalForm(n, std::move(coeffs));
}

}  // namespace testgen
