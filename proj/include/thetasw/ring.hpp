#pragma once

// Graded coefficient ring R_n = F2[a_1..a_n, e, t] / (a_i^2 - e a_i, t^2, e t).
//
// e stands for the symbol {-1}, t for {2}, a_i for {a_i}. Every element is a
// finite F2-linear combination of reduced monomials e^k t^j a_S with j in {0,1},
// S a subset of {1..n}, and j = 1 forcing k = 0.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetasw {

/// Thrown for calls that violate a documented precondition.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxVariables = 63;

struct Monomial {
    std::uint64_t vars = 0;  // bit (i-1) set <=> a_i divides the monomial
    std::uint32_t eps = 0;
    std::uint8_t tau = 0;

    static Monomial one() { return {}; }
    static Monomial var(int i);
    static Monomial epsilon(std::uint32_t power = 1) { return {0, power, 0}; }
    static Monomial two() { return {0, 0, 1}; }

    int var_count() const;
    int degree() const { return var_count() + static_cast<int>(eps) + tau; }
    bool has_var(int i) const { return (vars >> (i - 1)) & 1u; }

    /// Reduced product, or nullopt when the product vanishes (t^2 or e t).
    static std::optional<Monomial> multiply(const Monomial& x, const Monomial& y);

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: degree, then e-exponent, then t, then variable index lists
/// compared lexicographically (a1 a2 < a1 a3 < a2 a3).
bool canonical_less(const Monomial& x, const Monomial& y);

class RingElement {
public:
    explicit RingElement(int ambient_n = 0);
    RingElement(int ambient_n, std::vector<Monomial> terms);

    static RingElement zero(int ambient_n) { return RingElement(ambient_n); }
    static RingElement one(int ambient_n);
    static RingElement var(int ambient_n, int i);
    static RingElement epsilon(int ambient_n, std::uint32_t power = 1);
    static RingElement two(int ambient_n);

    int ambient_n() const { return ambient_n_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool contains(const Monomial& m) const;

    /// Largest total degree among the terms, -1 for zero.
    int max_degree() const;
    bool is_homogeneous(int d) const;
    bool tau_free() const;

    RingElement& operator+=(const RingElement& other);
    friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
    friend RingElement operator*(const RingElement& x, const RingElement& y);
    RingElement& operator*=(const RingElement& other) { return *this = *this * other; }

    /// Same terms, reinterpreted over a ring with at least as many variables.
    RingElement widened(int ambient_n) const;

    std::string to_string() const;

    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    int ambient_n_;
    std::vector<Monomial> terms_;  // canonical order, no duplicates
};

RingElement add(const RingElement& x, const RingElement& y);
RingElement mul(const RingElement& x, const RingElement& y);
RingElement pow(const RingElement& x, unsigned exponent);

/// Sum of the terms of total degree exactly d.
RingElement degree_part(const RingElement& x, int d);

struct EpsPart {
    std::uint32_t eps = 0;
    RingElement part;
};

/// Minimal e-exponent among degree-d terms and the terms attaining it.
/// Returns nullopt when the degree-d part of x is zero.
std::optional<EpsPart> min_eps_part(const RingElement& x, int d);

std::string to_string(const Monomial& m);

}  // namespace thetasw
