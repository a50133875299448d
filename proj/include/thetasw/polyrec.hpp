#pragma once

// Integer and mod-2 multivariate polynomials, the subset products
//   Phi_n(x0; x1..xn) = prod_{I subset {1..n}} (x0 + sum_{i in I} x_i),
//   p_n = Phi_n(1; x1..xn),  q_n = Phi_n(1 + x_{n+1}; x1..xn),
// and instance-by-instance checks of the identities they satisfy.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetasw/ring.hpp"

namespace thetasw {

inline constexpr int kMaxPolyVars = 8;
inline constexpr int kMaxPhiN = 6;

using Exponents = std::array<std::uint8_t, kMaxPolyVars>;
using BigInt = boost::multiprecision::cpp_int;

int total_degree(const Exponents& e);

class Mod2Polynomial;

class IntPolynomial {
public:
    using Term = std::pair<Exponents, BigInt>;

    explicit IntPolynomial(int nvars = 0);
    /// Terms may repeat and may carry zero coefficients; both are normalized away.
    IntPolynomial(int nvars, std::vector<Term> terms);
    /// Convenience for literals: {coefficient, {e_1, e_2, ...}}.
    IntPolynomial(int nvars, std::initializer_list<std::pair<long long, std::initializer_list<int>>> terms);

    static IntPolynomial constant(int nvars, const BigInt& c);
    static IntPolynomial variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    BigInt coefficient(const Exponents& e) const;
    /// -1 for the zero polynomial.
    int degree() const;

    IntPolynomial widened(int nvars) const;
    Mod2Polynomial mod2() const;
    std::string to_string() const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial x, const IntPolynomial& y) { return x += y; }
    friend IntPolynomial operator-(IntPolynomial x, const IntPolynomial& y) { return x -= y; }
    friend IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    int nvars_;
    std::vector<Term> terms_;  // sorted by exponent vector, nonzero coefficients
};

class Mod2Polynomial {
public:
    explicit Mod2Polynomial(int nvars = 0);
    /// Repeated monomials cancel in pairs.
    Mod2Polynomial(int nvars, std::vector<Exponents> terms);

    static Mod2Polynomial one(int nvars);
    static Mod2Polynomial variable(int nvars, int i);

    int nvars() const { return nvars_; }
    const std::vector<Exponents>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    Mod2Polynomial widened(int nvars) const;
    /// Frobenius: f^2 doubles every exponent.
    Mod2Polynomial squared() const;
    std::string to_string() const;

    Mod2Polynomial& operator+=(const Mod2Polynomial& other);
    friend Mod2Polynomial operator+(Mod2Polynomial x, const Mod2Polynomial& y) { return x += y; }
    friend Mod2Polynomial operator*(const Mod2Polynomial& x, const Mod2Polynomial& y);

    friend bool operator==(const Mod2Polynomial&, const Mod2Polynomial&) = default;

private:
    int nvars_;
    std::vector<Exponents> terms_;  // sorted, unique
};

/// Homogeneous degree-i component.
IntPolynomial pol_part(const IntPolynomial& f, int i);
Mod2Polynomial pol_part(const Mod2Polynomial& f, int i);

IntPolynomial pow(const IntPolynomial& f, unsigned exponent);
Mod2Polynomial pow(const Mod2Polynomial& f, unsigned exponent);

/// Phi_n(x0; x1..xn) as the product over all 2^n subsets; x0 may involve any of
/// the polynomial's variables, x1..xn are variables 1..n.
IntPolynomial phi(int n, const IntPolynomial& x0);
Mod2Polynomial phi(int n, const Mod2Polynomial& x0);

/// p_n in variables x1..xn.
IntPolynomial build_p(int n);
/// q_n in variables x1..x_{n+1}.
IntPolynomial build_q(int n);

/// x_i -> a_i in R_n, so x_i^k -> e^{k-1} a_i. Variables beyond n must not occur.
RingElement ring_image(const Mod2Polynomial& f, int n);

/// i-th elementary symmetric polynomial in a_1..a_n as a ring element.
RingElement elementary_symmetric(int n, int i);

struct IdentityCheck {
    std::string id;
    std::string claim;
    bool passed = false;
    std::string detail;
};

/// Every polynomial identity applicable at this n, checked by exact expansion.
std::vector<IdentityCheck> verify_identities(int n);

/// sigma_i of the 2^n - 1 nontrivial classes a_S, computed through the generating
/// product of the form diag(a_S), compared with the closed form and with the
/// image of p_n.
std::vector<IdentityCheck> verify_sigmastate(int n);

}  // namespace thetasw
