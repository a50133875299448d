#include "thetasw/ring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace thetasw {

namespace {

void check_ambient(int n) {
    if (n < 0 || n > kMaxVariables) {
        throw UsageError("ring: ambient variable count must lie in [0, 63]");
    }
}

void check_same_ambient(const RingElement& x, const RingElement& y) {
    if (x.ambient_n() != y.ambient_n()) {
        throw UsageError("ring: operands live in rings with different variable counts");
    }
}

// Lexicographic comparison of the sorted index lists of two equal-size sets.
bool vars_less(std::uint64_t x, std::uint64_t y) {
    while (x != y) {
        const std::uint64_t lx = x & (~x + 1);
        const std::uint64_t ly = y & (~y + 1);
        if (lx != ly) {
            // The set holding the smaller leading index comes first; an
            // exhausted set is a prefix of the other.
            if (lx == 0) return true;
            if (ly == 0) return false;
            return lx < ly;
        }
        x ^= lx;
        y ^= ly;
    }
    return false;
}

// Sort and drop pairs of equal monomials (coefficients live in F2).
std::vector<Monomial> normalize(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), canonical_less);
    std::vector<Monomial> out;
    out.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(terms[i]);
        i = j;
    }
    return out;
}

}  // namespace

Monomial Monomial::var(int i) {
    if (i < 1 || i > kMaxVariables) throw UsageError("ring: variable index out of range");
    return {std::uint64_t{1} << (i - 1), 0, 0};
}

int Monomial::var_count() const { return std::popcount(vars); }

std::optional<Monomial> Monomial::multiply(const Monomial& x, const Monomial& y) {
    const int tau = x.tau + y.tau;
    if (tau > 1) return std::nullopt;
    // a_i a_i -> e a_i for every shared variable.
    const std::uint32_t eps =
        x.eps + y.eps + static_cast<std::uint32_t>(std::popcount(x.vars & y.vars));
    if (tau == 1 && eps > 0) return std::nullopt;
    return Monomial{x.vars | y.vars, eps, static_cast<std::uint8_t>(tau)};
}

bool canonical_less(const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (x.eps != y.eps) return x.eps < y.eps;
    if (x.tau != y.tau) return x.tau < y.tau;
    return vars_less(x.vars, y.vars);
}

RingElement::RingElement(int ambient_n) : ambient_n_(ambient_n) { check_ambient(ambient_n); }

RingElement::RingElement(int ambient_n, std::vector<Monomial> terms) : ambient_n_(ambient_n) {
    check_ambient(ambient_n);
    const std::uint64_t allowed =
        ambient_n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ambient_n) - 1;
    for (const auto& m : terms) {
        if ((m.vars & ~allowed) != 0) throw UsageError("ring: monomial uses a variable beyond the ambient ring");
        if (m.tau > 1 || (m.tau == 1 && m.eps > 0)) throw UsageError("ring: monomial is not reduced");
    }
    terms_ = normalize(std::move(terms));
}

RingElement RingElement::one(int ambient_n) { return RingElement(ambient_n, {Monomial::one()}); }

RingElement RingElement::var(int ambient_n, int i) {
    if (i > ambient_n) throw UsageError("ring: variable index exceeds ambient ring");
    return RingElement(ambient_n, {Monomial::var(i)});
}

RingElement RingElement::epsilon(int ambient_n, std::uint32_t power) {
    return RingElement(ambient_n, {Monomial::epsilon(power)});
}

RingElement RingElement::two(int ambient_n) { return RingElement(ambient_n, {Monomial::two()}); }

bool RingElement::contains(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m, canonical_less);
}

int RingElement::max_degree() const { return terms_.empty() ? -1 : terms_.back().degree(); }

bool RingElement::is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const Monomial& m) { return m.degree() == d; });
}

bool RingElement::tau_free() const {
    return std::none_of(terms_.begin(), terms_.end(), [](const Monomial& m) { return m.tau != 0; });
}

RingElement& RingElement::operator+=(const RingElement& other) {
    check_same_ambient(*this, other);
    std::vector<Monomial> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (*a == *b) {
            ++a;
            ++b;
        } else if (canonical_less(*a, *b)) {
            out.push_back(*a++);
        } else {
            out.push_back(*b++);
        }
    }
    out.insert(out.end(), a, terms_.end());
    out.insert(out.end(), b, other.terms_.end());
    terms_ = std::move(out);
    return *this;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
    check_same_ambient(x, y);
    std::vector<Monomial> products;
    products.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& mx : x.terms_) {
        for (const auto& my : y.terms_) {
            if (auto m = Monomial::multiply(mx, my)) products.push_back(*m);
        }
    }
    RingElement out(x.ambient_n_);
    out.terms_ = normalize(std::move(products));
    return out;
}

RingElement RingElement::widened(int ambient_n) const {
    if (ambient_n < ambient_n_) throw UsageError("ring: cannot narrow the ambient ring");
    RingElement out(ambient_n);
    out.terms_ = terms_;
    return out;
}

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << ' ';
        first = false;
    };
    if (m.eps > 0) {
        sep();
        os << 'e';
        if (m.eps > 1) os << '^' << m.eps;
    }
    if (m.tau) {
        sep();
        os << 't';
    }
    for (int i = 1; i <= kMaxVariables; ++i) {
        if (m.has_var(i)) {
            sep();
            os << 'a' << i;
        }
    }
    if (first) os << '1';
    return os.str();
}

std::string RingElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        out += thetasw::to_string(terms_[i]);
    }
    return out;
}

RingElement add(const RingElement& x, const RingElement& y) { return x + y; }

RingElement mul(const RingElement& x, const RingElement& y) { return x * y; }

RingElement pow(const RingElement& x, unsigned exponent) {
    RingElement result = RingElement::one(x.ambient_n());
    RingElement base = x;
    while (exponent) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

RingElement degree_part(const RingElement& x, int d) {
    std::vector<Monomial> terms;
    for (const auto& m : x.terms()) {
        if (m.degree() == d) terms.push_back(m);
    }
    return RingElement(x.ambient_n(), std::move(terms));
}

std::optional<EpsPart> min_eps_part(const RingElement& x, int d) {
    std::optional<std::uint32_t> best;
    for (const auto& m : x.terms()) {
        if (m.degree() == d && (!best || m.eps < *best)) best = m.eps;
    }
    if (!best) return std::nullopt;
    std::vector<Monomial> terms;
    for (const auto& m : x.terms()) {
        if (m.degree() == d && m.eps == *best) terms.push_back(m);
    }
    return EpsPart{*best, RingElement(x.ambient_n(), std::move(terms))};
}

}  // namespace thetasw
