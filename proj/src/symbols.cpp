#include "thetasw/symbols.hpp"

#include <bit>
#include <set>

namespace thetasw {

SquareClass SquareClass::of_vars(std::initializer_list<int> indices) {
    SquareClass c;
    for (int i : indices) {
        if (i < 1 || i > kMaxVariables) throw UsageError("square class: variable index out of range");
        c.vars ^= std::uint64_t{1} << (i - 1);
    }
    return c;
}

std::string SquareClass::to_string() const {
    std::string out = sign ? "-" : "";
    std::string body = two ? "2" : "";
    for (int i = 1; i <= kMaxVariables; ++i) {
        if ((vars >> (i - 1)) & 1u) body += "a" + std::to_string(i);
    }
    return out + (body.empty() ? "1" : body);
}

RingElement class_symbol(const SquareClass& c, int ambient_n) {
    std::vector<Monomial> terms;
    if (c.sign) terms.push_back(Monomial::epsilon());
    if (c.two) terms.push_back(Monomial::two());
    for (int i = 1; i <= kMaxVariables; ++i) {
        if ((c.vars >> (i - 1)) & 1u) {
            if (i > ambient_n) throw UsageError("class_symbol: variable beyond ambient ring");
            terms.push_back(Monomial::var(i));
        }
    }
    return RingElement(ambient_n, std::move(terms));
}

RingElement symbol(std::span<const SquareClass> classes, int ambient_n) {
    RingElement out = RingElement::one(ambient_n);
    for (const auto& c : classes) out *= class_symbol(c, ambient_n);
    return out;
}

RingElement symbol(std::initializer_list<SquareClass> classes, int ambient_n) {
    return symbol(std::span<const SquareClass>(classes.begin(), classes.size()), ambient_n);
}

RingElement residue(const RingElement& x, int i) {
    if (i < 1 || i > x.ambient_n()) throw UsageError("residue: variable index outside the ambient ring");
    const std::uint64_t bit = std::uint64_t{1} << (i - 1);
    std::vector<Monomial> terms;
    for (const auto& m : x.terms()) {
        if (m.vars & bit) terms.push_back({m.vars & ~bit, m.eps, m.tau});
    }
    return RingElement(x.ambient_n(), std::move(terms));
}

ResidueChain ResidueChain::first(int g) {
    ResidueChain c;
    for (int i = 1; i <= g; ++i) c.indices.push_back(i);
    return c;
}

RingElement residue_chain(const RingElement& x, const ResidueChain& chain) {
    std::set<int> seen;
    RingElement out = x;
    for (int i : chain.indices) {
        if (!seen.insert(i).second) throw UsageError("residue_chain: repeated index");
        out = residue(out, i);
    }
    return out;
}

Substitution Substitution::identity(int n) {
    Substitution s;
    s.target_n = n;
    for (int i = 1; i <= n; ++i) s.images[i] = SquareClass::of_mask(std::uint64_t{1} << (i - 1));
    return s;
}

RingElement substitute(const RingElement& x, const Substitution& s) {
    std::map<int, RingElement> images;
    for (const auto& [i, c] : s.images) images.emplace(i, class_symbol(c, s.target_n));

    RingElement out(s.target_n);
    for (const auto& m : x.terms()) {
        RingElement term(s.target_n, {Monomial{0, m.eps, m.tau}});
        for (std::uint64_t rest = m.vars; rest != 0; rest &= rest - 1) {
            const int i = std::countr_zero(rest) + 1;
            auto it = images.find(i);
            if (it == images.end()) throw UsageError("substitute: assignment missing variable a" + std::to_string(i));
            term *= it->second;
        }
        out += term;
    }
    return out;
}

}  // namespace thetasw
