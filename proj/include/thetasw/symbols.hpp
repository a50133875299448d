#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "thetasw/ring.hpp"

namespace thetasw {

/// Square class of (-1)^sign * 2^two * prod_{i in vars} a_i in k(a_1..a_n)^*/squares.
/// Even powers are absorbed at construction, so the representation is unique.
struct SquareClass {
    bool sign = false;
    bool two = false;
    std::uint64_t vars = 0;

    static SquareClass one() { return {}; }
    static SquareClass minus_one() { return {true, false, 0}; }
    static SquareClass of_two() { return {false, true, 0}; }
    static SquareClass of_vars(std::initializer_list<int> indices);
    static SquareClass of_mask(std::uint64_t mask) { return {false, false, mask}; }

    bool is_trivial() const { return !sign && !two && vars == 0; }

    /// Group law of the square-class group: (Z/2)-vector addition.
    friend SquareClass operator*(const SquareClass& x, const SquareClass& y) {
        return {x.sign != y.sign, x.two != y.two, x.vars ^ y.vars};
    }
    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    friend auto operator<=>(const SquareClass&, const SquareClass&) = default;

    std::string to_string() const;
};

/// Degree-one symbol {c} = sign*e + two*t + sum a_i.
RingElement class_symbol(const SquareClass& c, int ambient_n);

/// Product of class symbols; the empty list gives 1.
RingElement symbol(std::span<const SquareClass> classes, int ambient_n);
RingElement symbol(std::initializer_list<SquareClass> classes, int ambient_n);

/// Second residue at a_i = 0. Monomials divisible by a_i lose that factor,
/// all others are sent to zero. Variable labels are kept as they are, so the
/// result lives in the same ambient ring and simply no longer involves a_i.
RingElement residue(const RingElement& x, int i);

struct ResidueChain {
    std::vector<int> indices;

    /// Chain 1, 2, ..., g.
    static ResidueChain first(int g);
};

RingElement residue_chain(const RingElement& x, const ResidueChain& chain);

/// Variable assignment a_i -> class, target classes over `target_n` variables.
struct Substitution {
    int target_n = 0;
    std::map<int, SquareClass> images;

    static Substitution identity(int n);
};

/// Ring homomorphism a_i -> {image(i)}, e -> e, t -> t.
RingElement substitute(const RingElement& x, const Substitution& s);

}  // namespace thetasw
