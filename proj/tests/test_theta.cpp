#include <doctest.h>

#include <set>

#include "support.hpp"
#include "thetasw/theta.hpp"

using namespace thetasw;

namespace {

PointSet set_of(std::initializer_list<int> points) {
    PointSet s = 0;
    for (int p : points) s |= PointSet{1} << (p - 1);
    return s;
}

// Brute force over the classical model: subsets T of I with |T| = g+1 mod 2,
// T identified with I \ T; theta_T is even iff |T| = g+1 mod 4.
std::size_t count_oracle(int g, Parity want) {
    const int points = 2 * g + 2;
    const PointSet all = (PointSet{1} << points) - 1;
    std::set<PointSet> classes;
    for (PointSet t = 0; t <= all; ++t) {
        if (std::popcount(t) % 2 != (g + 1) % 2) continue;
        classes.insert(std::min(t, all ^ t));
    }
    std::size_t count = 0;
    for (PointSet x : classes) {
        const Parity p = (std::popcount(x) % 4 == (g + 1) % 4) ? Parity::Even : Parity::Odd;
        count += p == want;
    }
    return count;
}

}  // namespace

TEST_CASE("canonical representatives") {
    const int g = 3;
    const ThetaChar t = canonicalize(g, set_of({1, 2}));
    CHECK(t.T == set_of({1, 2}));
    CHECK(canonicalize(g, set_of({3, 4, 5, 6, 7, 8})) == t);
    CHECK(canonicalize(g, set_of({1, 2, 8})).size() <= g + 1);
    CHECK(parity(t) == Parity::Odd);
    CHECK(parity(canonicalize(g, 0)) == Parity::Even);
    CHECK(parity(canonicalize(g, set_of({1, 2, 3, 4}))) == Parity::Even);
    CHECK_THROWS_AS(canonicalize(1, 0), UsageError);
    CHECK_THROWS_AS(canonicalize(8, 0), UsageError);

    std::mt19937_64 rng(0x5eed41);
    for (int k = 0; k < testgen::kPropertyCases; ++k) {
        const int gg = kMinGenus + static_cast<int>(rng() % (kMaxGenus - kMinGenus + 1));
        const PointSet T = static_cast<PointSet>(rng()) & all_points(gg);
        if (std::popcount(T) % 2 != (gg + 1) % 2) continue;
        const ThetaChar c = canonicalize(gg, T);
        CHECK(canonicalize(gg, c.T) == c);
        CHECK(canonicalize(gg, all_points(gg) ^ T) == c);
        CHECK(c.size() <= gg + 1);
    }
}

TEST_CASE("complement identification at |T| = g+1") {
    for (int g = kMinGenus; g <= 5; ++g) {
        for (PointSet T = 0; T <= all_points(g); ++T) {
            if (std::popcount(T) != g + 1) continue;
            CHECK(canonicalize(g, T) == canonicalize(g, all_points(g) ^ T));
        }
    }
}

TEST_CASE("enumeration matches the brute-force count") {
    for (int g = kMinGenus; g <= 6; ++g) {
        CHECK(enumerate(g, ThetaFilter::Odd).size() == count_oracle(g, Parity::Odd));
        CHECK(enumerate(g, ThetaFilter::Even).size() == count_oracle(g, Parity::Even));
        CHECK(enumerate(g, ThetaFilter::All).size() == (std::size_t{1} << (2 * g)));
    }
}

TEST_CASE("theta characteristics form a torsor under two-torsion") {
    std::mt19937_64 rng(0x5eed42);
    for (int k = 0; k < testgen::kPropertyCases; ++k) {
        const int g = kMinGenus + static_cast<int>(rng() % 4);
        const auto all = enumerate(g, ThetaFilter::All);
        const std::set<ThetaChar> everything(all.begin(), all.end());
        const auto alpha = AlphaClass::canonical(g, static_cast<PointSet>(rng()) & all_points(g));
        std::set<ThetaChar> image;
        for (const auto& t : all) image.insert(translate(t, alpha));
        CHECK(image == everything);
    }
}

TEST_CASE("field of definition is constant on orbits") {
    std::mt19937_64 rng(0x5eed43);
    for (int k = 0; k < testgen::kPropertyCases; ++k) {
        const int g = kMinGenus + static_cast<int>(rng() % 5);
        const GaloisAction act = GaloisAction::standard(g);
        const auto all = enumerate(g, ThetaFilter::All);
        const ThetaChar t = all[rng() % all.size()];
        const std::uint64_t A = field_of_definition(t, act);
        const auto orb = orbit(t, act);
        CHECK(orb.size() == (std::size_t{1} << std::popcount(A)));
        for (const auto& u : orb) CHECK(field_of_definition(u, act) == A);
    }
}

TEST_CASE("field of definition at |T| = g+1 does not depend on the representative") {
    const int g = 3;
    const GaloisAction act = GaloisAction::standard(g);
    const PointSet T = set_of({1, 3, 5, 7});
    const ThetaChar a{g, T}, b{g, all_points(g) ^ T};
    CHECK(field_of_definition(a, act) == field_of_definition(b, act));
    CHECK(field_of_definition(a, act) == 0b111);
}

TEST_CASE("multiplicity tables") {
    const auto g3 = multiplicity_table(3);
    CHECK(g3.at(0b111) == Multiplicities{0, 1});
    CHECK(g3.at(0) == Multiplicities{4, 4});

    const auto g4 = orbit_multiplicities(4, ThetaFilter::Even, GaloisAction::standard(4));
    std::vector<std::uint64_t> by_size(5, 0);
    for (const auto& [A, m] : g4) {
        const int s = std::popcount(A);
        if (by_size[s] == 0) by_size[s] = m;
        CHECK(by_size[s] == m);
    }
    CHECK(by_size == std::vector<std::uint64_t>{8, 4, 2, 1, 1});

    CHECK(multiplicity_table(5).at(0).n_minus == 16);
    CHECK_THROWS_AS(GaloisAction(3, {{1, 2}, {2, 3}, {5, 6}}), UsageError);
}
