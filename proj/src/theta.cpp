#include "thetasw/theta.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace thetasw {

int ThetaChar::size() const { return std::popcount(T); }

void check_genus(int g) {
    if (g < kMinGenus || g > kMaxGenus) throw UsageError("theta: genus must lie in [2, 7]");
}

PointSet all_points(int g) { return (PointSet{1} << (2 * g + 2)) - 1; }

AlphaClass AlphaClass::canonical(int g, PointSet T) {
    check_genus(g);
    const PointSet last = PointSet{1} << (2 * g + 1);
    const PointSet without = T & ~last & all_points(g);
    const PointSet other = all_points(g) & ~without & ~last;
    // |without| + |other| = 2g + 1, so the sizes never tie.
    return {g, std::popcount(without) < std::popcount(other) ? without : other};
}

GaloisAction::GaloisAction(int g, std::vector<std::pair<int, int>> pairs) : g_(g), pairs_(std::move(pairs)) {
    check_genus(g);
    if (static_cast<int>(pairs_.size()) != g) throw UsageError("galois action: need one pair per generator");
    std::set<int> seen;
    for (auto [p, q] : pairs_) {
        for (int x : {p, q}) {
            if (x < 1 || x > 2 * g || !seen.insert(x).second) {
                throw UsageError("galois action: pairs must partition {1..2g}");
            }
        }
    }
}

GaloisAction GaloisAction::standard(int g) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j <= g; ++j) pairs.emplace_back(2 * j - 1, 2 * j);
    return GaloisAction(g, std::move(pairs));
}

PointSet GaloisAction::apply(std::uint32_t element, PointSet T) const {
    for (int j = 0; j < g_; ++j) {
        if (!((element >> j) & 1u)) continue;
        const PointSet bp = PointSet{1} << (pairs_[j].first - 1);
        const PointSet bq = PointSet{1} << (pairs_[j].second - 1);
        if (((T & bp) != 0) != ((T & bq) != 0)) T ^= bp | bq;
    }
    return T;
}

ThetaChar canonicalize(int g, PointSet T) {
    check_genus(g);
    const PointSet all = all_points(g);
    if (T & ~all) throw UsageError("canonicalize: point index beyond 2g+2");
    const PointSet last = PointSet{1} << (2 * g + 1);
    if (std::popcount(T) % 2 != (g + 1) % 2) T ^= last;
    const PointSet comp = all & ~T;
    const int s = std::popcount(T);
    if (s < g + 1) return {g, T};
    if (s > g + 1) return {g, comp};
    // Equal halves: keep the one containing point 1 (the lexicographically smaller list).
    return {g, (T & 1u) ? T : comp};
}

Parity parity(const ThetaChar& t) {
    return (t.size() % 4) == ((t.g + 1) % 4) ? Parity::Even : Parity::Odd;
}

bool passes(const ThetaChar& t, ThetaFilter filter) {
    switch (filter) {
        case ThetaFilter::All: return true;
        case ThetaFilter::Even: return parity(t) == Parity::Even;
        case ThetaFilter::Odd: return parity(t) == Parity::Odd;
    }
    return false;
}

std::vector<ThetaChar> enumerate(int g, ThetaFilter filter) {
    check_genus(g);
    std::vector<ThetaChar> out;
    for (PointSet T = 0; T <= all_points(g); ++T) {
        const ThetaChar t = canonicalize(g, T);
        if (t.T == T && passes(t, filter)) out.push_back(t);
    }
    return out;
}

ThetaChar translate(const ThetaChar& t, const AlphaClass& a) {
    if (t.g != a.g) throw UsageError("translate: genus mismatch");
    return canonicalize(t.g, t.T ^ a.T);
}

std::uint64_t field_of_definition(const ThetaChar& t, const GaloisAction& act) {
    if (t.g != act.g()) throw UsageError("field_of_definition: genus mismatch");
    std::uint64_t A = 0;
    for (int j = 0; j < act.g(); ++j) {
        const bool p = (t.T >> (act.pairs()[j].first - 1)) & 1u;
        const bool q = (t.T >> (act.pairs()[j].second - 1)) & 1u;
        if (p != q) A |= std::uint64_t{1} << j;
    }
    return A;
}

std::vector<ThetaChar> orbit(const ThetaChar& t, const GaloisAction& act) {
    if (t.g != act.g()) throw UsageError("orbit: genus mismatch");
    std::set<ThetaChar> seen;
    for (std::uint32_t e = 0; e < (std::uint32_t{1} << act.g()); ++e) {
        seen.insert(canonicalize(t.g, act.apply(e, t.T)));
    }
    return {seen.begin(), seen.end()};
}

std::map<std::uint64_t, std::uint64_t> orbit_multiplicities(int g, ThetaFilter filter, const GaloisAction& act) {
    check_genus(g);
    if (act.g() != g) throw UsageError("decompose: genus mismatch");
    std::vector<bool> visited(std::size_t{1} << (2 * g + 2), false);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (const ThetaChar& t : enumerate(g, filter)) {
        if (visited[t.T]) continue;
        for (const ThetaChar& u : orbit(t, act)) visited[u.T] = true;
        ++counts[field_of_definition(t, act)];
    }
    return counts;
}

EtaleAlgebra decompose(int g, ThetaFilter filter, const GaloisAction& act) {
    EtaleAlgebra out(g);
    for (const auto& [A, m] : orbit_multiplicities(g, filter, act)) {
        out.add(MultiquadraticField::untwisted(g, A), m);
    }
    return out;
}

EtaleAlgebra decompose(int g, ThetaFilter filter) { return decompose(g, filter, GaloisAction::standard(g)); }

std::map<std::uint64_t, Multiplicities> multiplicity_table(int g) {
    check_genus(g);
    const GaloisAction act = GaloisAction::standard(g);
    std::map<std::uint64_t, Multiplicities> table;
    for (std::uint64_t A = 0; A < (std::uint64_t{1} << g); ++A) table[A] = {};
    for (const auto& [A, m] : orbit_multiplicities(g, ThetaFilter::Odd, act)) table[A].n_minus = m;
    for (const auto& [A, m] : orbit_multiplicities(g, ThetaFilter::Even, act)) table[A].n_plus = m;
    return table;
}

}  // namespace thetasw
