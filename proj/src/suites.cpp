#include "thetasw/suites.hpp"

#include <bit>
#include <charconv>
#include <map>

#include "thetasw/polyrec.hpp"

namespace thetasw {

namespace {

using Verdict = std::pair<bool, std::string>;

std::string tag(const char* name, int value) { return std::string("[") + name + "=" + std::to_string(value) + "]"; }

EtaleAlgebra untwisted_algebra(int n, std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> factors) {
    EtaleAlgebra out(n);
    for (auto [mask, mult] : factors) out.add(MultiquadraticField::untwisted(n, mask), mult);
    return out;
}

Verdict equal(const RingElement& got, const RingElement& expected) {
    if (got == expected) return {true, got.to_string()};
    return {false, "got " + got.to_string() + "; expected " + expected.to_string()};
}

Verdict equal_algebra(int g, const std::string& parity, const EtaleAlgebra& got, const EtaleAlgebra& expected) {
    const auto gv = DecompositionView::from_algebra(g, parity, got);
    const auto ev = DecompositionView::from_algebra(g, parity, expected);
    const std::string text = gv.product_string() + " (degree " + std::to_string(gv.degree) + ")";
    if (gv == ev) return {true, text};
    return {false, "got " + text + "; expected " + ev.product_string()};
}

void check_range(const IntRange& r, int lo, int hi, const char* what) {
    if (r.empty() || r.lo < lo || r.hi > hi) {
        throw UsageError(std::string(what) + " range must lie within " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

RingElement sum_of_products_missing_one(int g) {
    RingElement out(g);
    const std::uint64_t full = (std::uint64_t{1} << g) - 1;
    for (int i = 0; i < g; ++i) out += RingElement(g, {Monomial{full & ~(std::uint64_t{1} << i), 0, 0}});
    return out;
}

}  // namespace

IntRange IntRange::parse(const std::string& text) {
    auto to_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("bad range '" + text + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = to_int(text);
        return {v, v};
    }
    IntRange r{to_int(std::string_view(text).substr(0, dots)), to_int(std::string_view(text).substr(dots + 2))};
    if (r.empty()) throw UsageError("bad range '" + text + "': empty");
    return r;
}

RingElement kill_tau(const RingElement& x) {
    std::vector<Monomial> terms;
    for (const auto& m : x.terms()) {
        if (!m.tau) terms.push_back(m);
    }
    return RingElement(x.ambient_n(), std::move(terms));
}

RingElement real_specialization(const RingElement& x) {
    std::vector<Monomial> terms;
    for (const auto& m : x.terms()) {
        if (!m.tau && m.vars == 0) terms.push_back(m);
    }
    return RingElement(x.ambient_n(), std::move(terms));
}

ThetaClasses theta_classes(int g, GswConvention convention) {
    check_genus(g);
    ThetaClasses out;
    out.odd = alpha_total(decompose(g, ThetaFilter::Odd), 1 << (g - 2), convention);
    out.all = alpha_total(decompose(g, ThetaFilter::All), 1 << (g - 1), convention);
    for (auto& x : out.odd) x = kill_tau(x);
    for (auto& x : out.all) x = kill_tau(x);
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all", "genus3", "counts", "sigmastate", "independence", "polyrec"};
    return names;
}

VerificationReport genus3_suite() {
    VerificationReport r("genus3");
    const int n = 3;

    r.run("g3.odd-decomposition", "S^- = F^4 x E1^2 x E2^2 x E3^2 x E12 x E13 x E23", [] {
        const auto expected = untwisted_algebra(3, {{0, 4}, {1, 2}, {2, 2}, {4, 2}, {3, 1}, {5, 1}, {6, 1}});
        return equal_algebra(3, "odd", decompose(3, ThetaFilter::Odd), expected);
    });
    r.run("g3.even-decomposition", "S^+ = F^4 x prod E_i^2 x prod E_ij x K", [] {
        const auto expected =
            untwisted_algebra(3, {{0, 4}, {1, 2}, {2, 2}, {4, 2}, {3, 1}, {5, 1}, {6, 1}, {7, 1}});
        return equal_algebra(3, "even", decompose(3, ThetaFilter::Even), expected);
    });

    const auto weierstrass = untwisted_algebra(n, {{0, 2}, {1, 1}, {2, 1}, {4, 1}});
    const RingElement a1 = RingElement::var(n, 1), a2 = RingElement::var(n, 2), a3 = RingElement::var(n, 3);
    const RingElement e = RingElement::epsilon(n);
    const RingElement pairwise = a1 * a2 + a1 * a3 + a2 * a3;

    r.run("g3.weierstrass-alpha1", "alpha_1(W_C) = {a1 a2 a3}", [&] {
        return equal(alpha_total(weierstrass)[1], class_symbol(SquareClass::of_vars({1, 2, 3}), n));
    });
    r.run("g3.weierstrass-alpha2", "alpha_2(W_C) = {a1,a2} + {a1,a3} + {a2,a3}",
          [&] { return equal(alpha_total(weierstrass)[2], pairwise); });
    r.run("g3.theorem-a", "alpha_2(S^-_C) = alpha_2(W_C) + {-1} alpha_1(W_C)", [&] {
        const auto w = alpha_total(weierstrass);
        const auto s = alpha_total(decompose(3, ThetaFilter::Odd), 2);
        return equal(s[2], w[2] + e * w[1]);
    });
    r.run("g3.odd-alpha2-explicit", "alpha_2(S^-_C) = {-1, a1 a2 a3} + sum_{i<j} {a_i, a_j}", [&] {
        const auto s = alpha_total(decompose(3, ThetaFilter::Odd), 2);
        return equal(degree_part(s[2], 2), symbol({SquareClass::minus_one(), SquareClass::of_vars({1, 2, 3})}, n) + pairwise);
    });
    r.run("g3.weierstrass-residues", "d_{a1=0} d_{a2=0} alpha_2(W_C) = 1 and d_{a1=0} alpha_2(W_C) = {a2 a3}", [&] {
        const auto w = alpha_total(weierstrass);
        const RingElement first = residue(w[2], 1);
        const RingElement both = residue(residue(w[2], 2), 1);
        const bool ok = first == a2 + a3 && both == RingElement::one(n) && residue(w[1], 1) == RingElement::one(n);
        return Verdict{ok, first.to_string() + " ; " + both.to_string()};
    });
    r.run("g3.e2-example", "alpha_tot(E_2) = 1 + {a1,a2} + {-1,a1 a2}", [] {
        const auto s = alpha_total(untwisted_algebra(2, {{3, 1}}));
        RingElement total(2);
        for (const auto& x : s) total += x;
        const RingElement expected = RingElement::one(2) + RingElement::var(2, 1) * RingElement::var(2, 2) +
                                     RingElement::epsilon(2) * (RingElement::var(2, 1) + RingElement::var(2, 2));
        return equal(total, expected);
    });

    r.run("g3.rational-conic", "w_2(-x0^2 - x1^2 + x2^2) = 0", [] {
        const DiagonalForm q0(2, {SquareClass::minus_one(), SquareClass::minus_one(), SquareClass::one()});
        return equal(w2_conic(q0), RingElement::zero(2));
    });
    r.run("g3.second-curve-w2", "sw_2(q) = {a1,a2} + {-1, a1 a2} and w_2(C') = sw_2(q) + {-1,-1} != 0", [] {
        const DiagonalForm q(2, {SquareClass::of_vars({1}), SquareClass::of_vars({2}), SquareClass::of_vars({1, 2})});
        const RingElement sw2 = symbol({SquareClass::of_vars({1}), SquareClass::of_vars({2})}, 2) +
                                symbol({SquareClass::minus_one(), SquareClass::of_vars({1, 2})}, 2);
        const RingElement w2 = w2_conic(q);
        const bool ok = sw_classes(q, 2)[2] == sw2 && w2 == sw2 + RingElement::epsilon(2, 2) && !w2.is_zero();
        return Verdict{ok, "w_2 = " + w2.to_string()};
    });
    r.run("g3.second-curve-w2-split", "w_2(C'_{F'}) = 0 after {a2} -> {-1}", [] {
        const DiagonalForm q(2, {SquareClass::of_vars({1}), SquareClass::of_vars({2}), SquareClass::of_vars({1, 2})});
        Substitution s;
        s.target_n = 2;
        s.images[1] = SquareClass::of_vars({1});
        s.images[2] = SquareClass::minus_one();
        return equal(substitute(w2_conic(q), s), RingElement::zero(2));
    });
    r.run("g3.second-curve-alpha2", "alpha_2(F^4 x (F')^12) = 0 for F' = F(sqrt(-a2))", [] {
        EtaleAlgebra s(2);
        s.add(MultiquadraticField(2, {}), 4);
        s.add(MultiquadraticField(2, {SquareClass{true, false, 0b10}}), 12);
        const auto a = alpha_total(s, 2);
        return Verdict{a[1].is_zero() && a[2].is_zero(), "alpha_1 = " + a[1].to_string() + ", alpha_2 = " + a[2].to_string()};
    });
    r.run("g3.field-of-definition", "theta_T defined over E_A, A = {j : exactly one of 2j-1, 2j in T}", [] {
        const GaloisAction act = GaloisAction::standard(3);
        const bool ok = field_of_definition(canonicalize(3, 0b101), act) == 0b011 &&
                        field_of_definition(canonicalize(3, 0b11), act) == 0 &&
                        field_of_definition(canonicalize(3, 0b11000000), act) == 0;
        return Verdict{ok, "T={1,3} -> {1,2}; T={1,2} -> {}; T={7,8} -> {}"};
    });
    return r;
}

VerificationReport counts_suite(IntRange gr) {
    check_range(gr, kMinGenus, kMaxGenus, "--g");
    VerificationReport r("counts");
    for (int g = gr.lo; g <= gr.hi; ++g) {
        const std::uint64_t half = std::uint64_t{1} << (g - 1);
        const std::uint64_t full = std::uint64_t{1} << g;
        r.run("counts.sizes" + tag("g", g), "|odd| = 2^{g-1}(2^g-1), |even| = 2^{g-1}(2^g+1)", [&] {
            const auto odd = enumerate(g, ThetaFilter::Odd).size();
            const auto even = enumerate(g, ThetaFilter::Even).size();
            const bool ok = odd == half * (full - 1) && even == half * (full + 1);
            return Verdict{ok, std::to_string(odd) + " odd, " + std::to_string(even) + " even"};
        });

        const auto table = multiplicity_table(g);
        r.run("counts.n-minus" + tag("g", g), "n^-_A = 2^{g-1-|A|} for |A| < g, n^-_{1..g} = 0", [&] {
            for (const auto& [A, m] : table) {
                const int k = std::popcount(A);
                const std::uint64_t expected = k < g ? std::uint64_t{1} << (g - 1 - k) : 0;
                if (m.n_minus != expected) {
                    return Verdict{false, "A mask " + std::to_string(A) + ": " + std::to_string(m.n_minus)};
                }
            }
            return Verdict{true, std::to_string(table.size()) + " subsets"};
        });
        r.run("counts.n-plus" + tag("g", g), "n^+_A = 2^{g-1-|A|} for |A| < g, n^+_{1..g} = 1", [&] {
            for (const auto& [A, m] : table) {
                const int k = std::popcount(A);
                const std::uint64_t expected = k < g ? std::uint64_t{1} << (g - 1 - k) : 1;
                if (m.n_plus != expected) {
                    return Verdict{false, "A mask " + std::to_string(A) + ": " + std::to_string(m.n_plus)};
                }
            }
            return Verdict{true, std::to_string(table.size()) + " subsets"};
        });
        r.run("counts.degree-sum" + tag("g", g), "sum_A 2^{|A|} n^-_A = 2^{g-1}(2^g-1), same for n^+ with 2^g+1", [&] {
            std::uint64_t sm = 0, sp = 0;
            for (const auto& [A, m] : table) {
                sm += (std::uint64_t{1} << std::popcount(A)) * m.n_minus;
                sp += (std::uint64_t{1} << std::popcount(A)) * m.n_plus;
            }
            return Verdict{sm == half * (full - 1) && sp == half * (full + 1),
                           std::to_string(sm) + " / " + std::to_string(sp)};
        });
        r.run("counts.orbits" + tag("g", g), "orbit of theta_T has 2^{|A|} elements, A constant on it", [&] {
            const GaloisAction act = GaloisAction::standard(g);
            std::size_t orbits = 0;
            std::vector<bool> seen(std::size_t{1} << (2 * g + 2), false);
            for (const auto& t : enumerate(g, ThetaFilter::All)) {
                if (seen[t.T]) continue;
                const auto o = orbit(t, act);
                const auto A = field_of_definition(t, act);
                if (o.size() != (std::size_t{1} << std::popcount(A))) return Verdict{false, "orbit size mismatch"};
                for (const auto& u : o) {
                    seen[u.T] = true;
                    if (field_of_definition(u, act) != A || parity(u) != parity(t)) {
                        return Verdict{false, "field of definition or parity varies on an orbit"};
                    }
                }
                ++orbits;
            }
            return Verdict{true, std::to_string(orbits) + " orbits"};
        });
    }
    return r;
}

VerificationReport sigmastate_suite(IntRange nr) {
    check_range(nr, 1, 5, "--n");
    VerificationReport r("sigmastate");
    for (int n = nr.lo; n <= nr.hi; ++n) {
        std::vector<IdentityCheck> checks;
        r.run("sigmastate.compute" + tag("n", n), "sigma_i(a_S : S nonempty) evaluated through two routes", [&] {
            checks = verify_sigmastate(n);
            return Verdict{true, std::to_string(checks.size()) + " identities"};
        });
        for (const auto& c : checks) r.add({"sigmastate." + c.id, c.claim, c.passed, c.detail, 0.0});
    }
    return r;
}

VerificationReport independence_suite(IntRange gr) {
    check_range(gr, 3, 6, "--g");
    VerificationReport r("independence");
    for (int g = gr.lo; g <= gr.hi; ++g) {
        const int lo = 1 << (g - 2);
        const int hi = 1 << (g - 1);
        ThetaClasses classes;
        r.run("indep.compute" + tag("g", g), "alpha_i(S^-), alpha_i(S) of the test curve", [&] {
            classes = theta_classes(g);
            return Verdict{true, "degrees up to " + std::to_string(hi)};
        });
        if (classes.all.empty()) continue;

        r.run("indep.conventions-agree" + tag("g", g), "both {2}-twist conventions agree once {2} = 0", [&] {
            const ThetaClasses other = theta_classes(g, GswConvention::OddTwisted);
            return Verdict{other.odd == classes.odd && other.all == classes.all, "compared all degrees"};
        });
        r.run("indep.odd-vanish" + tag("g", g), "alpha_i(S^-) = 0 for 0 < i < 2^{g-2}", [&] {
            for (int i = 1; i < lo; ++i) {
                if (!classes.odd[i].is_zero()) return Verdict{false, "nonzero in degree " + std::to_string(i)};
            }
            return Verdict{true, lo > 1 ? "degrees 1.." + std::to_string(lo - 1) : "vacuous"};
        });
        r.run("indep.all-vanish" + tag("g", g), "alpha_i(S) = 0 for 0 < i < 2^{g-1}", [&] {
            for (int i = 1; i < hi; ++i) {
                if (!classes.all[i].is_zero()) return Verdict{false, "nonzero in degree " + std::to_string(i)};
            }
            return Verdict{true, "degrees 1.." + std::to_string(hi - 1)};
        });
        r.run("indep.odd-lowest" + tag("g", g),
              "alpha_{2^{g-2}}(S^-) = e^{2^{g-2}-g+1} sum_i prod_{j != i} {a_j} + higher e-powers", [&] {
                  const auto low = min_eps_part(classes.odd[lo], lo);
                  const std::uint32_t k = static_cast<std::uint32_t>(lo - g + 1);
                  const RingElement expected = RingElement::epsilon(g, k) * sum_of_products_missing_one(g);
                  if (!low) return Verdict{false, "degree part is zero"};
                  return Verdict{low->eps == k && low->part == expected, low->part.to_string()};
              });
        r.run("indep.all-lowest" + tag("g", g), "alpha_{2^{g-1}}(S) = e^{2^{g-1}-g} {a_1}...{a_g} + higher e-powers", [&] {
            const auto low = min_eps_part(classes.all[hi], hi);
            const std::uint32_t k = static_cast<std::uint32_t>(hi - g);
            const RingElement expected(g, {Monomial{(std::uint64_t{1} << g) - 1, k, 0}});
            if (!low) return Verdict{false, "degree part is zero"};
            return Verdict{low->eps == k && low->part == expected, low->part.to_string()};
        });
        r.run("indep.residue-all" + tag("g", g), "P(alpha_{2^{g-1}}(S)) = e^{2^{g-1}-g}, P = d_{a_g} ... d_{a_1}", [&] {
            return equal(residue_chain(classes.all[hi], ResidueChain::first(g)),
                         RingElement::epsilon(g, static_cast<std::uint32_t>(hi - g)));
        });
        r.run("indep.residue-odd" + tag("g", g), "P(alpha_{2^{g-2}}(S^-)) = 0", [&] {
            return equal(residue_chain(classes.odd[lo], ResidueChain::first(g)), RingElement::zero(g));
        });
        r.run("indep.multiplicative" + tag("g", g), "alpha_tot(S) = alpha_tot(S^-) alpha_tot(S^+)", [&] {
            const auto odd = alpha_total(decompose(g, ThetaFilter::Odd), hi);
            const auto even = alpha_total(decompose(g, ThetaFilter::Even), hi);
            const auto all = alpha_total(product(decompose(g, ThetaFilter::Odd), decompose(g, ThetaFilter::Even)), hi);
            const bool ok = series_mul(odd, even) == all &&
                            alpha_total(decompose(g, ThetaFilter::All), hi) == all;
            return Verdict{ok, "degrees 0.." + std::to_string(hi)};
        });
    }
    return r;
}

VerificationReport polyrec_suite(IntRange nr) {
    check_range(nr, 0, 5, "--n");
    VerificationReport r("polyrec");
    r.run("polyrec.table1", "p_0..p_2 and q_0..q_2 coefficient-exact", [] {
        const bool ok =
            build_p(0) == IntPolynomial::constant(0, 1) &&
            build_q(0) == IntPolynomial(1, {{1, {0}}, {1, {1}}}) &&
            build_p(1) == IntPolynomial(1, {{1, {0}}, {1, {1}}}) &&
            build_q(1) == IntPolynomial(2, {{1, {0, 0}}, {1, {1, 0}}, {2, {0, 1}}, {1, {1, 1}}, {1, {0, 2}}}) &&
            build_p(2) == IntPolynomial(2, {{1, {0, 0}},
                                            {2, {1, 0}},
                                            {2, {0, 1}},
                                            {1, {2, 0}},
                                            {3, {1, 1}},
                                            {1, {0, 2}},
                                            {1, {2, 1}},
                                            {1, {1, 2}}}) &&
            build_q(2) == IntPolynomial(3, {{1, {0, 0, 0}}, {2, {0, 1, 0}}, {2, {1, 0, 0}}, {4, {0, 0, 1}},
                                            {1, {2, 0, 0}}, {3, {1, 1, 0}}, {1, {0, 2, 0}}, {6, {0, 0, 2}},
                                            {6, {1, 0, 1}}, {6, {0, 1, 1}}, {1, {2, 1, 0}}, {1, {1, 2, 0}},
                                            {6, {1, 1, 1}}, {1, {2, 1, 1}}, {2, {0, 2, 1}}, {1, {1, 2, 1}},
                                            {2, {2, 0, 1}}, {6, {0, 1, 2}}, {3, {1, 1, 2}}, {6, {1, 0, 2}},
                                            {1, {0, 2, 2}}, {1, {2, 0, 2}}, {4, {0, 0, 3}}, {2, {0, 1, 3}},
                                            {2, {1, 0, 3}}, {1, {0, 0, 4}}});
        return Verdict{ok, "q_2 has " + std::to_string(build_q(2).terms().size()) + " terms"};
    });
    for (int n = nr.lo; n <= nr.hi; ++n) {
        std::vector<IdentityCheck> checks;
        r.run("polyrec.compute" + tag("n", n), "expand p_n, q_n, Phi_n", [&] {
            checks = verify_identities(n);
            return Verdict{true, std::to_string(checks.size()) + " identities"};
        });
        for (const auto& c : checks) r.add({"polyrec." + c.id, c.claim, c.passed, c.detail, 0.0});
    }
    return r;
}

VerificationReport run_suite(const std::string& name, const SuiteParams& params) {
    if (name == "genus3") return genus3_suite();
    if (name == "counts") return counts_suite(params.counts_g);
    if (name == "sigmastate") return sigmastate_suite(params.sigmastate_n);
    if (name == "independence") return independence_suite(params.independence_g);
    if (name == "polyrec") return polyrec_suite(params.polyrec_n);
    if (name == "all") {
        VerificationReport all("all");
        all.merge(genus3_suite());
        all.merge(counts_suite(params.counts_g));
        all.merge(sigmastate_suite(params.sigmastate_n));
        all.merge(independence_suite(params.independence_g));
        all.merge(polyrec_suite(params.polyrec_n));
        return all;
    }
    throw UsageError("unknown suite '" + name + "'");
}

}  // namespace thetasw
