#include "thetasw/quadform.hpp"

#include <algorithm>

namespace thetasw {

DiagonalForm::DiagonalForm(int ambient_n, std::vector<SquareClass> coeffs)
    : ambient_n(ambient_n), coeffs(std::move(coeffs)) {
    if (this->coeffs.empty()) throw UsageError("diagonal form: rank must be at least 1");
    const std::uint64_t allowed = (std::uint64_t{1} << ambient_n) - 1;
    for (const auto& c : this->coeffs) {
        if (c.vars & ~allowed) throw UsageError("diagonal form: coefficient uses a variable beyond the ambient ring");
    }
}

DiagonalForm concat(const DiagonalForm& x, const DiagonalForm& y) {
    if (x.ambient_n != y.ambient_n) throw UsageError("concat: forms over different rings");
    std::vector<SquareClass> coeffs = x.coeffs;
    coeffs.insert(coeffs.end(), y.coeffs.begin(), y.coeffs.end());
    return DiagonalForm(x.ambient_n, std::move(coeffs));
}

MultiquadraticField::MultiquadraticField(int ambient_n, std::vector<SquareClass> generators)
    : ambient_n_(ambient_n), generators_(std::move(generators)) {
    if (generators_.size() > 16) throw UsageError("multiquadratic field: too many generators");
    const std::uint64_t allowed = (std::uint64_t{1} << ambient_n) - 1;
    for (const auto& d : generators_) {
        if (d.vars & ~allowed) throw UsageError("multiquadratic field: generator uses a variable beyond the ambient ring");
    }
    // Every nonempty sub-product must be a nontrivial class.
    const std::size_t k = generators_.size();
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
        SquareClass prod;
        for (std::size_t j = 0; j < k; ++j) {
            if ((s >> j) & 1u) prod = prod * generators_[j];
        }
        if (prod.is_trivial()) throw UsageError("multiquadratic field: generators are not independent modulo squares");
    }
}

MultiquadraticField MultiquadraticField::untwisted(int ambient_n, std::uint64_t mask) {
    std::vector<SquareClass> gens;
    for (int i = 1; i <= ambient_n; ++i) {
        if ((mask >> (i - 1)) & 1u) gens.push_back(SquareClass::of_mask(std::uint64_t{1} << (i - 1)));
    }
    if (mask >> ambient_n) throw UsageError("multiquadratic field: index set exceeds ambient ring");
    return MultiquadraticField(ambient_n, std::move(gens));
}

DiagonalForm trace_form(const MultiquadraticField& e) {
    const auto& gens = e.generators();
    const std::size_t k = gens.size();
    // 2^k is a square for even k and the class of 2 for odd k.
    const SquareClass scale = (k % 2 == 1) ? SquareClass::of_two() : SquareClass::one();
    std::vector<SquareClass> coeffs;
    coeffs.reserve(std::size_t{1} << k);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
        SquareClass c = scale;
        for (std::size_t j = 0; j < k; ++j) {
            if ((s >> j) & 1u) c = c * gens[j];
        }
        coeffs.push_back(c);
    }
    return DiagonalForm(e.ambient_n(), std::move(coeffs));
}

std::vector<RingElement> sw_classes(const DiagonalForm& q, int max_i) {
    if (max_i < 0 || static_cast<std::size_t>(max_i) > q.rank()) {
        throw UsageError("sw_classes: max_i must lie in [0, rank]");
    }
    const int n = q.ambient_n;
    // Coefficients of prod_j (1 + {d_j} t), truncated at t^max_i.
    std::vector<RingElement> sigma(max_i + 1, RingElement::zero(n));
    sigma[0] = RingElement::one(n);
    int filled = 0;
    for (const auto& d : q.coeffs) {
        if (d.is_trivial()) continue;  // {1} = 0 contributes the factor 1
        const RingElement sym = class_symbol(d, n);
        filled = std::min(filled + 1, max_i);
        for (int i = filled; i >= 1; --i) sigma[i] += sigma[i - 1] * sym;
    }
    return sigma;
}

std::vector<RingElement> gsw_from_sw(const std::vector<RingElement>& sw, GswConvention convention) {
    if (sw.empty()) return {};
    const int n = sw[0].ambient_n();
    if (sw[0] != RingElement::one(n)) throw UsageError("gsw_from_sw: sw[0] must be 1");
    const RingElement t = RingElement::two(n);
    const std::size_t twisted_parity = convention == GswConvention::EvenTwisted ? 0 : 1;
    std::vector<RingElement> alpha = sw;
    for (std::size_t i = 1; i < sw.size(); ++i) {
        if (i % 2 == twisted_parity) alpha[i] += t * sw[i - 1];
    }
    return alpha;
}

RingElement w2_conic(const DiagonalForm& q) {
    if (q.rank() != 3) throw UsageError("w2_conic: form must have rank 3");
    return sw_classes(q, 2)[2] + RingElement::epsilon(q.ambient_n, 2);
}

}  // namespace thetasw
