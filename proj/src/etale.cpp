#include "thetasw/etale.hpp"

#include <algorithm>

namespace thetasw {

ClassSeries series_one(int ambient_n, int max_degree) {
    ClassSeries s(max_degree + 1, RingElement::zero(ambient_n));
    s[0] = RingElement::one(ambient_n);
    return s;
}

ClassSeries series_mul(const ClassSeries& x, const ClassSeries& y) {
    if (x.empty() || y.empty()) return {};
    const std::size_t len = std::min(x.size(), y.size());
    ClassSeries out(len, RingElement::zero(x[0].ambient_n()));
    for (std::size_t p = 0; p < len; ++p) {
        if (x[p].is_zero()) continue;
        for (std::size_t q = 0; p + q < len; ++q) {
            if (!y[q].is_zero()) out[p + q] += x[p] * y[q];
        }
    }
    return out;
}

ClassSeries series_pow(const ClassSeries& x, unsigned exponent) {
    if (x.empty()) return {};
    ClassSeries result = series_one(x[0].ambient_n(), static_cast<int>(x.size()) - 1);
    ClassSeries base = x;
    while (exponent) {
        if (exponent & 1u) result = series_mul(result, base);
        exponent >>= 1;
        if (exponent) base = series_mul(base, base);
    }
    return result;
}

ClassSeries gsw_of_form(const DiagonalForm& q, int max_degree, GswConvention convention) {
    const int top = std::min<int>(max_degree, static_cast<int>(q.rank()));
    ClassSeries sw = sw_classes(q, top);
    sw.resize(max_degree + 1, RingElement::zero(q.ambient_n));
    return gsw_from_sw(sw, convention);
}

EtaleAlgebra& EtaleAlgebra::add(const MultiquadraticField& field, std::uint64_t multiplicity) {
    if (field.ambient_n() != ambient_n_) throw UsageError("etale algebra: factor over a different ring");
    if (multiplicity == 0) return *this;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), field,
                               [](const Factor& f, const MultiquadraticField& e) { return f.field < e; });
    if (it != factors_.end() && it->field == field) {
        it->multiplicity += multiplicity;
    } else {
        factors_.insert(it, Factor{field, multiplicity});
    }
    return *this;
}

std::uint64_t EtaleAlgebra::degree() const {
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.multiplicity * f.field.degree();
    return d;
}

DiagonalForm EtaleAlgebra::concatenated_trace_form() const {
    std::vector<SquareClass> coeffs;
    for (const auto& f : factors_) {
        const DiagonalForm q = trace_form(f.field);
        for (std::uint64_t m = 0; m < f.multiplicity; ++m) {
            coeffs.insert(coeffs.end(), q.coeffs.begin(), q.coeffs.end());
        }
    }
    return DiagonalForm(ambient_n_, std::move(coeffs));
}

EtaleAlgebra product(const EtaleAlgebra& a, const EtaleAlgebra& b) {
    if (a.ambient_n() != b.ambient_n()) throw UsageError("product: algebras over different rings");
    EtaleAlgebra out = a;
    for (const auto& f : b.factors()) out.add(f.field, f.multiplicity);
    return out;
}

ClassSeries alpha_total(const EtaleAlgebra& a, std::optional<int> max_degree, GswConvention convention) {
    const int top = max_degree.value_or(static_cast<int>(a.degree() / 2));
    if (top < 0) throw UsageError("alpha_total: negative truncation degree");
    ClassSeries total = series_one(a.ambient_n(), top);
    for (const auto& f : a.factors()) {
        const ClassSeries factor = gsw_of_form(trace_form(f.field), top, convention);
        total = series_mul(total, series_pow(factor, static_cast<unsigned>(f.multiplicity)));
    }
    return total;
}

}  // namespace thetasw
