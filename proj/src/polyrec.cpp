#include "thetasw/polyrec.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <numeric>
#include <sstream>

#include "thetasw/quadform.hpp"

namespace thetasw {

namespace {

using Int128 = __int128;

void check_nvars(int nvars) {
    if (nvars < 0 || nvars > kMaxPolyVars) throw UsageError("polynomial: variable count must lie in [0, 8]");
}

void check_same_nvars(int a, int b) {
    if (a != b) throw UsageError("polynomial: operands have different variable counts");
}

Exponents unit_exponents(int i) {
    Exponents e{};
    e[i - 1] = 1;
    return e;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
    Exponents out{};
    for (int v = 0; v < kMaxPolyVars; ++v) {
        const int s = a[v] + b[v];
        if (s > 255) throw UsageError("polynomial: exponent overflow");
        out[v] = static_cast<std::uint8_t>(s);
    }
    return out;
}

std::string monomial_string(const Exponents& e) {
    std::string out;
    for (int v = 0; v < kMaxPolyVars; ++v) {
        if (e[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(v + 1);
        if (e[v] > 1) out += '^' + std::to_string(e[v]);
    }
    return out;
}

// Row-major box over exponent vectors; the last variable varies fastest, so
// increasing index is increasing lexicographic exponent order.
struct Box {
    int nvars = 0;
    std::array<std::size_t, kMaxPolyVars> dims{};
    std::array<std::size_t, kMaxPolyVars> stride{};
    std::size_t size = 1;

    std::size_t index(const Exponents& e) const {
        std::size_t idx = 0;
        for (int v = 0; v < nvars; ++v) idx += e[v] * stride[v];
        return idx;
    }

    Exponents decode(std::size_t idx) const {
        Exponents e{};
        for (int v = 0; v < nvars; ++v) {
            e[v] = static_cast<std::uint8_t>(idx / stride[v]);
            idx %= stride[v];
        }
        return e;
    }
};

constexpr std::size_t kMaxDenseBox = std::size_t{1} << 25;

// Box big enough for every product exponent, or nullopt when it would be too
// large or too sparse to pay off.
template <class GetA, class GetB>
std::optional<Box> product_box(int nvars, std::size_t na, std::size_t nb, GetA max_exp_a, GetB max_exp_b) {
    Box box;
    box.nvars = nvars;
    for (int v = nvars - 1; v >= 0; --v) {
        const std::size_t d = static_cast<std::size_t>(max_exp_a(v)) + max_exp_b(v) + 1;
        if (d > 256) throw UsageError("polynomial: exponent overflow");
        box.dims[v] = d;
        box.stride[v] = box.size;
        if (box.size > kMaxDenseBox / d) return std::nullopt;
        box.size *= d;
    }
    const std::size_t work = na * nb;
    if (box.size > std::max<std::size_t>(std::size_t{1} << 16, 8 * work)) return std::nullopt;
    return box;
}

template <class Terms, class Get>
std::array<int, kMaxPolyVars> max_exponents(const Terms& terms, Get get) {
    std::array<int, kMaxPolyVars> m{};
    for (const auto& t : terms) {
        const Exponents& e = get(t);
        for (int v = 0; v < kMaxPolyVars; ++v) m[v] = std::max<int>(m[v], e[v]);
    }
    return m;
}

BigInt from_int128(Int128 x) {
    const bool neg = x < 0;
    unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return neg ? BigInt(-out) : out;
}

unsigned bit_length(const BigInt& x) { return x == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(abs(x))) + 1; }

unsigned ceil_log2(std::size_t n) {
    unsigned b = 0;
    while ((std::size_t{1} << b) < n) ++b;
    return b;
}

std::uint64_t pack(const Exponents& e) {
    std::uint64_t k = 0;
    for (int v = 0; v < kMaxPolyVars; ++v) k |= std::uint64_t{e[v]} << (8 * v);
    return k;
}

Exponents unpack(std::uint64_t k) {
    Exponents e{};
    for (int v = 0; v < kMaxPolyVars; ++v) e[v] = static_cast<std::uint8_t>(k >> (8 * v));
    return e;
}

// Open-addressing accumulator keyed by packed exponents. Used when the
// coefficients fit the 128-bit path but the dense box would be too sparse.
class PackedAccumulator {
public:
    explicit PackedAccumulator(std::size_t expected) {
        std::size_t cap = 1024;
        while (cap < 2 * expected) cap <<= 1;
        resize(cap);
    }

    void add(std::uint64_t key, Int128 value) {
        std::size_t i = slot(key);
        while (used_[i] && keys_[i] != key) i = (i + 1) & mask_;
        if (!used_[i]) {
            used_[i] = 1;
            keys_[i] = key;
            vals_[i] = 0;
            if (++count_ * 2 > keys_.size()) {
                vals_[i] = value;
                grow();
                return;
            }
        }
        vals_[i] += value;
    }

    template <class F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (used_[i]) f(keys_[i], vals_[i]);
        }
    }

private:
    std::size_t slot(std::uint64_t key) const {
        return static_cast<std::size_t>((key * 0x9E3779B97F4A7C15ull) >> shift_) & mask_;
    }

    void resize(std::size_t cap) {
        keys_.assign(cap, 0);
        vals_.assign(cap, 0);
        used_.assign(cap, 0);
        mask_ = cap - 1;
        shift_ = 64 - static_cast<unsigned>(std::countr_zero(cap));
        count_ = 0;
    }

    void grow() {
        auto keys = std::move(keys_);
        auto vals = std::move(vals_);
        auto used = std::move(used_);
        resize(keys.size() * 2);
        for (std::size_t i = 0; i < keys.size(); ++i) {
            if (!used[i]) continue;
            std::size_t j = slot(keys[i]);
            while (used_[j]) j = (j + 1) & mask_;
            used_[j] = 1;
            keys_[j] = keys[i];
            vals_[j] = vals[i];
            ++count_;
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<Int128> vals_;
    std::vector<std::uint8_t> used_;
    std::size_t mask_ = 0;
    unsigned shift_ = 0;
    std::size_t count_ = 0;
};

}  // namespace

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

IntPolynomial::IntPolynomial(int nvars, std::vector<Term> terms) : nvars_(nvars) {
    check_nvars(nvars);
    std::map<Exponents, BigInt> acc;
    for (auto& [e, c] : terms) {
        for (int v = nvars; v < kMaxPolyVars; ++v) {
            if (e[v] != 0) throw UsageError("polynomial: term uses a variable beyond the declared count");
        }
        acc[e] += c;
    }
    for (auto& [e, c] : acc) {
        if (c != 0) terms_.emplace_back(e, std::move(c));
    }
}

IntPolynomial::IntPolynomial(int nvars,
                             std::initializer_list<std::pair<long long, std::initializer_list<int>>> terms)
    : IntPolynomial(nvars, [&] {
          std::vector<Term> out;
          for (const auto& [c, exps] : terms) {
              if (static_cast<int>(exps.size()) > nvars) throw UsageError("polynomial: too many exponents");
              Exponents e{};
              int v = 0;
              for (int x : exps) e[v++] = static_cast<std::uint8_t>(x);
              out.emplace_back(e, BigInt(c));
          }
          return out;
      }()) {}

IntPolynomial IntPolynomial::constant(int nvars, const BigInt& c) { return IntPolynomial(nvars, {Term{Exponents{}, c}}); }

IntPolynomial IntPolynomial::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw UsageError("polynomial: variable index out of range");
    return IntPolynomial(nvars, {Term{unit_exponents(i), BigInt(1)}});
}

BigInt IntPolynomial::coefficient(const Exponents& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponents& x) { return t.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : BigInt(0);
}

int IntPolynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

IntPolynomial IntPolynomial::widened(int nvars) const {
    if (nvars < nvars_) throw UsageError("polynomial: cannot narrow the variable set");
    IntPolynomial out(nvars);
    out.terms_ = terms_;
    return out;
}

Mod2Polynomial IntPolynomial::mod2() const {
    std::vector<Exponents> odd;
    for (const auto& [e, c] : terms_) {
        if (boost::multiprecision::bit_test(abs(c), 0)) odd.push_back(e);
    }
    return Mod2Polynomial(nvars_, std::move(odd));
}

std::string IntPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const std::string mono = monomial_string(e);
        BigInt mag = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (mono.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << mono;
        }
        first = false;
    }
    return os.str();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    check_same_nvars(nvars_, other.nvars_);
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    *this = IntPolynomial(nvars_, std::move(all));
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    check_same_nvars(nvars_, other.nvars_);
    std::vector<Term> all = terms_;
    for (const auto& [e, c] : other.terms_) all.emplace_back(e, -c);
    *this = IntPolynomial(nvars_, std::move(all));
    return *this;
}

IntPolynomial operator*(const IntPolynomial& x, const IntPolynomial& y) {
    check_same_nvars(x.nvars_, y.nvars_);
    IntPolynomial out(x.nvars_);
    if (x.is_zero() || y.is_zero()) return out;

    const auto get = [](const IntPolynomial::Term& t) -> const Exponents& { return t.first; };
    const auto mx = max_exponents(x.terms_, get);
    const auto my = max_exponents(y.terms_, get);

    unsigned bx = 0, by = 0;
    for (const auto& t : x.terms_) bx = std::max(bx, bit_length(t.second));
    for (const auto& t : y.terms_) by = std::max(by, bit_length(t.second));
    const bool small = bx <= 62 && by <= 62 &&
                       bx + by + ceil_log2(std::min(x.terms_.size(), y.terms_.size())) <= 125;

    auto box = product_box(
        x.nvars_, x.terms_.size(), y.terms_.size(), [&](int v) { return mx[v]; }, [&](int v) { return my[v]; });

    if (small && box) {
        // Exact: every partial sum is bounded by the product of the bounds.
        std::vector<Int128> acc(box->size, 0);
        std::vector<std::pair<std::size_t, long long>> ys;
        ys.reserve(y.terms_.size());
        for (const auto& [e, c] : y.terms_) ys.emplace_back(box->index(e), c.convert_to<long long>());
        for (const auto& [e, c] : x.terms_) {
            const std::size_t ix = box->index(e);
            const Int128 cx = c.convert_to<long long>();
            for (const auto& [iy, cy] : ys) acc[ix + iy] += cx * cy;
        }
        for (std::size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] != 0) out.terms_.emplace_back(box->decode(i), from_int128(acc[i]));
        }
        return out;
    }

    if (small) {
        // Per-variable sums stay below 256 (product_box checked), so packed
        // keys add without carries.
        std::vector<std::pair<std::uint64_t, long long>> ys;
        ys.reserve(y.terms_.size());
        for (const auto& [e, c] : y.terms_) ys.emplace_back(pack(e), c.convert_to<long long>());
        PackedAccumulator acc(std::max(x.terms_.size(), y.terms_.size()));
        for (const auto& [e, c] : x.terms_) {
            const std::uint64_t kx = pack(e);
            const Int128 cx = c.convert_to<long long>();
            for (const auto& [ky, cy] : ys) acc.add(kx + ky, cx * cy);
        }
        acc.for_each([&](std::uint64_t k, Int128 v) {
            if (v != 0) out.terms_.emplace_back(unpack(k), from_int128(v));
        });
        std::sort(out.terms_.begin(), out.terms_.end(),
                  [](const IntPolynomial::Term& a, const IntPolynomial::Term& b) { return a.first < b.first; });
        return out;
    }

    std::map<Exponents, BigInt> acc;
    for (const auto& [ex, cx] : x.terms_) {
        for (const auto& [ey, cy] : y.terms_) acc[add_exponents(ex, ey)] += cx * cy;
    }
    for (auto& [e, c] : acc) {
        if (c != 0) out.terms_.emplace_back(e, std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Mod2Polynomial

Mod2Polynomial::Mod2Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Mod2Polynomial::Mod2Polynomial(int nvars, std::vector<Exponents> terms) : nvars_(nvars) {
    check_nvars(nvars);
    for (const auto& e : terms) {
        for (int v = nvars; v < kMaxPolyVars; ++v) {
            if (e[v] != 0) throw UsageError("polynomial: term uses a variable beyond the declared count");
        }
    }
    std::sort(terms.begin(), terms.end());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2 == 1) terms_.push_back(terms[i]);
        i = j;
    }
}

Mod2Polynomial Mod2Polynomial::one(int nvars) { return Mod2Polynomial(nvars, {Exponents{}}); }

Mod2Polynomial Mod2Polynomial::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw UsageError("polynomial: variable index out of range");
    return Mod2Polynomial(nvars, {unit_exponents(i)});
}

int Mod2Polynomial::degree() const {
    int d = -1;
    for (const auto& e : terms_) d = std::max(d, total_degree(e));
    return d;
}

Mod2Polynomial Mod2Polynomial::widened(int nvars) const {
    if (nvars < nvars_) throw UsageError("polynomial: cannot narrow the variable set");
    Mod2Polynomial out(nvars);
    out.terms_ = terms_;
    return out;
}

Mod2Polynomial Mod2Polynomial::squared() const {
    Mod2Polynomial out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& e : terms_) out.terms_.push_back(add_exponents(e, e));
    return out;  // doubling preserves the order
}

std::string Mod2Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) out += " + ";
        const std::string mono = monomial_string(terms_[i]);
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

Mod2Polynomial& Mod2Polynomial::operator+=(const Mod2Polynomial& other) {
    check_same_nvars(nvars_, other.nvars_);
    std::vector<Exponents> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

Mod2Polynomial operator*(const Mod2Polynomial& x, const Mod2Polynomial& y) {
    check_same_nvars(x.nvars_, y.nvars_);
    Mod2Polynomial out(x.nvars_);
    if (x.is_zero() || y.is_zero()) return out;

    const auto get = [](const Exponents& e) -> const Exponents& { return e; };
    const auto mx = max_exponents(x.terms_, get);
    const auto my = max_exponents(y.terms_, get);
    auto box = product_box(
        x.nvars_, x.terms_.size(), y.terms_.size(), [&](int v) { return mx[v]; }, [&](int v) { return my[v]; });

    if (box) {
        std::vector<std::uint8_t> parity(box->size, 0);
        std::vector<std::size_t> ys;
        ys.reserve(y.terms_.size());
        for (const auto& e : y.terms_) ys.push_back(box->index(e));
        for (const auto& e : x.terms_) {
            const std::size_t ix = box->index(e);
            for (std::size_t iy : ys) parity[ix + iy] ^= 1u;
        }
        for (std::size_t i = 0; i < parity.size(); ++i) {
            if (parity[i]) out.terms_.push_back(box->decode(i));
        }
        return out;
    }

    std::vector<Exponents> products;
    products.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& ex : x.terms_) {
        for (const auto& ey : y.terms_) products.push_back(add_exponents(ex, ey));
    }
    return Mod2Polynomial(x.nvars_, std::move(products));
}

// ---------------------------------------------------------------------------

IntPolynomial pol_part(const IntPolynomial& f, int i) {
    std::vector<IntPolynomial::Term> terms;
    for (const auto& t : f.terms()) {
        if (total_degree(t.first) == i) terms.push_back(t);
    }
    return IntPolynomial(f.nvars(), std::move(terms));
}

Mod2Polynomial pol_part(const Mod2Polynomial& f, int i) {
    std::vector<Exponents> terms;
    for (const auto& e : f.terms()) {
        if (total_degree(e) == i) terms.push_back(e);
    }
    return Mod2Polynomial(f.nvars(), std::move(terms));
}

IntPolynomial pow(const IntPolynomial& f, unsigned exponent) {
    IntPolynomial result = IntPolynomial::constant(f.nvars(), 1);
    IntPolynomial base = f;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

Mod2Polynomial pow(const Mod2Polynomial& f, unsigned exponent) {
    Mod2Polynomial result = Mod2Polynomial::one(f.nvars());
    Mod2Polynomial base = f;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent) base = base.squared();
    }
    return result;
}

namespace {

template <class Poly, class MakeVar, class MakeOne>
Poly phi_product(int n, const Poly& x0, MakeVar make_var, MakeOne make_one) {
    if (n < 0 || n > kMaxPhiN) throw UsageError("phi: n must lie in [0, 6]");
    if (n > x0.nvars()) throw UsageError("phi: x0 must live in a ring containing x1..xn");
    Poly result = make_one(x0.nvars());
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
        Poly factor = x0;
        for (int i = 1; i <= n; ++i) {
            if ((subset >> (i - 1)) & 1u) factor += make_var(x0.nvars(), i);
        }
        result = result * factor;
    }
    return result;
}

}  // namespace

IntPolynomial phi(int n, const IntPolynomial& x0) {
    return phi_product(
        n, x0, [](int nv, int i) { return IntPolynomial::variable(nv, i); },
        [](int nv) { return IntPolynomial::constant(nv, 1); });
}

Mod2Polynomial phi(int n, const Mod2Polynomial& x0) {
    return phi_product(
        n, x0, [](int nv, int i) { return Mod2Polynomial::variable(nv, i); },
        [](int nv) { return Mod2Polynomial::one(nv); });
}

IntPolynomial build_p(int n) {
    if (n < 0 || n > kMaxPhiN) throw UsageError("build_p: n must lie in [0, 6]");
    return phi(n, IntPolynomial::constant(n, 1));
}

IntPolynomial build_q(int n) {
    if (n < 0 || n + 1 > kMaxPolyVars || n > kMaxPhiN) throw UsageError("build_q: n must lie in [0, 6]");
    return phi(n, IntPolynomial::constant(n + 1, 1) + IntPolynomial::variable(n + 1, n + 1));
}

RingElement ring_image(const Mod2Polynomial& f, int n) {
    std::vector<Monomial> terms;
    terms.reserve(f.terms().size());
    for (const auto& e : f.terms()) {
        Monomial m;
        for (int v = 0; v < kMaxPolyVars; ++v) {
            if (e[v] == 0) continue;
            if (v >= n) throw UsageError("ring_image: polynomial involves a variable beyond x" + std::to_string(n));
            m.vars |= std::uint64_t{1} << v;
            m.eps += e[v] - 1u;
        }
        terms.push_back(m);
    }
    return RingElement(n, std::move(terms));
}

RingElement elementary_symmetric(int n, int i) {
    if (n < 0 || n > 20) throw UsageError("elementary_symmetric: n out of range");
    std::vector<Monomial> terms;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (std::popcount(s) == i) terms.push_back(Monomial{s, 0, 0});
    }
    return RingElement(n, std::move(terms));
}

// ---------------------------------------------------------------------------
// Identity verification

namespace {

std::string clip(std::string s, std::size_t limit = 160) {
    if (s.size() > limit) s = s.substr(0, limit) + " ...";
    return s;
}

template <class T>
IdentityCheck compare(std::string id, std::string claim, const T& lhs, const T& rhs, std::string ok_detail) {
    IdentityCheck c{std::move(id), std::move(claim), lhs == rhs, std::move(ok_detail)};
    if (!c.passed) c.detail = "lhs = " + clip(lhs.to_string()) + "; rhs = " + clip(rhs.to_string());
    return c;
}

RingElement a_plus_eps(int ambient, int i) { return RingElement::var(ambient, i) + RingElement::epsilon(ambient); }

}  // namespace

std::vector<IdentityCheck> verify_identities(int n) {
    if (n < 0 || n > 5) throw UsageError("verify_identities: n must lie in [0, 5]");
    std::vector<IdentityCheck> out;
    const std::string tag = "[n=" + std::to_string(n) + "]";
    const IntPolynomial p = build_p(n);
    const Mod2Polynomial p2 = p.mod2();
    const unsigned half = n >= 1 ? 1u << (n - 1) : 0;

    out.push_back({"p-degree" + tag, "deg p_n = 2^n - 1", p.degree() == (1 << n) - 1,
                   "deg = " + std::to_string(p.degree())});

    if (n >= 1) {
        const IntPolynomial lhs = p;
        const IntPolynomial rhs = build_p(n - 1).widened(n) * build_q(n - 1);
        out.push_back(compare("p-recursion" + tag, "p_n = p_{n-1} * q_{n-1} over Z", lhs, rhs,
                              std::to_string(lhs.terms().size()) + " terms"));

        const IntPolynomial x0 = IntPolynomial::variable(n + 1, n + 1);
        const IntPolynomial shifted = x0 + IntPolynomial::variable(n + 1, n);
        out.push_back(compare("phi-recursion" + tag, "Phi_n(x0) = Phi_{n-1}(x0) * Phi_{n-1}(x0 + x_n) over Z",
                              phi(n, x0), phi(n - 1, x0) * phi(n - 1, shifted), "exact"));
    }

    if (n <= 4) {
        const int nv = n + 2;
        const Mod2Polynomial y = Mod2Polynomial::variable(nv, n + 1);
        const Mod2Polynomial z = Mod2Polynomial::variable(nv, n + 2);
        out.push_back(compare("lemma-sum" + tag, "Phi_n(y+z) = Phi_n(y) + Phi_n(z) in F2[x,y,z]", phi(n, y + z),
                              phi(n, y) + phi(n, z), "exact"));

        const IntPolynomial q = build_q(n);
        const Mod2Polynomial pw = p2.widened(n + 1);
        const Mod2Polynomial q2 = q.mod2();
        bool ok = true;
        std::string detail = "degrees 0.." + std::to_string((1 << n) - 1);
        for (int i = 0; i < (1 << n); ++i) {
            if (pol_part(pw, i) != pol_part(q2, i)) {
                ok = false;
                detail = "differ in degree " + std::to_string(i);
                break;
            }
        }
        out.push_back({"corollary-pq" + tag, "pol_i(p_n) = pol_i(q_n) mod 2 for i < 2^n", ok, detail});

        out.push_back(compare("top-of-q" + tag, "pol_{2^n}(q_n) = Phi_n(x_{n+1}; x1..xn) over Z",
                              pol_part(q, 1 << n), phi(n, IntPolynomial::variable(n + 1, n + 1)), "exact"));
    }

    if (n >= 1) {
        bool ok = true;
        std::string detail = "degrees 1.." + std::to_string(static_cast<int>(half) - 1);
        for (int i = 1; i < static_cast<int>(half); ++i) {
            if (!pol_part(p2, i).is_zero()) {
                ok = false;
                detail = "nonzero in degree " + std::to_string(i);
                break;
            }
        }
        if (half == 1) detail = "vacuous";
        out.push_back({"relations-vanish" + tag, "pol_i(p_n) = 0 mod 2 for 0 < i < 2^{n-1}", ok, detail});
    }

    if (n >= 2) {
        const Mod2Polynomial lhs = pol_part(p2, static_cast<int>(half));
        const Mod2Polynomial prev = pol_part(build_p(n - 1).mod2(), static_cast<int>(half / 2)).widened(n);
        const Mod2Polynomial rhs = prev.squared() + pol_part(build_q(n - 1).mod2(), static_cast<int>(half));
        out.push_back(compare("relations-square" + tag,
                              "pol_{2^{n-1}}(p_n) = pol_{2^{n-2}}(p_{n-1})^2 + pol_{2^{n-1}}(q_{n-1}) mod 2", lhs, rhs,
                              std::to_string(lhs.terms().size()) + " terms"));
    }

    if (n >= 1) {
        // Top line of the telescoped recursion against its last line.
        const Mod2Polynomial lhs = pol_part(p2, static_cast<int>(half));
        Mod2Polynomial rhs(n);
        for (int i = 0; i < n; ++i) {
            const Mod2Polynomial phi_i = phi(i, Mod2Polynomial::variable(n, i + 1));
            rhs += pow(phi_i, 1u << (n - 1 - i));
        }
        out.push_back(compare("telescoped" + tag,
                              "pol_{2^{n-1}}(p_n) = sum_i Phi_i(x_{i+1}; x1..xi)^{2^{n-1-i}} mod 2", lhs, rhs,
                              "exact"));

        bool ok = true;
        std::string detail = "i = 0.." + std::to_string(n - 1);
        for (int i = 0; i < n; ++i) {
            const Mod2Polynomial phi_i = phi(i, Mod2Polynomial::variable(n, i + 1));
            const RingElement l = ring_image(pow(phi_i, 1u << (n - 1 - i)), n);
            const RingElement r = RingElement::epsilon(n, half - (1u << i)) * ring_image(phi_i, n);
            if (l != r) {
                ok = false;
                detail = "fails at i = " + std::to_string(i);
                break;
            }
        }
        out.push_back({"phi-power-image" + tag,
                       "image of Phi_i(x_{i+1})^{2^{n-1-i}} = e^{2^{n-1}-2^i} image of Phi_i(x_{i+1})", ok, detail});

        const int m = n + 1;
        ok = true;
        detail = std::to_string(1 << (n - 1)) + " subsets";
        for (std::uint32_t subset = 0; subset < (1u << (n - 1)); ++subset) {
            RingElement base = RingElement::var(m, n + 1);
            for (int i = 1; i < n; ++i) {
                if ((subset >> (i - 1)) & 1u) base += RingElement::var(m, i);
            }
            const RingElement l = (RingElement::var(m, n) + base) * base;
            const RingElement r = a_plus_eps(m, n) * base;
            if (l != r) {
                ok = false;
                detail = "fails for subset mask " + std::to_string(subset);
                break;
            }
        }
        out.push_back({"two-factors" + tag, "(a_n + y)(y) = (a_n + e) y for y = a_{n+1} + sum_I a_i", ok, detail});

        RingElement product = RingElement::var(m, m);
        for (int i = 1; i <= n; ++i) product *= pow(a_plus_eps(m, i), 1u << (i - 1));
        out.push_back(compare("phi-image" + tag, "image of Phi_n(x_{n+1}; x1..xn) = prod (a_i + e)^{2^{i-1}} a_{n+1}",
                              ring_image(phi(n, Mod2Polynomial::variable(m, m)), m), product, "exact"));

        RingElement lhs_x = RingElement::one(n);
        RingElement rhs_x = RingElement::epsilon(n, (1u << n) - 1 - n);
        for (int i = 1; i <= n; ++i) {
            lhs_x *= pow(a_plus_eps(n, i), 1u << (i - 1));
            rhs_x *= a_plus_eps(n, i);
        }
        out.push_back(compare("powers-of-a-plus-e" + tag,
                              "prod (a_i + e)^{2^{i-1}} = e^{2^n-1-n} prod (a_i + e)", lhs_x, rhs_x, "exact"));

        RingElement closed(n);
        for (int i = 1; i <= n; ++i) closed += RingElement::epsilon(n, half - i) * elementary_symmetric(n, i);
        out.push_back(compare("coefficient-of-pn" + tag,
                              "image of pol_{2^{n-1}}(p_n) = sum_i e^{2^{n-1}-i} s_i(a)",
                              ring_image(pol_part(p2, static_cast<int>(half)), n), closed, "exact"));
    }
    return out;
}

std::vector<IdentityCheck> verify_sigmastate(int n) {
    if (n < 1 || n > 5) throw UsageError("verify_sigmastate: n must lie in [1, 5]");
    std::vector<IdentityCheck> out;
    const std::string tag = "[n=" + std::to_string(n) + "]";
    const int half = 1 << (n - 1);

    std::vector<SquareClass> coeffs;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) coeffs.push_back(SquareClass::of_mask(s));
    const std::vector<RingElement> sigma = sw_classes(DiagonalForm(n, coeffs), half);

    bool ok = true;
    std::string detail = half > 1 ? "degrees 1.." + std::to_string(half - 1) : "vacuous";
    for (int i = 1; i < half; ++i) {
        if (!sigma[i].is_zero()) {
            ok = false;
            detail = "sigma_" + std::to_string(i) + " = " + clip(sigma[i].to_string());
            break;
        }
    }
    out.push_back({"sigma-vanish" + tag, "sigma_i(a_S : S nonempty) = 0 for 0 < i < 2^{n-1}", ok, detail});

    RingElement closed(n);
    for (int i = 1; i <= n; ++i) closed += RingElement::epsilon(n, half - i) * elementary_symmetric(n, i);
    out.push_back(compare("sigma-top" + tag, "sigma_{2^{n-1}} = sum_i e^{2^{n-1}-i} s_i(a)", sigma[half], closed,
                          std::to_string(closed.size()) + " terms"));

    const auto lowest = min_eps_part(sigma[half], half);
    const RingElement expected_low =
        RingElement(n, {Monomial{(std::uint64_t{1} << n) - 1, static_cast<std::uint32_t>(half - n), 0}});
    const bool low_ok = lowest && lowest->eps == static_cast<std::uint32_t>(half - n) && lowest->part == expected_low;
    out.push_back({"sigma-lowest-eps" + tag, "lowest e-power part of sigma_{2^{n-1}} is e^{2^{n-1}-n} a_1...a_n",
                   low_ok, lowest ? lowest->part.to_string() : "degree part is zero"});

    const Mod2Polynomial p2 = build_p(n).mod2();
    ok = true;
    detail = "degrees 0.." + std::to_string(half);
    for (int i = 0; i <= half; ++i) {
        if (ring_image(pol_part(p2, i), n) != sigma[i]) {
            ok = false;
            detail = "routes disagree in degree " + std::to_string(i);
            break;
        }
    }
    out.push_back({"sigma-vs-pn" + tag, "generating product of the form agrees with the image of pol_i(p_n)", ok,
                   detail});

    if (n == 3) {
        // e a1 a2 a3 + e^2 (a1 a2 + a1 a3 + a2 a3) + e^3 (a1 + a2 + a3), written out term by term.
        const RingElement e3(3, {Monomial{0b111, 1, 0}, Monomial{0b011, 2, 0}, Monomial{0b101, 2, 0},
                                 Monomial{0b110, 2, 0}, Monomial{0b001, 3, 0}, Monomial{0b010, 3, 0},
                                 Monomial{0b100, 3, 0}});
        const auto sw = sw_classes(trace_form(MultiquadraticField::untwisted(3, 0b111)), 4);
        const bool low_zero = sw[1].is_zero() && sw[2].is_zero() && sw[3].is_zero();
        out.push_back({"e3-example", "sw_1..sw_3 of the trace form of E_3 vanish; sw_4 matches the worked value",
                       low_zero && sw[4] == e3 && sigma[4] == e3, sw[4].to_string()});
    }
    return out;
}

}  // namespace thetasw
