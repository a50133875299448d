#include "thetasw/report.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <iomanip>
#include <set>
#include <sstream>

namespace thetasw {

void VerificationReport::add(CheckResult check) {
    for (const auto& c : checks_) {
        if (c.id == check.id) throw UsageError("report: duplicate check id " + check.id);
    }
    checks_.push_back(std::move(check));
}

void VerificationReport::run(const std::string& id, const std::string& anchor,
                             const std::function<std::pair<bool, std::string>()>& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult c{id, anchor, false, {}, 0.0};
    try {
        auto [ok, detail] = body();
        c.passed = ok;
        c.detail = std::move(detail);
    } catch (const std::exception& e) {
        c.passed = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    add(std::move(c));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (auto c : other.checks_) {
        c.id = prefix + c.id;
        add(std::move(c));
    }
}

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const CheckResult& c) { return !c.passed; }));
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "suite " << suite_ << ": " << checks_.size() - failures() << "/" << checks_.size() << " passed\n";
    for (const auto& c : checks_) {
        os << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.anchor;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    return os.str();
}

void to_json(nlohmann::json& j, const CheckResult& c) {
    j = {{"id", c.id},
         {"anchor", c.anchor},
         {"status", c.passed ? "pass" : "fail"},
         {"detail", c.detail},
         {"seconds", c.seconds}};
}

void from_json(const nlohmann::json& j, CheckResult& c) {
    c.id = j.at("id").get<std::string>();
    c.anchor = j.at("anchor").get<std::string>();
    c.passed = j.at("status").get<std::string>() == "pass";
    c.detail = j.at("detail").get<std::string>();
    c.seconds = j.at("seconds").get<double>();
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
    j = {{"suite", r.suite()}, {"passed", r.passed()}, {"checks", r.checks()}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
    r = VerificationReport(j.at("suite").get<std::string>());
    for (const auto& c : j.at("checks")) r.add(c.get<CheckResult>());
}

DecompositionView DecompositionView::from_algebra(int g, const std::string& parity, const EtaleAlgebra& algebra) {
    DecompositionView view;
    view.g = g;
    view.parity = parity;
    view.degree = algebra.degree();
    for (const auto& f : algebra.factors()) {
        Factor out;
        out.multiplicity = f.multiplicity;
        for (const auto& d : f.field.generators()) {
            if (!d.sign && !d.two && std::popcount(d.vars) == 1) {
                out.A.push_back(std::countr_zero(d.vars) + 1);
            } else {
                out.twists.push_back(d.to_string());
            }
        }
        std::sort(out.A.begin(), out.A.end());
        view.factors.push_back(std::move(out));
    }
    std::sort(view.factors.begin(), view.factors.end(), [](const Factor& x, const Factor& y) {
        const auto kx = x.A.size() + x.twists.size();
        const auto ky = y.A.size() + y.twists.size();
        if (kx != ky) return kx < ky;
        if (x.A != y.A) return x.A < y.A;
        return x.twists < y.twists;
    });
    return view;
}

std::string DecompositionView::product_string() const {
    if (factors.empty()) return "0";
    std::string out;
    for (const auto& f : factors) {
        if (!out.empty()) out += " x ";
        std::string name;
        if (f.A.empty() && f.twists.empty()) {
            name = "F";
        } else {
            name = "E";
            for (int a : f.A) name += std::to_string(a);
            if (!f.twists.empty()) {
                name += "(";
                for (std::size_t i = 0; i < f.twists.size(); ++i) name += (i ? "," : "") + f.twists[i];
                name += ")";
            }
        }
        out += name;
        if (f.multiplicity != 1) out += "^" + std::to_string(f.multiplicity);
    }
    return out;
}

std::string DecompositionView::to_text() const {
    std::ostringstream os;
    os << "g=" << g << " parity=" << parity << " degree=" << degree << "\n";
    os << product_string() << "\n";
    for (const auto& f : factors) {
        os << "  A={";
        for (std::size_t i = 0; i < f.A.size(); ++i) os << (i ? "," : "") << f.A[i];
        os << "}";
        for (const auto& t : f.twists) os << " twist=" << t;
        os << " multiplicity=" << f.multiplicity << "\n";
    }
    return os.str();
}

void to_json(nlohmann::json& j, const DecompositionView::Factor& f) {
    j = {{"A", f.A}, {"twists", f.twists}, {"multiplicity", f.multiplicity}};
}

void from_json(const nlohmann::json& j, DecompositionView::Factor& f) {
    f.A = j.at("A").get<std::vector<int>>();
    f.twists = j.at("twists").get<std::vector<std::string>>();
    f.multiplicity = j.at("multiplicity").get<std::uint64_t>();
}

void to_json(nlohmann::json& j, const DecompositionView& d) {
    j = {{"g", d.g}, {"parity", d.parity}, {"factors", d.factors}, {"degree", d.degree}};
}

void from_json(const nlohmann::json& j, DecompositionView& d) {
    d.g = j.at("g").get<int>();
    d.parity = j.at("parity").get<std::string>();
    d.factors = j.at("factors").get<std::vector<DecompositionView::Factor>>();
    d.degree = j.at("degree").get<std::uint64_t>();
}

nlohmann::json ring_element_json(const RingElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& m : x.terms()) {
        std::vector<int> vars;
        for (int i = 1; i <= x.ambient_n(); ++i) {
            if (m.has_var(i)) vars.push_back(i);
        }
        terms.push_back({{"eps", m.eps}, {"tau", m.tau}, {"vars", vars}});
    }
    return terms;
}

std::string to_string(ThetaFilter f) {
    switch (f) {
        case ThetaFilter::Odd: return "odd";
        case ThetaFilter::Even: return "even";
        case ThetaFilter::All: return "all";
    }
    return "all";
}

ThetaFilter parse_filter(const std::string& s) {
    if (s == "odd") return ThetaFilter::Odd;
    if (s == "even") return ThetaFilter::Even;
    if (s == "all") return ThetaFilter::All;
    throw UsageError("parity must be odd, even or all");
}

}  // namespace thetasw
