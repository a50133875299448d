#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thetasw/etale.hpp"
#include "thetasw/theta.hpp"

namespace thetasw {

struct CheckResult {
    std::string id;
    std::string anchor;  // the claim being checked, in formula form
    bool passed = false;
    std::string detail;
    double seconds = 0.0;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

class VerificationReport {
public:
    explicit VerificationReport(std::string suite = {}) : suite_(std::move(suite)) {}

    /// Throws UsageError on a duplicate id.
    void add(CheckResult check);
    /// Times `body` and records its verdict; an exception counts as a failure.
    void run(const std::string& id, const std::string& anchor, const std::function<std::pair<bool, std::string>()>& body);
    void merge(const VerificationReport& other, const std::string& prefix = {});

    const std::string& suite() const { return suite_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    bool passed() const;
    std::size_t failures() const;

    std::string to_text() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;

private:
    std::string suite_;
    std::vector<CheckResult> checks_;
};

void to_json(nlohmann::json& j, const CheckResult& c);
void from_json(const nlohmann::json& j, CheckResult& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

/// Printable view of a theta-characteristic decomposition.
struct DecompositionView {
    struct Factor {
        std::vector<int> A;
        std::vector<std::string> twists;  // generators that are not plain a_j
        std::uint64_t multiplicity = 0;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    int g = 0;
    std::string parity;
    std::vector<Factor> factors;  // sorted by (|A|, A)
    std::uint64_t degree = 0;

    static DecompositionView from_algebra(int g, const std::string& parity, const EtaleAlgebra& algebra);

    /// "F^4 x E1^2 x ... x E23"
    std::string product_string() const;
    std::string to_text() const;

    friend bool operator==(const DecompositionView&, const DecompositionView&) = default;
};

void to_json(nlohmann::json& j, const DecompositionView::Factor& f);
void from_json(const nlohmann::json& j, DecompositionView::Factor& f);
void to_json(nlohmann::json& j, const DecompositionView& d);
void from_json(const nlohmann::json& j, DecompositionView& d);

/// Terms of a ring element in canonical order as JSON objects {eps, tau, vars}.
nlohmann::json ring_element_json(const RingElement& x);

std::string to_string(ThetaFilter f);
ThetaFilter parse_filter(const std::string& s);

}  // namespace thetasw
