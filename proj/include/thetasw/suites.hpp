#pragma once

#include <string>
#include <vector>

#include "thetasw/report.hpp"

namespace thetasw {

struct IntRange {
    int lo = 0;
    int hi = -1;

    bool empty() const { return hi < lo; }
    /// "A..B" or a single "A".
    static IntRange parse(const std::string& text);
};

struct SuiteParams {
    IntRange counts_g{2, 7};
    IntRange independence_g{3, 5};
    IntRange polyrec_n{0, 5};
    IntRange sigmastate_n{1, 5};
};

const std::vector<std::string>& suite_names();

/// Runs a named suite ("all" runs every suite). Throws UsageError for unknown
/// names or out-of-bounds ranges.
VerificationReport run_suite(const std::string& name, const SuiteParams& params = {});

VerificationReport genus3_suite();
VerificationReport counts_suite(IntRange g);
VerificationReport sigmastate_suite(IntRange n);
VerificationReport independence_suite(IntRange g);
VerificationReport polyrec_suite(IntRange n);

/// Theta-characteristic classes on the test curve of genus g, with tau killed.
struct ThetaClasses {
    ClassSeries odd;  // alpha(S^-) up to 2^{g-2}
    ClassSeries all;  // alpha(S) up to 2^{g-1}
};
ThetaClasses theta_classes(int g, GswConvention convention = GswConvention::EvenTwisted);

/// Drops every term carrying t: the specialization where {2} = 0.
RingElement kill_tau(const RingElement& x);
/// Keeps only the pure e-powers: every a_i sent to a positive (square) class and {2} = 0.
RingElement real_specialization(const RingElement& x);

}  // namespace thetasw
