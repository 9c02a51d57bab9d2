#pragma once

#include "mubar/invariants.hpp"
#include "mubar/plumbing.hpp"

#include <map>
#include <string>
#include <vector>

namespace mubar {

/// Every invariant of one sphere plus the named consistency verdicts.
struct InvariantReport {
    SeifertData seifert;
    Rational eta_combination;
    Int mubar = 0;              // c-invariant form
    Rational mubar_dedekind;    // Dedekind-sum form
    Int mubar_oracle = 0;       // plumbing definition
    Int signature = 0;
    Int wu_self_intersection = 0;
    Rational aps_index;
    std::map<std::string, bool> verdicts;

    bool all_pass() const {
        for (const auto& [name, ok] : verdicts)
            if (!ok) return false;
        return true;
    }

    std::vector<std::string> failed_verdicts() const {
        std::vector<std::string> out;
        for (const auto& [name, ok] : verdicts)
            if (!ok) out.push_back(name);
        return out;
    }
};

/// Computes eta, both mu-bar formulas, the plumbing oracle and the index
/// combination for one sphere, and records whether every identity holds.
/// Violations are reported through the verdicts, not thrown.
inline InvariantReport verify_main_theorem(const SeifertData& y) {
    InvariantReport r;
    r.seifert = y;
    r.eta_combination = eta_combination(y);
    const CoefficientVector cv = solve_coefficients(y);
    r.mubar = mubar_c_form(y, cv);
    r.mubar_dedekind = mubar_dedekind_form(y, cv);

    const IntersectionForm q = intersection_form(build_plumbing(y));
    const int sig = signature(q);
    const Int ww = wu_self_intersection(q, wu_class(q));
    r.signature = sig;
    r.wu_self_intersection = ww;
    const Int num = Int(sig) - ww;
    if (num % 8 != 0)
        throw internal_error("verify_main_theorem: sign - w.w not divisible by 8 for " +
                             y.name());
    r.mubar_oracle = num / 8;
    r.aps_index = -r.eta_combination - Rational(Int(sig), 8) + Rational(ww, 8);

    r.verdicts["eta_equals_minus_mubar"] = r.eta_combination == -Rational(r.mubar);
    r.verdicts["dedekind_equals_c_form"] = r.mubar_dedekind == Rational(r.mubar);
    r.verdicts["mubar_is_integer"] = is_integer(r.mubar_dedekind);
    r.verdicts["oracle_agrees"] = r.mubar_oracle == r.mubar;
    r.verdicts["aps_index_zero"] = r.aps_index == 0;
    return r;
}

} // namespace mubar
