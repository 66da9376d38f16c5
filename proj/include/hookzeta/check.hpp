#pragma once

#include "hookzeta/rational.hpp"

#include <string>

namespace hookzeta {

/// Outcome of one exact identity check: both sides as exact values and the
/// verdict. pass is true exactly when lhs == rhs.
struct CheckResult {
    std::string id;
    long long n = 0;
    Rational lhs;
    Rational rhs;
    bool pass = false;
    std::string note;
};

inline CheckResult make_check(std::string id, long long n, Rational lhs, Rational rhs,
                              std::string note = {}) {
    CheckResult r;
    r.id = std::move(id);
    r.n = n;
    r.pass = (lhs == rhs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.note = std::move(note);
    return r;
}

} // namespace hookzeta
