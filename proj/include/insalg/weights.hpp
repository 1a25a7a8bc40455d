#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "insalg/coefficient.hpp"
#include "insalg/errors.hpp"

namespace insalg {

// A weight f : N x N -> Q[t,t^-1] attached to length pairs (|x|, |y|).
// Four families:
//   Constant     f(m,n) = c
//   ExpBilinear  f(m,n) = t^(m*n)      (t standing in for an exponential base)
//   Parity       f(m,n) = 1 if m and n are both odd, else 0
//   Table        finite lookup with a declared bound; never extrapolates
class WeightFunction {
public:
    enum class Family { Constant, ExpBilinear, Parity, Table };

private:
    Family family_ = Family::Constant;
    Coefficient constant_ = Coefficient(1);
    std::map<std::pair<long, long>, Coefficient> table_;
    long bound_ = 0;

    explicit WeightFunction(Family f) : family_(f) {}

public:
    static WeightFunction constant(Coefficient c) {
        WeightFunction f(Family::Constant);
        f.constant_ = std::move(c);
        return f;
    }
    static WeightFunction exp_bilinear() { return WeightFunction(Family::ExpBilinear); }
    static WeightFunction parity() { return WeightFunction(Family::Parity); }

    // The declared bound is metadata: lookups succeed exactly on the keys
    // provided, so a table may cover [0,N]^2 or any sub-grid of it.
    static WeightFunction table(std::map<std::pair<long, long>, Coefficient> entries,
                                long declared_bound) {
        if (declared_bound < 0)
            throw config_error("table bound must be nonnegative");
        WeightFunction f(Family::Table);
        for (const auto& [key, value] : entries)
            if (key.first < 0 || key.first > declared_bound ||
                key.second < 0 || key.second > declared_bound)
                throw config_error("table entry (" + std::to_string(key.first) + "," +
                                   std::to_string(key.second) + ") lies outside [0," +
                                   std::to_string(declared_bound) + "]^2");
        f.table_ = std::move(entries);
        f.bound_ = declared_bound;
        return f;
    }

    Family family() const { return family_; }
    long bound() const { return bound_; }

    bool defined_at(long m, long n) const {
        if (m < 0 || n < 0)
            return false;
        if (family_ == Family::Table)
            return table_.count({m, n}) != 0;
        return true;
    }

    Coefficient eval(long m, long n) const {
        if (!defined_at(m, n))
            throw out_of_domain("weight undefined at (" + std::to_string(m) + "," +
                                std::to_string(n) + ")");
        switch (family_) {
        case Family::Constant:
            return constant_;
        case Family::ExpBilinear:
            return Coefficient::t_power(static_cast<std::int64_t>(m) * n);
        case Family::Parity:
            return Coefficient(m % 2 == 1 && n % 2 == 1 ? 1 : 0);
        case Family::Table:
            return table_.at({m, n});
        }
        throw out_of_domain("unreachable weight family");
    }

    std::string description() const {
        switch (family_) {
        case Family::Constant:
            return "const:" + constant_.str();
        case Family::ExpBilinear:
            return "exp";
        case Family::Parity:
            return "parity";
        case Family::Table:
            return "table[N=" + std::to_string(bound_) + "]";
        }
        return "?";
    }
};

// The compatibility system a weight must satisfy for the weighted insertion
// to stay left-symmetric:
//   f(m,n) f(m+n,p) = f(n,p) f(m,n+p) = f(m,p) f(n,m+p).
// check_f_equations sweeps (m,n,p) in [0,N]^3 and records every triple where
// either adjacent equality fails.  Triples needing values outside a table's
// key set are skipped and counted, never extrapolated.
struct FViolation {
    long m, n, p;
    Coefficient lhs, mid, rhs;  // the three products, in the order above
    bool eq1_holds, eq2_holds;  // lhs == mid, mid == rhs
};

struct FGridReport {
    long bound = 0;
    bool passed = true;
    std::vector<FViolation> violations;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
};

inline FGridReport check_f_equations(const WeightFunction& f, long bound) {
    if (bound < 0)
        throw out_of_domain("negative bound");
    FGridReport report;
    report.bound = bound;
    for (long m = 0; m <= bound; ++m)
        for (long n = 0; n <= bound; ++n)
            for (long p = 0; p <= bound; ++p) {
                bool in_domain = f.defined_at(m, n) && f.defined_at(m + n, p) &&
                                 f.defined_at(n, p) && f.defined_at(m, n + p) &&
                                 f.defined_at(m, p) && f.defined_at(n, m + p);
                if (!in_domain) {
                    ++report.skipped;
                    continue;
                }
                ++report.checked;
                Coefficient lhs = f.eval(m, n) * f.eval(m + n, p);
                Coefficient mid = f.eval(n, p) * f.eval(m, n + p);
                Coefficient rhs = f.eval(m, p) * f.eval(n, m + p);
                bool eq1 = lhs == mid;
                bool eq2 = mid == rhs;
                if (!eq1 || !eq2) {
                    report.passed = false;
                    report.violations.push_back({m, n, p, lhs, mid, rhs, eq1, eq2});
                }
            }
    return report;
}

struct SymmetryWitness {
    long m, n;
    Coefficient f_mn, f_nm;
};

struct SymmetryReport {
    long bound = 0;
    bool symmetric = true;
    std::vector<SymmetryWitness> witnesses;
};

// Checks f(m,n) = f(n,m) on [1,bound]^2.  Requires f to be defined there.
inline SymmetryReport check_f_symmetry(const WeightFunction& f, long bound) {
    SymmetryReport report;
    report.bound = bound;
    for (long m = 1; m <= bound; ++m)
        for (long n = m + 1; n <= bound; ++n) {
            Coefficient f_mn = f.eval(m, n);
            Coefficient f_nm = f.eval(n, m);
            if (f_mn != f_nm) {
                report.symmetric = false;
                report.witnesses.push_back({m, n, f_mn, f_nm});
            }
        }
    return report;
}

// H measures how far f is from satisfying the first compatibility equality:
//   h1 = f(m,n) f(m+n,p),  h2 = f(n,p) f(m,n+p),  h = h1 - h2.
// Identity failures of the weighted product at lengths (m,n,p) are governed
// by H(m,n,p) vs H(n,m,p) (and the same comparison for h2), not by H alone.
struct HValues {
    Coefficient h, h1, h2;
};

inline HValues compute_H(const WeightFunction& f, long m, long n, long p) {
    Coefficient h1 = f.eval(m, n) * f.eval(m + n, p);
    Coefficient h2 = f.eval(n, p) * f.eval(m, n + p);
    return {h1 - h2, h1, h2};
}

// Exhaustively enumerates all {0,1}-valued tables on [1,N]^2 and keeps those
// whose checkable triples satisfy the compatibility equations.  2^(N^2)
// candidates, so N is capped small.
inline std::vector<WeightFunction> enumerate_binary_f(int N) {
    if (N < 1 || N > 4)
        throw bound_too_large("binary enumeration supports 1 <= N <= 4, got " +
                              std::to_string(N));
    std::vector<WeightFunction> passing;
    const int cells = N * N;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << cells); ++mask) {
        std::map<std::pair<long, long>, Coefficient> entries;
        int bit = 0;
        for (long m = 1; m <= N; ++m)
            for (long n = 1; n <= N; ++n, ++bit)
                entries[{m, n}] = Coefficient((mask >> bit) & 1 ? 1 : 0);
        WeightFunction candidate = WeightFunction::table(std::move(entries), N);
        if (check_f_equations(candidate, N).passed)
            passing.push_back(std::move(candidate));
    }
    return passing;
}

} // namespace insalg
