#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "speh/model.hpp"

namespace speh::cli {

/// Process exit codes.
enum Exit : int {
    ok = 0,
    failure = 1,  ///< pole evaluation, failed certificate
    usage = 2,
    io = 3,
};

/// One row of a parameter sweep; column order is the CSV header order.
struct SweepRow {
    InductionProblem problem;
    bool coprime_closed = false;
    bool coprime_brute = false;
    int candidates = 0;    ///< distinct poles of beta(s)beta(-s)
    int theorem_only = 0;  ///< distinct THEOREM_ONLY points
    bool certified = false;

    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

inline constexpr const char* kSweepHeader = "a,b,c,d,coprime_closed,coprime_brute,candidates,theorem_only,certified";

SweepRow sweep_row(const InductionProblem& p);

/// Combined verdict used by `certify` and by sweeps.
bool certified(const InductionProblem& p);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace speh::cli
