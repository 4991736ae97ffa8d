#pragma once

#include <string>

namespace cartdom {

// Closed-form answers from the published characterizations, used as ground
// truth by the verification suites. Each refuses inputs outside its stated
// domain rather than extrapolate.
struct OracleAnswer {
    bool value = false;
    std::string source;  // names the result applied
};

// P_n: true iff n mod 4 != 1.  Requires n >= 1.
OracleAnswer path_eod(int n);

// C_n: true iff n mod 4 == 0.  Requires n >= 3.
OracleAnswer cycle_eod(int n);

// P_r box P_t for t >= r >= 3: true iff r is even and t mod (r+1) is one of
// {1, r-2, r}. Throws std::domain_error outside the stated domain; callers
// fall back to brute force there.
OracleAnswer grid_eod(int r, int t);

// C_r box C_t has a parallel EOD-set (w.r.t. at least one factor) iff both r
// and t are multiples of four.  Requires r, t >= 3.
OracleAnswer torus_parallel_eod(int r, int t);

// C_4 box C_t for t >= 4: true iff t mod 4 == 0.
OracleAnswer c4_torus_eod(int t);

}  // namespace cartdom
