#include "cartdom/oracles.hpp"

#include <stdexcept>

namespace cartdom {

OracleAnswer path_eod(int n) {
    if (n < 1) throw std::invalid_argument("path_eod: n must be >= 1");
    return {n % 4 != 1, "path characterization: P_n is an EOD-graph iff n mod 4 != 1"};
}

OracleAnswer cycle_eod(int n) {
    if (n < 3) throw std::invalid_argument("cycle_eod: n must be >= 3");
    return {n % 4 == 0, "cycle characterization: C_n is an EOD-graph iff n mod 4 == 0"};
}

OracleAnswer grid_eod(int r, int t) {
    if (r < 3 || t < r)
        throw std::domain_error("grid_eod: stated only for t >= r >= 3; use brute force");
    int x = t % (r + 1);
    bool value = (r % 2 == 0) && (x == 1 || x == r - 2 || x == r);
    return {value,
            "grid characterization: P_r box P_t is an EOD-graph iff r is even and "
            "t mod (r+1) lies in {1, r-2, r}"};
}

OracleAnswer torus_parallel_eod(int r, int t) {
    if (r < 3 || t < 3) throw std::invalid_argument("torus_parallel_eod: requires r, t >= 3");
    return {r % 4 == 0 && t % 4 == 0,
            "torus parallel characterization: C_r box C_t has a parallel EOD-set iff "
            "r and t are multiples of four"};
}

OracleAnswer c4_torus_eod(int t) {
    if (t < 4) throw std::domain_error("c4_torus_eod: stated only for t >= 4");
    return {t % 4 == 0,
            "C_4-torus characterization: C_4 box C_t is an EOD-graph iff t mod 4 == 0"};
}

}  // namespace cartdom
