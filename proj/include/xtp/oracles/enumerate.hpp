#pragma once

// Brute-force enumerators over small combinatorial classes. They walk every
// object and tally a statistic, with no reference to any recurrence, so they
// serve as ground truth for the recurrence-built triangles.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace xtp::oracle {

// Requested size exceeds the enumerator's hard limit.
struct SizeGuard : std::length_error {
    using std::length_error::length_error;
};

struct CountVector {
    unsigned n = 0;
    std::vector<mpz_class> counts;  // counts[k] = objects with statistic k

    [[nodiscard]] mpz_class total() const;
    // Equality with a row, reading absent entries on either side as zero.
    [[nodiscard]] bool matches(const std::vector<mpz_class>& row) const;
    friend bool operator==(const CountVector&, const CountVector&) = default;
};

// Column k counts permutations of [n] with k-1 descents (n <= 7).
CountVector perms_by_descents(unsigned n);
// Permutations of [n] by number of cycles (n <= 7).
CountVector perms_by_cycles(unsigned n);
// Set partitions of [n] by number of blocks (n <= 8).
CountVector set_partitions_by_blocks(unsigned n);
// Set partitions of [n] without singleton blocks, by number of blocks (n <= 8).
CountVector set_partitions_without_singletons(unsigned n);
// Stirling permutations of order n by ascent plateaus, with a leading 0
// sentinel (n <= 5).
CountVector stirling_perms_by_ascent_plateau(unsigned n);
// Perfect matchings of [2n] by the number of pairs whose smaller entry is odd
// (n <= 5).
CountVector matchings_by_odd_smaller(unsigned n);
// Permutations of [n] by interior peaks (n <= 7).
CountVector perms_by_interior_peaks(unsigned n);
// Permutations of [n] by left peaks, with a leading 0 sentinel (n <= 7).
CountVector perms_by_left_peaks(unsigned n);

}  // namespace xtp::oracle
