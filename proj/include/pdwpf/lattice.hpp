#pragma once

#include <cstdint>
#include <vector>

#include "pdwpf/rat.hpp"
#include "pdwpf/weights.hpp"

namespace pdwpf {

// Boundary families.  DWBC is the fully fixed domain wall; the PDW families
// fix only part of the boundary and sum the rest; SCALAR_PRODUCT stacks a
// second, reflected block of rows on top of the first.
enum class BoundaryFamily { DWBC, PDW_TOPSUM, PDW_SPLIT, PDW_Z2, SCALAR_PRODUCT };

struct BoundarySpec {
    BoundaryFamily family = BoundaryFamily::DWBC;
    int n = 0; // row rapidity count (per block for SCALAR_PRODUCT)
    int N = 0; // column count
    int m = 0; // PDW_SPLIT only, n <= m <= N
};

struct RapidityConfig {
    std::vector<Rat> xs;
    std::vector<Rat> ys;
    std::vector<Rat> bs; // SCALAR_PRODUCT upper block
};

struct LatticeSpec {
    BoundarySpec boundary;
    WeightScheme weights;
    RapidityConfig rapidities;
};

// Exact brute-force partition function: row-by-row dynamic programming over
// the 2^N vertical-edge states, sweeping columns within each row.  Never
// divides by anything, so coinciding rapidities are fine.
Rat oracle_partition_function(const LatticeSpec& spec);

// Same walk with every weight set to 1: the number of admissible arrow
// configurations for the family.
std::int64_t count_configurations(const LatticeSpec& spec);

const char* family_name(BoundaryFamily f);

} // namespace pdwpf
