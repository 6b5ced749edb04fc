#pragma once

#include <vector>

// Brute-force reference implementations, independent of the library under
// test: set partitions by restricted-growth-string enumeration, surjections
// by direct function enumeration, integrands in plain double arithmetic.
namespace oracle {

// Number of set partitions of [n] (n >= 0).
unsigned long rgs_partition_count(int n);

// Partitions of [n] bucketed by block count; entry k counts partitions into
// exactly k blocks, k = 0..n.
std::vector<unsigned long> rgs_block_histogram(int n);

// Number of surjective functions [n] -> [k]; (0,0) counts the empty function.
unsigned long count_surjections(int n, int k);

double cesaro_real_ref(int n, double theta);
double cesaro_complex_ref(int n, double theta);
double power_ref(int j, int n, double theta);
double block_ref(int k, int n, double theta);
double sines_ref(int m, int n, double theta);

}  // namespace oracle
