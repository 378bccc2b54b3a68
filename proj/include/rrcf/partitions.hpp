#pragma once

// Brute-force partition enumeration, kept independent of the generating
// functions so it can serve as an oracle for their coefficients.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rrcf {

enum class PartitionPredicate {
  DistinctNonconsecutive,
  PartsMod5In14,
  DistinctNonconsecutiveMin2,
  PartsMod5In23,
};

std::string to_string(PartitionPredicate p);

/// `parts` in nonincreasing order.
bool satisfies(const std::vector<int>& parts, PartitionPredicate p);

/// Calls `visit` once per partition of n, parts in nonincreasing order.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit);

/// Counts by generating only candidate partitions (parts restricted and
/// spaced as the predicate requires), then confirming each with satisfies().
std::uint64_t count_partitions(int n, PartitionPredicate p);

/// Counts by enumerating every partition of n and filtering.
std::uint64_t count_partitions_unpruned(int n, PartitionPredicate p);

namespace serial {
/// count_partitions(n, p) for n = 0..max_n.
std::vector<std::uint64_t> count_table(int max_n, PartitionPredicate p);
}  // namespace serial

namespace parallel {
std::vector<std::uint64_t> count_table(int max_n, PartitionPredicate p);
}  // namespace parallel

}  // namespace rrcf
