#include "rrcf/partitions.hpp"

#include "rrcf/errors.hpp"
#include "rrcf/kernels.hpp"

namespace rrcf {

namespace {

bool distinct_nonconsecutive(const std::vector<int>& parts, int min_part) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < min_part) return false;
    if (i > 0 && parts[i - 1] - parts[i] < 2) return false;
  }
  return true;
}

bool residues_in(const std::vector<int>& parts, int r1, int r2) {
  for (int p : parts) {
    if (p % 5 != r1 && p % 5 != r2) return false;
  }
  return true;
}

void enumerate_all(int remaining, int max_part, std::vector<int>& parts,
                   const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    enumerate_all(remaining - part, part, parts, visit);
    parts.pop_back();
  }
}

// Descending parts, each at most `max_part`, differing by >= `gap` from the
// previous, at least `min_part`, and passing `allowed`.
struct Generator {
  int gap;
  int min_part;
  bool (*allowed)(int);
  PartitionPredicate predicate;
  std::vector<int> parts;
  std::uint64_t count = 0;

  void run(int remaining, int max_part) {
    if (remaining == 0) {
      if (satisfies(parts, predicate)) ++count;
      return;
    }
    for (int part = std::min(remaining, max_part); part >= min_part; --part) {
      if (!allowed(part)) continue;
      parts.push_back(part);
      run(remaining - part, part - gap);
      parts.pop_back();
    }
  }
};

bool any_part(int) { return true; }
bool mod5_14(int p) { return p % 5 == 1 || p % 5 == 4; }
bool mod5_23(int p) { return p % 5 == 2 || p % 5 == 3; }

void require_nonnegative(int n) {
  if (n < 0) throw DomainError("partitions need n >= 0");
}

}  // namespace

std::string to_string(PartitionPredicate p) {
  switch (p) {
    case PartitionPredicate::DistinctNonconsecutive:
      return "distinct-nonconsecutive";
    case PartitionPredicate::PartsMod5In14:
      return "parts-1-4-mod-5";
    case PartitionPredicate::DistinctNonconsecutiveMin2:
      return "distinct-nonconsecutive-min-2";
    case PartitionPredicate::PartsMod5In23:
      return "parts-2-3-mod-5";
  }
  return "unknown";
}

bool satisfies(const std::vector<int>& parts, PartitionPredicate p) {
  switch (p) {
    case PartitionPredicate::DistinctNonconsecutive:
      return distinct_nonconsecutive(parts, 1);
    case PartitionPredicate::DistinctNonconsecutiveMin2:
      return distinct_nonconsecutive(parts, 2);
    case PartitionPredicate::PartsMod5In14:
      return residues_in(parts, 1, 4);
    case PartitionPredicate::PartsMod5In23:
      return residues_in(parts, 2, 3);
  }
  return false;
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
  require_nonnegative(n);
  std::vector<int> parts;
  enumerate_all(n, n, parts, visit);
}

std::uint64_t count_partitions(int n, PartitionPredicate p) {
  require_nonnegative(n);
  Generator g{0, 1, any_part, p, {}, 0};
  switch (p) {
    case PartitionPredicate::DistinctNonconsecutive:
      g.gap = 2;
      break;
    case PartitionPredicate::DistinctNonconsecutiveMin2:
      g.gap = 2;
      g.min_part = 2;
      break;
    case PartitionPredicate::PartsMod5In14:
      g.allowed = mod5_14;
      break;
    case PartitionPredicate::PartsMod5In23:
      g.allowed = mod5_23;
      break;
  }
  g.run(n, n);
  return g.count;
}

std::uint64_t count_partitions_unpruned(int n, PartitionPredicate p) {
  std::uint64_t count = 0;
  for_each_partition(n, [&](const std::vector<int>& parts) { count += satisfies(parts, p) ? 1 : 0; });
  return count;
}

namespace serial {

std::vector<std::uint64_t> count_table(int max_n, PartitionPredicate p) {
  require_nonnegative(max_n);
  return kernels::serial::map_indices(static_cast<std::size_t>(max_n) + 1,
                                      [p](std::size_t n) { return count_partitions(static_cast<int>(n), p); });
}

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> count_table(int max_n, PartitionPredicate p) {
  require_nonnegative(max_n);
  return kernels::parallel::map_indices(static_cast<std::size_t>(max_n) + 1,
                                        [p](std::size_t n) { return count_partitions(static_cast<int>(n), p); });
}

}  // namespace parallel

}  // namespace rrcf
