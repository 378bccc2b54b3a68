#include "doctest.h"

#include "rrcf/partitions.hpp"
#include "rrcf/qseries.hpp"

using namespace rrcf;

namespace {

const PartitionPredicate kAll[] = {PartitionPredicate::DistinctNonconsecutive, PartitionPredicate::PartsMod5In14,
                                   PartitionPredicate::DistinctNonconsecutiveMin2, PartitionPredicate::PartsMod5In23};

}  // namespace

TEST_CASE("enumeration yields p(n) partitions, each once and sorted") {
  // p(n) from Euler's recurrence with pentagonal numbers
  std::vector<long> p(31, 0);
  p[0] = 1;
  for (int n = 1; n <= 30; ++n) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long s = (k % 2) ? 1 : -1;
      p[n] += s * p[n - g1];
      if (g2 <= n) p[n] += s * p[n - g2];
    }
  }
  for (int n = 0; n <= 30; ++n) {
    long count = 0;
    bool ok = true;
    for_each_partition(n, [&](const std::vector<int>& parts) {
      ++count;
      int sum = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        sum += parts[i];
        if (i && parts[i] > parts[i - 1]) ok = false;
      }
      if (sum != n) ok = false;
    });
    CHECK(ok);
    CHECK(count == p[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("predicates on small partitions") {
  using P = PartitionPredicate;
  CHECK(satisfies({5, 3, 1}, P::DistinctNonconsecutive));
  CHECK_FALSE(satisfies({4, 3}, P::DistinctNonconsecutive));
  CHECK_FALSE(satisfies({2, 2}, P::DistinctNonconsecutive));
  CHECK(satisfies({6, 4, 1, 1}, P::PartsMod5In14));
  CHECK_FALSE(satisfies({2}, P::PartsMod5In14));
  CHECK(satisfies({5, 2}, P::DistinctNonconsecutiveMin2));
  CHECK_FALSE(satisfies({4, 1}, P::DistinctNonconsecutiveMin2));
  CHECK(satisfies({8, 7, 3, 2}, P::PartsMod5In23));
  CHECK_FALSE(satisfies({5}, P::PartsMod5In23));
  CHECK(satisfies({}, P::PartsMod5In23));
}

TEST_CASE("pruned and unpruned counts agree") {
  for (auto p : kAll) {
    for (int n = 0; n <= 30; ++n) CHECK(count_partitions(n, p) == count_partitions_unpruned(n, p));
  }
}

TEST_CASE("Rogers-Ramanujan bijections hold by counting") {
  for (int n = 0; n <= 45; ++n) {
    CHECK(count_partitions(n, PartitionPredicate::DistinctNonconsecutive) ==
          count_partitions(n, PartitionPredicate::PartsMod5In14));
    CHECK(count_partitions(n, PartitionPredicate::DistinctNonconsecutiveMin2) ==
          count_partitions(n, PartitionPredicate::PartsMod5In23));
  }
}

TEST_CASE("counts are the G and H coefficients") {
  IntegerSeries g = series_G(41), h = series_H(41);
  for (int n = 0; n <= 40; ++n) {
    CHECK(g.coeff(n) == count_partitions(n, PartitionPredicate::DistinctNonconsecutive));
    CHECK(h.coeff(n) == count_partitions(n, PartitionPredicate::DistinctNonconsecutiveMin2));
  }
}

TEST_CASE("parallel count table matches serial") {
  for (auto p : kAll) CHECK(parallel::count_table(40, p) == serial::count_table(40, p));
  CHECK(serial::count_table(0, PartitionPredicate::PartsMod5In14) == std::vector<std::uint64_t>{1});
}

TEST_CASE("predicate names are distinct") {
  CHECK(to_string(kAll[0]) != to_string(kAll[1]));
  CHECK(to_string(kAll[2]) != to_string(kAll[3]));
}
