#include "doctest.h"

#include <random>
#include <stdexcept>

#include "rrcf/kernels.hpp"

using namespace rrcf;

namespace {

std::vector<mpz_class> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  std::vector<mpz_class> v(n);
  for (auto& c : v) c = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("convolution of small polynomials") {
  std::vector<mpz_class> a{1, 2, 3}, b{4, 5};
  auto c = kernels::serial::convolve<mpz_class>(a, b, 5);
  CHECK(c == std::vector<mpz_class>{4, 13, 22, 15, 0});
}

TEST_CASE("parallel convolution matches serial") {
  for (unsigned seed : {1u, 2u, 3u}) {
    auto a = random_coeffs(300, seed);
    auto b = random_coeffs(170, seed + 10);
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{200}, std::size_t{500}}) {
      CHECK(kernels::parallel::convolve<mpz_class>(a, b, n) == kernels::serial::convolve<mpz_class>(a, b, n));
    }
  }
}

TEST_CASE("convolution is commutative") {
  auto a = random_coeffs(64, 7);
  auto b = random_coeffs(40, 8);
  CHECK(kernels::serial::convolve<mpz_class>(a, b, 100) == kernels::serial::convolve<mpz_class>(b, a, 100));
}

TEST_CASE("rational convolution") {
  std::vector<mpq_class> a{mpq_class(1, 2), mpq_class(1, 3)}, b{mpq_class(2), mpq_class(-3, 4)};
  auto s = kernels::serial::convolve<mpq_class>(a, b, 3);
  CHECK(s == kernels::parallel::convolve<mpq_class>(a, b, 3));
  CHECK(s[1] == mpq_class(1, 2) * mpq_class(-3, 4) + mpq_class(1, 3) * 2);
}

TEST_CASE("map_indices keeps index order") {
  auto f = [](std::size_t i) { return static_cast<long>(i * i); };
  auto s = kernels::serial::map_indices(257, f);
  auto p = kernels::parallel::map_indices(257, f);
  CHECK(s == p);
  CHECK(p[16] == 256);
}

TEST_CASE("map_indices rethrows the first failing index") {
  auto f = [](std::size_t i) -> int {
    if (i == 5 || i == 9) throw std::runtime_error(std::to_string(i));
    return 0;
  };
  for (int pass = 0; pass < 2; ++pass) {
    try {
      if (pass) (void)kernels::parallel::map_indices(20, f);
      else (void)kernels::serial::map_indices(20, f);
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "5");
    }
  }
}

TEST_CASE("thread count is positive") { CHECK(kernels::thread_count() >= 1); }
