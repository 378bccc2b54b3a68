#pragma once

// Data-parallel kernels. Each kernel has a serial reference in
// kernels::serial and an OpenMP version in kernels::parallel with identical
// results; the serial one is what the tests compare against.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#ifdef RRCF_HAVE_OPENMP
#include <omp.h>
#endif

namespace rrcf::kernels {

inline int thread_count() {
#ifdef RRCF_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace detail {

template <class C>
inline void accumulate_product(C& acc, const C& x, const C& y) {
  if constexpr (std::is_same_v<C, mpz_class>) {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  } else {
    acc += x * y;
  }
}

template <class C>
C convolution_term(std::span<const C> a, std::span<const C> b, std::size_t i) {
  C acc = 0;
  const std::size_t lo = i >= b.size() ? i - b.size() + 1 : 0;
  const std::size_t hi = std::min(i + 1, a.size());
  for (std::size_t j = lo; j < hi; ++j) accumulate_product(acc, a[j], b[i - j]);
  return acc;
}

template <class R>
std::vector<R> collect(std::vector<std::optional<R>>& slots, std::vector<std::exception_ptr>& errors) {
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace detail

namespace serial {

/// First n coefficients of the Cauchy product a * b.
template <class C>
std::vector<C> convolve(std::span<const C> a, std::span<const C> b, std::size_t n) {
  std::vector<C> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = detail::convolution_term(a, b, i);
  return out;
}

/// [f(0), ..., f(count - 1)]; the first exception in index order is rethrown.
template <class F>
auto map_indices(std::size_t count, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
  return out;
}

}  // namespace serial

namespace parallel {

template <class C>
std::vector<C> convolve(std::span<const C> a, std::span<const C> b, std::size_t n) {
  std::vector<C> out(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 16)
  for (long i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = detail::convolution_term(a, b, static_cast<std::size_t>(i));
  }
  return out;
}

/// Same contract as serial::map_indices; results are placed by index, so the
/// output order never depends on thread scheduling.
template <class F>
auto map_indices(std::size_t count, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      slots[idx].emplace(f(idx));
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  return detail::collect(slots, errors);
}

}  // namespace parallel

}  // namespace rrcf::kernels
