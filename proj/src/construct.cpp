#include "dta/construct.hpp"

#include <algorithm>
#include <numeric>

#include "dta/kernels.hpp"
#include "dta/verify.hpp"

namespace dta {

MixedArray oa_sum(std::size_t t, int v) {
  if (t < 1) throw DomainError("oa_sum needs t >= 1");
  if (v < 2) throw DomainError("oa_sum needs v >= 2");
  auto base = full_factorial(TypeVector(std::vector<int>(t, v)));
  MixedArray out(TypeVector(std::vector<int>(t + 1, v)), base.rows());
  for (std::size_t r = 0; r < base.rows(); ++r) {
    int sum = 0;
    for (std::size_t j = 0; j < t; ++j) {
      out.set(r, j, base.at(r, j));
      sum += base.at(r, j);
    }
    out.set(r, t, sum % v);
  }
  return out;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

MixedArray oa_bush(std::size_t t, int q) {
  if (!is_prime(q))
    throw DomainError("Bush construction needs a prime order; " +
                      std::to_string(q) +
                      " is not prime (prime-power fields are unsupported)");
  if (t < 1 || t > static_cast<std::size_t>(q))
    throw DomainError("Bush construction needs 1 <= t <= q (t = " +
                      std::to_string(t) + ", q = " + std::to_string(q) + ")");
  // Coefficients c_0..c_{t-1}, c_{t-1} varying slowest.
  auto coeffs = full_factorial(TypeVector(std::vector<int>(t, q)));
  const auto cols = static_cast<std::size_t>(q) + 1;
  MixedArray out(TypeVector(std::vector<int>(cols, q)), coeffs.rows());
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    for (int x = 0; x < q; ++x) {
      long long value = 0;
      for (std::size_t i = 0; i < t; ++i)  // Horner from the leading term
        value = (value * x + coeffs.at(r, i)) % q;
      out.set(r, static_cast<std::size_t>(x), static_cast<Level>(value));
    }
    out.set(r, cols - 1, coeffs.at(r, 0));
  }
  return out;
}

MixedArray mca_optimum(std::size_t t, const TypeVector& types) {
  if (t < 1) throw DomainError("mca_optimum needs t >= 1");
  if (types.k() != t + 1)
    throw DomainError("mca_optimum needs k = t+1 (t = " + std::to_string(t) +
                      ", k = " + std::to_string(types.k()) + ")");
  if (types.min_size() < 2)
    throw DomainError("mca_optimum needs every size >= 2");
  const auto& s = types.sizes();
  auto sum_col = static_cast<std::size_t>(
      std::min_element(s.begin(), s.end()) - s.begin());
  auto rest = types.without(sum_col);
  auto base = full_factorial(rest);
  MixedArray out(types, base.rows());
  for (std::size_t r = 0; r < base.rows(); ++r) {
    int sum = 0;
    for (std::size_t j = 0, src = 0; j < types.k(); ++j) {
      if (j == sum_col) continue;
      out.set(r, j, base.at(r, src));
      sum += base.at(r, src++);
    }
    out.set(r, sum_col, sum % types[sum_col]);
  }
  return out;
}

MixedArray insert_expand(const MixedArray& a, const MixedArray& b,
                         std::size_t col, int e, std::size_t t) {
  if (e < 1) throw DomainError("insert_expand needs e >= 1");
  if (col >= a.cols())
    throw DomainError("insert_expand column " + std::to_string(col + 1) +
                      " outside 1.." + std::to_string(a.cols()));
  if (a.cols() < 2) throw DomainError("insert_expand needs k >= 2");
  if (t < 1 || t > a.cols())
    throw DomainError("insert_expand strength outside 1..k");
  auto reduced = a.types().without(col);
  if (!(b.types() == reduced))
    throw DomainError("second array has type (" + b.types().to_string() +
                      "), expected (" + reduced.to_string() +
                      ") = first array's type without column " +
                      std::to_string(col + 1));
  if (coverage_index(a, t) < 1)
    throw DomainError("first array is not an MCA of strength " +
                      std::to_string(t));
  if (t > 1 && coverage_index(b, t - 1) < 1)
    throw DomainError("second array is not an MCA of strength " +
                      std::to_string(t - 1));

  auto sizes = a.types().sizes();
  const int old_size = sizes[col];
  sizes[col] += e;
  MixedArray out(TypeVector(sizes), a.rows() + static_cast<std::size_t>(e) * b.rows());
  std::size_t row = 0;
  for (std::size_t r = 0; r < a.rows(); ++r, ++row)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(row, j, a.at(r, j));
  for (int block = 1; block <= e; ++block) {
    for (std::size_t r = 0; r < b.rows(); ++r, ++row) {
      for (std::size_t j = 0, src = 0; j < a.cols(); ++j)
        out.set(row, j, j == col ? old_size - 1 + block : b.at(r, src++));
    }
  }
  return out;
}

MixedArray kronecker(const MixedArray& a, const MixedArray& b) {
  if (a.cols() != b.cols())
    throw DomainError("kronecker needs equal column counts (" +
                      std::to_string(a.cols()) + " vs " +
                      std::to_string(b.cols()) + ")");
  std::vector<int> sizes(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    sizes[j] = a.types()[j] * b.types()[j];
  MixedArray out(TypeVector(sizes), a.rows() * b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t j = 0; j < a.cols(); ++j)
        out.set(i * b.rows() + r, j,
                kron_level(a.at(i, j), b.at(r, j), b.types()[j]));
  return out;
}

namespace {

// Column c such that the remaining columns hold every tuple exactly once.
std::optional<std::size_t> factorial_complement(const MixedArray& a) {
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
    return a.types()[x] < a.types()[y];
  });
  for (auto c : order) {
    auto rest = a.types().without(c);
    if (rest.largest_product(rest.k()) != a.rows()) continue;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (j != c) keep.push_back(j);
    std::vector<char> seen(a.rows(), 0);
    bool ok = true;
    for (std::size_t r = 0; r < a.rows() && ok; ++r) {
      std::uint64_t idx = 0;
      for (auto j : keep)
        idx = idx * static_cast<std::uint64_t>(a.types()[j]) +
              static_cast<std::uint64_t>(a.at(r, j));
      if (seen[idx]) ok = false;
      seen[idx] = 1;
    }
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace

MixedArray replicate_cyclic(const MixedArray& a, std::size_t d) {
  if (d < 1) throw DomainError("replicate_cyclic needs d >= 1");
  if (a.cols() < 2) throw DomainError("replicate_cyclic needs k >= 2");
  const std::size_t t = a.cols() - 1;
  if (coverage_index(a, t) < 1)
    throw DomainError("input is not an MCA of strength k-1 = " +
                      std::to_string(t));
  auto c = factorial_complement(a);
  if (!c)
    throw DomainError(
        "input is not an index-1 optimum MCA: no k-1 columns form a full "
        "factorial of size N");
  const int v = a.types()[*c];
  if (d > static_cast<std::size_t>(v))
    throw InfeasibleParameters(
        "cyclic replication gives an optimum DTA only for d <= v_1 (d = " +
        std::to_string(d) + ", v_1 = " + std::to_string(v) + ")");
  MixedArray out = a;
  for (std::size_t i = 1; i < d; ++i) {
    MixedArray shifted = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
      shifted.set(r, *c, static_cast<Level>((a.at(r, *c) + static_cast<int>(i)) % v));
    out.append(shifted);
  }
  return out;
}

MixedArray derive_super_simple(const MixedArray& a, int lam) {
  const auto& types = a.types();
  const int m = types[0];
  if (types.min_size() != types.max_size())
    throw DomainError("derive_super_simple needs a fixed-level OA");
  if (lam < 2 || lam > m)
    throw DomainError("lambda must satisfy 2 <= lambda <= m (lambda = " +
                      std::to_string(lam) + ", m = " + std::to_string(m) + ")");
  // Strength s with m^s = N.
  std::size_t s = 0;
  for (std::uint64_t p = 1; p < a.rows(); p *= static_cast<std::uint64_t>(m)) ++s;
  std::uint64_t expect = 1;
  for (std::size_t i = 0; i < s; ++i) expect *= static_cast<std::uint64_t>(m);
  if (s < 2 || expect != a.rows() || s > a.cols())
    throw DomainError("input is not an index-1 OA(t+1, k+1, m) with t >= 1");
  auto stats = kernels::coverage(a, s, VerifyLimits{}.max_tuple_cells,
                                 Exec::parallel);
  if (stats.min_count != 1 || stats.max_count != 1)
    throw DomainError("input is not an index-1 orthogonal array of strength " +
                      std::to_string(s));
  if (a.cols() < s + 1)
    throw DomainError("input needs at least t+2 columns");
  const std::size_t last = a.cols() - 1;
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (a.at(r, last) < lam) keep.push_back(r);
  MixedArray out(types.without(last), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < last; ++j) out.set(i, j, a.at(keep[i], j));
  return out;
}

}  // namespace dta
