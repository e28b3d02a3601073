#include "gopkit/count.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "gopkit/error.hpp"

namespace gopkit {

namespace {

// 0! .. n!, built once per call.
class Factorials {
 public:
  explicit Factorials(std::uint32_t n) : table_(n + 1) {
    table_[0] = 1;
    for (std::uint32_t i = 1; i <= n; ++i) table_[i] = table_[i - 1] * i;
  }
  const BigInt& operator()(std::uint32_t i) const { return table_.at(i); }

 private:
  std::vector<BigInt> table_;
};

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator) {
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0) throw std::logic_error("class cardinal division left remainder " + r.str());
  return q;
}

void require_k(std::uint32_t n, std::uint32_t k) {
  if (n == 0) throw DomainError("N must be positive");
  if (k < 1 || k > n)
    throw DomainError("k = " + std::to_string(k) + " is outside [1, " + std::to_string(n) + "]");
}

}  // namespace

BigInt count_fixed_points_only(std::uint32_t n, std::uint32_t k) {
  require_k(n, k);
  const Factorials fact(n);
  const BigInt binom = exact_quotient(fact(n - 1), fact(n - k) * fact(k - 1));
  return binom * pow_big(n, n - k);
}

BigInt count_single_cycle(std::uint32_t n, std::uint32_t k) {
  require_k(n, k);
  const Factorials fact(k);
  return count_fixed_points_only(n, k) * fact(k - 1);
}

BigInt count_two_cycles(std::uint32_t n, std::uint32_t p, std::uint32_t q) {
  if (p < 1 || q < 1 || std::uint64_t{p} + q > n)
    throw DomainError("[p,q]_N needs p, q >= 1 and p + q <= N");
  const std::uint32_t s = p + q;
  const Factorials fact(n);
  return exact_quotient(fact(n - 1) * pow_big(n, n - s), fact(n - s) * q);
}

BigInt count_gop(const Gop& g) {
  const std::uint32_t n = g.n();
  const std::uint32_t s = g.modulus();
  const Factorials fact(n);
  const auto& w = g.orders();
  BigInt suffix_product = 1;
  std::uint64_t suffix = 0;
  for (std::size_t k = w.size(); k-- > 1;) {
    suffix += w[k];
    suffix_product *= suffix;
  }
  return exact_quotient(fact(n - 1) * pow_big(n, n - s), fact(n - s) * suffix_product);
}

bool check_split_identity(const Gop& g, std::size_t j, std::uint32_t h) {
  const auto& w = g.orders();
  if (j < 1 || j > w.size())
    throw DomainError("index j = " + std::to_string(j) + " is outside [1, " +
                      std::to_string(w.size()) + "]");
  const std::uint32_t wj = w[j - 1];
  if (wj < 2) throw DomainError("w_j must be at least 2 to split");
  if (h < 1 || h > wj - 1)
    throw DomainError("h = " + std::to_string(h) + " is outside [1, " + std::to_string(wj - 1) + "]");

  std::vector<std::uint32_t> split(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j - 1));
  split.push_back(wj - h);
  split.push_back(h);
  split.insert(split.end(), w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
  std::uint64_t factor = h;
  for (std::size_t i = j; i < w.size(); ++i) factor += w[i];
  return count_gop(g) == count_gop(Gop(g.n(), std::move(split))) * factor;
}

BigInt total_over_all_gops(std::uint32_t n) {
  if (n == 0) throw DomainError("N must be positive");
  if (n <= kDirectSumLimit) {
    BigInt total = 0;
    for (const auto& g : all_gops(n)) total += count_gop(g);
    return total;
  }
  // Every gop of modulus s shares (N-1)! N^(N-s) / (N-s)!. What remains is the sum over
  // compositions of s of 1 / prod_{k>=2} suffix_k. With whole[m] the same sum over
  // compositions of m including the k = 1 suffix (= m), whole[m] = sum_a whole[m-a] / m.
  const Factorials fact(n);
  std::vector<BigRational> whole(n + 1);
  whole[0] = 1;
  for (std::uint32_t m = 1; m <= n; ++m) {
    BigRational acc = 0;
    for (std::uint32_t a = 1; a <= m; ++a) acc += whole[m - a];
    whole[m] = acc / m;
  }
  BigRational total = 0;
  for (std::uint32_t s = 1; s <= n; ++s) {
    BigRational tails = 0;
    for (std::uint32_t a = 1; a <= s; ++a) tails += whole[s - a];
    const BigInt shared = exact_quotient(fact(n - 1) * pow_big(n, n - s), fact(n - s));
    total += BigRational(shared) * tails;
  }
  if (boost::multiprecision::denominator(total) != 1)
    throw std::logic_error("grouped class-size sum is not an integer");
  return boost::multiprecision::numerator(total);
}

}  // namespace gopkit
