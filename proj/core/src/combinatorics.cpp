#include "ekr/combinatorics.hpp"

#include <array>
#include <stdexcept>

namespace ekr {
namespace {

constexpr int kMaxN = 64;

const std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1>& pascal_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxN + 1>, kMaxN + 1> t{};
    for (int n = 0; n <= kMaxN; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k)
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial_u64(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > kMaxN)
    throw std::invalid_argument("binomial: need 0 <= k <= n <= 64");
  return pascal_table()[n][k];
}

BigInt binomial(int n, int k) { return BigInt(binomial_u64(n, k)); }

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(size_k);
  for (std::uint64_t b = bits; b;) {
    int i = __builtin_ctzll(b);
    out.push_back(i + 1);
    b &= b - 1;
  }
  return out;
}

KSubset make_ksubset(const std::vector<int>& elements, int n) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("make_ksubset: n out of [1,64]");
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) throw std::invalid_argument("make_ksubset: element out of [1..n]");
    std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (bits & bit) throw std::invalid_argument("make_ksubset: duplicate element");
    bits |= bit;
  }
  return KSubset{bits, n, static_cast<int>(elements.size())};
}

KSubset ksubset_from_bits(std::uint64_t bits, int n, int k) {
  if (n < 1 || n > kMaxN) throw std::invalid_argument("ksubset_from_bits: n out of [1,64]");
  if (n < kMaxN && (bits >> n) != 0)
    throw std::invalid_argument("ksubset_from_bits: bits outside [1..n]");
  if (__builtin_popcountll(bits) != k)
    throw std::invalid_argument("ksubset_from_bits: popcount != k");
  return KSubset{bits, n, k};
}

bool disjoint(const KSubset& a, const KSubset& b) {
  if (a.ground_n != b.ground_n || a.size_k != b.size_k)
    throw std::invalid_argument("disjoint: mismatched (n,k)");
  return (a.bits & b.bits) == 0;
}

std::uint64_t colex_rank(const KSubset& s) {
  // rank = sum_i C(c_i - 1, i) over ascending elements c_1 < ... < c_k.
  std::uint64_t rank = 0;
  int pos = 1;
  for (int e : s.elements()) {
    if (e - 1 >= pos) rank += binomial_u64(e - 1, pos);  // C(e-1, pos) = 0 otherwise
    ++pos;
  }
  return rank;
}

KSubset colex_unrank(std::uint64_t rank, int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("colex_unrank: need 0 <= k <= n");
  if (rank >= binomial_u64(n, k)) throw std::invalid_argument("colex_unrank: rank out of range");
  std::uint64_t bits = 0;
  std::uint64_t r = rank;
  int hi = n;
  for (int pos = k; pos >= 1; --pos) {
    int c = pos - 1;  // largest c with C(c, pos) <= r; C(pos-1, pos) = 0
    for (int cand = hi - 1; cand >= pos; --cand) {
      if (binomial_u64(cand, pos) <= r) {
        c = cand;
        break;
      }
    }
    if (c >= pos) r -= binomial_u64(c, pos);
    bits |= std::uint64_t{1} << c;  // element c+1
    hi = c;
  }
  return KSubset{bits, n, k};
}

}  // namespace ekr
