#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "indpow/graph.hpp"

namespace indpow {

/// Arbitrary-precision integer used for every count.
using ExactInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with the zero conventions the counting sums rely
/// on: 0 whenever k < 0, m < 0 or k > m.
ExactInt binom(std::int64_t m, std::int64_t k);

// ---------------------------------------------------------------------------
// Powers of paths
// ---------------------------------------------------------------------------

/// Independent k-subsets of P_n^(h): C(n - hk + h, k).
ExactInt p_nk(std::int64_t n, std::int64_t h, std::int64_t k);

/// p_nk extended to negative n by freezing at n = 0.
ExactInt bar_p_nk(std::int64_t n, std::int64_t h, std::int64_t k);

/// Number of independent subsets of P_n^(h), summed over k until the
/// binomial terms vanish.
ExactInt p_total(std::int64_t n, std::int64_t h);

/// p_total extended to negative n by freezing at n = 0.
ExactInt bar_p(std::int64_t n, std::int64_t h);

/// p_total evaluated purely through p_n = p_{n-1} + p_{n-h-1}, base n+1 for
/// n <= h+1.
ExactInt p_total_rec(std::int64_t n, std::int64_t h);
/// The memo table behind p_total_rec: entries p_0 .. p_{n_max}.
std::vector<ExactInt> p_total_rec_table(std::int64_t n_max, std::int64_t h);

/// The map f: k-subsets {i_1 < .. < i_k} of [1, n-hk+h] -> independent
/// k-subsets of P_n^(h), i_j |-> v_{i_j + (j-1)h}.
VertexSubset path_bijection_fwd(int n, int h, std::span<const int> indices);
/// Inverse of path_bijection_fwd; rejects subsets that are not independent
/// in P_n^(h).
std::vector<int> path_bijection_inv(int n, int h, const VertexSubset& s);

/// Independent k-subsets of P_n^(h) containing v_i.
ExactInt t_ki(std::int64_t n, std::int64_t h, std::int64_t k, std::int64_t i);

/// Edge count of the Hasse diagram of P_n^(h): sum_k k * p_{n,k}.
ExactInt h_edges_sum(std::int64_t n, std::int64_t h);

/// Materialized prefix of the h-Fibonacci sequence.
class HFibSequence {
 public:
  HFibSequence(std::int64_t h, std::vector<ExactInt> terms)
      : h_(h), terms_(std::move(terms)) {}

  std::int64_t order() const { return h_; }
  std::size_t size() const { return terms_.size(); }
  /// 1-based: at(i) = F_i^(h).
  const ExactInt& at(std::size_t i) const;
  /// 0-based view of F_1, F_2, ...
  std::span<const ExactInt> terms() const { return terms_; }

 private:
  std::int64_t h_;
  std::vector<ExactInt> terms_;
};

/// F_1^(h) .. F_len^(h): ones up to index h+1, then F_i = F_{i-1} + F_{i-h-1}.
HFibSequence hfib(std::int64_t h, std::int64_t len);

/// (F * F)(n) = sum_{i=1}^n F_i F_{n-i+1}. Throws if seq has fewer than n
/// terms.
ExactInt convolve_self(const HFibSequence& seq, std::int64_t n);

/// Hasse edge count of P_n^(h) as the self-convolution of F^(h).
ExactInt h_edges_conv(std::int64_t n, std::int64_t h);

namespace serial {
/// h_edges_conv for n = 0..n_max, one row after another.
std::vector<ExactInt> h_edges_conv_table(std::int64_t n_max, std::int64_t h);
}

/// h_edges_conv for n = 0..n_max; rows are independent convolutions over a
/// shared F^(h) prefix and are evaluated in parallel.
std::vector<ExactInt> h_edges_conv_table(std::int64_t n_max, std::int64_t h);

// ---------------------------------------------------------------------------
// Powers of cycles
// ---------------------------------------------------------------------------

/// Independent k-subsets of Q_n^(h): 1, n, then (n/k) C(n-hk-1, k-1).
/// Throws std::logic_error if the division is not exact.
ExactInt q_nk(std::int64_t n, std::int64_t h, std::int64_t k);

ExactInt q_total(std::int64_t n, std::int64_t h);

/// q_n = q_{n-1} + q_{n-h-1}, base n+1 for n <= 2h+1.
ExactInt q_total_rec(std::int64_t n, std::int64_t h);
std::vector<ExactInt> q_total_rec_table(std::int64_t n_max, std::int64_t h);

/// Edge count of the Hasse diagram of Q_n^(h): sum_k k * q_{n,k}.
ExactInt m_edges_sum(std::int64_t n, std::int64_t h);

/// n * F_{n-h}^(h) for n > h. For 1 <= n <= h the cycle power is complete
/// and the diagram has n edges; n = 0 gives 0.
ExactInt m_edges_closed(std::int64_t n, std::int64_t h);
/// m_edges_closed for n = 0..n_max from a single F^(h) prefix.
std::vector<ExactInt> m_edges_closed_table(std::int64_t n_max, std::int64_t h);

// ---------------------------------------------------------------------------
// Classic sequences, 1-based seeds F_1 = F_2 = 1 and L_1 = 1, L_2 = 3.
// ---------------------------------------------------------------------------

ExactInt fibonacci(std::int64_t n);
ExactInt lucas(std::int64_t n);

}  // namespace indpow
