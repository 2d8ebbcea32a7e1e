#include "indpow/counting.hpp"

#include <stdexcept>
#include <string>

namespace indpow {

namespace {

void require_nonnegative(std::int64_t value, const char* what) {
  if (value < 0) {
    throw PreconditionError(std::string(what) + " must be nonnegative");
  }
}

}  // namespace

ExactInt binom(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || k > m) return 0;
  const std::int64_t r = std::min(k, m - k);
  ExactInt acc = 1;
  // acc = C(m, i+1) after step i; each division is exact.
  for (std::int64_t i = 0; i < r; ++i) {
    acc *= m - i;
    acc /= i + 1;
  }
  return acc;
}

ExactInt p_nk(std::int64_t n, std::int64_t h, std::int64_t k) {
  require_nonnegative(n, "n");
  require_nonnegative(h, "h");
  require_nonnegative(k, "k");
  return binom(n - h * k + h, k);
}

ExactInt bar_p_nk(std::int64_t n, std::int64_t h, std::int64_t k) {
  return p_nk(n < 0 ? 0 : n, h, k);
}

ExactInt p_total(std::int64_t n, std::int64_t h) {
  require_nonnegative(n, "n");
  require_nonnegative(h, "h");
  ExactInt sum = 0;
  // n - hk + h - k drops by h+1 per step; once negative every later term is 0.
  for (std::int64_t k = 0; n - h * k + h >= k; ++k) sum += binom(n - h * k + h, k);
  return sum;
}

ExactInt bar_p(std::int64_t n, std::int64_t h) { return p_total(n < 0 ? 0 : n, h); }

std::vector<ExactInt> p_total_rec_table(std::int64_t n_max, std::int64_t h) {
  require_nonnegative(n_max, "n");
  require_nonnegative(h, "h");
  std::vector<ExactInt> table(n_max + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    table[n] = n <= h + 1 ? ExactInt(n + 1) : table[n - 1] + table[n - h - 1];
  }
  return table;
}

ExactInt p_total_rec(std::int64_t n, std::int64_t h) {
  return p_total_rec_table(n, h).back();
}

VertexSubset path_bijection_fwd(int n, int h, std::span<const int> indices) {
  if (h < 0) throw PreconditionError("h must be nonnegative");
  const int k = static_cast<int>(indices.size());
  const std::int64_t range = std::int64_t{n} - std::int64_t{h} * k + h;
  VertexSubset out(n);
  int previous = 0;
  for (int j = 0; j < k; ++j) {
    const int idx = indices[j];
    if (idx <= previous || idx > range) {
      throw PreconditionError("indices must be strictly increasing in [1, " +
                              std::to_string(range) + "]");
    }
    previous = idx;
    out = out.with(idx + j * h);
  }
  return out;
}

std::vector<int> path_bijection_inv(int n, int h, const VertexSubset& s) {
  if (s.size() != n) throw DimensionMismatch("subset width differs from n");
  if (!is_independent(power_path(n, h), s)) {
    throw PreconditionError("subset " + s.to_string() +
                            " is not independent in the path power");
  }
  std::vector<int> indices = s.vertices();
  for (std::size_t j = 0; j < indices.size(); ++j) {
    indices[j] -= static_cast<int>(j) * h;
  }
  return indices;
}

ExactInt t_ki(std::int64_t n, std::int64_t h, std::int64_t k, std::int64_t i) {
  require_nonnegative(h, "h");
  require_nonnegative(k, "k");
  if (i < 1 || i > n) {
    throw PreconditionError("vertex index " + std::to_string(i) +
                            " outside 1.." + std::to_string(n));
  }
  ExactInt sum = 0;
  for (std::int64_t r = 0; r < k; ++r) {
    sum += bar_p_nk(i - h - 1, h, r) * bar_p_nk(n - i - h, h, k - 1 - r);
  }
  return sum;
}

ExactInt h_edges_sum(std::int64_t n, std::int64_t h) {
  require_nonnegative(n, "n");
  require_nonnegative(h, "h");
  ExactInt sum = 0;
  for (std::int64_t k = 1; n - h * k + h >= k; ++k) {
    sum += k * binom(n - h * k + h, k);
  }
  return sum;
}

const ExactInt& HFibSequence::at(std::size_t i) const {
  if (i < 1 || i > terms_.size()) {
    throw std::out_of_range("h-Fibonacci index " + std::to_string(i) +
                            " outside 1.." + std::to_string(terms_.size()));
  }
  return terms_[i - 1];
}

HFibSequence hfib(std::int64_t h, std::int64_t len) {
  require_nonnegative(h, "h");
  require_nonnegative(len, "len");
  std::vector<ExactInt> terms(len);
  for (std::int64_t i = 1; i <= len; ++i) {
    terms[i - 1] = i <= h + 1 ? ExactInt(1) : terms[i - 2] + terms[i - h - 2];
  }
  return HFibSequence(h, std::move(terms));
}

ExactInt convolve_self(const HFibSequence& seq, std::int64_t n) {
  require_nonnegative(n, "n");
  if (static_cast<std::size_t>(n) > seq.size()) {
    throw PreconditionError("convolution at " + std::to_string(n) +
                            " needs that many terms, have " +
                            std::to_string(seq.size()));
  }
  // Terms i and n+1-i pair up; the middle term appears once when n is odd.
  ExactInt sum = 0;
  for (std::int64_t i = 1; 2 * i <= n; ++i) sum += seq.at(i) * seq.at(n + 1 - i);
  sum *= 2;
  if (n % 2 == 1) {
    const auto& mid = seq.at((n + 1) / 2);
    sum += mid * mid;
  }
  return sum;
}

ExactInt h_edges_conv(std::int64_t n, std::int64_t h) {
  return convolve_self(hfib(h, n), n);
}

namespace serial {

std::vector<ExactInt> h_edges_conv_table(std::int64_t n_max, std::int64_t h) {
  require_nonnegative(n_max, "n");
  const auto seq = hfib(h, n_max);
  std::vector<ExactInt> table(n_max + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) table[n] = convolve_self(seq, n);
  return table;
}

}  // namespace serial

std::vector<ExactInt> h_edges_conv_table(std::int64_t n_max, std::int64_t h) {
  require_nonnegative(n_max, "n");
  const auto seq = hfib(h, n_max);
  std::vector<ExactInt> table(n_max + 1);
  // Row cost grows with n; dynamic scheduling keeps the long rows spread out.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t n = n_max; n >= 0; --n) table[n] = convolve_self(seq, n);
  return table;
}

ExactInt q_nk(std::int64_t n, std::int64_t h, std::int64_t k) {
  require_nonnegative(n, "n");
  require_nonnegative(h, "h");
  require_nonnegative(k, "k");
  if (k == 0) return 1;
  if (k == 1) return n;
  ExactInt numerator = n * binom(n - h * k - 1, k - 1);
  if (numerator % k != 0) {
    throw std::logic_error("q_nk: " + std::to_string(k) + " does not divide " +
                           numerator.str() + " (n=" + std::to_string(n) +
                           ", h=" + std::to_string(h) + ")");
  }
  return numerator / k;
}

ExactInt q_total(std::int64_t n, std::int64_t h) {
  require_nonnegative(n, "n");
  require_nonnegative(h, "h");
  ExactInt sum = 1 + ExactInt(n);
  // Terms with k >= 2 are nonzero exactly when n >= (h+1)k.
  for (std::int64_t k = 2; n >= (h + 1) * k; ++k) sum += q_nk(n, h, k);
  return sum;
}

std::vector<ExactInt> q_total_rec_table(std::int64_t n_max, std::int64_t h) {
  require_nonnegative(n_max, "n");
  require_nonnegative(h, "h");
  std::vector<ExactInt> table(n_max + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    table[n] =
        n <= 2 * h + 1 ? ExactInt(n + 1) : table[n - 1] + table[n - h - 1];
  }
  return table;
}

ExactInt q_total_rec(std::int64_t n, std::int64_t h) {
  return q_total_rec_table(n, h).back();
}

ExactInt m_edges_sum(std::int64_t n, std::int64_t h) {
  require_nonnegative(n, "n");
  require_nonnegative(h, "h");
  ExactInt sum = n;
  for (std::int64_t k = 2; n >= (h + 1) * k; ++k) sum += k * q_nk(n, h, k);
  return sum;
}

ExactInt m_edges_closed(std::int64_t n, std::int64_t h) {
  require_nonnegative(n, "n");
  require_nonnegative(h, "h");
  if (n <= h) return n;
  return n * hfib(h, n - h).at(n - h);
}

std::vector<ExactInt> m_edges_closed_table(std::int64_t n_max,
                                           std::int64_t h) {
  require_nonnegative(n_max, "n");
  require_nonnegative(h, "h");
  const auto seq = hfib(h, std::max<std::int64_t>(n_max - h, 0));
  std::vector<ExactInt> table(n_max + 1);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    table[n] = n <= h ? ExactInt(n) : n * seq.at(n - h);
  }
  return table;
}

ExactInt fibonacci(std::int64_t n) {
  if (n < 1) throw PreconditionError("Fibonacci numbers start at F_1");
  ExactInt prev = 0, cur = 1;
  for (std::int64_t i = 1; i < n; ++i) {
    prev += cur;
    std::swap(prev, cur);
  }
  return cur;
}

ExactInt lucas(std::int64_t n) {
  if (n < 1) throw PreconditionError("Lucas numbers start at L_1");
  if (n == 1) return 1;
  ExactInt prev = 1, cur = 3;
  for (std::int64_t i = 2; i < n; ++i) {
    prev += cur;
    std::swap(prev, cur);
  }
  return cur;
}

}  // namespace indpow
