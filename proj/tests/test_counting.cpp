#include <doctest.h>

#include <random>

#include "indpow/counting.hpp"
#include "indpow/enumerate.hpp"
#include "oracle.hpp"

using namespace indpow;

namespace {

std::vector<ExactInt> ints(std::initializer_list<int> values) {
  return {values.begin(), values.end()};
}

std::vector<ExactInt> terms_of(const HFibSequence& s) {
  return {s.terms().begin(), s.terms().end()};
}

}  // namespace

TEST_CASE("binom zero conventions") {
  CHECK(binom(3, 2) == 3);
  CHECK(binom(-2, 1) == 0);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(4, 5) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(60, 30) == ExactInt("118264581564861424"));
  CHECK(binom(200, 100) ==
        ExactInt("90548514656103281165404177077484163874504589675413336841320"));
  for (int m = 1; m <= 40; ++m) {
    for (int k = 1; k <= m; ++k) {
      CHECK(binom(m, k) == binom(m - 1, k - 1) + binom(m - 1, k));
    }
  }
}

TEST_CASE("p_nk") {
  for (int n = 0; n <= 6; ++n) {
    for (int h = 0; h <= 3; ++h) CHECK(p_nk(n, h, 0) == 1);
  }
  CHECK(oracle::histogram(5, 1, false)[2] == 6);
  CHECK(p_nk(5, 1, 2) == 6);
  CHECK(oracle::histogram(5, 2, false)[2] == 3);
  CHECK(p_nk(5, 2, 2) == 3);
  CHECK_THROWS_AS(p_nk(-1, 1, 1), PreconditionError);
}

TEST_CASE("bar_p_nk freezes at n = 0") {
  CHECK(bar_p_nk(-3, 1, 0) == 1);
  CHECK(bar_p_nk(-3, 1, 2) == 0);
  CHECK(oracle::histogram(4, 1, false)[1] == 4);
  CHECK(bar_p_nk(4, 1, 1) == 4);
  CHECK(bar_p(-7, 3) == 1);
}

TEST_CASE("p_total and its recurrence") {
  CHECK(p_total(4, 1) == 8);
  CHECK(oracle::total(5, 2, false) == 9);
  CHECK(p_total(5, 2) == 9);
  for (int h = 0; h <= 5; ++h) CHECK(p_total(0, h) == 1);

  CHECK(p_total_rec(3, 2) == 4);
  CHECK(p_total_rec(5, 2) == 9);
  CHECK(oracle::total(6, 1, false) == 21);
  CHECK(p_total_rec(6, 1) == 21);
  CHECK(p_total_rec(6, 1) == fibonacci(8));

  CHECK(p_total(1000, 0) == (ExactInt(1) << 1000));
  CHECK(p_total_rec(1000, 0) == (ExactInt(1) << 1000));
}

TEST_CASE("formula and recurrence agree for n <= 200, h <= 8") {
  for (int h = 0; h <= 8; ++h) {
    const auto p_rec = p_total_rec_table(200, h);
    const auto q_rec = q_total_rec_table(200, h);
    for (int n = 0; n <= 200; ++n) {
      CHECK(p_rec[n] == p_total(n, h));
      CHECK(q_rec[n] == q_total(n, h));
    }
  }
}

TEST_CASE("per-k counts match the brute-force oracle") {
  for (int n = 0; n <= 12; ++n) {
    for (int h = 0; h <= 4; ++h) {
      const auto path = oracle::histogram(n, h, false);
      const auto cycle = oracle::histogram(n, h, true);
      for (int k = 0; k <= n + 1; ++k) {
        CHECK(p_nk(n, h, k) == path[k]);
        CHECK(q_nk(n, h, k) == cycle[k]);
      }
      CHECK(p_total(n, h) == oracle::total(n, h, false));
      CHECK(q_total(n, h) == oracle::total(n, h, true));
    }
  }
}

TEST_CASE("path bijection") {
  const std::vector<int> one{1};
  CHECK(path_bijection_fwd(5, 2, one) == VertexSubset::of(5, {1}));
  const std::vector<int> pair{1, 2};
  CHECK(path_bijection_fwd(5, 2, pair) == VertexSubset::of(5, {1, 4}));
  const std::vector<int> three{1, 3, 5};
  const auto image = path_bijection_fwd(7, 1, three);
  CHECK(image == VertexSubset::of(7, {1, 4, 7}));
  CHECK(oracle::independent(7, 1, false, image.bits()));

  CHECK(path_bijection_inv(5, 2, VertexSubset::of(5, {1, 4})) == pair);
  CHECK(path_bijection_inv(6, 3, VertexSubset(6)).empty());
  CHECK(path_bijection_inv(7, 1, VertexSubset::of(7, {1, 4, 7})) == three);

  SUBCASE("errors") {
    const std::vector<int> unsorted{2, 1};
    CHECK_THROWS_AS(path_bijection_fwd(5, 2, unsorted), PreconditionError);
    const std::vector<int> too_far{1, 4};  // range is [1, 3] for k = 2
    CHECK_THROWS_AS(path_bijection_fwd(5, 2, too_far), PreconditionError);
    const std::vector<int> zero{0};
    CHECK_THROWS_AS(path_bijection_fwd(5, 2, zero), PreconditionError);
    CHECK_THROWS_AS(path_bijection_inv(5, 2, VertexSubset::of(5, {1, 3})),
                    PreconditionError);
  }

  SUBCASE("random index lists round-trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 30);
      const int h = static_cast<int>(rng() % 4);
      const int k = static_cast<int>(rng() % (n / (h + 1) + 1));
      const int range = n - h * k + h;
      if (range < k) continue;
      std::vector<int> pool(range);
      for (int i = 0; i < range; ++i) pool[i] = i + 1;
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<int> idx(pool.begin(), pool.begin() + k);
      std::sort(idx.begin(), idx.end());
      const auto s = path_bijection_fwd(n, h, idx);
      CHECK(s.cardinality() == k);
      CHECK(oracle::independent(n, h, false, s.bits()));
      CHECK(path_bijection_inv(n, h, s) == idx);
    }
  }
}

TEST_CASE("t_ki") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 1; i <= n; ++i) CHECK(t_ki(n, 2, 1, i) == 1);
  }
  CHECK(oracle::containing(5, 1, 2, 1) == 3);
  CHECK(t_ki(5, 1, 2, 1) == 3);
  CHECK(oracle::containing(5, 1, 2, 3) == 2);
  CHECK(t_ki(5, 1, 2, 3) == 2);
  CHECK(t_ki(5, 1, 0, 3) == 0);
  CHECK_THROWS_AS(t_ki(5, 1, 2, 0), PreconditionError);
  CHECK_THROWS_AS(t_ki(5, 1, 2, 6), PreconditionError);

  for (int n = 1; n <= 12; ++n) {
    for (int h = 0; h <= 3; ++h) {
      for (int i = 1; i <= n; ++i) {
        ExactInt over_k = 0;
        for (int k = 0; k <= n + 1; ++k) {
          CHECK(t_ki(n, h, k, i) == oracle::containing(n, h, k, i));
          over_k += t_ki(n, h, k, i);
        }
        CHECK(over_k == bar_p(i - h - 1, h) * bar_p(n - h - i, h));
      }
      for (int k = 1; k <= n; ++k) {
        ExactInt over_i = 0;
        for (int i = 1; i <= n; ++i) over_i += t_ki(n, h, k, i);
        CHECK(over_i == k * p_nk(n, h, k));
      }
    }
  }
}

TEST_CASE("path Hasse edge counts") {
  for (int h = 0; h <= 3; ++h) CHECK(h_edges_sum(0, h) == 0);
  CHECK(oracle::cover_count(3, 1, false) == 5);
  CHECK(h_edges_sum(3, 1) == 5);
  CHECK(oracle::cover_count(5, 2, false) == 11);
  CHECK(h_edges_sum(5, 2) == 11);

  CHECK(h_edges_conv(3, 1) == 5);
  CHECK(h_edges_conv(5, 2) == 11);
  CHECK(oracle::cover_count(3, 0, false) == 12);
  CHECK(h_edges_conv(3, 0) == 12);
  for (int n = 1; n <= 60; ++n) {
    CHECK(h_edges_conv(n, 0) == n * (ExactInt(1) << (n - 1)));
  }
}

TEST_CASE("h-Fibonacci sequences") {
  CHECK(terms_of(hfib(0, 5)) == ints({1, 2, 4, 8, 16}));
  CHECK(terms_of(hfib(1, 6)) == ints({1, 1, 2, 3, 5, 8}));
  CHECK(terms_of(hfib(2, 6)) == ints({1, 1, 1, 2, 3, 4}));
  CHECK(hfib(3, 0).size() == 0);
  CHECK(hfib(2, 6).at(6) == 4);
  CHECK_THROWS_AS(hfib(2, 6).at(0), std::out_of_range);
  CHECK_THROWS_AS(hfib(2, 6).at(7), std::out_of_range);

  // h ones, then p_0, p_1, ...
  for (int h = 0; h <= 8; ++h) {
    const auto seq = hfib(h, 120);
    for (int i = 1; i <= 120; ++i) CHECK(seq.at(i) == bar_p(i - h - 1, h));
  }
}

TEST_CASE("convolve_self") {
  CHECK(convolve_self(hfib(1, 0), 0) == 0);
  CHECK(convolve_self(hfib(3, 4), 0) == 0);
  CHECK(convolve_self(hfib(1, 3), 3) == 5);
  CHECK(convolve_self(hfib(2, 5), 5) == 11);
  CHECK_THROWS_AS(convolve_self(hfib(1, 3), 4), PreconditionError);

  // Against the plain, unpaired sum.
  for (int h = 0; h <= 4; ++h) {
    const auto seq = hfib(h, 40);
    for (int n = 0; n <= 40; ++n) {
      ExactInt plain = 0;
      for (int i = 1; i <= n; ++i) plain += seq.at(i) * seq.at(n - i + 1);
      CHECK(convolve_self(seq, n) == plain);
    }
  }
}

TEST_CASE("edge-count tables match per-row evaluation") {
  for (int h = 0; h <= 4; ++h) {
    const auto par = h_edges_conv_table(150, h);
    CHECK(par == serial::h_edges_conv_table(150, h));
    const auto cyc = m_edges_closed_table(150, h);
    for (int n = 0; n <= 150; ++n) {
      CHECK(par[n] == h_edges_sum(n, h));
      CHECK(cyc[n] == m_edges_closed(n, h));
    }
  }
}

TEST_CASE("q_nk") {
  for (int n = 0; n <= 9; ++n) CHECK(q_nk(n, 2, 1) == n);
  CHECK(oracle::histogram(5, 1, true)[2] == 5);
  CHECK(q_nk(5, 1, 2) == 5);
  CHECK(oracle::histogram(7, 2, true)[2] == 7);
  CHECK(q_nk(7, 2, 2) == 7);

  SUBCASE("k divides n * C(n-hk-1, k-1)") {
    for (int h = 0; h <= 8; ++h) {
      for (int n = 0; n <= 400; ++n) {
        for (int k = 2; n >= (h + 1) * k; ++k) {
          CHECK((n * binom(n - h * k - 1, k - 1)) % k == 0);
        }
      }
    }
  }
}

TEST_CASE("q_total and its recurrence") {
  CHECK(q_total(5, 1) == 11);
  CHECK(oracle::total(7, 2, true) == 15);
  CHECK(q_total(7, 2) == 15);
  CHECK(q_total(3, 2) == 4);

  CHECK(q_total_rec(4, 2) == 5);
  CHECK(q_total_rec(6, 2) == 10);
  CHECK(oracle::total(7, 1, true) == 29);
  CHECK(q_total_rec(7, 1) == 29);
}

TEST_CASE("cycle Hasse edge counts") {
  for (int h = 0; h <= 3; ++h) CHECK(m_edges_sum(0, h) == 0);
  CHECK(m_edges_sum(5, 1) == 15);
  CHECK(oracle::cover_count(7, 2, true) == 21);
  CHECK(m_edges_sum(7, 2) == 21);

  CHECK(m_edges_closed(5, 1) == 15);
  CHECK(m_edges_closed(7, 2) == 21);
  CHECK(oracle::cover_count(3, 2, true) == 3);
  CHECK(m_edges_closed(3, 2) == 3);

  SUBCASE("extension to n <= h: complete graph, n covers") {
    CHECK(m_edges_closed(0, 3) == 0);
    for (int n = 1; n <= 4; ++n) {
      CHECK(oracle::cover_count(n, 4, true) == static_cast<std::uint64_t>(n));
      CHECK(m_edges_closed(n, 4) == n);
      CHECK(m_edges_sum(n, 4) == n);
    }
  }

  for (int h = 0; h <= 8; ++h) {
    for (int n = 0; n <= 200; ++n) CHECK(m_edges_closed(n, h) == m_edges_sum(n, h));
  }
}

TEST_CASE("power-shift identity p^(h)_{n,k} = p^(h-1)_{n-k+1,k}") {
  for (int h = 1; h <= 6; ++h) {
    for (int n = 0; n <= 50; ++n) {
      for (int k = 0; k <= n; ++k) {
        CHECK(p_nk(n, h, k) == p_nk(n - k + 1, h - 1, k));
      }
    }
  }
}

TEST_CASE("cycle split identity") {
  for (int h = 0; h <= 6; ++h) {
    for (int n = 3 * h + 3; n <= 80; ++n) {
      for (int k = 2; k <= n; ++k) {
        CHECK(p_nk(n - 2 * h - 1, h, k - 1) + h * p_nk(n - 3 * h - 2, h, k - 2) ==
              q_nk(n - h - 1, h, k - 1));
      }
    }
  }
}

TEST_CASE("Fibonacci and Lucas") {
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(7) == 13);
  CHECK(lucas(1) == 1);
  CHECK(lucas(2) == 3);
  CHECK(lucas(5) == 11);
  CHECK_THROWS_AS(fibonacci(0), PreconditionError);
  CHECK_THROWS_AS(lucas(0), PreconditionError);

  for (int n = 0; n <= 200; ++n) {
    CHECK(p_total(n, 1) == fibonacci(n + 2));
    ExactInt conv = 0;
    for (int i = 1; i <= n; ++i) conv += fibonacci(i) * fibonacci(n - i + 1);
    CHECK(h_edges_sum(n, 1) == conv);
    if (n >= 2) {
      CHECK(q_total(n, 1) == lucas(n));
      CHECK(m_edges_sum(n, 1) == n * fibonacci(n - 1));
    }
  }
}
