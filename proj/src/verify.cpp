#include "indpow/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "indpow/counting.hpp"
#include "indpow/cubes.hpp"
#include "indpow/enumerate.hpp"
#include "indpow/graph.hpp"

namespace indpow {

namespace {

using Failure = std::optional<std::string>;

struct Params {
  int n;
  int h;
};

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

std::string span(const char* var, int lo, int hi) {
  return cat(lo, "<=", var, "<=", hi);
}

// Cases ordered by h, then n.
std::vector<Params> grid(int n_lo, int n_hi, int h_lo, int h_hi) {
  std::vector<Params> out;
  for (int h = h_lo; h <= h_hi; ++h) {
    for (int n = n_lo; n <= n_hi; ++n) out.push_back({n, h});
  }
  return out;
}

template <typename Fn>
CheckResult run_check(std::string name, std::string range,
                      const std::vector<Params>& cases, Fn fn) {
  std::vector<Failure> results(cases.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < cases.size(); ++i) {
    try {
      results[i] = fn(cases[i]);
    } catch (const std::exception& e) {
      results[i] = cat("threw: ", e.what());
    }
  }

  CheckResult check{std::move(name), std::move(range), true, {}};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (results[i]) {
      check.passed = false;
      check.counterexample =
          cat("n=", cases[i].n, " h=", cases[i].h, ": ", *results[i]);
      break;
    }
  }
  return check;
}

std::string mismatch(const char* lhs_name, const ExactInt& lhs,
                     const char* rhs_name, const ExactInt& rhs) {
  return cat(lhs_name, "=", lhs, " but ", rhs_name, "=", rhs);
}

std::vector<std::string> encodings(std::span<const VertexSubset> subsets) {
  std::vector<std::string> out;
  out.reserve(subsets.size());
  for (const auto& s : subsets) out.push_back(s.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// Largest k for which p_{n,k} can be nonzero, plus one.
int path_k_bound(int n, int h) { return (n + h) / (h + 1) + 1; }

Failure compare_histogram(const std::vector<std::uint64_t>& oracle,
                          const ExactInt& total,
                          const std::function<ExactInt(int)>& per_k,
                          int k_bound) {
  ExactInt oracle_total = 0;
  for (auto c : oracle) oracle_total += c;
  if (oracle_total != total) {
    return mismatch("formula total", total, "enumerated", oracle_total);
  }
  const int top = std::max<int>(k_bound, static_cast<int>(oracle.size()));
  for (int k = 0; k <= top; ++k) {
    const ExactInt expected =
        k < static_cast<int>(oracle.size()) ? ExactInt(oracle[k]) : ExactInt(0);
    const ExactInt got = per_k(k);
    if (got != expected) {
      return cat("k=", k, ": formula ", got, " but enumerated ", expected);
    }
  }
  return std::nullopt;
}

Failure graph_checks_path_in_cycle(const Params& p) {
  const auto path = power_path(p.n, p.h);
  const auto cycle = power_cycle(p.n, p.h);
  for (const auto& [u, v] : path.edges()) {
    if (!cycle.has_edge(u, v)) return cat("edge (", u + 1, ",", v + 1, ") missing");
  }
  return std::nullopt;
}

Failure labeled_equal(const LabeledGraph& a, const LabeledGraph& b,
                      const char* what) {
  if (a.labels.size() != b.labels.size()) {
    return cat(what, ": vertex counts ", a.labels.size(), " vs ",
               b.labels.size());
  }
  if (encodings(a.labels) != encodings(b.labels)) {
    return cat(what, ": vertex labels differ");
  }
  if (!same_labeled_graph(a.graph, b.graph, label_correspondence(a, b))) {
    return cat(what, ": edges differ under the string encoding");
  }
  return std::nullopt;
}

}  // namespace

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.range
        << "]";
    if (!c.passed) out << "  counterexample: " << c.counterexample;
    out << '\n';
  }
  out << "overall: " << (overall() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["overall"] = overall();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["range"] = c.range;
    item["passed"] = c.passed;
    item["counterexample"] =
        c.passed ? nlohmann::ordered_json(nullptr)
                 : nlohmann::ordered_json(c.counterexample);
    doc["checks"].push_back(std::move(item));
  }
  return doc;
}

VerificationReport run_verification(const VerifyOptions& options) {
  const int H = std::max(0, options.h_max);
  const int NF = std::max(0, options.n_max_formula);
  const int NO = std::clamp(options.n_max_oracle, 0, kMaxCubeOrder);
  const Fault fault = options.fault;

  auto pnk_under_test = [fault](int n, int h, int k) -> ExactInt {
    if (fault == Fault::binom_off_by_one) return binom(n - h * k + h + 1, k);
    return p_nk(n, h, k);
  };

  const std::string oracle_range = span("n", 0, NO) + ", " + span("h", 0, H);
  const std::string formula_range = span("n", 0, NF) + ", " + span("h", 0, H);

  VerificationReport report;
  auto add = [&report](CheckResult r) { report.checks.push_back(std::move(r)); };

  // --- graph construction and the enumeration oracle -----------------------

  add(run_check("graph.path-power-within-cycle-power", oracle_range,
                grid(0, NO, 0, H), graph_checks_path_in_cycle));

  add(run_check("graph.cycle-power-regular", oracle_range, grid(0, NO, 0, H),
                [](const Params& p) -> Failure {
                  if (p.n <= 2 * p.h + 1) return std::nullopt;
                  const auto g = power_cycle(p.n, p.h);
                  for (int v = 0; v < p.n; ++v) {
                    if (g.degree(v) != 2 * p.h) {
                      return cat("v_", v + 1, " has degree ", g.degree(v));
                    }
                  }
                  return std::nullopt;
                }));

  const int NM = std::min(NO, 12);
  add(run_check(
      "graph.independence-matches-enumeration",
      span("n", 0, NM) + ", " + span("h", 0, H), grid(0, NM, 0, H),
      [](const Params& p) -> Failure {
        for (const auto& g : {power_path(p.n, p.h), power_cycle(p.n, p.h)}) {
          const auto listed = serial::enumerate_independent(g);
          std::set<std::uint64_t> members;
          for (const auto& s : listed) members.insert(s.bits());
          for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.n); ++m) {
            const VertexSubset s(p.n, m);
            if (is_independent(g, s) != (members.count(m) == 1)) {
              return cat("subset ", s.to_string());
            }
          }
        }
        return std::nullopt;
      }));

  add(run_check("graph.enumeration-canonical-order", oracle_range,
                grid(0, NO, 0, H), [](const Params& p) -> Failure {
                  for (const auto& g :
                       {power_path(p.n, p.h), power_cycle(p.n, p.h)}) {
                    const auto a = serial::enumerate_independent(g);
                    if (a.empty() || !a.front().empty()) {
                      return std::string("empty subset missing");
                    }
                    for (std::size_t i = 1; i < a.size(); ++i) {
                      if (!CanonicalLess{}(a[i - 1], a[i])) {
                        return cat("out of order at ", a[i].to_string());
                      }
                    }
                    if (a != enumerate_independent(g)) {
                      return std::string("parallel enumeration differs");
                    }
                  }
                  return std::nullopt;
                }));

  // --- counting formulas against the oracle --------------------------------

  add(run_check("oracle.path-counts", oracle_range, grid(0, NO, 0, H),
                [&](const Params& p) -> Failure {
                  const auto subsets =
                      serial::enumerate_independent(power_path(p.n, p.h));
                  return compare_histogram(
                      cardinality_histogram(subsets), p_total(p.n, p.h),
                      [&](int k) { return pnk_under_test(p.n, p.h, k); },
                      path_k_bound(p.n, p.h));
                }));

  add(run_check("oracle.cycle-counts", oracle_range, grid(0, NO, 0, H),
                [](const Params& p) -> Failure {
                  const auto subsets =
                      serial::enumerate_independent(power_cycle(p.n, p.h));
                  return compare_histogram(
                      cardinality_histogram(subsets), q_total(p.n, p.h),
                      [&](int k) { return q_nk(p.n, p.h, k); },
                      p.n / (p.h + 1) + 2);
                }));

  add(run_check("recurrence.path-totals", formula_range, grid(0, NF, 0, H),
                [](const Params& p) -> Failure {
                  const auto rec = p_total_rec(p.n, p.h);
                  const auto sum = p_total(p.n, p.h);
                  if (rec != sum) return mismatch("recurrence", rec, "sum", sum);
                  return std::nullopt;
                }));

  add(run_check("recurrence.cycle-totals", formula_range, grid(0, NF, 0, H),
                [](const Params& p) -> Failure {
                  const auto rec = q_total_rec(p.n, p.h);
                  const auto sum = q_total(p.n, p.h);
                  if (rec != sum) return mismatch("recurrence", rec, "sum", sum);
                  return std::nullopt;
                }));

  add(run_check("sequence.hfib-is-shifted-path-totals",
                span("i", 1, NF) + ", " + span("h", 0, H), grid(NF, NF, 0, H),
                [](const Params& p) -> Failure {
                  const auto seq = hfib(p.h, p.n);
                  for (int i = 1; i <= p.n; ++i) {
                    const auto expected = bar_p(i - p.h - 1, p.h);
                    if (seq.at(i) != expected) {
                      return cat("i=", i, ": ",
                                 mismatch("F_i", seq.at(i), "bar_p", expected));
                    }
                  }
                  return std::nullopt;
                }));

  add(run_check("theorem.path-edges-self-convolution", formula_range,
                grid(0, NF, 0, H), [](const Params& p) -> Failure {
                  const auto conv = h_edges_conv(p.n, p.h);
                  const auto sum = h_edges_sum(p.n, p.h);
                  if (conv != sum) {
                    return mismatch("convolution", conv, "sum", sum);
                  }
                  return std::nullopt;
                }));

  add(run_check("oracle.path-hasse-covers", oracle_range, grid(0, NO, 0, H),
                [](const Params& p) -> Failure {
                  const auto d = hasse_diagram(power_path(p.n, p.h));
                  const ExactInt covers = d.covers.size();
                  ExactInt graded = 0;
                  for (std::size_t k = 0; k < d.levels.size(); ++k) {
                    graded += k * d.levels[k].size();
                  }
                  if (covers != graded) {
                    return mismatch("covers", covers, "sum k*level", graded);
                  }
                  const auto sum = h_edges_sum(p.n, p.h);
                  if (covers != sum) return mismatch("covers", covers, "H", sum);
                  const auto conv = h_edges_conv(p.n, p.h);
                  if (covers != conv) {
                    return mismatch("covers", covers, "convolution", conv);
                  }
                  return std::nullopt;
                }));

  add(run_check("proposition.cycle-edges-closed-form", formula_range,
                grid(0, NF, 0, H), [](const Params& p) -> Failure {
                  const auto closed = m_edges_closed(p.n, p.h);
                  const auto sum = m_edges_sum(p.n, p.h);
                  if (closed != sum) return mismatch("n*F", closed, "sum", sum);
                  return std::nullopt;
                }));

  add(run_check("oracle.cycle-hasse-covers", oracle_range, grid(0, NO, 0, H),
                [](const Params& p) -> Failure {
                  const auto d = hasse_diagram(power_cycle(p.n, p.h));
                  const ExactInt covers = d.covers.size();
                  const auto sum = m_edges_sum(p.n, p.h);
                  if (covers != sum) return mismatch("covers", covers, "M", sum);
                  const auto closed = m_edges_closed(p.n, p.h);
                  if (covers != closed) {
                    return mismatch("covers", covers, "n*F", closed);
                  }
                  return std::nullopt;
                }));

  // --- containing-vertex counts ---------------------------------------------

  add(run_check("lemma.vertex-counts-sum-to-k-times-subsets", oracle_range,
                grid(1, NO, 0, H), [](const Params& p) -> Failure {
                  for (int k = 1; k <= path_k_bound(p.n, p.h); ++k) {
                    ExactInt sum = 0;
                    for (int i = 1; i <= p.n; ++i) sum += t_ki(p.n, p.h, k, i);
                    const ExactInt expected = k * p_nk(p.n, p.h, k);
                    if (sum != expected) {
                      return cat("k=", k, ": ",
                                 mismatch("sum_i T", sum, "k*p", expected));
                    }
                  }
                  return std::nullopt;
                }));

  add(run_check("lemma.vertex-counts-over-sizes", oracle_range,
                grid(1, NO, 0, H), [](const Params& p) -> Failure {
                  for (int i = 1; i <= p.n; ++i) {
                    ExactInt sum = 0;
                    for (int k = 1; k <= path_k_bound(p.n, p.h); ++k) {
                      sum += t_ki(p.n, p.h, k, i);
                    }
                    const ExactInt expected = bar_p(i - p.h - 1, p.h) *
                                              bar_p(p.n - p.h - i, p.h);
                    if (sum != expected) {
                      return cat("i=", i, ": ",
                                 mismatch("sum_k T", sum, "bar_p*bar_p", expected));
                    }
                  }
                  return std::nullopt;
                }));

  add(run_check("oracle.vertex-counts", oracle_range, grid(1, NO, 0, H),
                [](const Params& p) -> Failure {
                  const auto subsets =
                      serial::enumerate_independent(power_path(p.n, p.h));
                  for (int i = 1; i <= p.n; ++i) {
                    std::vector<std::uint64_t> hist(p.n + 2, 0);
                    for (const auto& s : subsets) {
                      if (s.contains(i)) ++hist[s.cardinality()];
                    }
                    for (int k = 0; k <= p.n + 1; ++k) {
                      const auto t = t_ki(p.n, p.h, k, i);
                      if (t != hist[k]) {
                        return cat("k=", k, " i=", i, ": T=", t,
                                   " but enumerated ", hist[k]);
                      }
                    }
                  }
                  return std::nullopt;
                }));

  // --- algebraic identities -------------------------------------------------

  const int NS = std::min(NF, 50);
  add(run_check("identity.power-shift", span("n", 0, NS) + ", " + span("h", 1, H),
                grid(0, NS, 1, H), [](const Params& p) -> Failure {
                  for (int k = 0; k <= p.n; ++k) {
                    const auto lhs = p_nk(p.n, p.h, k);
                    const auto rhs = p_nk(p.n - k + 1, p.h - 1, k);
                    if (lhs != rhs) {
                      return cat("k=", k, ": ",
                                 mismatch("p^(h)", lhs, "p^(h-1)", rhs));
                    }
                  }
                  return std::nullopt;
                }));

  add(run_check("identity.cycle-split",
                cat("3h+2<n<=", NF, ", ", span("h", 0, H)), grid(0, NF, 0, H),
                [](const Params& p) -> Failure {
                  if (p.n <= 3 * p.h + 2) return std::nullopt;
                  for (int k = 2; k <= p.n; ++k) {
                    const ExactInt lhs =
                        p_nk(p.n - 2 * p.h - 1, p.h, k - 1) +
                        p.h * p_nk(p.n - 3 * p.h - 2, p.h, k - 2);
                    const auto rhs = q_nk(p.n - p.h - 1, p.h, k - 1);
                    if (lhs != rhs) {
                      return cat("k=", k, ": ", mismatch("lhs", lhs, "q", rhs));
                    }
                  }
                  return std::nullopt;
                }));

  add(run_check("divisibility.cycle-k-subsets",
                span("n", 0, 2 * NF) + ", " + span("h", 0, H),
                grid(0, 2 * NF, 0, H), [](const Params& p) -> Failure {
                  for (int k = 2; p.n >= (p.h + 1) * k; ++k) {
                    const ExactInt num = p.n * binom(p.n - p.h * k - 1, k - 1);
                    if (num % k != 0) {
                      return cat("k=", k, ": ", k, " does not divide ", num);
                    }
                  }
                  return std::nullopt;
                }));

  add(run_check(
      "bijection.roundtrip", oracle_range, grid(0, NO, 0, H),
      [](const Params& p) -> Failure {
        const auto g = power_path(p.n, p.h);
        for (const auto& s : serial::enumerate_independent(g)) {
          const auto idx = path_bijection_inv(p.n, p.h, s);
          if (path_bijection_fwd(p.n, p.h, idx) != s) {
            return cat("f(f^-1(", s.to_string(), ")) differs");
          }
        }
        // Every strictly increasing index list drawn from [1, n-hk+h].
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.n); ++m) {
          const VertexSubset chosen(p.n, m);
          const auto idx = chosen.vertices();
          const int k = static_cast<int>(idx.size());
          if (!idx.empty() && idx.back() > p.n - p.h * k + p.h) continue;
          const auto image = path_bijection_fwd(p.n, p.h, idx);
          if (!is_independent(g, image) || image.cardinality() != k) {
            return cat("f(", chosen.to_string(), ") not an independent ", k,
                       "-subset");
          }
          if (path_bijection_inv(p.n, p.h, image) != idx) {
            return cat("f^-1(f(", chosen.to_string(), ")) differs");
          }
        }
        return std::nullopt;
      }));

  add(run_check("identity.boolean-lattice", span("n", 0, NF),
                grid(0, NF, 0, 0), [NO](const Params& p) -> Failure {
                  const ExactInt cube = ExactInt(1) << p.n;
                  if (p_total(p.n, 0) != cube) {
                    return mismatch("p", p_total(p.n, 0), "2^n", cube);
                  }
                  const ExactInt edges = p.n == 0 ? ExactInt(0) : p.n * (cube / 2);
                  if (h_edges_sum(p.n, 0) != edges) {
                    return mismatch("H", h_edges_sum(p.n, 0), "n*2^(n-1)", edges);
                  }
                  if (p.n <= NO) {
                    const auto d = hasse_diagram(power_path(p.n, 0));
                    if (d.node_count() != cube || d.covers.size() != edges) {
                      return std::string("Hasse diagram is not the n-cube");
                    }
                  }
                  return std::nullopt;
                }));

  if (H >= 1) {
    add(run_check("identity.fibonacci-totals", span("n", 0, NF),
                  grid(0, NF, 1, 1), [](const Params& p) -> Failure {
                    const auto got = p_total(p.n, 1);
                    const auto fib = fibonacci(p.n + 2);
                    if (got != fib) return mismatch("p", got, "F_{n+2}", fib);
                    return std::nullopt;
                  }));
    add(run_check("identity.lucas-totals", span("n", 2, NF),
                  grid(2, NF, 1, 1), [](const Params& p) -> Failure {
                    const auto got = q_total(p.n, 1);
                    const auto luc = lucas(p.n);
                    if (got != luc) return mismatch("q", got, "L_n", luc);
                    return std::nullopt;
                  }));
    add(run_check("identity.lucas-cube-edges", span("n", 2, NF),
                  grid(2, NF, 1, 1), [](const Params& p) -> Failure {
                    const auto got = m_edges_sum(p.n, 1);
                    const ExactInt expected = p.n * fibonacci(p.n - 1);
                    if (got != expected) {
                      return mismatch("M", got, "n*F_{n-1}", expected);
                    }
                    return std::nullopt;
                  }));
    add(run_check("identity.fibonacci-cube-edges", span("n", 0, NF),
                  grid(0, NF, 1, 1), [](const Params& p) -> Failure {
                    ExactInt expected = 0;
                    for (int i = 1; i <= p.n; ++i) {
                      expected += fibonacci(i) * fibonacci(p.n - i + 1);
                    }
                    const auto got = h_edges_sum(p.n, 1);
                    if (got != expected) {
                      return mismatch("H", got, "sum F_i F_{n-i+1}", expected);
                    }
                    return std::nullopt;
                  }));
  }

  // --- cubes ----------------------------------------------------------------

  const std::string pattern_range = span("n", 0, NO) + ", " + span("h", 1, H);

  add(run_check("cubes.fibonacci-cube", span("n", 0, NO), grid(0, NO, 1, 1),
                [](const Params& p) -> Failure {
                  const auto cube = fibonacci_cube(p.n);
                  if (cube.labels.size() != p_total(p.n, 1) ||
                      cube.graph.edge_count() != h_edges_sum(p.n, 1)) {
                    return cat("counts ", cube.labels.size(), "/",
                               cube.graph.edge_count());
                  }
                  for (const auto& [u, v] : cube.graph.edges()) {
                    if (!cube.labels[u].is_subset_of(cube.labels[v])) {
                      return cat("edge ", cube.labels[u].to_string(), "-",
                                 cube.labels[v].to_string(),
                                 " joins incomparable strings");
                    }
                  }
                  if (auto f = labeled_equal(
                          cube, diagram_as_graph(hasse_diagram(power_path(p.n, 1))),
                          "Hasse diagram of P_n^1")) {
                    return f;
                  }
                  return labeled_equal(cube, generalized_cube(p.n, {"11"}, false),
                                       "B_n(11)");
                }));

  add(run_check("cubes.lucas-cube", span("n", 2, NO), grid(2, NO, 1, 1),
                [](const Params& p) -> Failure {
                  const auto cube = lucas_cube(p.n);
                  if (cube.labels.size() != q_total(p.n, 1) ||
                      cube.graph.edge_count() != m_edges_sum(p.n, 1)) {
                    return cat("counts ", cube.labels.size(), "/",
                               cube.graph.edge_count());
                  }
                  if (auto f = labeled_equal(
                          cube,
                          diagram_as_graph(hasse_diagram(power_cycle(p.n, 1))),
                          "Hasse diagram of Q_n^1")) {
                    return f;
                  }
                  return labeled_equal(cube, generalized_cube(p.n, {"11"}, true),
                                       "circular B_n(11)");
                }));

  add(run_check("cubes.pattern-avoidance-path", pattern_range,
                grid(0, NO, 1, H), [](const Params& p) -> Failure {
                  return labeled_equal(
                      generalized_cube(p.n, spacing_patterns(p.h), false),
                      diagram_as_graph(hasse_diagram(power_path(p.n, p.h))),
                      "linear pattern cube vs Hasse diagram of P_n^h");
                }));

  add(run_check("cubes.pattern-avoidance-cycle", pattern_range,
                grid(0, NO, 1, H), [](const Params& p) -> Failure {
                  return labeled_equal(
                      generalized_cube(p.n, spacing_patterns(p.h), true),
                      diagram_as_graph(hasse_diagram(power_cycle(p.n, p.h))),
                      "circular pattern cube vs Hasse diagram of Q_n^h");
                }));

  return report;
}

}  // namespace indpow
