#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace indpow {

/// Bad selector or argument combination; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string> kTableFamilies{"path", "cycle"};
inline const std::vector<std::string> kSeqKinds{"hfib", "p", "q", "hedges",
                                                "medges"};
inline const std::vector<std::string> kExportFamilies{
    "path", "cycle", "fib-cube", "lucas-cube", "gen-cube"};

/// TSV: n, total, edges, and with per_k one column k0..kK per cardinality.
std::string render_table(const std::string& family, int h, int n_max,
                         bool per_k);

/// One decimal term per line. hfib, hedges and medges start at index 1;
/// p and q start at n = 0.
std::string render_seq(const std::string& kind, int h, int count);

struct ExportRequest {
  std::string family;
  int n = 0;
  /// Required for path and cycle; for gen-cube selects the default
  /// pattern set {1 0^j 1 : j < h} when no patterns are given.
  int h = -1;
  std::vector<std::string> patterns;
  bool circular = false;
  std::string what = "graph";
  std::string format = "dot";
};

/// DOT or JSON document with sorted vertices and edges.
std::string render_export(const ExportRequest& request);

}  // namespace indpow
