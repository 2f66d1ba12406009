#pragma once

/**
 * @file graphs.hpp
 * @brief Simple undirected graphs, the family constructors used by the engine,
 *        and the brute-force domination-polynomial oracle.
 */

#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "domroots/exactpoly.hpp"

namespace domroots {

class Graph {
 public:
  Graph() = default;
  /// Builds from neighbor lists; validates symmetry and the absence of loops.
  explicit Graph(std::vector<std::vector<int>> adjacency);
  /// Edgeless graph on n vertices.
  static Graph empty(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const;
  /// Sorted neighbor list of v.
  const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  bool adjacent(int u, int v) const;
  std::vector<int> degree_sequence() const;  // descending

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
};

// Constructors. Labeling conventions are part of the contract.

/// F_n: vertex 0 is the hub; triangle k uses vertices 2k-1 and 2k.
Graph friendship(int n);
/// B_n: spine L = 0, R = 1; page k contributes a_k = 2k, b_k = 2k+1 with
/// edges L-a_k, a_k-b_k, b_k-R.
Graph book(int n);
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);

/// Disjoint union; G's vertices keep their labels, H's are offset by |G|.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g, const Graph& h);
/// Vertex v of G gets a fresh copy of H at labels |G| + v|H| ..., joined to v.
Graph corona(const Graph& g, const Graph& h);

inline constexpr int kDefaultOracleCap = 24;

class OracleCapExceeded : public std::runtime_error {
 public:
  OracleCapExceeded(int order, int cap);
  int cap() const { return cap_; }

 private:
  int cap_;
};

/**
 * Counts, for each k, the vertex subsets S with |S| = k and N[S] = V by
 * enumerating all 2^n masks. Refuses graphs with more than `cap` vertices.
 */
IntPolynomial brute_force_dompoly(const Graph& g, int cap = kDefaultOracleCap);

class GraphParseError : public std::runtime_error {
 public:
  GraphParseError(int line, const std::string& what);
  /// 1-based line number, 0 when the error is not tied to a line.
  int line() const { return line_; }

 private:
  int line_;
};

/**
 * Reads the adjacency-list text format: one line per vertex, "v: u1 u2 ...",
 * zero-indexed. Blank lines and lines starting with '#' are ignored. Every
 * vertex 0..n-1 must have exactly one line and adjacency must be symmetric.
 */
Graph parse_adjacency(std::istream& in);
std::string format_adjacency(const Graph& g);

}  // namespace domroots
