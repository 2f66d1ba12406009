#include "domroots/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

namespace domroots {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be at least 1, got " + std::to_string(n));
}

}  // namespace

Graph::Graph(std::vector<std::vector<int>> adjacency) : adj_(std::move(adjacency)) {
  const int n = order();
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  for (int v = 0; v < n; ++v) {
    for (int u : adj_[static_cast<std::size_t>(v)]) {
      if (u < 0 || u >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " lists out-of-range neighbor " + std::to_string(u));
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
      if (!adjacent(u, v))
        throw std::invalid_argument("asymmetric adjacency: " + std::to_string(v) + " lists " + std::to_string(u) +
                                    " but " + std::to_string(u) + " does not list " + std::to_string(v));
    }
  }
}

Graph Graph::empty(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  return Graph(std::vector<std::vector<int>>(static_cast<std::size_t>(n)));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return Graph(std::move(adj));
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (const auto& nb : adj_) s += nb.size();
  return s / 2;
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = adj_.at(static_cast<std::size_t>(u));
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d;
  d.reserve(adj_.size());
  for (const auto& nb : adj_) d.push_back(static_cast<int>(nb.size()));
  std::sort(d.rbegin(), d.rend());
  return d;
}

Graph friendship(int n) {
  require_positive(n, "friendship");
  std::vector<std::pair<int, int>> e;
  for (int k = 1; k <= n; ++k) {
    e.emplace_back(0, 2 * k - 1);
    e.emplace_back(0, 2 * k);
    e.emplace_back(2 * k - 1, 2 * k);
  }
  return Graph::from_edges(2 * n + 1, e);
}

Graph book(int n) {
  require_positive(n, "book");
  std::vector<std::pair<int, int>> e{{0, 1}};
  for (int k = 1; k <= n; ++k) {
    e.emplace_back(0, 2 * k);
    e.emplace_back(2 * k, 2 * k + 1);
    e.emplace_back(2 * k + 1, 1);
  }
  return Graph::from_edges(2 * n + 2, e);
}

Graph complete(int n) {
  require_positive(n, "complete");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  require_positive(n, "path");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<std::vector<int>> adj;
  adj.reserve(static_cast<std::size_t>(g.order() + h.order()));
  for (int v = 0; v < g.order(); ++v) adj.push_back(g.neighbors(v));
  for (int v = 0; v < h.order(); ++v) {
    std::vector<int> nb = h.neighbors(v);
    for (int& u : nb) u += g.order();
    adj.push_back(std::move(nb));
  }
  return Graph(std::move(adj));
}

Graph join(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  std::vector<std::vector<int>> adj;
  adj.reserve(static_cast<std::size_t>(a + b));
  for (int v = 0; v < a; ++v) {
    std::vector<int> nb = g.neighbors(v);
    for (int u = 0; u < b; ++u) nb.push_back(a + u);
    adj.push_back(std::move(nb));
  }
  for (int v = 0; v < b; ++v) {
    std::vector<int> nb;
    for (int u = 0; u < a; ++u) nb.push_back(u);
    for (int u : h.neighbors(v)) nb.push_back(a + u);
    adj.push_back(std::move(nb));
  }
  return Graph(std::move(adj));
}

Graph corona(const Graph& g, const Graph& h) {
  const int a = g.order();
  const int b = h.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(a + a * b));
  for (int v = 0; v < a; ++v) {
    auto& nv = adj[static_cast<std::size_t>(v)];
    nv = g.neighbors(v);
    const int base = a + v * b;
    for (int u = 0; u < b; ++u) {
      nv.push_back(base + u);
      auto& nu = adj[static_cast<std::size_t>(base + u)];
      nu.push_back(v);
      for (int w : h.neighbors(u)) nu.push_back(base + w);
    }
  }
  return Graph(std::move(adj));
}

OracleCapExceeded::OracleCapExceeded(int order, int cap)
    : std::runtime_error("brute-force oracle refuses a graph with " + std::to_string(order) +
                         " vertices: the vertex cap is " + std::to_string(cap)),
      cap_(cap) {}

IntPolynomial brute_force_dompoly(const Graph& g, int cap) {
  const int n = g.order();
  if (cap > 40) cap = 40;
  if (n > cap) throw OracleCapExceeded(n, cap);
  if (n == 0) return IntPolynomial::constant(1);

  using Mask = std::uint64_t;
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Mask m = Mask{1} << v;
    for (int u : g.neighbors(v)) m |= Mask{1} << u;
    closed[static_cast<std::size_t>(v)] = m;
  }

  // N[S] = N[S_low] | N[S_high]: tabulate both halves once.
  const int low_bits = n / 2;
  const int high_bits = n - low_bits;
  auto tabulate = [&](int offset, int bits) {
    std::vector<Mask> t(std::size_t{1} << bits, 0);
    for (std::size_t s = 1; s < t.size(); ++s) {
      const int b = std::countr_zero(s);
      t[s] = t[s & (s - 1)] | closed[static_cast<std::size_t>(offset + b)];
    }
    return t;
  };
  const std::vector<Mask> low = tabulate(0, low_bits);
  const std::vector<Mask> high = tabulate(low_bits, high_bits);

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t hi = 0; hi < high.size(); ++hi) {
    const int hi_pop = std::popcount(hi);
    for (std::size_t lo = 0; lo < low.size(); ++lo) {
      if ((high[hi] | low[lo]) == full) ++counts[static_cast<std::size_t>(hi_pop + std::popcount(lo))];
    }
  }
  std::vector<mpz_class> c;
  c.reserve(counts.size());
  for (auto v : counts) c.emplace_back(static_cast<unsigned long>(v));
  return IntPolynomial(std::move(c));
}

GraphParseError::GraphParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

Graph parse_adjacency(std::istream& in) {
  std::map<int, std::vector<int>> rows;
  std::map<int, int> row_line;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw GraphParseError(lineno, "expected \"v: u1 u2 ...\"");
    std::istringstream head(line.substr(0, colon));
    int v = -1;
    std::string extra;
    if (!(head >> v) || (head >> extra)) throw GraphParseError(lineno, "malformed vertex label");
    if (v < 0) throw GraphParseError(lineno, "negative vertex label " + std::to_string(v));
    if (rows.count(v)) throw GraphParseError(lineno, "vertex " + std::to_string(v) + " listed twice");
    std::istringstream tail(line.substr(colon + 1));
    std::vector<int> nb;
    std::string tok;
    while (tail >> tok) {
      std::size_t used = 0;
      int u = 0;
      try {
        u = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw GraphParseError(lineno, "malformed neighbor \"" + tok + "\"");
      if (u < 0) throw GraphParseError(lineno, "negative neighbor " + tok);
      if (u == v) throw GraphParseError(lineno, "self-loop at vertex " + std::to_string(v));
      nb.push_back(u);
    }
    rows[v] = std::move(nb);
    row_line[v] = lineno;
  }
  if (rows.empty()) throw GraphParseError(0, "empty adjacency file");
  const int n = rows.rbegin()->first + 1;
  if (static_cast<int>(rows.size()) != n) {
    for (int v = 0; v < n; ++v)
      if (!rows.count(v)) throw GraphParseError(0, "vertex " + std::to_string(v) + " has no line");
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto& [v, nb] : rows) {
    for (int u : nb)
      if (u >= n)
        throw GraphParseError(row_line[v], "neighbor " + std::to_string(u) + " out of range (n = " +
                                               std::to_string(n) + ")");
    adj[static_cast<std::size_t>(v)] = nb;
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  for (int v = 0; v < n; ++v)
    for (int u : adj[static_cast<std::size_t>(v)]) {
      const auto& back = adj[static_cast<std::size_t>(u)];
      if (!std::binary_search(back.begin(), back.end(), v))
        throw GraphParseError(row_line[v], "asymmetric adjacency: pair (" + std::to_string(v) + ", " +
                                               std::to_string(u) + ") missing its reverse");
    }
  return Graph(std::move(adj));
}

std::string format_adjacency(const Graph& g) {
  std::ostringstream os;
  for (int v = 0; v < g.order(); ++v) {
    os << v << ':';
    for (int u : g.neighbors(v)) os << ' ' << u;
    os << '\n';
  }
  return os.str();
}

}  // namespace domroots
