#include "homomesy/gallery/sandpile.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "homomesy/linalg.hpp"

namespace homomesy::gallery {

namespace {

std::optional<long long> as_integer(const std::string& s) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::size_t index_of(const std::vector<std::string>& v, const std::string& label, const char* role) {
  const auto it = std::find(v.begin(), v.end(), label);
  if (it == v.end()) throw std::invalid_argument(std::string("sandpile: unknown ") + role + " vertex '" + label + "'");
  return static_cast<std::size_t>(it - v.begin());
}

}  // namespace

SandpileGraph::SandpileGraph(std::vector<std::string> vertices, const std::vector<SandpileEdge>& edges,
                             const std::string& sink, const std::string& source)
    : vertices_(std::move(vertices)) {
  if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size()) {
    throw std::invalid_argument("sandpile: duplicate vertex label");
  }
  sink_ = index_of(vertices_, sink, "sink");
  const std::size_t source_full = index_of(vertices_, source, "source");
  if (source_full == sink_) throw std::invalid_argument("sandpile: source must differ from the sink");

  const std::size_t n = vertices_.size();
  IntegerMatrix full = IntegerMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& e : edges) {
    if (e.count < 0) throw std::invalid_argument("sandpile: negative edge count");
    full(static_cast<Eigen::Index>(index_of(vertices_, e.from, "edge")),
         static_cast<Eigen::Index>(index_of(vertices_, e.to, "edge"))) += e.count;
  }

  // Every vertex must reach the sink: search backwards from it.
  std::vector<bool> reaches(n, false);
  std::vector<std::size_t> frontier{sink_};
  reaches[sink_] = true;
  while (!frontier.empty()) {
    const std::size_t w = frontier.back();
    frontier.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!reaches[v] && full(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(w)) > 0) {
        reaches[v] = true;
        frontier.push_back(v);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!reaches[v]) throw std::invalid_argument("sandpile: vertex '" + vertices_[v] + "' has no path to the sink");
  }

  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == sink_) continue;
    if (v == source_full) source_ = keep.size();
    keep.push_back(v);
    nonsink_.push_back(vertices_[v]);
  }
  const auto m = static_cast<Eigen::Index>(keep.size());
  edges_.resize(m, m);
  laplacian_.resize(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    outdeg_.push_back(full.row(static_cast<Eigen::Index>(keep[static_cast<std::size_t>(i)])).sum());
    for (Eigen::Index j = 0; j < m; ++j) {
      edges_(i, j) = full(static_cast<Eigen::Index>(keep[static_cast<std::size_t>(i)]),
                          static_cast<Eigen::Index>(keep[static_cast<std::size_t>(j)]));
    }
  }
  for (Eigen::Index v = 0; v < m; ++v) {
    for (Eigen::Index w = 0; w < m; ++w) laplacian_(w, v) = -edges_(v, w);
    laplacian_(v, v) += outdeg_[static_cast<std::size_t>(v)];
  }
}

SandpileGraph SandpileGraph::parse(std::istream& in) {
  std::vector<SandpileEdge> edges;
  std::optional<std::string> sink;
  std::optional<std::string> source;
  std::set<std::string> labels;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty() || parts[0][0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return std::invalid_argument("sandpile graph line " + std::to_string(line_no) + ": " + why);
    };
    if (parts[0] == "sink" || parts[0] == "source") {
      if (parts.size() != 2) throw fail("expected '" + parts[0] + " <vertex>'");
      (parts[0] == "sink" ? sink : source) = parts[1];
      labels.insert(parts[1]);
      continue;
    }
    if (parts.size() != 3) throw fail("expected 'v w count'");
    const auto count = as_integer(parts[2]);
    if (!count || *count < 0) throw fail("edge count must be a nonnegative integer");
    edges.push_back({parts[0], parts[1], *count});
    labels.insert(parts[0]);
    labels.insert(parts[1]);
  }
  if (!sink) throw std::invalid_argument("sandpile graph: missing 'sink' header");
  if (!source) throw std::invalid_argument("sandpile graph: missing 'source' header");

  std::vector<std::string> vertices(labels.begin(), labels.end());
  const bool numeric = std::all_of(vertices.begin(), vertices.end(), [](const auto& s) { return as_integer(s).has_value(); });
  if (numeric) {
    std::sort(vertices.begin(), vertices.end(),
              [](const auto& x, const auto& y) { return *as_integer(x) < *as_integer(y); });
  }
  return SandpileGraph(std::move(vertices), edges, *sink, *source);
}

SandpileGraph SandpileGraph::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open sandpile graph file '" + path + "'");
  return parse(in);
}

RationalMatrix SandpileGraph::reduced_laplacian_rational() const {
  RationalMatrix out(laplacian_.rows(), laplacian_.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.cols(); ++j) out(i, j) = Rational(static_cast<std::int64_t>(laplacian_(i, j)));
  }
  return out;
}

bool is_stable(const SandpileGraph& g, const SandpileConfig& sigma) {
  for (std::size_t v = 0; v < g.nonsink_count(); ++v) {
    if (sigma.grains[v] >= g.outdeg(v)) return false;
  }
  return true;
}

Stabilization sandpile_stabilize(const SandpileGraph& g, const SandpileConfig& sigma, std::size_t guard,
                                 std::span<const std::size_t> priority) {
  const std::size_t n = g.nonsink_count();
  if (sigma.grains.size() != n) throw std::invalid_argument("sandpile configuration has the wrong number of vertices");
  std::vector<std::size_t> order(priority.begin(), priority.end());
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
  }

  Stabilization out{sigma, std::vector<long long>(n, 0)};
  auto& grains = out.stable.grains;
  for (std::size_t round = 0;; ++round) {
    const auto it = std::find_if(order.begin(), order.end(), [&](std::size_t v) { return grains[v] >= g.outdeg(v); });
    if (it == order.end()) return out;
    if (round >= guard) throw GuardExceeded("sandpile stabilization did not finish within " + std::to_string(guard) + " rounds");
    const std::size_t v = *it;
    // Firing v repeatedly is legal while it stays unstable; do as many at once
    // as the current pile certainly allows.
    const long long times = grains[v] / g.outdeg(v);
    out.firing[v] += times;
    for (std::size_t w = 0; w < n; ++w) {
      grains[w] -= times * g.reduced_laplacian()(static_cast<Eigen::Index>(w), static_cast<Eigen::Index>(v));
    }
  }
}

SandpileConfig sandpile_tau(const SandpileGraph& g, const SandpileConfig& sigma) {
  if (!is_stable(g, sigma)) throw std::invalid_argument("sandpile_tau expects a stable configuration");
  SandpileConfig next = sigma;
  next.grains[g.source()] += 1;
  return sandpile_stabilize(g, next).stable;
}

std::vector<SandpileConfig> sandpile_recurrents(const SandpileGraph& g, std::size_t guard) {
  const std::size_t n = g.nonsink_count();
  std::size_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    const auto radix = static_cast<std::size_t>(g.outdeg(v));
    if (radix == 0 || total > guard / radix) {
      throw GuardExceeded("number of stable sandpile configurations exceeds guard of " + std::to_string(guard));
    }
    total *= radix;
  }

  auto decode = [&](std::size_t code) {
    SandpileConfig c{std::vector<long long>(n)};
    for (std::size_t v = n; v-- > 0;) {
      const auto radix = static_cast<std::size_t>(g.outdeg(v));
      c.grains[v] = static_cast<long long>(code % radix);
      code /= radix;
    }
    return c;
  };
  auto encode = [&](const SandpileConfig& c) {
    std::size_t code = 0;
    for (std::size_t v = 0; v < n; ++v) code = code * static_cast<std::size_t>(g.outdeg(v)) + static_cast<std::size_t>(c.grains[v]);
    return code;
  };

  std::vector<std::size_t> next(total);
  for (std::size_t code = 0; code < total; ++code) next[code] = encode(sandpile_tau(g, decode(code)));

  // Cycle states of the functional graph.
  enum : std::uint8_t { kNew, kOnPath, kDone };
  std::vector<std::uint8_t> mark(total, kNew);
  std::vector<bool> cyclic(total, false);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < total; ++start) {
    if (mark[start] != kNew) continue;
    path.clear();
    std::size_t cur = start;
    while (mark[cur] == kNew) {
      mark[cur] = kOnPath;
      path.push_back(cur);
      cur = next[cur];
    }
    if (mark[cur] == kOnPath) {
      for (auto it = std::find(path.begin(), path.end(), cur); it != path.end(); ++it) cyclic[*it] = true;
    }
    for (auto p : path) mark[p] = kDone;
  }

  std::vector<SandpileConfig> out;
  for (std::size_t code = 0; code < total; ++code) {
    if (cyclic[code]) out.push_back(decode(code));
  }
  return out;  // codes ascend in the same order as configurations
}

Statistic<SandpileConfig> sandpile_firing_statistic(const SandpileGraph& g) {
  return vector_statistic<SandpileConfig>(
      "firing-vector", static_cast<Eigen::Index>(g.nonsink_count()), [g](const SandpileConfig& sigma) {
        SandpileConfig plus = sigma;
        plus.grains[g.source()] += 1;
        const auto phi = sandpile_stabilize(g, plus).firing;
        RationalVector v(static_cast<Eigen::Index>(phi.size()));
        for (std::size_t i = 0; i < phi.size(); ++i) v(static_cast<Eigen::Index>(i)) = Rational(static_cast<std::int64_t>(phi[i]));
        return v;
      });
}

RationalVector expected_firing_average(const SandpileGraph& g) {
  RationalVector unit = zero_vector(static_cast<Eigen::Index>(g.nonsink_count()));
  unit(static_cast<Eigen::Index>(g.source())) = Rational(1);
  return solve_exact(g.reduced_laplacian_rational(), unit);
}

DynamicalSystem<SandpileConfig> sandpile_space(const SandpileGraph& g, std::size_t guard) {
  DynamicalSystem<SandpileConfig> system;
  system.space = "recurrent sandpile configurations";
  system.map_name = "add-at-source-and-stabilize";
  system.states = sandpile_recurrents(g, guard);
  system.map = [g](const SandpileConfig& s) { return sandpile_tau(g, s); };
  system.statistics.push_back(sandpile_firing_statistic(g));
  return system;
}

}  // namespace homomesy::gallery
