#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "homomesy/engine.hpp"

namespace homomesy::gallery {

using IntegerMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

struct SandpileEdge {
  std::string from;
  std::string to;
  long long count = 1;
};

/// Directed multigraph with a global sink and a source vertex.
///
/// Configurations are indexed by the non-sink vertices in vertex order with
/// the sink removed.
class SandpileGraph {
 public:
  /// Throws std::invalid_argument for unknown or duplicate vertices, negative
  /// edge counts, source == sink, or a vertex with no directed path to the sink.
  SandpileGraph(std::vector<std::string> vertices, const std::vector<SandpileEdge>& edges, const std::string& sink,
                const std::string& source);

  /// Edge-list text: "v w count" lines plus "sink t" and "source s" headers.
  /// Blank lines and lines starting with '#' are ignored. Vertices are ordered
  /// numerically when every label is an integer, lexicographically otherwise.
  static SandpileGraph parse(std::istream& in);
  static SandpileGraph load(const std::string& path);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& nonsink_vertices() const { return nonsink_; }
  std::size_t nonsink_count() const { return nonsink_.size(); }
  const std::string& sink() const { return vertices_[sink_]; }
  /// Position of the source among the non-sink vertices.
  std::size_t source() const { return source_; }

  /// Number of edges from non-sink vertex v (self-loops and sink edges included).
  long long outdeg(std::size_t v) const { return outdeg_[v]; }
  /// Number of edges between two non-sink vertices.
  long long deg(std::size_t from, std::size_t to) const { return edges_(static_cast<Eigen::Index>(from), static_cast<Eigen::Index>(to)); }

  /// Reduced Laplacian L over the non-sink vertices, oriented so that firing
  /// v changes a configuration by -L.col(v): L(v,v) = outdeg(v) - deg(v,v)
  /// and L(w,v) = -deg(v,w). Then sigma° = sigma - L phi.
  const IntegerMatrix& reduced_laplacian() const { return laplacian_; }
  RationalMatrix reduced_laplacian_rational() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> nonsink_;
  std::size_t sink_ = 0;
  std::size_t source_ = 0;
  std::vector<long long> outdeg_;
  IntegerMatrix edges_;
  IntegerMatrix laplacian_;
};

struct SandpileConfig {
  std::vector<long long> grains;

  friend bool operator==(const SandpileConfig&, const SandpileConfig&) = default;
  friend auto operator<=>(const SandpileConfig&, const SandpileConfig&) = default;
};

struct Stabilization {
  SandpileConfig stable;
  std::vector<long long> firing;
};

inline constexpr std::size_t kDefaultToppleGuard = 10'000'000;

bool is_stable(const SandpileGraph& g, const SandpileConfig& sigma);

/// Fires unstable vertices until stable. `priority` fixes which unstable
/// vertex fires next (first unstable one in the list); empty means vertex
/// order. Throws GuardExceeded after `guard` firing rounds.
Stabilization sandpile_stabilize(const SandpileGraph& g, const SandpileConfig& sigma,
                                 std::size_t guard = kDefaultToppleGuard,
                                 std::span<const std::size_t> priority = {});

/// (sigma + 1_s)°. Throws std::invalid_argument unless sigma is stable.
SandpileConfig sandpile_tau(const SandpileGraph& g, const SandpileConfig& sigma);

/// Stable configurations lying on a cycle of sandpile_tau, ascending. Throws
/// GuardExceeded when the number of stable configurations exceeds `guard`.
std::vector<SandpileConfig> sandpile_recurrents(const SandpileGraph& g,
                                                std::size_t guard = kDefaultEnumerationGuard);

/// sigma -> phi(sigma + 1_s), one component per non-sink vertex.
Statistic<SandpileConfig> sandpile_firing_statistic(const SandpileGraph& g);

/// The unique f* with L f* = 1_s.
RationalVector expected_firing_average(const SandpileGraph& g);

/// Recurrent configurations under tau with the "firing-vector" statistic.
DynamicalSystem<SandpileConfig> sandpile_space(const SandpileGraph& g,
                                               std::size_t guard = kDefaultEnumerationGuard);

}  // namespace homomesy::gallery
