#pragma once

// Bounded-height enumeration of exceptional classes and semiorthogonal
// bases, and breadth-first search of the braid orbit modulo signs.
//
// Every kernel has an OpenMP implementation (the default entry points) and a
// serial reference implementation in the `serial` namespace. Both produce
// identical output; tests compare them and bench/ times them.

#include <cstddef>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "helixlab/lattice.hpp"
#include "helixlab/mutation.hpp"

namespace helixlab {

struct EnumOptions {
  int workers = 0;  // 0: OpenMP default
  /// Upper bound on the scanned box volume (2B+1)^n.
  std::size_t max_candidates = 50'000'000;
};

struct SearchCaps {
  std::size_t max_depth = 24;
  std::size_t max_nodes = 5'000'000;
  /// Nodes higher than this are stored as boundary and not expanded.
  std::optional<Integer> height_cap;
};

struct OrbitOptions {
  int workers = 0;
  /// Run check_sod_basis on every stored node (throws NotSODBasis).
  bool check_nodes = false;
};

struct OrbitNode {
  static constexpr std::size_t kNoParent = std::numeric_limits<std::size_t>::max();

  Collection key;  // canonical
  std::size_t parent = kNoParent;
  Move move{Side::Left, 0};
  std::size_t depth = 0;
  bool boundary = false;

  bool operator==(const OrbitNode&) const = default;
};

struct OrbitStats {
  std::size_t expanded = 0;
  std::size_t boundary = 0;
  std::size_t frontier_peak = 0;
  std::vector<std::size_t> level_sizes;  // nodes first reached at each depth
  bool truncated_by_depth = false;
  bool truncated_by_nodes = false;

  bool operator==(const OrbitStats&) const = default;
};

class OrbitReport {
 public:
  OrbitReport() = default;
  OrbitReport(std::vector<OrbitNode> nodes, OrbitStats stats);

  const std::vector<OrbitNode>& nodes() const noexcept { return nodes_; }
  const OrbitStats& stats() const noexcept { return stats_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool truncated() const { return stats_.truncated_by_depth || stats_.truncated_by_nodes; }

  /// Index of a canonical collection, if visited.
  std::optional<std::size_t> find(const Collection& canonical) const;
  bool contains(const Collection& canonical) const { return find(canonical).has_value(); }

  /// Shortest word from the start reaching node i.
  BraidWord witness(std::size_t i) const;
  std::optional<BraidWord> witness(const Collection& canonical) const;

  bool operator==(const OrbitReport& rhs) const {
    return nodes_ == rhs.nodes_ && stats_ == rhs.stats_;
  }

 private:
  std::vector<OrbitNode> nodes_;
  OrbitStats stats_;
  std::unordered_map<Collection, std::size_t, CollectionHash> index_;
};

/// Sign-canonical u with height <= bound and chi(u,u) = 1, sorted.
/// Throws CapExceeded when (2B+1)^n exceeds opts.max_candidates.
std::vector<KVector> enumerate_exceptional(const GramForm& g, long bound, EnumOptions opts = {});

/// Canonical semiorthogonal bases with all elements of height <= bound, sorted.
std::vector<Collection> enumerate_sod_bases(const GramForm& g, long bound, EnumOptions opts = {});

/// Breadth-first closure of canonicalize(start) under L1..L(n-1), R1..R(n-1).
/// Levels are ordered lexicographically; ties in witness words go to the
/// lexicographically smallest parent, then generator order L1.., R1...
OrbitReport orbit_bfs(const GramForm& g, const Collection& start, const SearchCaps& caps,
                      OrbitOptions opts = {});

/// NotReached: the height-capped closure was explored completely (no depth or
/// node truncation) and some enumerated basis is not in it.
/// Inconclusive: some basis is unreached and the search was truncated.
enum class TransitivityVerdict { Transitive, NotReached, Inconclusive };

struct TransitivityReport {
  long bound = 0;
  SearchCaps caps;
  std::size_t exceptional_count = 0;
  std::size_t exceptional_in_bases = 0;  // exploratory only
  std::vector<Collection> bases;
  std::vector<std::pair<Collection, BraidWord>> reached;
  std::vector<Collection> unreached;
  OrbitStats orbit;
  std::size_t orbit_size = 0;
  TransitivityVerdict verdict = TransitivityVerdict::Inconclusive;
};

/// Defaults an absent height cap to 4 * bound.
SearchCaps default_caps_for(long bound, SearchCaps caps);

TransitivityReport transitivity_report(const GramForm& g, long bound, SearchCaps caps,
                                       OrbitOptions opts = {}, EnumOptions enum_opts = {});

namespace serial {

std::vector<KVector> enumerate_exceptional(const GramForm& g, long bound, EnumOptions opts = {});
std::vector<Collection> enumerate_sod_bases(const GramForm& g, long bound, EnumOptions opts = {});
OrbitReport orbit_bfs(const GramForm& g, const Collection& start, const SearchCaps& caps,
                      bool check_nodes = false);

}  // namespace serial

}  // namespace helixlab
