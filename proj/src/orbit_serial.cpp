// Serial reference kernels. Kept deliberately plain: ordered containers, no
// threading. The parallel kernels in orbit.cpp must match these exactly.

#include <algorithm>
#include <map>
#include <set>

#include "helixlab/orbit.hpp"
#include "orbit_common.hpp"

namespace helixlab::serial {

std::vector<KVector> enumerate_exceptional(const GramForm& g, long bound, EnumOptions opts) {
  const std::size_t n = g.rank();
  detail::scan_volume(bound, n, opts.max_candidates);
  std::vector<KVector> out;
  if (bound == 0 || n == 0) return out;

  KVector u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = -bound;
  while (true) {
    if (detail::first_nonzero_positive(u) && is_exceptional(g, u)) out.push_back(u);
    std::size_t i = n;
    while (i > 0 && u[i - 1] == bound) {
      u[i - 1] = -bound;
      --i;
    }
    if (i == 0) break;
    u[i - 1] += 1;
  }
  return out;
}

namespace {

void serial_extend(const GramForm& g, const std::vector<KVector>& ex, Collection& partial,
            std::vector<Collection>& out) {
  const std::size_t n = g.rank();
  if (partial.size() == n) {
    if (abs_value(coordinate_matrix(partial).determinant()) == 1) out.push_back(partial);
    return;
  }
  for (const auto& v : ex) {
    bool ok = true;
    for (const auto& u : partial.elements) {
      if (euler_pair(g, v, u) != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    partial.elements.push_back(v);
    serial_extend(g, ex, partial, out);
    partial.elements.pop_back();
  }
}

}  // namespace

std::vector<Collection> enumerate_sod_bases(const GramForm& g, long bound, EnumOptions opts) {
  const auto ex = serial::enumerate_exceptional(g, bound, opts);
  std::vector<Collection> out;
  Collection partial;
  serial_extend(g, ex, partial, out);
  return out;
}

OrbitReport orbit_bfs(const GramForm& g, const Collection& start, const SearchCaps& caps,
                      bool check_nodes) {
  const std::size_t n = g.rank();
  if (!check_sod_basis(g, start).ok()) {
    throw Error(Errc::NotSODBasis, "orbit start is not a semiorthogonal basis");
  }
  if (caps.max_nodes == 0) throw Error(Errc::CapExceeded, "max_nodes must be positive");

  std::vector<OrbitNode> nodes;
  std::map<Collection, std::size_t> seen;
  OrbitStats stats;

  OrbitNode root;
  root.key = canonicalize(start);
  root.boundary = !detail::within_cap(root.key, caps);
  seen.emplace(root.key, 0);
  nodes.push_back(root);
  stats.level_sizes.push_back(1);
  if (root.boundary) ++stats.boundary;

  std::vector<std::size_t> frontier;
  if (!root.boundary) frontier.push_back(0);

  std::size_t depth = 0;
  while (!frontier.empty() && !stats.truncated_by_nodes) {
    if (depth == caps.max_depth) {
      stats.truncated_by_depth = true;
      break;
    }
    stats.frontier_peak = std::max(stats.frontier_peak, frontier.size());

    std::vector<OrbitNode> level;
    std::set<Collection> level_keys;
    for (std::size_t idx : frontier) {
      ++stats.expanded;
      for (std::size_t gen = 0; gen < 2 * (n - 1); ++gen) {
        const Move mv = detail::generator(gen, n);
        Collection child = nodes[idx].key;
        mutate_in_place(g, child, mv.side, mv.position);
        child = canonicalize(child);
        if (seen.count(child) || level_keys.count(child)) continue;
        if (nodes.size() + level.size() >= caps.max_nodes) {
          stats.truncated_by_nodes = true;
          continue;
        }
        if (check_nodes && !check_sod_basis(g, child).ok()) {
          throw Error(Errc::NotSODBasis, "orbit produced a non-basis");
        }
        OrbitNode node;
        node.key = child;
        node.parent = idx;
        node.move = mv;
        node.depth = depth + 1;
        node.boundary = !detail::within_cap(child, caps);
        level_keys.insert(child);
        level.push_back(std::move(node));
      }
    }
    std::sort(level.begin(), level.end(),
              [](const OrbitNode& a, const OrbitNode& b) { return a.key < b.key; });
    frontier.clear();
    for (auto& node : level) {
      const std::size_t idx = nodes.size();
      seen.emplace(node.key, idx);
      if (node.boundary) {
        ++stats.boundary;
      } else {
        frontier.push_back(idx);
      }
      nodes.push_back(std::move(node));
    }
    if (!level.empty()) stats.level_sizes.push_back(level.size());
    ++depth;
  }
  return OrbitReport(std::move(nodes), std::move(stats));
}

}  // namespace helixlab::serial
