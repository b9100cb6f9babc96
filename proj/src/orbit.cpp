#include "helixlab/orbit.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_set>

#include "orbit_common.hpp"

namespace helixlab {

OrbitReport::OrbitReport(std::vector<OrbitNode> nodes, OrbitStats stats)
    : nodes_(std::move(nodes)), stats_(std::move(stats)) {
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i].key, i);
}

std::optional<std::size_t> OrbitReport::find(const Collection& canonical) const {
  auto it = index_.find(canonical);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

BraidWord OrbitReport::witness(std::size_t i) const {
  std::vector<Move> rev;
  while (nodes_.at(i).parent != OrbitNode::kNoParent) {
    rev.push_back(nodes_[i].move);
    i = nodes_[i].parent;
  }
  return BraidWord(std::vector<Move>(rev.rbegin(), rev.rend()));
}

std::optional<BraidWord> OrbitReport::witness(const Collection& canonical) const {
  auto i = find(canonical);
  if (!i) return std::nullopt;
  return witness(*i);
}

namespace {

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// Decodes the t-th point of the box [-bound, bound]^n in lexicographic order.
void decode(std::size_t t, long bound, KVector& u) {
  const std::size_t side = 2 * static_cast<std::size_t>(bound) + 1;
  for (std::size_t i = u.size(); i > 0; --i) {
    u[i - 1] = static_cast<long>(t % side) - bound;
    t /= side;
  }
}

}  // namespace

std::vector<KVector> enumerate_exceptional(const GramForm& g, long bound, EnumOptions opts) {
  const std::size_t n = g.rank();
  const std::size_t volume = detail::scan_volume(bound, n, opts.max_candidates);
  if (bound == 0 || n == 0) return {};

  const int threads = thread_count(opts.workers);
  const std::size_t chunks = std::min<std::size_t>(volume, static_cast<std::size_t>(threads) * 16);
  std::vector<std::vector<KVector>> found(chunks);

#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::size_t ch = 0; ch < chunks; ++ch) {
    const std::size_t lo = volume * ch / chunks;
    const std::size_t hi = volume * (ch + 1) / chunks;
    KVector u(n);
    for (std::size_t t = lo; t < hi; ++t) {
      decode(t, bound, u);
      if (detail::first_nonzero_positive(u) && is_exceptional(g, u)) found[ch].push_back(u);
    }
  }

  std::vector<KVector> out;
  for (auto& part : found)
    for (auto& v : part) out.push_back(std::move(v));
  return out;
}

namespace {

// follows[j] lists i such that ex[i] may follow ex[j], i.e. chi(ex[i], ex[j]) = 0.
struct Compatibility {
  std::vector<std::vector<char>> may_follow;  // may_follow[i][j]: ex[i] after ex[j]
};

void extend(const std::vector<KVector>& ex, const Compatibility& comp, std::size_t n,
            std::vector<std::size_t>& chosen, std::vector<Collection>& out) {
  if (chosen.size() == n) {
    Collection c;
    for (std::size_t i : chosen) c.elements.push_back(ex[i]);
    if (abs_value(coordinate_matrix(c).determinant()) == 1) out.push_back(std::move(c));
    return;
  }
  for (std::size_t v = 0; v < ex.size(); ++v) {
    bool ok = true;
    for (std::size_t u : chosen) {
      if (!comp.may_follow[v][u]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(v);
    extend(ex, comp, n, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<Collection> enumerate_sod_bases(const GramForm& g, long bound, EnumOptions opts) {
  const std::size_t n = g.rank();
  const auto ex = enumerate_exceptional(g, bound, opts);
  if (ex.empty()) return {};
  const int threads = thread_count(opts.workers);
  const std::size_t m = ex.size();

  Compatibility comp;
  comp.may_follow.assign(m, std::vector<char>(m, 0));
#pragma omp parallel for num_threads(threads) schedule(dynamic, 4)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) comp.may_follow[i][j] = euler_pair(g, ex[i], ex[j]) == 0;

  std::vector<std::vector<Collection>> per_first(m);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (std::size_t first = 0; first < m; ++first) {
    std::vector<std::size_t> chosen{first};
    extend(ex, comp, n, chosen, per_first[first]);
  }

  std::vector<Collection> out;
  for (auto& part : per_first)
    for (auto& c : part) out.push_back(std::move(c));
  return out;
}

OrbitReport orbit_bfs(const GramForm& g, const Collection& start, const SearchCaps& caps,
                      OrbitOptions opts) {
  const std::size_t n = g.rank();
  if (!check_sod_basis(g, start).ok()) {
    throw Error(Errc::NotSODBasis, "orbit start is not a semiorthogonal basis");
  }
  if (caps.max_nodes == 0) throw Error(Errc::CapExceeded, "max_nodes must be positive");
  const int threads = thread_count(opts.workers);
  const std::size_t gens = 2 * (n - 1);

  std::vector<OrbitNode> nodes;
  std::unordered_set<Collection, CollectionHash> seen;
  OrbitStats stats;

  OrbitNode root;
  root.key = canonicalize(start);
  root.boundary = !detail::within_cap(root.key, caps);
  seen.insert(root.key);
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
    stats.expanded += frontier.size();

    // Expansion: each slot is written by exactly one iteration.
    std::vector<Collection> children(frontier.size() * gens);
    std::vector<char> bad(frontier.size(), 0);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 8)
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      const Collection& parent = nodes[frontier[f]].key;
      for (std::size_t gen = 0; gen < gens; ++gen) {
        const Move mv = detail::generator(gen, n);
        Collection child = parent;
        mutate_in_place(g, child, mv.side, mv.position);
        for (auto& e : child.elements) {
          if (!detail::first_nonzero_positive(e)) e = -e;
        }
        if (opts.check_nodes && !check_sod_basis(g, child).ok()) bad[f] = 1;
        children[f * gens + gen] = std::move(child);
      }
    }
    if (std::find(bad.begin(), bad.end(), 1) != bad.end()) {
      throw Error(Errc::NotSODBasis, "orbit produced a non-basis");
    }

    // Merge in (parent order, generator order), then sort the new level.
    std::vector<OrbitNode> level;
    std::unordered_set<Collection, CollectionHash> level_keys;
    for (std::size_t slot = 0; slot < children.size(); ++slot) {
      Collection& child = children[slot];
      if (seen.count(child) || level_keys.count(child)) continue;
      if (nodes.size() + level.size() >= caps.max_nodes) {
        stats.truncated_by_nodes = true;
        continue;
      }
      OrbitNode node;
      node.parent = frontier[slot / gens];
      node.move = detail::generator(slot % gens, n);
      node.depth = depth + 1;
      node.boundary = !detail::within_cap(child, caps);
      level_keys.insert(child);
      node.key = std::move(child);
      level.push_back(std::move(node));
    }
    std::sort(level.begin(), level.end(),
              [](const OrbitNode& a, const OrbitNode& b) { return a.key < b.key; });
    frontier.clear();
    for (auto& node : level) {
      const std::size_t idx = nodes.size();
      seen.insert(node.key);
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

SearchCaps default_caps_for(long bound, SearchCaps caps) {
  if (!caps.height_cap) caps.height_cap = Integer(4 * bound);
  return caps;
}

TransitivityReport transitivity_report(const GramForm& g, long bound, SearchCaps caps,
                                       OrbitOptions opts, EnumOptions enum_opts) {
  TransitivityReport rep;
  rep.bound = bound;
  rep.caps = default_caps_for(bound, caps);

  const auto ex = enumerate_exceptional(g, bound, enum_opts);
  rep.exceptional_count = ex.size();
  rep.bases = enumerate_sod_bases(g, bound, enum_opts);

  std::unordered_set<KVector, KVectorHash> used;
  for (const auto& b : rep.bases)
    for (const auto& e : b.elements) used.insert(e);
  rep.exceptional_in_bases = used.size();

  const OrbitReport orbit = orbit_bfs(g, reference_basis(g.rank()), rep.caps, opts);
  rep.orbit = orbit.stats();
  rep.orbit_size = orbit.size();
  for (const auto& b : rep.bases) {
    if (auto i = orbit.find(b)) {
      rep.reached.emplace_back(b, orbit.witness(*i));
    } else {
      rep.unreached.push_back(b);
    }
  }
  if (rep.unreached.empty()) {
    rep.verdict = TransitivityVerdict::Transitive;
  } else if (orbit.truncated()) {
    rep.verdict = TransitivityVerdict::Inconclusive;
  } else {
    rep.verdict = TransitivityVerdict::NotReached;
  }
  return rep;
}

}  // namespace helixlab
