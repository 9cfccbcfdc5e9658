#ifndef POM_CLIQUE_HPP
#define POM_CLIQUE_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace pom {

/// Exact maximum clique by branch and bound with a greedy colouring bound.
class CliqueSolver {
 public:
  using VertexSet = boost::dynamic_bitset<>;

  explicit CliqueSolver(std::vector<VertexSet> adjacency) : adj_(std::move(adjacency)) {}

  std::size_t vertex_count() const { return adj_.size(); }

  /// Size of a maximum clique inside `candidates`; stops early once `target`
  /// is reached (pass 0 for no early stop).
  std::size_t max_clique_size(const VertexSet& candidates, std::size_t target = 0) const {
    std::size_t best = 0;
    if (candidates.none()) return 0;
    expand(0, candidates, best, target);
    return best;
  }

  std::size_t max_clique_size() const { return max_clique_size(all()); }

  /// The lexicographically least (by ascending vertex list) maximum clique.
  std::vector<std::size_t> lex_least_maximum_clique() const {
    const std::size_t omega = max_clique_size();
    std::vector<std::size_t> chosen;
    VertexSet p = all();
    while (chosen.size() < omega) {
      const std::size_t need = omega - chosen.size();
      bool advanced = false;
      for (std::size_t v = p.find_first(); v != VertexSet::npos; v = p.find_next(v)) {
        VertexSet q = p & adj_[v] & above(v);
        if (1 + max_clique_size(q, need - 1) >= need) {
          chosen.push_back(v);
          p = q;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;  // unreachable for a consistent graph
    }
    return chosen;
  }

 private:
  VertexSet all() const {
    VertexSet s(adj_.size());
    s.set();
    return s;
  }
  VertexSet above(std::size_t v) const {
    VertexSet s(adj_.size());
    for (std::size_t u = v + 1; u < adj_.size(); ++u) s.set(u);
    return s;
  }

  // Greedy sequential colouring; vertices returned sorted by colour.
  void colour(const VertexSet& p, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) const {
    order.clear();
    bound.clear();
    VertexSet uncoloured = p;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      VertexSet q = uncoloured;
      while (q.any()) {
        std::size_t v = q.find_first();
        q.reset(v);
        q -= adj_[v];
        uncoloured.reset(v);
        order.push_back(v);
        bound.push_back(k);
      }
    }
  }

  bool expand(std::size_t size, VertexSet p, std::size_t& best, std::size_t target) const {
    std::vector<std::size_t> order, bound;
    colour(p, order, bound);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best) return false;
      std::size_t v = order[i];
      VertexSet np = p & adj_[v];
      if (np.none()) {
        if (size + 1 > best) best = size + 1;
      } else if (expand(size + 1, np, best, target)) {
        return true;
      }
      if (target != 0 && best >= target) return true;
      p.reset(v);
    }
    return target != 0 && best >= target;
  }

  std::vector<VertexSet> adj_;
};

}  // namespace pom

#endif  // POM_CLIQUE_HPP
