#include "higgins/backend.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "higgins/error.hpp"

namespace higgins {

  std::size_t GroupBackend::geodesic_length(Word const& w) const {
    Word target = canonical(w);
    if (canonical_is_shortlex()) {
      return target.size();
    }
    if (target.empty()) {
      return 0;
    }
    // breadth-first search; the distance is at most |w|
    Alphabet const&                       A = alphabet();
    std::unordered_set<Word, WordHash>    seen = {Word{}};
    std::vector<Word>                     layer = {Word{}};
    for (std::size_t d = 1; d <= w.size(); ++d) {
      std::vector<Word> next;
      for (auto const& g : layer) {
        for (Letter x = 0; x < A.size(); ++x) {
          Word h = canonical(concat(g, Word{x}));
          if (h == target) {
            return d;
          }
          if (seen.insert(h).second) {
            next.push_back(std::move(h));
          }
        }
      }
      layer = std::move(next);
    }
    return w.size();
  }

  std::vector<Word> GroupBackend::ball(std::size_t r) const {
    Alphabet const&                    A = alphabet();
    std::unordered_set<Word, WordHash> seen = {Word{}};
    std::vector<Word>                  result = {Word{}};
    std::vector<Word>                  layer  = {Word{}};
    for (std::size_t d = 1; d <= r; ++d) {
      std::vector<Word> next;
      for (auto const& g : layer) {
        for (Letter x = 0; x < A.size(); ++x) {
          Word h = canonical(concat(g, Word{x}));
          if (seen.insert(h).second) {
            next.push_back(std::move(h));
          }
        }
      }
      std::sort(next.begin(), next.end(), ShortlexLess{});
      result.insert(result.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return result;
  }

  Language GroupBackend::canonical_language() const {
    return Language(
        alphabet(),
        [this](Word const& w) { return canonical(w) == w; },
        nullptr,
        canonical_is_shortlex());
  }

  TrivialSubgroup::TrivialSubgroup(std::shared_ptr<GroupBackend const> parent)
      : _parent(std::move(parent)) {}

  Word TrivialSubgroup::h_express(Word const& g) const {
    if (!member(g)) {
      throw Error("element is not in the trivial subgroup");
    }
    return {};
  }

  bool bfs_express(SubgroupContext const& ctx,
                   Word const&            g,
                   std::size_t            max_length,
                   Word&                  out) {
    GroupBackend const& G      = ctx.parent();
    Alphabet const&     Y      = ctx.subgroup_alphabet();
    Word                target = G.canonical(g);
    if (target.empty()) {
      out.clear();
      return true;
    }
    // parent canonical form -> Y-word reaching it
    std::unordered_map<Word, Word, WordHash> seen;
    seen.emplace(Word{}, Word{});
    std::vector<Word> layer = {Word{}};
    for (std::size_t d = 1; d <= max_length && !layer.empty(); ++d) {
      std::vector<Word> next;
      for (auto const& key : layer) {
        Word const yw = seen.at(key);
        for (Letter y = 0; y < Y.size(); ++y) {
          Word h = G.canonical(concat(key, ctx.evaluate(Word{y})));
          if (seen.count(h)) {
            continue;
          }
          Word v = yw;
          v.push_back(y);
          if (h == target) {
            out = std::move(v);
            return true;
          }
          seen.emplace(h, std::move(v));
          next.push_back(std::move(h));
        }
      }
      layer = std::move(next);
    }
    return false;
  }

}  // namespace higgins
