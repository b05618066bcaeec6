// Project configuration files (.gog): groups, subgroups, a graph of groups,
// an optional coset system and experiment parameters.
//
//   [group A]
//   kind=abelian rank=1 names=a
//   [subgroup A2 in A]
//   generators=a^2
//   [graph]
//   vertices=va:A,vb:B
//   edge e: va -> vb subgroup=B3 reverse_subgroup=A2 iso=y1->a^2
//   tree=e
//   [coset]
//   subgroup=A2 mode=synchronous
//   [params]
//   radius=6
//
// The subgroup of an edge lives in the group at its target; iso gives the
// images of its generators as words over the group at its source.

#ifndef HIGGINS_CONFIG_HPP_
#define HIGGINS_CONFIG_HPP_

#include <filesystem>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "higgins/backend.hpp"
#include "higgins/cascade.hpp"
#include "higgins/coset_system.hpp"
#include "higgins/graph_of_groups.hpp"

namespace higgins {

  struct SubgroupDecl {
    std::string                            group;
    std::shared_ptr<SubgroupContext const> context;
  };

  struct CosetDecl {
    std::optional<std::string> subgroup;
    std::optional<std::string> edge;
    Mode                       mode = Mode::synchronous;
  };

  struct ProjectConfig {
    std::vector<std::string>                                   group_order;
    std::map<std::string, std::shared_ptr<GroupBackend const>> groups;
    std::map<std::string, SubgroupDecl>                        subgroups;
    std::shared_ptr<GraphOfGroups>                             gog;
    std::optional<SpanningTree>                                tree;
    std::optional<CosetDecl>                                   coset;
    std::map<std::string, std::string>                         params;
    // Graph data that parsed but could not be assembled (e.g. an edge
    // isomorphism without an inverse).
    std::vector<std::string> problems;

    std::size_t param(std::string const& key, std::size_t fallback) const;
    // problems followed by the graph of groups validation failures
    std::vector<std::string> validate() const;
    // Throws unless the config has a valid graph of groups.
    std::shared_ptr<Pi1 const> pi1() const;
    // The [coset] system, built over pi1 when it names an edge.
    CosetSystem coset_system() const;
  };

  // Throws ParseError with the line number on malformed or dangling input.
  // Relative table paths resolve against base_dir.
  ProjectConfig parse_config(std::istream&                in,
                             std::filesystem::path const& base_dir = ".");
  ProjectConfig load_config(std::filesystem::path const& path);

  Mode parse_mode(std::string const& text);

}  // namespace higgins

#endif  // HIGGINS_CONFIG_HPP_
