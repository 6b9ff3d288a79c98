#ifndef COCOAKIT_GRAPH_INTERNAL_HPP
#define COCOAKIT_GRAPH_INTERNAL_HPP

#include <vector>

namespace cocoakit::internal {

/// Iterative Tarjan decomposition. Returns the component id per node;
/// components are numbered so that ids ascend with their least member
/// (deterministic output order).
std::vector<int> tarjan_components(int n,
                                   const std::vector<std::vector<int>>& adj,
                                   int* component_count);

}  // namespace cocoakit::internal

#endif
