#ifndef RCC5_SCC_HPP
#define RCC5_SCC_HPP

#include <utility>
#include <vector>

namespace rcc5 {

/// Tarjan's strongly connected components, iterative so deep chains do
/// not overflow the call stack. Returns a component id per node.
/// Components are numbered in the order Tarjan completes them, which is
/// reverse topological order of the condensation.
inline std::vector<int> strongly_connected_components(
    const std::vector<std::vector<int>>& graph, int& component_count) {
  int n = static_cast<int>(graph.size());
  std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int next_num = 0;
  component_count = 0;

  // Explicit DFS frames: (node, next successor index).
  std::vector<std::pair<int, size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      auto& [v, i] = frames.back();
      if (i == 0) {
        num[v] = low[v] = next_num++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (i < graph[v].size()) {
        int w = graph[v][i++];
        if (num[w] == -1) {
          frames.emplace_back(w, 0);
        } else if (on_stack[w] && low[v] > num[w]) {
          low[v] = num[w];
        }
      } else {
        if (low[v] == num[v]) {
          int c = component_count++;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = c;
          } while (w != v);
        }
        int done = v;
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().first;
          if (low[parent] > low[done]) low[parent] = low[done];
        }
      }
    }
  }
  return comp;
}

}  // namespace rcc5

#endif  // RCC5_SCC_HPP
