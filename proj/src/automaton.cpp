#include "cocoakit/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "graph_internal.hpp"

namespace cocoakit::internal {

std::vector<int> tarjan_components(int n,
                                   const std::vector<std::vector<int>>& adj,
                                   int* component_count) {
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int node;
    size_t edge;
  };
  std::vector<Frame> frames;

  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.node;
      if (f.edge < adj[v].size()) {
        int w = adj[v][f.edge++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
        frames.pop_back();
        if (!frames.empty()) {
          int parent = frames.back().node;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }

  // renumber by least member
  std::vector<int> least(next_comp, n);
  for (int v = 0; v < n; ++v) least[comp[v]] = std::min(least[comp[v]], v);
  std::vector<int> order(next_comp);
  for (int c = 0; c < next_comp; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return least[a] < least[b]; });
  std::vector<int> rank(next_comp);
  for (int r = 0; r < next_comp; ++r) rank[order[r]] = r;
  for (int v = 0; v < n; ++v) comp[v] = rank[comp[v]];
  *component_count = next_comp;
  return comp;
}

}  // namespace cocoakit::internal

namespace cocoakit {

Automaton::Automaton(Alphabet alphabet, int state_count, int initial,
                     std::vector<std::vector<Edge>> entries,
                     std::vector<std::string> labels)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial),
      entries_(std::move(entries)),
      labels_(std::move(labels)) {
  if (state_count_ <= 0)
    throw Error(ErrorCode::Invalid, "state count must be positive");
  if (initial_ < 0 || initial_ >= state_count_)
    throw Error(ErrorCode::Invalid, "initial state out of range");
  if (static_cast<int>(entries_.size()) != state_count_ * alphabet_.size())
    throw Error(ErrorCode::Invalid, "transition table has the wrong shape");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != state_count_)
    throw Error(ErrorCode::Invalid, "label list has the wrong length");
  for (auto& cell : entries_) {
    for (const Edge& e : cell) {
      if (e.target < 0 || e.target >= state_count_)
        throw Error(ErrorCode::Invalid, "transition target out of range");
      if (e.color < 0)
        throw Error(ErrorCode::Invalid, "negative transition color");
    }
    // set semantics of the transition relation
    std::sort(cell.begin(), cell.end());
    cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
  }
}

std::vector<int> Automaton::color_set() const {
  std::set<int> colors;
  for (const auto& cell : entries_)
    for (const Edge& e : cell) colors.insert(e.color);
  return {colors.begin(), colors.end()};
}

int Automaton::max_color() const {
  int m = 0;
  for (const auto& cell : entries_)
    for (const Edge& e : cell) m = std::max(m, e.color);
  return m;
}

AutomatonBuilder::AutomatonBuilder(Alphabet alphabet, int state_count,
                                   int initial)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      initial_(initial) {
  if (state_count_ <= 0)
    throw Error(ErrorCode::Invalid, "state count must be positive");
  entries_.resize(static_cast<size_t>(state_count_) * alphabet_.size());
  labels_.resize(state_count_);
}

AutomatonBuilder& AutomatonBuilder::add_edge(int src, int symbol, int color,
                                             int target) {
  if (src < 0 || src >= state_count_)
    throw Error(ErrorCode::Invalid, "transition source out of range");
  if (symbol < 0 || symbol >= alphabet_.size())
    throw Error(ErrorCode::Invalid, "transition symbol out of range");
  entries_[static_cast<size_t>(src) * alphabet_.size() + symbol].push_back(
      Edge{target, color});
  return *this;
}

AutomatonBuilder& AutomatonBuilder::add_edge(int src, std::string_view symbol,
                                             int color, int target) {
  return add_edge(src, alphabet_.require(symbol), color, target);
}

AutomatonBuilder& AutomatonBuilder::set_label(int state, std::string label) {
  labels_.at(state) = std::move(label);
  any_label_ = true;
  return *this;
}

Automaton AutomatonBuilder::build() && {
  return Automaton(std::move(alphabet_), state_count_, initial_,
                   std::move(entries_),
                   any_label_ ? std::move(labels_)
                              : std::vector<std::string>{});
}

std::string Diagnostic::message(const Alphabet& alphabet) const {
  const char* what = kind == DiagnosticKind::InputIncomplete
                         ? "INPUT_INCOMPLETE"
                         : "NON_UNIFORM_COLOR";
  return std::string(what) + " at (" + std::to_string(state) + ",'" +
         alphabet.symbol(symbol) + "')";
}

std::vector<Diagnostic> validate_automaton(const Automaton& aut) {
  std::vector<Diagnostic> out;
  for (int q = 0; q < aut.state_count(); ++q) {
    for (int x = 0; x < aut.alphabet().size(); ++x) {
      auto es = aut.edges(q, x);
      if (es.empty()) {
        out.push_back({DiagnosticKind::InputIncomplete, q, x});
        continue;
      }
      for (const Edge& e : es) {
        if (e.color != es.front().color) {
          out.push_back({DiagnosticKind::NonUniformColor, q, x});
          break;
        }
      }
    }
  }
  return out;
}

bool is_deterministic(const Automaton& aut) {
  for (int q = 0; q < aut.state_count(); ++q)
    for (int x = 0; x < aut.alphabet().size(); ++x)
      if (aut.edges(q, x).size() != 1) return false;
  return true;
}

bool is_cobuchi(const Automaton& aut) {
  for (int q = 0; q < aut.state_count(); ++q)
    for (int x = 0; x < aut.alphabet().size(); ++x)
      for (const Edge& e : aut.edges(q, x))
        if (e.color != 1 && e.color != 2) return false;
  return true;
}

namespace {

std::vector<int> reachable_states(const Automaton& aut) {
  std::vector<char> seen(aut.state_count(), 0);
  std::vector<int> stack{aut.initial()};
  seen[aut.initial()] = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int x = 0; x < aut.alphabet().size(); ++x)
      for (const Edge& e : aut.edges(q, x))
        if (!seen[e.target]) {
          seen[e.target] = 1;
          stack.push_back(e.target);
        }
  }
  std::vector<int> out;
  for (int q = 0; q < aut.state_count(); ++q)
    if (seen[q]) out.push_back(q);
  return out;
}

}  // namespace

Automaton reachable_restrict(const Automaton& aut) {
  std::vector<int> keep = reachable_states(aut);
  std::vector<int> remap(aut.state_count(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) remap[keep[i]] = i;

  int n = static_cast<int>(keep.size());
  std::vector<std::vector<Edge>> entries(static_cast<size_t>(n) *
                                         aut.alphabet().size());
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < aut.alphabet().size(); ++x) {
      auto& cell = entries[static_cast<size_t>(i) * aut.alphabet().size() + x];
      for (const Edge& e : aut.edges(keep[i], x))
        cell.push_back(Edge{remap[e.target], e.color});
    }
  }
  std::vector<std::string> labels;
  if (aut.has_labels()) {
    labels.reserve(n);
    for (int q : keep) labels.push_back(aut.label(q));
  }
  return Automaton(aut.alphabet(), n, remap[aut.initial()], std::move(entries),
                   std::move(labels));
}

Automaton rename_letters(
    const Automaton& aut,
    const std::vector<std::pair<std::string, std::string>>& mapping) {
  const Alphabet& ab = aut.alphabet();
  std::vector<int> image(ab.size(), -1);
  std::vector<char> hit(ab.size(), 0);
  for (const auto& [from, to] : mapping) {
    int f = ab.index_of(from);
    int t = ab.index_of(to);
    if (f < 0 || t < 0)
      throw Error(ErrorCode::NotBijective,
                  "mapping mentions a symbol outside the alphabet");
    if (image[f] >= 0)
      throw Error(ErrorCode::NotBijective, "symbol '" + from + "' mapped twice");
    if (hit[t])
      throw Error(ErrorCode::NotBijective, "symbol '" + to + "' hit twice");
    image[f] = t;
    hit[t] = 1;
  }
  for (int i = 0; i < ab.size(); ++i)
    if (image[i] < 0)
      throw Error(ErrorCode::NotBijective,
                  "symbol '" + ab.symbol(i) + "' is not mapped");

  // delta'(q, image(x)) = delta(q, x)
  std::vector<std::vector<Edge>> entries(
      static_cast<size_t>(aut.state_count()) * ab.size());
  for (int q = 0; q < aut.state_count(); ++q)
    for (int x = 0; x < ab.size(); ++x) {
      auto src = aut.edges(q, x);
      auto& cell = entries[static_cast<size_t>(q) * ab.size() + image[x]];
      cell.assign(src.begin(), src.end());
    }
  return Automaton(ab, aut.state_count(), aut.initial(), std::move(entries),
                   aut.labels());
}

bool Scc::contains(int state) const {
  return std::binary_search(states.begin(), states.end(), state);
}

namespace {

std::vector<Scc> decompose_impl(const Automaton& aut,
                                const std::vector<char>& symbol_allowed,
                                const std::vector<char>& state_allowed) {
  int n = aut.state_count();
  std::vector<std::vector<int>> adj(n);
  for (int q = 0; q < n; ++q) {
    if (!state_allowed[q]) continue;
    for (int x = 0; x < aut.alphabet().size(); ++x) {
      if (!symbol_allowed[x]) continue;
      for (const Edge& e : aut.edges(q, x))
        if (state_allowed[e.target]) adj[q].push_back(e.target);
    }
  }
  int comp_count = 0;
  std::vector<int> comp = internal::tarjan_components(n, adj, &comp_count);

  std::vector<Scc> sccs(comp_count);
  for (int q = 0; q < n; ++q)
    if (state_allowed[q]) sccs[comp[q]].states.push_back(q);
  for (int q = 0; q < n; ++q) {
    if (!state_allowed[q]) continue;
    for (int x = 0; x < aut.alphabet().size(); ++x) {
      if (!symbol_allowed[x]) continue;
      for (const Edge& e : aut.edges(q, x))
        if (state_allowed[e.target] && comp[e.target] == comp[q])
          sccs[comp[q]].transitions.push_back({q, x, e.target, e.color});
    }
  }
  std::vector<Scc> out;
  for (Scc& s : sccs) {
    if (s.states.empty()) continue;
    if (s.states.size() == 1 && s.transitions.empty()) continue;  // trivial
    std::sort(s.transitions.begin(), s.transitions.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<Scc> scc_decompose(const Automaton& aut,
                               const std::vector<int>& allowed_symbols) {
  std::vector<char> symbol_allowed(aut.alphabet().size(), 0);
  for (int x : allowed_symbols) {
    if (x < 0 || x >= aut.alphabet().size())
      throw Error(ErrorCode::AlphabetMismatch, "symbol index out of range");
    symbol_allowed[x] = 1;
  }
  std::vector<char> state_allowed(aut.state_count(), 1);
  return decompose_impl(aut, symbol_allowed, state_allowed);
}

std::vector<Scc> scc_decompose(const Automaton& aut) {
  std::vector<int> all(aut.alphabet().size());
  for (int x = 0; x < aut.alphabet().size(); ++x) all[x] = x;
  return scc_decompose(aut, all);
}

std::vector<Scc> terminal_sccs(const Automaton& aut) {
  std::vector<Scc> all = scc_decompose(aut);
  std::vector<Scc> out;
  for (Scc& s : all) {
    bool leaves = false;
    for (int q : s.states) {
      for (int x = 0; x < aut.alphabet().size() && !leaves; ++x)
        for (const Edge& e : aut.edges(q, x))
          if (!s.contains(e.target)) {
            leaves = true;
            break;
          }
      if (leaves) break;
    }
    if (!leaves) out.push_back(std::move(s));
  }
  return out;
}

bool same_structure(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet()) return false;
  if (a.state_count() != b.state_count() || a.initial() != b.initial())
    return false;
  for (int q = 0; q < a.state_count(); ++q)
    for (int x = 0; x < a.alphabet().size(); ++x) {
      auto ea = a.edges(q, x);
      auto eb = b.edges(q, x);
      if (!std::equal(ea.begin(), ea.end(), eb.begin(), eb.end()))
        return false;
    }
  return true;
}

}  // namespace cocoakit
