#include "cocoakit/lasso.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "cocoakit/errors.hpp"

namespace cocoakit {

LassoWord parse_lasso(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw Error(ErrorCode::Parse,
                "lasso must contain exactly one '|' between stem and loop");
  auto split = [](std::string_view part) {
    std::vector<std::string> out;
    std::istringstream in{std::string(part)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
  };
  LassoWord w{split(text.substr(0, bar)), split(text.substr(bar + 1))};
  if (w.loop.empty())
    throw Error(ErrorCode::Parse, "lasso loop must not be empty");
  return w;
}

std::string format_lasso(const LassoWord& w) {
  std::string out;
  for (size_t i = 0; i < w.stem.size(); ++i) {
    if (i) out += ' ';
    out += w.stem[i];
  }
  out += '|';
  for (size_t i = 0; i < w.loop.size(); ++i) {
    if (i) out += ' ';
    out += w.loop[i];
  }
  return out;
}

MappedLasso map_lasso(const Alphabet& alphabet, const LassoWord& w) {
  if (w.loop.empty())
    throw Error(ErrorCode::AlphabetMismatch, "lasso loop must not be empty");
  MappedLasso m;
  m.stem.reserve(w.stem.size());
  m.loop.reserve(w.loop.size());
  for (const std::string& s : w.stem) m.stem.push_back(alphabet.require(s));
  for (const std::string& s : w.loop) m.loop.push_back(alphabet.require(s));
  return m;
}

LassoWord unmap_lasso(const Alphabet& alphabet, const MappedLasso& w) {
  LassoWord out;
  out.stem.reserve(w.stem.size());
  out.loop.reserve(w.loop.size());
  for (int x : w.stem) out.stem.push_back(alphabet.symbol(x));
  for (int x : w.loop) out.loop.push_back(alphabet.symbol(x));
  return out;
}

namespace {

void check_symbols(const Automaton& aut, const MappedLasso& w) {
  if (w.loop.empty())
    throw Error(ErrorCode::AlphabetMismatch, "lasso loop must not be empty");
  for (int x : w.stem)
    if (x < 0 || x >= aut.alphabet().size())
      throw Error(ErrorCode::AlphabetMismatch, "lasso symbol out of range");
  for (int x : w.loop)
    if (x < 0 || x >= aut.alphabet().size())
      throw Error(ErrorCode::AlphabetMismatch, "lasso symbol out of range");
}

}  // namespace

int dpw_color(const Automaton& dpw, const MappedLasso& w) {
  if (!is_deterministic(dpw))
    throw Error(ErrorCode::NotDeterministic,
                "dominating colors need a deterministic automaton");
  check_symbols(dpw, w);

  int q = dpw.initial();
  for (int x : w.stem) q = dpw.edges(q, x).front().target;

  // Iterate the loop until a (state, offset) pair repeats; the colors seen
  // between the two visits form the run's eventual cycle.
  int loop_len = static_cast<int>(w.loop.size());
  std::vector<int> first_step(static_cast<size_t>(dpw.state_count()) * loop_len,
                              -1);
  std::vector<int> colors;
  int step = 0;
  while (true) {
    int& mark = first_step[static_cast<size_t>(q) * loop_len + step % loop_len];
    if (mark >= 0) {
      int min_color = colors[mark];
      for (int s = mark + 1; s < step; ++s)
        min_color = std::min(min_color, colors[s]);
      return min_color;
    }
    mark = step;
    const Edge& e = dpw.edges(q, w.loop[step % loop_len]).front();
    colors.push_back(e.color);
    q = e.target;
    ++step;
  }
}

int dpw_color(const Automaton& dpw, const LassoWord& w) {
  return dpw_color(dpw, map_lasso(dpw.alphabet(), w));
}

bool dpw_accepts(const Automaton& dpw, const MappedLasso& w) {
  return dpw_color(dpw, w) % 2 == 0;
}

bool dpw_accepts(const Automaton& dpw, const LassoWord& w) {
  return dpw_accepts(dpw, map_lasso(dpw.alphabet(), w));
}

bool ncw_accepts(const Automaton& ncw, const MappedLasso& w) {
  if (!is_cobuchi(ncw))
    throw Error(ErrorCode::NotCobuchi, "transition colors must lie in {1,2}");
  check_symbols(ncw, w);

  int n = ncw.state_count();
  int loop_len = static_cast<int>(w.loop.size());

  // states reachable at the loop entry, across all runs of the stem
  std::vector<char> now(n, 0), nxt(n, 0);
  now[ncw.initial()] = 1;
  for (int x : w.stem) {
    std::fill(nxt.begin(), nxt.end(), 0);
    for (int q = 0; q < n; ++q)
      if (now[q])
        for (const Edge& e : ncw.edges(q, x)) nxt[e.target] = 1;
    now.swap(nxt);
  }

  // product of states and loop offsets
  auto node = [&](int q, int p) { return q * loop_len + p; };
  int nn = n * loop_len;
  std::vector<char> reach(nn, 0);
  std::vector<int> stack;
  for (int q = 0; q < n; ++q)
    if (now[q]) {
      reach[node(q, 0)] = 1;
      stack.push_back(node(q, 0));
    }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    int q = v / loop_len, p = v % loop_len;
    for (const Edge& e : ncw.edges(q, w.loop[p])) {
      int t = node(e.target, (p + 1) % loop_len);
      if (!reach[t]) {
        reach[t] = 1;
        stack.push_back(t);
      }
    }
  }

  // accepted iff a reachable node lies on a cycle of color-2 edges only;
  // repeated pruning of nodes without an accepting successor leaves exactly
  // the nodes from which an infinite all-accepting path exists
  std::vector<char> alive = reach;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < nn; ++v) {
      if (!alive[v]) continue;
      int q = v / loop_len, p = v % loop_len;
      bool ok = false;
      for (const Edge& e : ncw.edges(q, w.loop[p]))
        if (e.color == 2 && alive[node(e.target, (p + 1) % loop_len)]) {
          ok = true;
          break;
        }
      if (!ok) {
        alive[v] = 0;
        changed = true;
      }
    }
  }
  for (int v = 0; v < nn; ++v)
    if (alive[v]) return true;
  return false;
}

bool ncw_accepts(const Automaton& ncw, const LassoWord& w) {
  return ncw_accepts(ncw, map_lasso(ncw.alphabet(), w));
}

int cocoa_color(const Cocoa& chain, const MappedLasso& w) {
  for (int level = chain.member_count(); level >= 1; --level) {
    const Automaton& member = chain.member(level);
    bool accepted = is_deterministic(member)
                        ? dpw_color(member, w) % 2 == 0
                        : ncw_accepts(member, w);
    if (accepted) return level;
  }
  return 0;
}

int cocoa_color(const Cocoa& chain, const LassoWord& w) {
  return cocoa_color(chain, map_lasso(chain.alphabet(), w));
}

bool cocoa_accepts(const Cocoa& chain, const MappedLasso& w) {
  return cocoa_color(chain, w) % 2 == 0;
}

bool cocoa_accepts(const Cocoa& chain, const LassoWord& w) {
  return cocoa_accepts(chain, map_lasso(chain.alphabet(), w));
}

std::pair<int, int> default_lasso_bounds(int alphabet_size) {
  return alphabet_size <= 8 ? std::pair{2, 3} : std::pair{1, 2};
}

void for_each_lasso(int alphabet_size, int max_stem, int max_loop,
                    const std::function<void(const MappedLasso&)>& fn) {
  if (alphabet_size <= 0)
    throw Error(ErrorCode::Invalid, "alphabet size must be positive");
  MappedLasso w;
  auto advance = [&](std::vector<int>& word) {
    for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i) {
      if (++word[i] < alphabet_size) return true;
      word[i] = 0;
    }
    return false;
  };
  for (int ls = 0; ls <= max_stem; ++ls) {
    w.stem.assign(ls, 0);
    do {
      for (int ll = 1; ll <= max_loop; ++ll) {
        w.loop.assign(ll, 0);
        do {
          fn(w);
        } while (advance(w.loop));
      }
    } while (advance(w.stem));
  }
}

std::uint64_t lasso_count(int alphabet_size, int max_stem, int max_loop) {
  std::uint64_t stems = 0, loops = 0, power = 1;
  for (int i = 0; i <= max_stem; ++i) {
    stems += power;
    power *= alphabet_size;
  }
  power = alphabet_size;
  for (int i = 1; i <= max_loop; ++i) {
    loops += power;
    power *= alphabet_size;
  }
  return stems * loops;
}

std::uint64_t sampling_seed() {
  if (const char* env = std::getenv("COCOAKIT_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

LassoSampler::LassoSampler(int alphabet_size, int max_stem, int max_loop,
                           std::uint64_t seed)
    : alphabet_size_(alphabet_size),
      max_stem_(max_stem),
      max_loop_(max_loop),
      rng_(seed) {
  if (alphabet_size <= 0 || max_loop < 1)
    throw Error(ErrorCode::Invalid, "bad sampler bounds");
}

MappedLasso LassoSampler::next() {
  // plain modulo draws: slightly biased but identical on every platform
  auto draw = [&](int n) { return static_cast<int>(rng_() % n); };
  MappedLasso w;
  w.stem.resize(draw(max_stem_ + 1));
  w.loop.resize(1 + draw(max_loop_));
  for (int& x : w.stem) x = draw(alphabet_size_);
  for (int& x : w.loop) x = draw(alphabet_size_);
  return w;
}

}  // namespace cocoakit
