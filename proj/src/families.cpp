#include "cocoakit/families.hpp"

#include <algorithm>
#include <set>

#include "cocoakit/ops.hpp"

namespace cocoakit {

namespace {

void require_level(int k, int level, const char* what) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "k must be positive");
  if (level < 0 || level > k)
    throw Error(ErrorCode::IndexOutOfRange,
                std::string(what) + " level must lie in 0..k");
}

}  // namespace

Alphabet prop1_alphabet(int k) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "k must be positive");
  std::vector<std::string> symbols;
  for (int m = 1; m <= k; ++m) symbols.push_back(std::to_string(m));
  return Alphabet(std::move(symbols));
}

Alphabet def2_alphabet(int k) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "k must be positive");
  std::vector<std::string> symbols;
  for (int i = 1; i <= k + 1; ++i) symbols.push_back("x_" + std::to_string(i));
  for (int i = 1; i <= k + 1; ++i) symbols.push_back("y_" + std::to_string(i));
  return Alphabet(std::move(symbols));
}

Alphabet def3_alphabet(int k) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "k must be positive");
  std::vector<std::string> symbols;
  for (int i = 1; i <= k; ++i) symbols.push_back("X_" + std::to_string(i));
  for (int i = 1; i <= k; ++i) symbols.push_back("Y_" + std::to_string(i));
  for (int m = 0; m < 4 * k; ++m) symbols.push_back("a_" + std::to_string(m));
  return Alphabet(std::move(symbols));
}

Automaton gen_prop1_dpw(int k) {
  Alphabet ab = prop1_alphabet(k);
  AutomatonBuilder b(ab, 1, 0);
  for (int m = 1; m <= k; ++m) b.add_edge(0, m - 1, m, 0);
  b.set_label(0, "q0");
  return std::move(b).build();
}

Cocoa gen_prop1_cocoa(int k) {
  Alphabet ab = prop1_alphabet(k);
  std::vector<Automaton> members;
  for (int level = 1; level <= k; ++level) {
    AutomatonBuilder b(ab, 1, 0);
    for (int m = 1; m <= k; ++m) b.add_edge(0, m - 1, m >= level ? 2 : 1, 0);
    members.push_back(std::move(b).build());
  }
  return Cocoa(std::move(members));
}

Cocoa gen_cocoa_C(int k) {
  Alphabet ab = def2_alphabet(k);
  std::vector<Automaton> members;
  for (int j = 1; j <= k; ++j) {
    // state 0 = "x_1..x_j not seen since the last y-reset", state 1 dually;
    // the word is rejected iff the run toggles forever
    AutomatonBuilder b(ab, 2, 0);
    b.set_label(0, "p").set_label(1, "q");
    for (int x = 0; x < ab.size(); ++x) {
      const std::string& sym = ab.symbol(x);
      bool x_trigger = sym[0] == 'x' && std::stoi(sym.substr(2)) <= j;
      bool y_trigger = sym[0] == 'y' && std::stoi(sym.substr(2)) <= j;
      if (x_trigger)
        b.add_edge(0, x, 1, 1);
      else
        b.add_edge(0, x, 2, 0);
      if (y_trigger)
        b.add_edge(1, x, 1, 0);
      else
        b.add_edge(1, x, 2, 1);
    }
    members.push_back(std::move(b).build());
  }
  return Cocoa(std::move(members));
}

bool lasso_in_C_member(int k, int j, const LassoWord& w) {
  if (k < 1 || j < 1 || j > k)
    throw Error(ErrorCode::IndexOutOfRange, "member level must lie in 1..k");
  bool x_hit = false, y_hit = false;
  for (const std::string& sym : w.loop) {
    if (sym.size() < 3 || sym[1] != '_') continue;
    int idx = std::stoi(sym.substr(2));
    if (sym[0] == 'x' && idx <= j) x_hit = true;
    if (sym[0] == 'y' && idx <= j) y_hit = true;
  }
  return !x_hit || !y_hit;
}

Automaton gen_dcw_L(int k, int i) {
  require_level(k, i, "window");
  Alphabet ab = def3_alphabet(k);
  if (i == 0) return universal_cobuchi(ab);

  AutomatonBuilder b(ab, 2, 0);
  b.set_label(0, "even").set_label(1, "odd");
  std::string flip = "X_" + std::to_string(i);
  for (int x = 0; x < ab.size(); ++x) {
    const std::string& sym = ab.symbol(x);
    if (sym == flip) {
      b.add_edge(0, x, 1, 1);
      b.add_edge(1, x, 1, 0);
      continue;
    }
    int m = sym[0] == 'a' ? std::stoi(sym.substr(2)) : -1;
    b.add_edge(0, x, m >= 0 && m <= 4 * k - 2 * i + 1 ? 2 : 1, 0);
    b.add_edge(1, x, m >= 0 && m <= 4 * k - 2 * i ? 2 : 1, 1);
  }
  return std::move(b).build();
}

Automaton gen_dcw_Lhat(int k, int j) {
  require_level(k, j, "window");
  Alphabet ab = def3_alphabet(k);
  if (j == 0) return universal_cobuchi(ab);

  AutomatonBuilder b(ab, 2, 0);
  b.set_label(0, "even").set_label(1, "odd");
  std::string flip = "Y_" + std::to_string(j);
  for (int x = 0; x < ab.size(); ++x) {
    const std::string& sym = ab.symbol(x);
    if (sym == flip) {
      b.add_edge(0, x, 1, 1);
      b.add_edge(1, x, 1, 0);
      continue;
    }
    int m = sym[0] == 'a' ? std::stoi(sym.substr(2)) : -1;
    b.add_edge(0, x, m >= 2 * j - 2 ? 2 : 1, 0);
    b.add_edge(1, x, m >= 2 * j - 1 ? 2 : 1, 1);
  }
  return std::move(b).build();
}

namespace {

// loop letter set as (has upper-case or unknown letter, min a-index, max a-index)
struct LoopLetters {
  bool pure_a = true;
  int min_a = -1;
  int max_a = -1;
};

LoopLetters loop_letters(const LassoWord& w) {
  LoopLetters out;
  for (const std::string& sym : w.loop) {
    if (sym.size() >= 3 && sym[0] == 'a' && sym[1] == '_') {
      int m = std::stoi(sym.substr(2));
      out.min_a = out.min_a < 0 ? m : std::min(out.min_a, m);
      out.max_a = std::max(out.max_a, m);
    } else {
      out.pure_a = false;
    }
  }
  return out;
}

int stem_count(const LassoWord& w, const std::string& sym) {
  return static_cast<int>(std::count(w.stem.begin(), w.stem.end(), sym));
}

}  // namespace

bool lasso_in_L(int k, int i, const LassoWord& w) {
  require_level(k, i, "window");
  if (i == 0) return true;
  LoopLetters v = loop_letters(w);
  if (!v.pure_a) return false;
  // the loop is all lower-case, so the total X_i count is the stem count
  bool even_flips = stem_count(w, "X_" + std::to_string(i)) % 2 == 0;
  if (v.max_a <= 4 * k - 2 * i + 1 && even_flips) return true;
  return v.max_a <= 4 * k - 2 * i;
}

bool lasso_in_Lhat(int k, int j, const LassoWord& w) {
  require_level(k, j, "window");
  if (j == 0) return true;
  LoopLetters v = loop_letters(w);
  if (!v.pure_a) return false;
  bool even_flips = stem_count(w, "Y_" + std::to_string(j)) % 2 == 0;
  if (v.min_a >= 2 * j - 2 && even_flips) return true;
  return v.min_a >= 2 * j - 1;
}

IndexPair greatest_pair(int k, const LassoWord& w) {
  IndexPair out{0, 0};
  for (int i = 1; i <= k; ++i)
    if (lasso_in_L(k, i, w)) out.i = i;
  for (int j = 1; j <= k; ++j)
    if (lasso_in_Lhat(k, j, w)) out.j = j;
  return out;
}

Automaton gen_dpw_P(int k) {
  Alphabet ab = def3_alphabet(k);
  int n = 1 << k;
  AutomatonBuilder b(ab, n, 0);
  for (int q = 0; q < n; ++q) {
    std::string bits;
    for (int i = 1; i <= k; ++i) bits += (q >> (i - 1)) & 1 ? '1' : '0';
    b.set_label(q, bits);
    for (int x = 0; x < ab.size(); ++x) {
      const std::string& sym = ab.symbol(x);
      int target = q, color;
      if (sym[0] == 'X' || sym[0] == 'Y') {
        if (sym[0] == 'X') target = q ^ (1 << (std::stoi(sym.substr(2)) - 1));
        color = 0;
      } else {
        int m = std::stoi(sym.substr(2));
        if (m < 2 * k) {
          color = k;
        } else if (m % 2 == 0) {
          color = (4 * k - m) / 2;
        } else {
          int i = (4 * k - m + 1) / 2;
          color = (q >> (i - 1)) & 1 ? i - 1 : i;
        }
      }
      b.add_edge(q, x, color, target);
    }
  }
  return std::move(b).build();
}

Automaton gen_dpw_Phat(int k) {
  std::vector<std::pair<std::string, std::string>> swap;
  for (int i = 1; i <= k; ++i) {
    swap.emplace_back("X_" + std::to_string(i), "Y_" + std::to_string(i));
    swap.emplace_back("Y_" + std::to_string(i), "X_" + std::to_string(i));
  }
  for (int m = 0; m < 4 * k; ++m)
    swap.emplace_back("a_" + std::to_string(m),
                      "a_" + std::to_string(4 * k - 1 - m));
  return rename_letters(gen_dpw_P(k), swap);
}

std::vector<IndexPair> gamma(int k, int u) {
  if (k < 1 || u < 0 || u > 2 * k)
    throw Error(ErrorCode::IndexOutOfRange, "level must lie in 0..2k");
  std::vector<IndexPair> out;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= k; ++j) {
      if (u % 2 == 0) {
        if (i + j == u && i % 2 == 0 && j % 2 == 0) out.push_back({i, j});
      } else {
        if (i + j >= u && i + j <= u + 1 && (i % 2 == 1 || j % 2 == 1))
          out.push_back({i, j});
      }
    }
  return out;
}

std::vector<IndexPair> nondominated(std::vector<IndexPair> pairs) {
  std::vector<IndexPair> out;
  for (const IndexPair& p : pairs) {
    bool dominated = false;
    for (const IndexPair& q : pairs)
      if (q != p && q.i >= p.i && q.j >= p.j) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

Cocoa theorem2_chain(int k, bool maximal_pairs_only) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "k must be positive");
  std::vector<Automaton> members;
  for (int u = 1; u <= 2 * k; ++u) {
    std::vector<IndexPair> pairs = gamma(k, u);
    if (maximal_pairs_only) pairs = nondominated(pairs);
    if (pairs.empty()) {
      members.push_back(empty_cobuchi(def3_alphabet(k)));
      continue;
    }
    std::vector<Automaton> parts;
    for (const IndexPair& p : pairs)
      parts.push_back(
          dcw_conjunction(gen_dcw_L(k, p.i), gen_dcw_Lhat(k, p.j)));
    members.push_back(reachable_restrict(
        parts.size() == 1 ? parts.front() : dcw_disjunction(parts)));
  }
  return Cocoa(std::move(members));
}

}  // namespace

Cocoa gen_cocoa_theorem2(int k) { return theorem2_chain(k, false); }

Cocoa gen_cocoa_theorem2_nondominated(int k) { return theorem2_chain(k, true); }

Automaton gen_example31_dpw() {
  Alphabet ab({"a", "b", "c"});
  // states track (parity of a seen so far, last letter was b)
  AutomatonBuilder b(ab, 4, 0);
  b.set_label(0, "e").set_label(1, "eb").set_label(2, "o").set_label(3, "ob");
  for (int par = 0; par <= 1; ++par) {
    int plain = 2 * par, after_b = 2 * par + 1;
    int flipped = 2 * (1 - par);
    b.add_edge(plain, "a", 0, flipped);
    b.add_edge(after_b, "a", 0, flipped);
    b.add_edge(plain, "b", 2, after_b);
    b.add_edge(after_b, "b", 1, after_b);  // bb: the b was not followed by c
    b.add_edge(after_b, "c", 2, plain);
    // c after non-b: fatal only while the a-count is even
    b.add_edge(plain, "c", par == 0 ? 3 : 2, plain);
  }
  return std::move(b).build();
}

bool lasso_in_example31(const LassoWord& w) {
  auto count = [](const std::vector<std::string>& part, const char* sym) {
    return static_cast<int>(std::count(part.begin(), part.end(), sym));
  };
  if (count(w.loop, "a") > 0) return true;  // infinitely many a

  // eventually every b is immediately followed by a c
  int len = static_cast<int>(w.loop.size());
  for (int p = 0; p < len; ++p)
    if (w.loop[p] == "b" && w.loop[(p + 1) % len] != "c") return false;

  // an even total of a letters requires infinitely many b
  bool even_a = count(w.stem, "a") % 2 == 0;
  return !even_a || count(w.loop, "b") > 0;
}

}  // namespace cocoakit
