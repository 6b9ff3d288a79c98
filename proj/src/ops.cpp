#include "cocoakit/ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "cocoakit/lasso.hpp"
#include "graph_internal.hpp"

namespace cocoakit {

namespace {

void require_deterministic(const Automaton& aut, const char* who) {
  if (!is_deterministic(aut))
    throw Error(ErrorCode::NotDeterministic,
                std::string(who) + " needs deterministic automata");
}

void require_cobuchi(const Automaton& aut, const char* who) {
  if (!is_cobuchi(aut))
    throw Error(ErrorCode::NotCobuchi,
                std::string(who) + " needs co-Büchi automata (colors in {1,2})");
}

void require_same_alphabet(const Automaton& a, const Automaton& b) {
  if (a.alphabet() != b.alphabet())
    throw Error(ErrorCode::AlphabetMismatch, "operands use different alphabets");
}

std::string tuple_label(const std::vector<const Automaton*>& members,
                        const std::vector<int>& states) {
  std::string out;
  for (size_t i = 0; i < states.size(); ++i) {
    if (i) out += ',';
    std::string l = members[i]->label(states[i]);
    out += l.empty() ? std::to_string(states[i]) : l;
  }
  return out;
}

// Deterministic product exploration shared by the boolean operations and the
// chain-to-parity construction. color_of maps the per-member colors of one
// joint step to the product transition color.
template <typename ColorFn>
Automaton deterministic_product(const std::vector<const Automaton*>& members,
                                ColorFn color_of) {
  const Alphabet& ab = members.front()->alphabet();
  int m = static_cast<int>(members.size());

  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> tuples;
  auto intern = [&](const std::vector<int>& t) {
    auto [it, fresh] = ids.emplace(t, static_cast<int>(tuples.size()));
    if (fresh) tuples.push_back(t);
    return it->second;
  };

  std::vector<int> start(m);
  for (int i = 0; i < m; ++i) start[i] = members[i]->initial();
  intern(start);

  std::vector<std::vector<Edge>> entries;
  std::vector<std::string> labels;
  std::vector<int> comp_colors(m);
  for (int id = 0; id < static_cast<int>(tuples.size()); ++id) {
    labels.push_back(tuple_label(members, tuples[id]));
    for (int x = 0; x < ab.size(); ++x) {
      std::vector<int> next(m);
      for (int i = 0; i < m; ++i) {
        const Edge& e = members[i]->edges(tuples[id][i], x).front();
        next[i] = e.target;
        comp_colors[i] = e.color;
      }
      entries.push_back({Edge{intern(next), color_of(comp_colors)}});
    }
  }
  int n = static_cast<int>(tuples.size());
  return Automaton(ab, n, 0, std::move(entries), std::move(labels));
}

}  // namespace

Automaton dcw_conjunction(const std::vector<Automaton>& members) {
  if (members.empty())
    throw Error(ErrorCode::Invalid, "conjunction of zero automata");
  std::vector<const Automaton*> ptrs;
  for (const Automaton& a : members) {
    require_deterministic(a, "dcw_conjunction");
    require_cobuchi(a, "dcw_conjunction");
    require_same_alphabet(members.front(), a);
    ptrs.push_back(&a);
  }
  return deterministic_product(ptrs, [](const std::vector<int>& colors) {
    for (int c : colors)
      if (c != 2) return 1;
    return 2;
  });
}

Automaton dcw_conjunction(const Automaton& a, const Automaton& b) {
  return dcw_conjunction(std::vector<Automaton>{a, b});
}

Automaton dcw_disjunction(const std::vector<Automaton>& members) {
  if (members.empty())
    throw Error(ErrorCode::Invalid, "disjunction of zero automata");
  for (const Automaton& a : members) {
    require_deterministic(a, "dcw_disjunction");
    require_cobuchi(a, "dcw_disjunction");
    require_same_alphabet(members.front(), a);
  }
  const Alphabet& ab = members.front().alphabet();
  int m = static_cast<int>(members.size());

  // joint state: member states plus the index of the member currently under
  // obligation; a rejecting step of that member passes the obligation on
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> tuples;  // last entry = pointer
  auto intern = [&](const std::vector<int>& t) {
    auto [it, fresh] = ids.emplace(t, static_cast<int>(tuples.size()));
    if (fresh) tuples.push_back(t);
    return it->second;
  };

  std::vector<int> start(m + 1, 0);
  for (int i = 0; i < m; ++i) start[i] = members[i].initial();
  intern(start);

  std::vector<const Automaton*> ptrs;
  for (const Automaton& a : members) ptrs.push_back(&a);

  std::vector<std::vector<Edge>> entries;
  std::vector<std::string> labels;
  for (int id = 0; id < static_cast<int>(tuples.size()); ++id) {
    const std::vector<int> t = tuples[id];  // intern() may grow `tuples`
    int ptr = t[m];
    labels.push_back(tuple_label(ptrs, {t.begin(), t.begin() + m}) + ";" +
                     std::to_string(ptr + 1));
    for (int x = 0; x < ab.size(); ++x) {
      std::vector<int> next(m + 1);
      int color = 2;
      for (int i = 0; i < m; ++i) {
        const Edge& e = members[i].edges(t[i], x).front();
        next[i] = e.target;
        if (i == ptr) color = e.color;
      }
      next[m] = color == 1 ? (ptr + 1) % m : ptr;
      entries.push_back({Edge{intern(next), color}});
    }
  }
  int n = static_cast<int>(tuples.size());
  return Automaton(ab, n, 0, std::move(entries), std::move(labels));
}

Automaton dcw_disjunction(const Automaton& a, const Automaton& b) {
  return dcw_disjunction(std::vector<Automaton>{a, b});
}

Automaton mh_determinize(const Automaton& ncw) {
  require_cobuchi(ncw, "mh_determinize");
  if (is_deterministic(ncw)) return ncw;

  const Alphabet& ab = ncw.alphabet();
  using State = std::pair<std::vector<int>, std::vector<int>>;  // (S, B)
  std::map<State, int> ids;
  std::vector<State> states;
  auto intern = [&](State s) {
    auto [it, fresh] = ids.emplace(std::move(s), static_cast<int>(states.size()));
    if (fresh) states.push_back(it->first);
    return it->second;
  };

  intern({{ncw.initial()}, {ncw.initial()}});

  auto set_string = [](const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(s[i]);
    }
    return out + "}";
  };

  std::vector<std::vector<Edge>> entries;
  std::vector<std::string> labels;
  for (int id = 0; id < static_cast<int>(states.size()); ++id) {
    const auto [S, B] = states[id];
    labels.push_back(set_string(S) + "/" + set_string(B));
    for (int x = 0; x < ab.size(); ++x) {
      std::vector<char> in_next(ncw.state_count(), 0), in_obl(ncw.state_count(), 0);
      for (int q : S)
        for (const Edge& e : ncw.edges(q, x)) in_next[e.target] = 1;
      for (int q : B)
        if (ncw.color_at(q, x) == 2)
          for (const Edge& e : ncw.edges(q, x)) in_obl[e.target] = 1;
      std::vector<int> S2, B2;
      for (int q = 0; q < ncw.state_count(); ++q) {
        if (in_next[q]) S2.push_back(q);
        if (in_obl[q]) B2.push_back(q);
      }
      int color = B2.empty() ? 1 : 2;  // breakpoint resets the obligation
      if (B2.empty()) B2 = S2;
      entries.push_back({Edge{intern({std::move(S2), std::move(B2)}), color}});
    }
  }
  int n = static_cast<int>(states.size());
  return Automaton(ab, n, 0, std::move(entries), std::move(labels));
}

Automaton cocoa_to_dpw(const Cocoa& chain) {
  std::vector<Automaton> det;
  det.reserve(chain.member_count());
  for (const Automaton& member : chain.members())
    det.push_back(mh_determinize(member));

  std::vector<const Automaton*> ptrs;
  for (const Automaton& a : det) ptrs.push_back(&a);
  int k = static_cast<int>(det.size());
  // color = least 0-based index of a member taking a rejecting transition,
  // capped at the chain length
  return deterministic_product(ptrs, [k](const std::vector<int>& colors) {
    for (int j = 0; j < k; ++j)
      if (colors[j] == 1) return j;
    return k;
  });
}

Automaton dpw_complement(const Automaton& dpw) {
  require_deterministic(dpw, "dpw_complement");
  std::vector<std::vector<Edge>> entries;
  entries.reserve(static_cast<size_t>(dpw.state_count()) *
                  dpw.alphabet().size());
  for (int q = 0; q < dpw.state_count(); ++q)
    for (int x = 0; x < dpw.alphabet().size(); ++x) {
      auto es = dpw.edges(q, x);
      std::vector<Edge> cell(es.begin(), es.end());
      for (Edge& e : cell) ++e.color;
      entries.push_back(std::move(cell));
    }
  return Automaton(dpw.alphabet(), dpw.state_count(), dpw.initial(),
                   std::move(entries), dpw.labels());
}

namespace {

// Joint parity witness search from explicit start states. Returns a lasso
// whose run has, for every automaton i, the dominating color parity required
// by polarity[i].
std::optional<MappedLasso> witness_from(
    const std::vector<const Automaton*>& auts,
    const std::vector<Polarity>& polarity, const std::vector<int>& starts) {
  const Alphabet& ab = auts.front()->alphabet();
  int m = static_cast<int>(auts.size());
  int nsym = ab.size();

  // reachable joint product
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> tuples;
  auto intern = [&](const std::vector<int>& t) {
    auto [it, fresh] = ids.emplace(t, static_cast<int>(tuples.size()));
    if (fresh) tuples.push_back(t);
    return it->second;
  };
  intern(starts);

  std::vector<int> target;           // pstate*nsym+x -> pstate
  std::vector<int> colors;           // (pstate*nsym+x)*m+i -> color
  for (int id = 0; id < static_cast<int>(tuples.size()); ++id) {
    for (int x = 0; x < nsym; ++x) {
      std::vector<int> next(m);
      for (int i = 0; i < m; ++i) {
        const Edge& e = auts[i]->edges(tuples[id][i], x).front();
        next[i] = e.target;
        colors.push_back(e.color);
      }
      target.push_back(intern(next));
    }
  }
  int pn = static_cast<int>(tuples.size());
  auto color_of = [&](int p, int x, int i) {
    return colors[(static_cast<size_t>(p) * nsym + x) * m + i];
  };

  // candidate dominating colors per automaton, parity filtered
  std::vector<std::vector<int>> choices(m);
  for (int i = 0; i < m; ++i) {
    int want = polarity[i] == Polarity::RequireAccepting ? 0 : 1;
    for (int c : auts[i]->color_set())
      if (c % 2 == want) choices[i].push_back(c);
    if (choices[i].empty()) return std::nullopt;
  }

  // all target tuples, by increasing color sum then lexicographic
  std::vector<std::vector<int>> tuples_to_try;
  std::vector<int> cur(m, 0);
  while (true) {
    std::vector<int> t(m);
    for (int i = 0; i < m; ++i) t[i] = choices[i][cur[i]];
    tuples_to_try.push_back(std::move(t));
    int i = m - 1;
    while (i >= 0 && ++cur[i] == static_cast<int>(choices[i].size()))
      cur[i--] = 0;
    if (i < 0) break;
  }
  std::stable_sort(tuples_to_try.begin(), tuples_to_try.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) {
                     int sa = std::accumulate(a.begin(), a.end(), 0);
                     int sb = std::accumulate(b.begin(), b.end(), 0);
                     return sa != sb ? sa < sb : a < b;
                   });

  for (const std::vector<int>& t : tuples_to_try) {
    auto edge_ok = [&](int p, int x) {
      for (int i = 0; i < m; ++i)
        if (color_of(p, x, i) < t[i]) return false;
      return true;
    };

    std::vector<std::vector<int>> adj(pn);
    for (int p = 0; p < pn; ++p)
      for (int x = 0; x < nsym; ++x)
        if (edge_ok(p, x)) adj[p].push_back(target[p * nsym + x]);

    int comp_count = 0;
    std::vector<int> comp = internal::tarjan_components(pn, adj, &comp_count);

    for (int c = 0; c < comp_count; ++c) {
      // the component must contain, per automaton, an internal transition
      // achieving the target color exactly
      std::vector<char> achieved(m, 0);
      bool has_internal_edge = false;
      for (int p = 0; p < pn; ++p) {
        if (comp[p] != c) continue;
        for (int x = 0; x < nsym; ++x) {
          if (!edge_ok(p, x) || comp[target[p * nsym + x]] != c) continue;
          has_internal_edge = true;
          for (int i = 0; i < m; ++i)
            if (color_of(p, x, i) == t[i]) achieved[i] = 1;
        }
      }
      if (!has_internal_edge ||
          !std::all_of(achieved.begin(), achieved.end(),
                       [](char a) { return a != 0; }))
        continue;

      // stem: breadth-first path from the start to the component
      std::vector<int> parent(pn, -1), via(pn, -1);
      std::deque<int> queue{0};
      std::vector<char> seen(pn, 0);
      seen[0] = 1;
      int entry = comp[0] == c ? 0 : -1;
      while (entry < 0 && !queue.empty()) {
        int p = queue.front();
        queue.pop_front();
        for (int x = 0; x < nsym && entry < 0; ++x) {
          int q = target[p * nsym + x];
          if (seen[q]) continue;
          seen[q] = 1;
          parent[q] = p;
          via[q] = x;
          if (comp[q] == c)
            entry = q;
          else
            queue.push_back(q);
        }
      }
      if (entry < 0) continue;  // unreachable component
      std::vector<int> stem;
      for (int p = entry; parent[p] >= 0; p = parent[p]) stem.push_back(via[p]);
      std::reverse(stem.begin(), stem.end());

      // loop: visit one exact-target transition per automaton, then close
      // the cycle; moves stay on component-internal restricted edges
      auto path_to = [&](int from, auto goal) -> std::pair<std::vector<int>, int> {
        std::vector<int> par(pn, -1), vx(pn, -1);
        std::vector<char> vis(pn, 0);
        std::deque<int> bfs{from};
        vis[from] = 1;
        int found = goal(from) ? from : -1;
        while (found < 0 && !bfs.empty()) {
          int p = bfs.front();
          bfs.pop_front();
          for (int x = 0; x < nsym && found < 0; ++x) {
            if (!edge_ok(p, x)) continue;
            int q = target[p * nsym + x];
            if (comp[q] != c || vis[q]) continue;
            vis[q] = 1;
            par[q] = p;
            vx[q] = x;
            if (goal(q))
              found = q;
            else
              bfs.push_back(q);
          }
        }
        std::vector<int> letters;
        if (found >= 0)
          for (int p = found; par[p] >= 0; p = par[p]) letters.push_back(vx[p]);
        std::reverse(letters.begin(), letters.end());
        return {letters, found};
      };

      std::vector<int> loop;
      int at = entry;
      bool stitched = true;
      for (int i = 0; i < m && stitched; ++i) {
        auto has_hit = [&](int p) {
          for (int x = 0; x < nsym; ++x)
            if (edge_ok(p, x) && comp[target[p * nsym + x]] == c &&
                color_of(p, x, i) == t[i])
              return true;
          return false;
        };
        auto [letters, p] = path_to(at, has_hit);
        if (p < 0) {
          stitched = false;
          break;
        }
        loop.insert(loop.end(), letters.begin(), letters.end());
        for (int x = 0; x < nsym; ++x)
          if (edge_ok(p, x) && comp[target[p * nsym + x]] == c &&
              color_of(p, x, i) == t[i]) {
            loop.push_back(x);
            at = target[p * nsym + x];
            break;
          }
      }
      if (!stitched) continue;
      auto [back, q] = path_to(at, [&](int p) { return p == entry; });
      if (q < 0) continue;
      loop.insert(loop.end(), back.begin(), back.end());

      return MappedLasso{std::move(stem), std::move(loop)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LassoWord> multi_parity_witness(
    const std::vector<ParityConstraint>& constraints) {
  if (constraints.empty())
    throw Error(ErrorCode::Invalid, "witness search over zero constraints");
  std::vector<const Automaton*> auts;
  std::vector<Polarity> polarity;
  std::vector<int> starts;
  for (const ParityConstraint& c : constraints) {
    require_deterministic(*c.automaton, "multi_parity_witness");
    require_same_alphabet(*constraints.front().automaton, *c.automaton);
    auts.push_back(c.automaton);
    polarity.push_back(c.polarity);
    starts.push_back(c.automaton->initial());
  }
  auto found = witness_from(auts, polarity, starts);
  if (!found) return std::nullopt;
  for (size_t i = 0; i < auts.size(); ++i) {
    bool accepted = dpw_accepts(*auts[i], *found);
    if (accepted != (polarity[i] == Polarity::RequireAccepting))
      throw std::logic_error("witness search returned an unsound lasso");
  }
  return unmap_lasso(auts.front()->alphabet(), *found);
}

ContainsResult dpw_contains(const Automaton& a, const Automaton& b) {
  auto witness = multi_parity_witness(
      {{&a, Polarity::RequireAccepting}, {&b, Polarity::RequireRejecting}});
  if (!witness) return {true, std::nullopt};
  return {false, std::move(witness)};
}

ContainsResult dpw_equivalent(const Automaton& a, const Automaton& b) {
  ContainsResult forward = dpw_contains(a, b);
  if (!forward.holds) return forward;
  ContainsResult backward = dpw_contains(b, a);
  if (!backward.holds) return backward;
  return {true, std::nullopt};
}

ResidualPartition residual_partition(const Automaton& dpw) {
  require_deterministic(dpw, "residual_partition");

  std::vector<char> reach(dpw.state_count(), 0);
  std::vector<int> stack{dpw.initial()};
  reach[dpw.initial()] = 1;
  while (!stack.empty()) {
    int q = stack.back();
    stack.pop_back();
    for (int x = 0; x < dpw.alphabet().size(); ++x)
      for (const Edge& e : dpw.edges(q, x))
        if (!reach[e.target]) {
          reach[e.target] = 1;
          stack.push_back(e.target);
        }
  }

  // distinguishing lasso between two roots; the bool reports whether it is
  // accepted from the first root
  auto separate = [&](int qa, int qb) -> std::optional<std::pair<LassoWord, bool>> {
    auto w = witness_from({&dpw, &dpw},
                          {Polarity::RequireAccepting, Polarity::RequireRejecting},
                          {qa, qb});
    if (w) return std::pair{unmap_lasso(dpw.alphabet(), *w), true};
    w = witness_from({&dpw, &dpw},
                     {Polarity::RequireRejecting, Polarity::RequireAccepting},
                     {qa, qb});
    if (w) return std::pair{unmap_lasso(dpw.alphabet(), *w), false};
    return std::nullopt;
  };

  ResidualPartition out;
  std::vector<int> reps;
  for (int q = 0; q < dpw.state_count(); ++q) {
    if (!reach[q]) continue;
    bool placed = false;
    std::vector<ResidualPartition::SeparatingWitness> pending;
    int fresh = static_cast<int>(reps.size());
    for (int c = 0; c < static_cast<int>(reps.size()) && !placed; ++c) {
      if (auto sep = separate(q, reps[c])) {
        auto& [w, accepted_from_q] = *sep;
        if (accepted_from_q)
          pending.push_back({fresh, c, std::move(w)});
        else
          pending.push_back({c, fresh, std::move(w)});
      } else {
        out.classes[c].push_back(q);
        placed = true;
      }
    }
    if (!placed) {
      reps.push_back(q);
      out.classes.push_back({q});
      for (auto& w : pending) out.witnesses.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace cocoakit
