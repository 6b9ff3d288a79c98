#ifndef COCOAKIT_LASSO_HPP
#define COCOAKIT_LASSO_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "cocoakit/automaton.hpp"
#include "cocoakit/chain.hpp"
#include "cocoakit/lasso_word.hpp"

namespace cocoakit {

/// Dominating color of the unique run of a deterministic automaton on the
/// lasso: the minimum transition color on the run's eventual cycle.
int dpw_color(const Automaton& dpw, const MappedLasso& w);
int dpw_color(const Automaton& dpw, const LassoWord& w);

/// True iff the dominating color is even.
bool dpw_accepts(const Automaton& dpw, const MappedLasso& w);
bool dpw_accepts(const Automaton& dpw, const LassoWord& w);

/// Nondeterministic co-Büchi acceptance: true iff some run takes rejecting
/// (color-1) transitions only finitely often. Decided on the product of
/// states and loop-folded word positions; a word is accepted iff a state on
/// an all-accepting cycle of that product is reachable from the start.
/// Throws ErrorCode::NotCobuchi for colors outside {1, 2}.
bool ncw_accepts(const Automaton& ncw, const MappedLasso& w);
bool ncw_accepts(const Automaton& ncw, const LassoWord& w);

/// Highest 1-based member index accepting the lasso, 0 if none.
int cocoa_color(const Cocoa& chain, const MappedLasso& w);
int cocoa_color(const Cocoa& chain, const LassoWord& w);

/// True iff cocoa_color is even (0 covers "rejected by the whole chain").
bool cocoa_accepts(const Cocoa& chain, const MappedLasso& w);
bool cocoa_accepts(const Cocoa& chain, const LassoWord& w);

/// Default bounded-exhaustive enumeration bounds (max stem, max loop):
/// (2, 3) for alphabets of at most 8 symbols, (1, 2) above.
std::pair<int, int> default_lasso_bounds(int alphabet_size);

/// Calls fn for every lasso with stem length <= max_stem and loop length in
/// 1..max_loop over symbol indices 0..alphabet_size-1, in lexicographic order
/// (stem length, stem, loop length, loop). The MappedLasso reference is
/// reused between calls.
void for_each_lasso(int alphabet_size, int max_stem, int max_loop,
                    const std::function<void(const MappedLasso&)>& fn);

/// Number of lassos for_each_lasso visits.
std::uint64_t lasso_count(int alphabet_size, int max_stem, int max_loop);

/// Seed for reproducible sampling: COCOAKIT_SEED from the environment,
/// defaulting to 0.
std::uint64_t sampling_seed();

/// Reproducible lasso sampling from an explicitly seeded generator.
class LassoSampler {
 public:
  LassoSampler(int alphabet_size, int max_stem, int max_loop,
               std::uint64_t seed);

  MappedLasso next();

 private:
  int alphabet_size_;
  int max_stem_;
  int max_loop_;
  std::mt19937_64 rng_;
};

}  // namespace cocoakit

#endif
