#pragma once

#include <cstddef>
#include <vector>

#include "cdom/geometry.hpp"

namespace cdom {

// Reduced word over the reflection generators: 1-based letters, no two
// adjacent letters equal.  The empty word is the identity.
struct ReducedWord {
  std::vector<int> letters;

  int length() const { return (int)letters.size(); }
  bool reduced() const {
    for (std::size_t i = 1; i < letters.size(); ++i)
      if (letters[i] == letters[i - 1]) return false;
    return true;
  }
};

struct WordEnumeration {
  std::vector<ReducedWord> words;  // length-lexicographic, identity excluded
  bool truncated = false;          // resource cap hit, enumeration partial
};

// All reduced words of length 1..max_length in length-lex order.  Count at
// length k is g*(g-1)^(k-1).  Stops (and flags) once `cap` words are listed.
WordEnumeration enumerate_words(int n_generators, int max_length, std::size_t cap = 8u << 20);

// Composition R_{i1} o ... o R_{ik}; the orientation flag equals the parity
// of the word length.
ConjMoebius word_to_map(const ReducedWord& w, const CircleDomain& d);

// Orbit bookkeeping for the sum of m(T(Omega')) over nonidentity group
// elements T.  For the word w = (i1,...,ik):
//   outer disk  = image of the closed disk D_{ik} under R_{i1}o...oR_{i(k-1)},
//   region      = T_w(Omega') = outer disk minus the images of the other
//                 disks under the full word,
//   area        = pi r_outer^2 - sum of child disk areas (exact).
struct LedgerEntry {
  ReducedWord word;
  Circle outer;
  double area = 0.0;
};

struct AreaLedger {
  std::vector<LedgerEntry> entries;  // length-lex, identity excluded
  std::vector<double> level_totals;  // [k-1]: sum of region areas at length k
  std::vector<double> cover_totals;  // [k-1]: sum of outer disk areas at length k
  double contraction_ratio = 0.0;    // rigorous per-level factor for region totals
  bool has_tail_bound = false;       // false when the ratio reaches 1
  int max_length = 0;

  // Upper bound on the total region area at levels > `level`.
  double tail_bound(int level) const;
  // Enumerated area strictly after 1-based index j, plus the beyond-depth bound.
  double tail_after(std::size_t j) const;

  std::vector<double> suffix;  // suffix[i] = sum of entries[i..] areas
};

AreaLedger orbit_area_ledger(const CircleDomain& d, int max_length, std::size_t cap = 8u << 20);

struct InsufficientDepth : std::runtime_error {
  int required_level;
  explicit InsufficientDepth(int lvl)
      : std::runtime_error("ledger depth insufficient for requested tail index"),
        required_level(lvl) {}
};

// Tail indices of the orbit sum: M(n) is the smallest index (length-lex,
// identity excluded) whose tail falls below exp(-exp(n)); the returned
// sequence is made strictly increasing by running maximum + 1 on ties.
std::vector<int> tail_indices(const AreaLedger& ledger, int n_max);
int tail_index_M(const AreaLedger& ledger, int n);

// Point location by repeated reflection: reflects w across any disk that
// strictly contains it until the point lands in Omega' (on or outside all
// circles).  Returns the word T with w in T(Omega') and the representative
// T^{-1}(w); flags the point as limit-set material once max_depth is hit.
struct Reduction {
  ReducedWord word;
  cpx representative{0.0, 0.0};
  bool limit_set = false;
  int depth = 0;
};

Reduction reduce_to_fundamental(const CircleDomain& d, cpx w, int max_depth = 64);

// Total outer-disk area at the given level: a nonincreasing upper bound for
// the area of the limit set.
double limit_set_area_upper(const AreaLedger& ledger, int level);

// JSON-lines export: header with contraction_ratio and level totals, then
// one line per entry {"word":[...],"outer":{cx,cy,r},"area":...}.
std::string ledger_to_jsonl(const AreaLedger& ledger);

}  // namespace cdom
