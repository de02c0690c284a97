#include "cdom/schottky.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace cdom {

WordEnumeration enumerate_words(int n_generators, int max_length, std::size_t cap) {
  if (n_generators < 1) throw std::invalid_argument("enumerate_words: need n_generators >= 1");
  WordEnumeration out;
  std::vector<ReducedWord> level;
  for (int g = 1; g <= n_generators; ++g) level.push_back({{g}});
  for (int k = 1; k <= max_length && !level.empty(); ++k) {
    for (const ReducedWord& w : level) {
      if (out.words.size() >= cap) {
        out.truncated = true;
        return out;
      }
      out.words.push_back(w);
    }
    std::vector<ReducedWord> next;
    if (k < max_length) {
      next.reserve(level.size() * (std::size_t)std::max(1, n_generators - 1));
      for (const ReducedWord& w : level)
        for (int g = 1; g <= n_generators; ++g)
          if (g != w.letters.back()) {
            ReducedWord e = w;
            e.letters.push_back(g);
            next.push_back(std::move(e));
          }
    }
    level = std::move(next);
  }
  return out;
}

ConjMoebius word_to_map(const ReducedWord& w, const CircleDomain& d) {
  ConjMoebius t = ConjMoebius::identity();
  for (int letter : w.letters) {
    if (letter < 1 || letter > (int)d.circles.size())
      throw std::out_of_range("word_to_map: letter does not index a circle");
    t = compose(t, as_conj_moebius(d.circles[letter - 1]));
  }
  return t;
}

namespace {

// Rigorous per-level contraction of region areas.  A level-k region sits in
// the closed disk named by its first letter; prepending R_i multiplies its
// area by at most (r_i^2 / dist(a_i, Dbar_j)^2)^2.  Summing over the
// admissible i and maximizing over j bounds the next level's total.
double region_contraction_ratio(const CircleDomain& d) {
  int n = (int)d.circles.size();
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      double gap = std::abs(d.circles[i].center - d.circles[j].center) - d.circles[j].radius;
      double lin = d.circles[i].radius * d.circles[i].radius / (gap * gap);
      sum += lin * lin;
    }
    worst = std::max(worst, sum);
  }
  return worst;
}

}  // namespace

AreaLedger orbit_area_ledger(const CircleDomain& d, int max_length, std::size_t cap) {
  DomainReport rep = validate_domain(d);
  if (!rep.ok()) throw std::invalid_argument("orbit_area_ledger: invalid circle domain");
  int g = (int)d.circles.size();
  if (g < 1) throw std::invalid_argument("orbit_area_ledger: no circles");

  AreaLedger ledger;
  ledger.max_length = max_length;
  ledger.level_totals.assign(max_length, 0.0);
  ledger.cover_totals.assign(max_length, 0.0);
  ledger.contraction_ratio = region_contraction_ratio(d);
  ledger.has_tail_bound = ledger.contraction_ratio < 1.0;

  struct Node {
    ReducedWord word;
    ConjMoebius map;  // full word map
  };
  std::vector<Node> level;
  for (int j = 1; j <= g; ++j) {
    ReducedWord w{{j}};
    level.push_back({w, word_to_map(w, d)});
  }

  std::vector<Node> next;
  for (int k = 1; k <= max_length && !level.empty(); ++k) {
    for (const Node& node : level) {
      if (ledger.entries.size() >= cap)
        throw std::length_error("orbit_area_ledger: word cap exceeded");
      int last = node.word.letters.back();
      // outer disk: prefix map applied to the last letter's closed disk
      ReducedWord prefix = node.word;
      prefix.letters.pop_back();
      ConjMoebius pm = word_to_map(prefix, d);
      Circle outer = image_circle(pm, d.circles[last - 1]);
      double area = M_PI * outer.radius * outer.radius;
      for (int j = 1; j <= g; ++j) {
        if (j == last) continue;
        Circle child = image_circle(node.map, d.circles[j - 1]);
        area -= M_PI * child.radius * child.radius;
      }
      ledger.entries.push_back({node.word, outer, area});
      ledger.level_totals[k - 1] += area;
      ledger.cover_totals[k - 1] += M_PI * outer.radius * outer.radius;
    }
    next.clear();
    if (k < max_length) {
      for (const Node& node : level)
        for (int j = 1; j <= g; ++j)
          if (j != node.word.letters.front()) {
            ReducedWord w;
            w.letters.reserve(node.word.letters.size() + 1);
            w.letters.push_back(j);
            w.letters.insert(w.letters.end(), node.word.letters.begin(), node.word.letters.end());
            next.push_back({std::move(w), compose(as_conj_moebius(d.circles[j - 1]), node.map)});
          }
    }
    std::swap(level, next);
  }

  // length-lex order within each level: prepending letters broke lex order,
  // restore it (cheap: levels are small and already grouped by length)
  std::size_t base = 0;
  for (int k = 1; k <= max_length; ++k) {
    std::size_t cnt = 0;
    while (base + cnt < ledger.entries.size() &&
           ledger.entries[base + cnt].word.length() == k)
      ++cnt;
    std::sort(ledger.entries.begin() + base, ledger.entries.begin() + base + cnt,
              [](const LedgerEntry& x, const LedgerEntry& y) {
                return x.word.letters < y.word.letters;
              });
    base += cnt;
  }

  ledger.suffix.assign(ledger.entries.size() + 1, 0.0);
  for (std::size_t i = ledger.entries.size(); i-- > 0;)
    ledger.suffix[i] = ledger.suffix[i + 1] + ledger.entries[i].area;
  return ledger;
}

double AreaLedger::tail_bound(int level) const {
  if (!has_tail_bound) throw std::runtime_error("tail bound unavailable: contraction ratio >= 1");
  if (level < 1 || level > max_length) throw std::out_of_range("tail_bound: bad level");
  double c = contraction_ratio;
  return level_totals[level - 1] * c / (1.0 - c);
}

double AreaLedger::tail_after(std::size_t j) const {
  double beyond = tail_bound(max_length);
  if (j >= entries.size()) return beyond;
  return suffix[j] + beyond;
}

std::vector<int> tail_indices(const AreaLedger& ledger, int n_max) {
  if (n_max < 1 || n_max > 6)
    throw std::invalid_argument("tail_indices: n must be in 1..6 (double precision)");
  std::vector<int> out;
  for (int n = 1; n <= n_max; ++n) {
    double target = std::exp(-std::exp((double)n));
    int raw = -1;
    for (std::size_t m = 0; m <= ledger.entries.size(); ++m)
      if (ledger.tail_after(m) < target) {
        raw = (int)m;
        break;
      }
    if (raw < 0) throw InsufficientDepth(ledger.max_length + 2);
    int val = out.empty() ? raw : std::max(raw, out.back() + 1);
    out.push_back(val);
  }
  return out;
}

int tail_index_M(const AreaLedger& ledger, int n) { return tail_indices(ledger, n).back(); }

Reduction reduce_to_fundamental(const CircleDomain& d, cpx w, int max_depth) {
  Reduction r;
  for (int step = 0; step < max_depth; ++step) {
    int hit = -1;
    for (int j = 0; j < (int)d.circles.size(); ++j)
      if (std::abs(w - d.circles[j].center) < d.circles[j].radius) {
        hit = j;
        break;
      }
    if (hit < 0) {
      r.representative = w;
      r.depth = step;
      return r;
    }
    if (w == d.circles[hit].center) {
      // center is the image of infinity; treat like the limit set (the
      // invariant extension assigns coefficient 0 either way)
      r.limit_set = true;
      r.depth = step;
      return r;
    }
    r.word.letters.push_back(hit + 1);
    w = reflect(d.circles[hit], w);
  }
  r.limit_set = true;
  r.depth = max_depth;
  return r;
}

double limit_set_area_upper(const AreaLedger& ledger, int level) {
  if (level < 1 || level > ledger.max_length)
    throw std::out_of_range("limit_set_area_upper: level beyond enumerated depth");
  return ledger.cover_totals[level - 1];
}

std::string ledger_to_jsonl(const AreaLedger& ledger) {
  using json = nlohmann::ordered_json;
  std::ostringstream os;
  json head;
  head["contraction_ratio"] = ledger.contraction_ratio;
  head["has_tail_bound"] = ledger.has_tail_bound;
  head["level_totals"] = ledger.level_totals;
  head["cover_totals"] = ledger.cover_totals;
  os << head.dump() << "\n";
  for (const LedgerEntry& e : ledger.entries) {
    json j;
    j["word"] = e.word.letters;
    j["outer"] = {{"cx", e.outer.center.real()}, {"cy", e.outer.center.imag()}, {"r", e.outer.radius}};
    j["area"] = e.area;
    os << j.dump() << "\n";
  }
  return os.str();
}

}  // namespace cdom
