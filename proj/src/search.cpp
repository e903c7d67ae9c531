#include "hcalc/search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "hcalc/errors.hpp"

namespace hcalc {

namespace {

// Least rotation of `core` or its inverse, by letter codes.
Word min_cyclic_word(const Word& core) {
  Word best = core;
  auto consider_rotations = [&best](const Word& w) {
    const auto& ls = w.letters();
    std::size_t n = ls.size();
    for (std::size_t s = 0; s < n; ++s) {
      bool smaller = false, larger = false;
      for (std::size_t i = 0; i < n; ++i) {
        Letter a = ls[(s + i) % n];
        Letter b = best.letters()[i];
        if (a < b) {
          smaller = true;
          break;
        }
        if (b < a) {
          larger = true;
          break;
        }
      }
      if (smaller && !larger) {
        std::vector<Letter> rotated;
        rotated.reserve(n);
        for (std::size_t i = 0; i < n; ++i) rotated.push_back(ls[(s + i) % n]);
        best = Word(std::move(rotated));
      }
    }
  };
  consider_rotations(core);
  consider_rotations(invert(core));
  return best;
}

std::vector<Word> canonical_relators(const Presentation& p, std::span<const int> relabel) {
  std::vector<Word> out;
  out.reserve(p.relators.size());
  for (const auto& r : p.relators) {
    Word core = cyclic_reduce(remap_letters(r, relabel)).core;
    out.push_back(min_cyclic_word(core));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// First-use renumbering of the generators appearing in `relators`;
// unused generators keep their relative order at the end.
std::vector<int> first_use_order(const std::vector<Word>& relators, int k) {
  std::vector<int> order(static_cast<std::size_t>(k), -1);
  int next = 0;
  for (const auto& r : relators) {
    for (Letter l : r.letters()) {
      if (l.index() < k && order[static_cast<std::size_t>(l.index())] == -1)
        order[static_cast<std::size_t>(l.index())] = next++;
    }
  }
  for (auto& o : order) {
    if (o == -1) o = next++;
  }
  return order;
}

}  // namespace

std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
  if (auto c = a.generator_count <=> b.generator_count; c != 0) return c;
  if (auto c = a.relators.size() <=> b.relators.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.relators.size(); ++i) {
    if (auto c = a.relators[i] <=> b.relators[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::size_t CanonicalForm::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(generator_count);
  auto mix = [&h](std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& r : relators) {
    mix(0xfeedULL);
    for (Letter l : r.letters()) mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.code())));
  }
  return static_cast<std::size_t>(h);
}

CanonicalForm canonical_form(const Presentation& p) {
  int k = p.alphabet.size();
  CanonicalForm best;
  best.generator_count = k;

  if (k <= 8) {
    // exact: minimum over all generator relabelings
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    bool first = true;
    do {
      std::vector<Word> candidate = canonical_relators(p, perm);
      if (first || std::lexicographical_compare(candidate.begin(), candidate.end(),
                                                best.relators.begin(), best.relators.end())) {
        best.relators = std::move(candidate);
        first = false;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  // large alphabets: one refinement round (canonicalize, renumber by first
  // use, canonicalize again); deterministic but not renaming-complete
  std::vector<int> identity(static_cast<std::size_t>(k));
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<Word> pass1 = canonical_relators(p, identity);
  std::vector<int> order = first_use_order(pass1, k);
  best.relators = canonical_relators(p, order);
  return best;
}

std::size_t cyclic_length(const Presentation& p) {
  std::size_t total = 0;
  for (const auto& r : p.relators) total += cyclic_reduce(r).core.size();
  return total;
}

Presentation trivial_presentation(int k) {
  Presentation p;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) names.push_back("x" + std::to_string(i + 1));
  p.alphabet = Alphabet::make(std::move(names));
  for (int i = 0; i < k; ++i) p.relators.emplace_back(Letter(i, +1));
  return p;
}

bool is_canonically_trivial(const Presentation& p) {
  if (p.relator_count() != p.generator_count()) return false;
  return canonical_form(p) == canonical_form(trivial_presentation(p.generator_count()));
}

// --- move enumeration --------------------------------------------------------

namespace {

// Reduced words of length <= cap over the full letter set of `a`, in
// (length, lex) order; the empty word comes first.
std::vector<Word> enumerate_conjugators(const Alphabet& a, int cap) {
  std::vector<Word> out;
  out.emplace_back();
  std::size_t wave_begin = 0;
  int letters = 2 * a.size();
  for (int len = 1; len <= cap; ++len) {
    std::size_t wave_end = out.size();
    for (std::size_t w = wave_begin; w < wave_end; ++w) {
      for (int code = 0; code < letters; ++code) {
        Letter l = Letter::from_code(code);
        if (!out[w].empty() && out[w].back() == l.inverse()) continue;
        std::vector<Letter> next = out[w].letters();
        next.push_back(l);
        out.emplace_back(std::move(next));
      }
    }
    wave_begin = wave_end;
  }
  return out;
}

std::vector<MoveToken> search_moves(const Presentation& p, int conj_cap,
                                    const SearchOptions& opts) {
  std::vector<MoveToken> out;
  int l = p.relator_count();
  int k = p.generator_count();
  std::vector<Word> conjugators = enumerate_conjugators(p.alphabet, conj_cap);

  for (int i = 0; i < l; ++i) {
    MoveToken t;
    t.kind = MoveKind::InvertRelator;
    t.i = i;
    out.push_back(t);
  }
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      for (int sign : {+1, -1}) {
        for (const auto& c : conjugators) {
          MoveToken t;
          t.kind = MoveKind::MultiplyRelator;
          t.i = i;
          t.j = j;
          t.sign = sign;
          t.c = c;
          out.push_back(std::move(t));
        }
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    MoveToken t;
    t.kind = MoveKind::GeneratorInvert;
    t.i = i;
    out.push_back(t);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (int sign : {+1, -1}) {
        MoveToken t;
        t.kind = MoveKind::GeneratorMultiply;
        t.i = i;
        t.j = j;
        t.sign = sign;
        out.push_back(t);
      }
    }
  }
  if (opts.allow_stable) {
    int max_gens = opts.max_generators > 0 ? opts.max_generators : k + 2;
    if (k < max_gens) {
      MoveToken t;
      t.kind = MoveKind::Stabilize;
      out.push_back(t);
    }
    for (int i = 0; i < l; ++i) {
      const Word& r = p.relators[static_cast<std::size_t>(i)];
      if (r.size() != 1 || r.front().sign() != +1 || p.alphabet.is_boundary(r.front().index()))
        continue;
      int g = r.front().index();
      bool elsewhere = false;
      for (int j = 0; j < l && !elsewhere; ++j) {
        if (j == i) continue;
        for (Letter letter : p.relators[static_cast<std::size_t>(j)].letters()) {
          if (letter.index() == g) {
            elsewhere = true;
            break;
          }
        }
      }
      if (!elsewhere) {
        MoveToken t;
        t.kind = MoveKind::Destabilize;
        t.i = i;
        out.push_back(t);
      }
    }
  }
  return out;
}

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
};

}  // namespace

ScrambleResult scramble(const Presentation& p, int count, std::uint64_t seed,
                        const ScrambleOptions& opts) {
  if (count < 0) throw error("scramble move count must be nonnegative");
  SplitMix64 rng(seed ^ 0xac5ca1b1eULL);

  ScrambleResult out;
  out.scrambled = p;
  std::vector<MoveToken> inverse_stack;

  auto total_length = [](const Presentation& q) {
    std::size_t n = 0;
    for (const auto& r : q.relators) n += r.size();
    return n;
  };

  for (int step = 0; step < count; ++step) {
    const Presentation& cur = out.scrambled;
    int l = cur.relator_count();
    int k = cur.generator_count();

    std::vector<MoveKind> kinds;
    if (l >= 1) kinds.push_back(MoveKind::InvertRelator);
    if (l >= 2) {
      kinds.push_back(MoveKind::MultiplyRelator);
      kinds.push_back(MoveKind::SwapRelators);
    }
    if (k >= 1) kinds.push_back(MoveKind::GeneratorInvert);
    if (k >= 2) {
      kinds.push_back(MoveKind::GeneratorMultiply);
      kinds.push_back(MoveKind::SwapGenerators);
    }
    if (opts.allow_stable) kinds.push_back(MoveKind::Stabilize);
    if (kinds.empty()) throw error("presentation admits no invertible moves");

    for (int attempt = 0;; ++attempt) {
      MoveToken t;
      t.kind = kinds[rng.below(kinds.size())];
      switch (t.kind) {
        case MoveKind::InvertRelator:
          t.i = static_cast<int>(rng.below(static_cast<std::uint64_t>(l)));
          break;
        case MoveKind::MultiplyRelator: {
          t.i = static_cast<int>(rng.below(static_cast<std::uint64_t>(l)));
          t.j = static_cast<int>(rng.below(static_cast<std::uint64_t>(l - 1)));
          if (t.j >= t.i) ++t.j;
          t.sign = rng.below(2) == 0 ? +1 : -1;
          // uniform over reduced conjugators of length <= cap
          std::uint64_t letters = 2 * static_cast<std::uint64_t>(cur.alphabet.size());
          std::uint64_t total = 1, per_len = 1;
          for (int len = 1; len <= opts.conjugator_length_cap; ++len) {
            per_len = len == 1 ? letters : per_len * (letters - 1);
            total += per_len;
          }
          std::uint64_t pick = rng.below(total);
          std::vector<Letter> c;
          std::uint64_t len_count = 1;
          int len = 0;
          while (pick >= len_count) {
            pick -= len_count;
            ++len;
            len_count = len == 1 ? letters : len_count * (letters - 1);
          }
          for (int pos = 0; pos < len; ++pos) {
            std::uint64_t choices = pos == 0 ? letters : letters - 1;
            std::uint64_t r = pick % choices;
            pick /= choices;
            int code = 0, seen = 0;
            for (;; ++code) {
              Letter cand = Letter::from_code(code);
              if (!c.empty() && c.back() == cand.inverse()) continue;
              if (static_cast<std::uint64_t>(seen) == r) break;
              ++seen;
            }
            c.push_back(Letter::from_code(code));
          }
          t.c = Word(std::move(c));
          break;
        }
        case MoveKind::SwapRelators:
          t.i = static_cast<int>(rng.below(static_cast<std::uint64_t>(l)));
          t.j = static_cast<int>(rng.below(static_cast<std::uint64_t>(l - 1)));
          if (t.j >= t.i) ++t.j;
          break;
        case MoveKind::GeneratorInvert:
          t.i = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
          break;
        case MoveKind::GeneratorMultiply:
        case MoveKind::SwapGenerators:
          t.i = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
          t.j = static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1)));
          if (t.j >= t.i) ++t.j;
          if (t.kind == MoveKind::GeneratorMultiply) t.sign = rng.below(2) == 0 ? +1 : -1;
          break;
        case MoveKind::Stabilize:
          break;
        default:
          continue;
      }
      Presentation next = apply_move(cur, t);
      if (opts.max_total_length != 0 && total_length(next) > opts.max_total_length &&
          attempt < 64) {
        continue;  // resample; deterministic, rng state advances
      }
      inverse_stack.push_back(inverse_of(t, cur));
      out.forward.push_back(t);
      out.scrambled = std::move(next);
      break;
    }
  }

  out.inverse.assign(inverse_stack.rbegin(), inverse_stack.rend());
  return out;
}

// --- trivialization search ---------------------------------------------------

namespace {

struct Node {
  Presentation state;
  int parent = -1;
  MoveToken via;
  std::size_t length = 0;  // cyclic length, cached for the beam ordering
};

struct CfHash {
  std::size_t operator()(const CanonicalForm& cf) const { return cf.hash(); }
};

struct Candidate {
  CanonicalForm cf;
  Presentation state;
  int parent;
  MoveToken via;
  std::size_t length;
  std::size_t order_key;  // position in the deterministic generation order
};

MoveScript path_to(const std::vector<Node>& nodes, int idx) {
  MoveScript script;
  for (int cur = idx; nodes[static_cast<std::size_t>(cur)].parent != -1;
       cur = nodes[static_cast<std::size_t>(cur)].parent) {
    script.push_back(nodes[static_cast<std::size_t>(cur)].via);
  }
  std::reverse(script.begin(), script.end());
  return script;
}

}  // namespace

std::optional<MoveScript> trivialization_search(const Presentation& p, const SearchBudget& budget,
                                                const SearchOptions& opts, SearchStats* stats) {
  check_presentation(p);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st = SearchStats{};

  std::vector<Node> nodes;
  std::unordered_map<CanonicalForm, int, CfHash> table;

  auto goal_check = [&](const Presentation& q, const CanonicalForm& cf) {
    if (q.relator_count() != q.generator_count()) return false;
    return cf == canonical_form(trivial_presentation(q.generator_count()));
  };

  CanonicalForm root_cf = canonical_form(p);
  nodes.push_back(Node{p, -1, MoveToken{}, cyclic_length(p)});
  table.emplace(root_cf, 0);
  st.nodes_stored = 1;
  if (goal_check(p, root_cf)) return MoveScript{};

  std::vector<int> frontier{0};

  for (int depth = 0; depth < budget.max_depth; ++depth) {
    if (frontier.empty()) break;

    // expand the whole wave; workers split it deterministically
    std::vector<std::vector<Candidate>> buckets(static_cast<std::size_t>(std::max(1, opts.workers)));
    auto expand_range = [&](std::size_t begin, std::size_t end, std::vector<Candidate>& sink) {
      for (std::size_t f = begin; f < end; ++f) {
        int node_idx = frontier[f];
        const Presentation& state = nodes[static_cast<std::size_t>(node_idx)].state;
        std::vector<MoveToken> moves = search_moves(state, budget.conjugator_length_cap, opts);
        for (std::size_t m = 0; m < moves.size(); ++m) {
          Presentation child = apply_move(state, moves[m]);
          Candidate cand;
          cand.cf = canonical_form(child);
          cand.length = cyclic_length(child);
          cand.state = std::move(child);
          cand.parent = node_idx;
          cand.via = moves[m];
          cand.order_key = (static_cast<std::size_t>(f) << 24) + m;
          sink.push_back(std::move(cand));
        }
      }
    };

    int workers = std::max(1, opts.workers);
    if (workers == 1 || frontier.size() < 2) {
      expand_range(0, frontier.size(), buckets[0]);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (frontier.size() + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
      for (int w = 0; w < workers; ++w) {
        std::size_t begin = static_cast<std::size_t>(w) * chunk;
        std::size_t end = std::min(frontier.size(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(expand_range, begin, end, std::ref(buckets[static_cast<std::size_t>(w)]));
      }
      for (auto& th : pool) th.join();
    }
    st.nodes_expanded += frontier.size();

    // merge in canonical order so results are worker-count independent
    std::vector<Candidate> wave;
    for (auto& b : buckets) {
      for (auto& cand : b) wave.push_back(std::move(cand));
    }
    st.nodes_generated += wave.size();
    std::sort(wave.begin(), wave.end(), [](const Candidate& a, const Candidate& b) {
      if (auto c = a.cf <=> b.cf; c != 0) return c < 0;
      return a.order_key < b.order_key;
    });

    std::vector<int> next_frontier;
    int goal_idx = -1;
    const CanonicalForm* prev = nullptr;
    for (auto& cand : wave) {
      if (prev && *prev == cand.cf) continue;  // first candidate of the class wins
      if (table.find(cand.cf) != table.end()) {
        prev = &cand.cf;
        continue;
      }
      if (st.nodes_stored >= budget.max_nodes) {
        st.budget_exhausted = true;
        return std::nullopt;
      }
      nodes.push_back(Node{std::move(cand.state), cand.parent, cand.via, cand.length});
      int idx = static_cast<int>(nodes.size()) - 1;
      auto [it, inserted] = table.emplace(std::move(cand.cf), idx);
      ++st.nodes_stored;
      next_frontier.push_back(idx);
      if (goal_idx == -1 && goal_check(nodes.back().state, it->first)) goal_idx = idx;
      prev = &it->first;
    }
    if (goal_idx != -1) return path_to(nodes, goal_idx);

    // beam: keep the most promising states, deterministically
    if (next_frontier.size() > budget.beam_width) {
      std::stable_sort(next_frontier.begin(), next_frontier.end(), [&](int a, int b) {
        return nodes[static_cast<std::size_t>(a)].length < nodes[static_cast<std::size_t>(b)].length;
      });
      next_frontier.resize(budget.beam_width);
    }
    frontier = std::move(next_frontier);
  }

  st.budget_exhausted = true;
  return std::nullopt;
}

// --- certificate search ------------------------------------------------------

std::optional<NormalClosureCertificate> certificate_search(const Presentation& p,
                                                           const Word& target,
                                                           const SearchBudget& budget,
                                                           SearchStats* stats) {
  check_presentation(p);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st = SearchStats{};

  struct CertNode {
    Word product;
    int parent = -1;
    NormalClosureCertificate::Factor via;
  };

  struct WordHash {
    std::size_t operator()(const Word& w) const {
      std::uint64_t h = 0x2545f4914f6cdd1dULL;
      for (Letter l : w.letters())
        h = (h ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(l.code()))) * 0x100000001b3ULL;
      return static_cast<std::size_t>(h);
    }
  };

  std::vector<CertNode> nodes;
  std::unordered_map<Word, int, WordHash> seen;
  nodes.push_back(CertNode{});
  seen.emplace(Word(), 0);
  st.nodes_stored = 1;

  auto build = [&](int idx) {
    NormalClosureCertificate cert;
    for (int cur = idx; nodes[static_cast<std::size_t>(cur)].parent != -1;
         cur = nodes[static_cast<std::size_t>(cur)].parent) {
      cert.factors.push_back(nodes[static_cast<std::size_t>(cur)].via);
    }
    std::reverse(cert.factors.begin(), cert.factors.end());
    return cert;
  };

  if (target.empty()) return build(0);

  std::vector<Word> conjugators = enumerate_conjugators(p.alphabet, budget.conjugator_length_cap);
  std::vector<int> frontier{0};

  for (int depth = 0; depth < budget.max_depth; ++depth) {
    if (frontier.empty()) break;
    std::vector<int> next_frontier;
    for (int node_idx : frontier) {
      ++st.nodes_expanded;
      for (int rel = 0; rel < p.relator_count(); ++rel) {
        for (int sign : {+1, -1}) {
          const Word& r = p.relators[static_cast<std::size_t>(rel)];
          Word factor_body = sign > 0 ? r : invert(r);
          for (const auto& c : conjugators) {
            Word product = nodes[static_cast<std::size_t>(node_idx)].product * conjugate(factor_body, c);
            ++st.nodes_generated;
            if (seen.find(product) != seen.end()) continue;
            if (st.nodes_stored >= budget.max_nodes) {
              st.budget_exhausted = true;
              return std::nullopt;
            }
            CertNode node;
            node.product = product;
            node.parent = node_idx;
            node.via = {sign, rel, c};
            nodes.push_back(std::move(node));
            int idx = static_cast<int>(nodes.size()) - 1;
            seen.emplace(std::move(product), idx);
            ++st.nodes_stored;
            if (nodes.back().product == target) return build(idx);
            next_frontier.push_back(idx);
          }
        }
      }
    }
    frontier = std::move(next_frontier);
  }

  st.budget_exhausted = true;
  return std::nullopt;
}

}  // namespace hcalc
