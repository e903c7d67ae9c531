#include "hcalc/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "hcalc/errors.hpp"

namespace hcalc {

namespace {

void check_relator_index(int i, int count) {
  if (i < 0 || i >= count) throw error("relator index out of range");
}

void check_generator_index(int i, int count) {
  if (i < 0 || i >= count) throw error("generator index out of range");
}

void check_distinct(int i, int j) {
  if (i == j) throw error("indices must be distinct");
}

Word power(const Word& w, int sign) { return sign >= 0 ? w : invert(w); }

// identity endomorphism images for `p`, with slot i replaced by `image`
std::vector<Word> basis_change(const Presentation& p, int i, Word image) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(p.generator_count()));
  for (int g = 0; g < p.generator_count(); ++g) images.emplace_back(Letter(g, +1));
  images[static_cast<std::size_t>(i)] = std::move(image);
  return images;
}

Presentation rewrite_relators(Presentation p, std::span<const Word> images) {
  for (auto& r : p.relators) r = substitute(r, images, p.generator_count());
  return p;
}

}  // namespace

void check_presentation(const Presentation& p) {
  for (const auto& r : p.relators) {
    if (!fits_alphabet(r, p.alphabet)) throw error("relator uses letters outside the alphabet");
  }
}

Presentation BiPresentation::primary_presentation() const {
  Presentation p;
  p.alphabet = primary;
  p.relators.reserve(pairs.size());
  for (const auto& hp : pairs) p.relators.push_back(hp.relator);
  return p;
}

void check_bipresentation(const BiPresentation& bp) {
  for (const auto& hp : bp.pairs) {
    if (!fits_alphabet(hp.relator, bp.primary)) throw error("relator uses letters outside the primary alphabet");
    if (!fits_alphabet(hp.dual_relator, bp.dual)) throw error("dual relator uses letters outside the dual alphabet");
  }
}

Presentation invert_relator(const Presentation& p, int i) {
  check_relator_index(i, p.relator_count());
  Presentation out = p;
  out.relators[static_cast<std::size_t>(i)] = invert(p.relators[static_cast<std::size_t>(i)]);
  return out;
}

Presentation multiply_relator(const Presentation& p, int i, int j, const Word& c, int sign) {
  check_relator_index(i, p.relator_count());
  check_relator_index(j, p.relator_count());
  check_distinct(i, j);
  Presentation out = p;
  const Word& ri = p.relators[static_cast<std::size_t>(i)];
  const Word& rj = p.relators[static_cast<std::size_t>(j)];
  out.relators[static_cast<std::size_t>(i)] = ri * conjugate(power(rj, sign), c);
  return out;
}

Presentation invert_generator(const Presentation& p, int i) {
  check_generator_index(i, p.generator_count());
  Presentation out = rewrite_relators(p, basis_change(p, i, invert(Word(Letter(i, +1)))));
  return out;
}

Presentation multiply_generator(const Presentation& p, int i, int j, int sign) {
  check_generator_index(i, p.generator_count());
  check_generator_index(j, p.generator_count());
  check_distinct(i, j);
  // new x_i = old x_i * x_j^sign, so old x_i = new x_i * x_j^-sign
  Word image = Word(Letter(i, +1)) * power(Word(Letter(j, +1)), -sign);
  return rewrite_relators(p, basis_change(p, i, std::move(image)));
}

Presentation stabilize(const Presentation& p) {
  Presentation out = p;
  std::string name = fresh_name(p.alphabet, "s");
  out.alphabet.add_generator(name);
  out.relators.emplace_back(Letter(out.alphabet.generator_count() - 1, +1));
  return out;
}

namespace {

// Single positive generator letter occurring in no other relator.
int destabilizable_generator(const Presentation& p, int i) {
  const Word& r = p.relators[static_cast<std::size_t>(i)];
  if (r.size() != 1 || r.front().sign() != +1 || p.alphabet.is_boundary(r.front().index()))
    throw error("relator is not a single generator");
  int g = r.front().index();
  for (int k = 0; k < p.relator_count(); ++k) {
    if (k == i) continue;
    for (Letter l : p.relators[static_cast<std::size_t>(k)].letters()) {
      if (l.index() == g) throw error("generator occurs in another relator");
    }
  }
  return g;
}

std::vector<int> removal_table(int size, int removed) {
  std::vector<int> table(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) table[static_cast<std::size_t>(k)] = k < removed ? k : k - 1;
  return table;
}

}  // namespace

Presentation destabilize(const Presentation& p, int i) {
  check_relator_index(i, p.relator_count());
  int g = destabilizable_generator(p, i);
  Presentation out;
  out.alphabet = p.alphabet;
  out.alphabet.remove_generator(g);
  auto table = removal_table(p.alphabet.size(), g);
  for (int k = 0; k < p.relator_count(); ++k) {
    if (k == i) continue;
    out.relators.push_back(remap_letters(p.relators[static_cast<std::size_t>(k)], table));
  }
  return out;
}

Presentation swap_relators(const Presentation& p, int i, int j) {
  check_relator_index(i, p.relator_count());
  check_relator_index(j, p.relator_count());
  Presentation out = p;
  std::swap(out.relators[static_cast<std::size_t>(i)], out.relators[static_cast<std::size_t>(j)]);
  return out;
}

Presentation swap_generators(const Presentation& p, int i, int j) {
  check_generator_index(i, p.generator_count());
  check_generator_index(j, p.generator_count());
  Presentation out = p;
  out.alphabet.swap_generators(i, j);
  std::vector<int> table(static_cast<std::size_t>(p.alphabet.size()));
  std::iota(table.begin(), table.end(), 0);
  std::swap(table[static_cast<std::size_t>(i)], table[static_cast<std::size_t>(j)]);
  for (auto& r : out.relators) r = remap_letters(r, table);
  return out;
}

BiPresentation invert_relator(const BiPresentation& bp, int i) {
  check_relator_index(i, bp.pair_count());
  BiPresentation out = bp;
  auto& hp = out.pairs[static_cast<std::size_t>(i)];
  hp.relator = invert(hp.relator);
  hp.dual_relator = invert(hp.dual_relator);
  return out;
}

BiPresentation add_cancelling_pair(const BiPresentation& bp, Side side) {
  BiPresentation out = bp;
  if (side == Side::Primary) {
    out.primary.add_generator(fresh_name(out.primary, "s"));
    HandlePair hp;
    hp.relator = Word(Letter(out.primary.generator_count() - 1, +1));
    out.pairs.push_back(std::move(hp));
  } else {
    out.dual.add_generator(fresh_name(out.dual, "t"));
    HandlePair hp;
    hp.dual_relator = Word(Letter(out.dual.generator_count() - 1, +1));
    out.pairs.push_back(std::move(hp));
  }
  return out;
}

BiPresentation remove_cancelling_pair(const BiPresentation& bp, int i) {
  check_relator_index(i, bp.pair_count());
  const HandlePair& hp = bp.pairs[static_cast<std::size_t>(i)];
  Side side;
  if (hp.dual_relator.empty()) {
    side = Side::Primary;
  } else if (hp.relator.empty()) {
    side = Side::Dual;
  } else {
    throw error("pair is not a cancelling pair");
  }
  // reuse the presentation-level precondition checks on the relevant side
  Presentation side_pres;
  side_pres.alphabet = side == Side::Primary ? bp.primary : bp.dual;
  for (const auto& pair : bp.pairs)
    side_pres.relators.push_back(side == Side::Primary ? pair.relator : pair.dual_relator);
  int g = destabilizable_generator(side_pres, i);

  BiPresentation out;
  out.primary = bp.primary;
  out.dual = bp.dual;
  auto table = removal_table(side == Side::Primary ? bp.primary.size() : bp.dual.size(), g);
  (side == Side::Primary ? out.primary : out.dual).remove_generator(g);
  for (int k = 0; k < bp.pair_count(); ++k) {
    if (k == i) continue;
    HandlePair copy = bp.pairs[static_cast<std::size_t>(k)];
    if (side == Side::Primary) {
      copy.relator = remap_letters(copy.relator, table);
    } else {
      copy.dual_relator = remap_letters(copy.dual_relator, table);
    }
    out.pairs.push_back(std::move(copy));
  }
  return out;
}

BiPresentation general_slide(const BiPresentation& bp, int i, int j, const SlidePath& path,
                             int sign) {
  check_relator_index(i, bp.pair_count());
  check_relator_index(j, bp.pair_count());
  check_distinct(i, j);
  BiPresentation out = bp;
  const Word& ri = bp.pairs[static_cast<std::size_t>(i)].relator;
  const Word& rj = bp.pairs[static_cast<std::size_t>(j)].relator;
  const Word& di = bp.pairs[static_cast<std::size_t>(i)].dual_relator;
  const Word& dj = bp.pairs[static_cast<std::size_t>(j)].dual_relator;
  out.pairs[static_cast<std::size_t>(i)].relator = ri * conjugate(power(rj, sign), path.c);
  out.pairs[static_cast<std::size_t>(j)].dual_relator =
      dj * conjugate(power(di, -sign), invert(path.c_star));
  return out;
}

BiPresentation single_slide(const BiPresentation& bp, int i, int j, const Word& c, int sign) {
  return general_slide(bp, i, j, SlidePath{c, Word()}, sign);
}

BiPresentation double_slide(const BiPresentation& bp, int i, int j, const Word& c, int sign) {
  check_relator_index(i, bp.pair_count());
  check_relator_index(j, bp.pair_count());
  check_distinct(i, j);
  BiPresentation out = bp;
  const Word& ri = bp.pairs[static_cast<std::size_t>(i)].relator;
  const Word& rj = bp.pairs[static_cast<std::size_t>(j)].relator;
  Word bracket = sign >= 0 ? commutator(c, rj) : commutator(rj, c);
  out.pairs[static_cast<std::size_t>(i)].relator = ri * bracket;
  return out;
}

BiPresentation swap_relators(const BiPresentation& bp, int i, int j) {
  check_relator_index(i, bp.pair_count());
  check_relator_index(j, bp.pair_count());
  BiPresentation out = bp;
  std::swap(out.pairs[static_cast<std::size_t>(i)], out.pairs[static_cast<std::size_t>(j)]);
  return out;
}

BiPresentation swap_generators(const BiPresentation& bp, int i, int j) {
  check_generator_index(i, bp.primary.generator_count());
  check_generator_index(j, bp.primary.generator_count());
  BiPresentation out = bp;
  out.primary.swap_generators(i, j);
  std::vector<int> table(static_cast<std::size_t>(bp.primary.size()));
  std::iota(table.begin(), table.end(), 0);
  std::swap(table[static_cast<std::size_t>(i)], table[static_cast<std::size_t>(j)]);
  for (auto& hp : out.pairs) hp.relator = remap_letters(hp.relator, table);
  return out;
}

bool relator_matches_generator(const Word& relator, int generator) {
  Word core = cyclic_reduce(relator).core;
  return core.size() == 1 && core.front().index() == generator;
}

namespace {

// Deterministic augmenting-path maximum matching; ties broken by lowest
// index on both sides.
struct Matcher {
  const std::vector<std::vector<int>>& adj;  // relator -> matchable generators
  std::vector<int> rel_match;                // relator -> generator or -1
  std::vector<int> gen_match;                // generator -> relator or -1
  std::vector<char> visited;

  Matcher(const std::vector<std::vector<int>>& a, int gens)
      : adj(a),
        rel_match(a.size(), -1),
        gen_match(static_cast<std::size_t>(gens), -1),
        visited(static_cast<std::size_t>(gens), 0) {}

  bool augment(int r) {
    for (int g : adj[static_cast<std::size_t>(r)]) {
      if (visited[static_cast<std::size_t>(g)]) continue;
      visited[static_cast<std::size_t>(g)] = 1;
      if (gen_match[static_cast<std::size_t>(g)] == -1 ||
          augment(gen_match[static_cast<std::size_t>(g)])) {
        gen_match[static_cast<std::size_t>(g)] = r;
        rel_match[static_cast<std::size_t>(r)] = g;
        return true;
      }
    }
    return false;
  }

  int solve() {
    int size = 0;
    for (int r = 0; r < static_cast<int>(adj.size()); ++r) {
      std::fill(visited.begin(), visited.end(), 0);
      if (augment(r)) ++size;
    }
    return size;
  }
};

}  // namespace

AcStructure is_ac_structure(const Presentation& p) {
  int k = p.generator_count();
  int l = p.relator_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(l));
  for (int r = 0; r < l; ++r) {
    for (int g = 0; g < k; ++g) {
      if (relator_matches_generator(p.relators[static_cast<std::size_t>(r)], g))
        adj[static_cast<std::size_t>(r)].push_back(g);
    }
  }
  Matcher m(adj, k);
  int size = m.solve();

  AcStructure out;
  out.type1 = k >= l && size == l;
  out.type2 = k <= l && size == k;
  if (out.type1 || out.type2) {
    std::vector<std::pair<int, int>> witness;
    for (int r = 0; r < l; ++r) {
      if (m.rel_match[static_cast<std::size_t>(r)] != -1)
        witness.emplace_back(r, m.rel_match[static_cast<std::size_t>(r)]);
    }
    out.matching = std::move(witness);
  }
  return out;
}

Presentation apply_move(const Presentation& p, const MoveToken& t) {
  switch (t.kind) {
    case MoveKind::InvertRelator:
      return invert_relator(p, t.i);
    case MoveKind::MultiplyRelator:
      return multiply_relator(p, t.i, t.j, t.c, t.sign);
    case MoveKind::GeneratorInvert:
      return invert_generator(p, t.i);
    case MoveKind::GeneratorMultiply:
      return multiply_generator(p, t.i, t.j, t.sign);
    case MoveKind::Stabilize:
      return stabilize(p);
    case MoveKind::Destabilize:
      return destabilize(p, t.i);
    case MoveKind::SwapRelators:
      return swap_relators(p, t.i, t.j);
    case MoveKind::SwapGenerators:
      return swap_generators(p, t.i, t.j);
    default:
      throw error("move kind requires a bi-presentation");
  }
}

BiPresentation apply_move(const BiPresentation& bp, const MoveToken& t) {
  switch (t.kind) {
    case MoveKind::InvertRelator:
      return invert_relator(bp, t.i);
    case MoveKind::Stabilize:
    case MoveKind::AddCancellingPairPrimary:
      return add_cancelling_pair(bp, Side::Primary);
    case MoveKind::AddCancellingPairDual:
      return add_cancelling_pair(bp, Side::Dual);
    case MoveKind::Destabilize:
      return remove_cancelling_pair(bp, t.i);
    case MoveKind::SingleSlide:
      return single_slide(bp, t.i, t.j, t.c, t.sign);
    case MoveKind::DoubleSlide:
      return double_slide(bp, t.i, t.j, t.c, t.sign);
    case MoveKind::GeneralSlide:
      return general_slide(bp, t.i, t.j, SlidePath{t.c, t.c_star}, t.sign);
    case MoveKind::SwapRelators:
      return swap_relators(bp, t.i, t.j);
    case MoveKind::SwapGenerators:
      return swap_generators(bp, t.i, t.j);
    default:
      throw error("move kind requires a plain presentation");
  }
}

Presentation apply_script(Presentation p, const MoveScript& script) {
  for (const auto& t : script) p = apply_move(p, t);
  return p;
}

BiPresentation apply_script(BiPresentation bp, const MoveScript& script) {
  for (const auto& t : script) bp = apply_move(bp, t);
  return bp;
}

namespace {

MoveToken flip_sign(MoveToken t) {
  t.sign = -t.sign;
  return t;
}

}  // namespace

MoveToken inverse_of(const MoveToken& t, const Presentation& before) {
  switch (t.kind) {
    case MoveKind::InvertRelator:
    case MoveKind::GeneratorInvert:
    case MoveKind::SwapRelators:
    case MoveKind::SwapGenerators:
      return t;
    case MoveKind::MultiplyRelator:
    case MoveKind::GeneratorMultiply:
      return flip_sign(t);
    case MoveKind::Stabilize: {
      MoveToken inv;
      inv.kind = MoveKind::Destabilize;
      inv.i = before.relator_count();  // the appended relator
      return inv;
    }
    case MoveKind::Destabilize:
      throw error("destabilize has no token inverse");
    default:
      throw error("move kind requires a bi-presentation");
  }
}

MoveToken inverse_of(const MoveToken& t, const BiPresentation& before) {
  switch (t.kind) {
    case MoveKind::InvertRelator:
    case MoveKind::SwapRelators:
    case MoveKind::SwapGenerators:
      return t;
    case MoveKind::SingleSlide:
    case MoveKind::DoubleSlide:
    case MoveKind::GeneralSlide:
      return flip_sign(t);
    case MoveKind::Stabilize:
    case MoveKind::AddCancellingPairPrimary:
    case MoveKind::AddCancellingPairDual: {
      MoveToken inv;
      inv.kind = MoveKind::Destabilize;
      inv.i = before.pair_count();
      return inv;
    }
    case MoveKind::Destabilize:
      throw error("destabilize has no token inverse");
    default:
      throw error("move kind requires a plain presentation");
  }
}

}  // namespace hcalc
