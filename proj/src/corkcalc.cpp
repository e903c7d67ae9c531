#include "hcalc/corkcalc.hpp"

#include <algorithm>
#include <cstdlib>

#include "hcalc/errors.hpp"

namespace hcalc {

MulticorkModel MulticorkModel::make(std::vector<Presentation> components) {
  if (components.empty()) throw error("multicork must have at least one component");
  for (const auto& c : components) {
    check_presentation(c);
    if (!c.balanced()) throw error("multicork component is not balanced");
    AcStructure ac = is_ac_structure(c);
    if (!ac.type1 || !ac.type2) throw error("multicork component is not an AC structure");
  }
  MulticorkModel mc;
  mc.components = std::move(components);
  return mc;
}

Presentation boundary_sum(std::span<const Presentation> components) {
  Presentation out;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < components.size(); ++i) {
    std::string tag = "@" + std::to_string(i);
    for (const auto& n : components[i].alphabet.generator_names()) names.push_back(n + tag);
    for (const auto& n : components[i].alphabet.boundary_names()) names.push_back(n + tag);
  }
  out.alphabet = Alphabet::make(std::move(names));
  int offset = 0;
  for (const auto& comp : components) {
    std::vector<int> table(static_cast<std::size_t>(comp.alphabet.size()));
    for (std::size_t k = 0; k < table.size(); ++k) table[k] = offset + static_cast<int>(k);
    for (const auto& r : comp.relators) out.relators.push_back(remap_letters(r, table));
    offset += comp.alphabet.size();
  }
  return out;
}

Presentation boundary_sum(const Presentation& a, const Presentation& b) {
  std::array<Presentation, 2> parts{a, b};
  return boundary_sum(std::span<const Presentation>(parts));
}

MulticorkModel mu(const Presentation& cork, int order) {
  if (order < 1) throw error("multicork order must be at least 1");
  return MulticorkModel::make(std::vector<Presentation>(static_cast<std::size_t>(order), cork));
}

PinwheelModel pinwheel(const MulticorkModel& mc) {
  PinwheelModel pw;
  pw.order = mc.order();
  pw.total = boundary_sum(std::span<const Presentation>(mc.components));
  int gen_off = 0, rel_off = 0;
  for (const auto& comp : mc.components) {
    ComponentSpan span;
    span.gen_offset = gen_off;
    span.gen_count = comp.alphabet.size();
    span.rel_offset = rel_off;
    span.rel_count = comp.relator_count();
    pw.spans.push_back(span);
    gen_off += span.gen_count;
    rel_off += span.rel_count;
  }
  AcStructure ac = is_ac_structure(pw.total);
  if (!pw.total.balanced() || !ac.type1 || !ac.type2)
    throw error("pinwheel total is not a balanced AC structure");
  return pw;
}

namespace {

std::string strip_tag(const std::string& name, int component) {
  std::string tag = "@" + std::to_string(component);
  if (name.size() <= tag.size() || name.compare(name.size() - tag.size(), tag.size(), tag) != 0)
    throw error("pinwheel generator '" + name + "' is missing its component tag");
  return name.substr(0, name.size() - tag.size());
}

}  // namespace

Presentation pinwheel_component(const PinwheelModel& pw, int i) {
  if (i < 0 || i >= pw.order) throw error("component index out of range");
  const ComponentSpan& span = pw.spans[static_cast<std::size_t>(i)];
  Presentation out;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(span.gen_count));
  for (int g = span.gen_offset; g < span.gen_offset + span.gen_count; ++g)
    names.push_back(strip_tag(pw.total.alphabet.name(g), i));
  out.alphabet = Alphabet::make(std::move(names));
  std::vector<int> table(static_cast<std::size_t>(pw.total.alphabet.size()), -1);
  for (int g = 0; g < span.gen_count; ++g)
    table[static_cast<std::size_t>(span.gen_offset + g)] = g;
  for (int r = span.rel_offset; r < span.rel_offset + span.rel_count; ++r)
    out.relators.push_back(remap_letters(pw.total.relators[static_cast<std::size_t>(r)], table));
  return out;
}

Presentation pinwheel_twist(const PinwheelModel& pw, int j) {
  int n = pw.order;
  int shift = ((j % n) + n) % n;
  std::vector<Presentation> rotated;
  rotated.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rotated.push_back(pinwheel_component(pw, (i + shift) % n));
  return boundary_sum(std::span<const Presentation>(rotated));
}

Word certificate_product(const Presentation& p, const NormalClosureCertificate& cert) {
  Word product;
  for (const auto& f : cert.factors) {
    if (f.relator < 0 || f.relator >= p.relator_count())
      throw error("certificate relator index out of range");
    const Word& r = p.relators[static_cast<std::size_t>(f.relator)];
    product = product * conjugate(f.sign >= 0 ? r : invert(r), f.conjugator);
  }
  return product;
}

bool verify_certificate(const Presentation& p, const Word& target,
                        const NormalClosureCertificate& cert) {
  return certificate_product(p, cert) == target;
}

bool verify_decomposition(const Presentation& p, const CommutatorDecomposition& d) {
  for (const auto& entry : d.entries) {
    if (entry.index < 0 || entry.index >= p.relator_count() ||
        entry.index >= p.generator_count())
      throw error("decomposition index out of range");
    Word product{Letter(entry.index, +1)};
    for (const auto& [a, b] : entry.pairs) product = product * commutator(a, b);
    if (product != p.relators[static_cast<std::size_t>(entry.index)]) return false;
  }
  return true;
}

EncaseResult encase(const BiPresentation& bp, const CommutatorDecomposition& d,
                    const std::vector<std::vector<NormalClosureCertificate>>& certs) {
  check_bipresentation(bp);
  Presentation primary = bp.primary_presentation();
  if (!verify_decomposition(primary, d)) throw verify_error("commutator decomposition does not check");
  if (certs.size() != d.entries.size()) throw error("one certificate list per decomposition entry required");
  for (std::size_t e = 0; e < d.entries.size(); ++e) {
    const auto& entry = d.entries[e];
    if (certs[e].size() != entry.pairs.size())
      throw error("one certificate per commutator pair required");
    for (std::size_t j = 0; j < entry.pairs.size(); ++j) {
      for (const auto& f : certs[e][j].factors) {
        if (f.relator >= bp.pair_count()) throw error("certificate relator index out of range");
      }
      if (!verify_certificate(primary, entry.pairs[j].second, certs[e][j]))
        throw verify_error("normal closure certificate does not check");
    }
  }

  EncaseResult out;
  BiPresentation cur = bp;

  // extra cancelling 2/3-pairs, one per commutator pair, in entry order
  std::vector<std::vector<int>> extra(d.entries.size());
  for (std::size_t e = 0; e < d.entries.size(); ++e) {
    for (std::size_t j = 0; j < d.entries[e].pairs.size(); ++j) {
      MoveToken t;
      t.kind = MoveKind::AddCancellingPairDual;
      cur = apply_move(cur, t);
      out.script.push_back(t);
      extra[e].push_back(cur.pair_count() - 1);
    }
  }

  // single slide each extra 2-handle over the original handles until its
  // relator is b_ij
  for (std::size_t e = 0; e < d.entries.size(); ++e) {
    for (std::size_t j = 0; j < d.entries[e].pairs.size(); ++j) {
      for (const auto& f : certs[e][j].factors) {
        MoveToken t;
        t.kind = MoveKind::SingleSlide;
        t.i = extra[e][j];
        t.j = f.relator;
        t.sign = f.sign;
        t.c = f.conjugator;
        cur = apply_move(cur, t);
        out.script.push_back(t);
      }
    }
  }

  // peel the commutators off relator i; right multiplication consumes the
  // decomposition right to left
  for (std::size_t e = 0; e < d.entries.size(); ++e) {
    const auto& entry = d.entries[e];
    for (std::size_t j = entry.pairs.size(); j-- > 0;) {
      MoveToken t;
      t.kind = MoveKind::DoubleSlide;
      t.i = entry.index;
      t.j = extra[e][j];
      t.sign = -1;
      t.c = entry.pairs[j].first;
      cur = apply_move(cur, t);
      out.script.push_back(t);
    }
    const Word& r = cur.pairs[static_cast<std::size_t>(entry.index)].relator;
    if (r != Word(Letter(entry.index, +1)))
      throw verify_error("encasement did not reduce the relator to its generator");
  }

  out.result = std::move(cur);
  return out;
}

PairingResult homological_pairing(const Presentation& p) {
  check_presentation(p);
  IntMat m = abelianization_matrix(p);
  if (!first_homology_trivial(m)) throw verify_error("first homology is nonzero; pairing impossible");

  PairingResult out;
  Presentation cur = p;
  int k = p.generator_count();
  int l = p.relator_count();

  auto emit = [&](MoveToken t) {
    cur = apply_move(cur, t);
    out.script.push_back(std::move(t));
  };
  auto mat = [&] { return abelianization_matrix(cur); };

  for (int col = 0; col < k; ++col) {
    // euclidean elimination below the diagonal
    for (;;) {
      IntMat a = mat();
      int pivot = -1;
      for (int r = col; r < l; ++r) {
        if (a.at(r, col) != 0 && (pivot == -1 || std::abs(a.at(r, col)) < std::abs(a.at(pivot, col))))
          pivot = r;
      }
      if (pivot == -1) throw verify_error("abelianization is rank deficient");  // unreachable after the SNF check
      if (pivot != col) {
        MoveToken t;
        t.kind = MoveKind::SwapRelators;
        t.i = col;
        t.j = pivot;
        emit(t);
        a = mat();
      }
      bool done = true;
      for (int r = col + 1; r < l; ++r) {
        long long q = a.at(r, col) / a.at(col, col);
        for (long long step = 0; step < std::abs(q); ++step) {
          MoveToken t;
          t.kind = MoveKind::MultiplyRelator;
          t.i = r;
          t.j = col;
          t.sign = q > 0 ? -1 : +1;
          emit(t);
        }
        if (mat().at(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (mat().at(col, col) < 0) {
      MoveToken t;
      t.kind = MoveKind::InvertRelator;
      t.i = col;
      emit(t);
    }
    if (mat().at(col, col) != 1)
      throw verify_error("homological pairing pivot is not a unit");  // unreachable after the SNF check
    // clear the column above the pivot
    for (int r = 0; r < col; ++r) {
      long long q = mat().at(r, col);
      for (long long step = 0; step < std::abs(q); ++step) {
        MoveToken t;
        t.kind = MoveKind::MultiplyRelator;
        t.i = r;
        t.j = col;
        t.sign = q > 0 ? -1 : +1;
        emit(t);
      }
    }
  }
  out.result = std::move(cur);
  return out;
}

}  // namespace hcalc
