#include "hcalc/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "hcalc/errors.hpp"

namespace hcalc {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++number;
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line;
    line.number = number;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

bool parse_int(std::string_view s, long long& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

[[noreturn]] void fail(const Line& line, const std::string& msg) {
  throw parse_error(msg, line.number);
}

long long require_int(const Line& line, std::size_t idx, const std::string& what) {
  if (idx >= line.tokens.size()) fail(line, "expected " + what);
  long long v = 0;
  if (!parse_int(line.tokens[idx], v)) fail(line, "malformed " + what + " '" + line.tokens[idx] + "'");
  return v;
}

int require_index(const Line& line, std::size_t idx, const std::string& what) {
  long long v = require_int(line, idx, what);
  if (v < 1) fail(line, what + " must be positive (indices are 1-based)");
  return static_cast<int>(v - 1);
}

// Appends the letters of one word token (`name`, `name^k`, or `1`).
void append_token_letters(const Line& line, const std::string& tok, const Alphabet& a,
                          std::vector<Letter>& out) {
  if (tok == "1") return;  // empty word
  std::string name = tok;
  long long exponent = 1;
  if (std::size_t caret = tok.find('^'); caret != std::string::npos) {
    name = tok.substr(0, caret);
    std::string_view exp = std::string_view(tok).substr(caret + 1);
    if (!parse_int(exp, exponent) || exponent == 0) fail(line, "malformed exponent in '" + tok + "'");
  }
  auto index = a.find(name);
  if (!index) fail(line, "unknown generator '" + name + "'");
  int sign = exponent > 0 ? +1 : -1;
  for (long long k = 0; k < std::abs(exponent); ++k) out.emplace_back(*index, sign);
}

Word word_from_tokens(const Line& line, std::span<const std::string> tokens, const Alphabet& a) {
  std::vector<Letter> letters;
  for (const auto& tok : tokens) append_token_letters(line, tok, a, letters);
  return Word(std::move(letters));
}

// Keyword-argument splitter for move/decomp/cert lines: tokens following
// `key=` up to the next `key=` belong to that key.
bool is_keyword(const std::string& tok) {
  return tok.size() >= 2 && tok.back() == '=' &&
         std::all_of(tok.begin(), tok.end() - 1,
                     [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
}

struct KeywordArgs {
  std::size_t positional_end = 0;  // tokens before the first keyword
  std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> args;  // key -> [begin,end)

  std::optional<std::pair<std::size_t, std::size_t>> find(const std::string& key) const {
    for (const auto& [k, range] : args) {
      if (k == key) return range;
    }
    return std::nullopt;
  }
};

KeywordArgs split_keywords(const Line& line, std::size_t begin) {
  KeywordArgs out;
  std::size_t i = begin;
  while (i < line.tokens.size() && !is_keyword(line.tokens[i])) ++i;
  out.positional_end = i;
  while (i < line.tokens.size()) {
    std::string key = line.tokens[i].substr(0, line.tokens[i].size() - 1);
    std::size_t start = ++i;
    while (i < line.tokens.size() && !is_keyword(line.tokens[i])) ++i;
    out.args.emplace_back(std::move(key), std::make_pair(start, i));
  }
  return out;
}

struct MoveKindName {
  MoveKind kind;
  const char* name;
};

constexpr MoveKindName kMoveKindNames[] = {
    {MoveKind::InvertRelator, "invertrel"},
    {MoveKind::MultiplyRelator, "mulrel"},
    {MoveKind::GeneratorInvert, "invgen"},
    {MoveKind::GeneratorMultiply, "mulgen"},
    {MoveKind::Stabilize, "stab"},
    {MoveKind::Destabilize, "destab"},
    {MoveKind::AddCancellingPairPrimary, "addpair"},
    {MoveKind::AddCancellingPairDual, "addpair"},
    {MoveKind::SingleSlide, "singleslide"},
    {MoveKind::DoubleSlide, "doubleslide"},
    {MoveKind::GeneralSlide, "generalslide"},
    {MoveKind::SwapRelators, "swaprel"},
    {MoveKind::SwapGenerators, "swapgen"},
};

// How many alphabets / which fields each kind uses.
bool kind_has_two_indices(MoveKind k) {
  switch (k) {
    case MoveKind::MultiplyRelator:
    case MoveKind::GeneratorMultiply:
    case MoveKind::SingleSlide:
    case MoveKind::DoubleSlide:
    case MoveKind::GeneralSlide:
    case MoveKind::SwapRelators:
    case MoveKind::SwapGenerators:
      return true;
    default:
      return false;
  }
}

bool kind_has_one_index(MoveKind k) {
  switch (k) {
    case MoveKind::InvertRelator:
    case MoveKind::GeneratorInvert:
    case MoveKind::Destabilize:
      return true;
    default:
      return false;
  }
}

bool kind_has_sign(MoveKind k) {
  switch (k) {
    case MoveKind::MultiplyRelator:
    case MoveKind::GeneratorMultiply:
    case MoveKind::SingleSlide:
    case MoveKind::DoubleSlide:
    case MoveKind::GeneralSlide:
      return true;
    default:
      return false;
  }
}

bool kind_has_c(MoveKind k) {
  switch (k) {
    case MoveKind::MultiplyRelator:
    case MoveKind::SingleSlide:
    case MoveKind::DoubleSlide:
    case MoveKind::GeneralSlide:
      return true;
    default:
      return false;
  }
}

MoveToken parse_move(const Line& line, const Alphabet* primary, const Alphabet* dual) {
  if (line.tokens.size() < 2) fail(line, "move line needs a kind");
  const std::string& kind_name = line.tokens[1];
  MoveToken t;
  if (kind_name == "addpair") {
    if (line.tokens.size() != 3) fail(line, "addpair needs a side (primary|dual)");
    if (line.tokens[2] == "primary") {
      t.kind = MoveKind::AddCancellingPairPrimary;
    } else if (line.tokens[2] == "dual") {
      t.kind = MoveKind::AddCancellingPairDual;
    } else {
      fail(line, "addpair side must be primary or dual");
    }
    return t;
  }
  bool found = false;
  for (const auto& [kind, name] : kMoveKindNames) {
    if (kind_name == name) {
      t.kind = kind;
      found = true;
      break;
    }
  }
  if (!found) fail(line, "unknown move kind '" + kind_name + "'");

  KeywordArgs kw = split_keywords(line, 2);
  std::size_t positional = kw.positional_end - 2;
  if (kind_has_two_indices(t.kind)) {
    if (positional != 2) fail(line, kind_name + " needs two indices");
    t.i = require_index(line, 2, "index");
    t.j = require_index(line, 3, "index");
  } else if (kind_has_one_index(t.kind)) {
    if (positional != 1) fail(line, kind_name + " needs one index");
    t.i = require_index(line, 2, "index");
  } else if (positional != 0) {
    fail(line, kind_name + " takes no indices");
  }

  for (const auto& [key, range] : kw.args) {
    if (key == "s") {
      if (!kind_has_sign(t.kind)) fail(line, kind_name + " takes no sign");
      if (range.second != range.first + 1) fail(line, "s= takes one value");
      long long s = require_int(line, range.first, "sign");
      if (s != 1 && s != -1) fail(line, "sign must be 1 or -1");
      t.sign = static_cast<int>(s);
    } else if (key == "c") {
      if (!kind_has_c(t.kind)) fail(line, kind_name + " takes no conjugator");
      if (!primary) fail(line, "word argument before gens:");
      t.c = word_from_tokens(line, std::span(line.tokens).subspan(range.first, range.second - range.first), *primary);
    } else if (key == "cstar") {
      if (t.kind != MoveKind::GeneralSlide && t.kind != MoveKind::SingleSlide)
        fail(line, kind_name + " takes no cstar");
      if (range.second != range.first) {
        if (!dual) fail(line, "cstar word before duals:");
        t.c_star = word_from_tokens(line, std::span(line.tokens).subspan(range.first, range.second - range.first), *dual);
      }
      if (t.kind == MoveKind::SingleSlide && !t.c_star.empty())
        fail(line, "singleslide requires an empty cstar");
    } else {
      fail(line, "unknown keyword '" + key + "='");
    }
  }
  return t;
}

// Mutable state while walking the lines of one presentation block.
struct BlockState {
  std::optional<std::vector<std::string>> gens;
  std::optional<std::vector<std::string>> duals;
  std::vector<std::string> bnd;
  std::vector<Word> relators;
  std::vector<Word> dual_relators;
  bool has_dual_rel = false;
  bool has_plain_rel = false;

  std::optional<Alphabet> primary_cache;
  std::optional<Alphabet> dual_cache;

  const Alphabet& primary(const Line& line) {
    if (!primary_cache) {
      if (!gens) fail(line, "word before gens:");
      try {
        primary_cache = Alphabet::make(*gens);
      } catch (const error& e) {
        fail(line, e.what());
      }
    }
    return *primary_cache;
  }

  const Alphabet& dual_alphabet(const Line& line) {
    if (!dual_cache) {
      if (!duals) fail(line, "dual word before duals:");
      try {
        dual_cache = Alphabet::make(*duals, bnd);
      } catch (const error& e) {
        fail(line, e.what());
      }
    }
    return *dual_cache;
  }

  bool empty() const { return !gens && !duals && relators.empty(); }
};

Presentation block_to_presentation(const Line& line, BlockState& b) {
  Presentation p;
  p.alphabet = b.primary(line);
  p.relators = b.relators;
  return p;
}

}  // namespace

Document parse_document(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  Document doc;

  BlockState top;
  std::vector<BlockState> component_blocks;
  BlockState* cur = &top;
  bool in_components = false;
  Line last_line;
  last_line.number = 1;

  std::size_t li = 0;
  while (li < lines.size()) {
    const Line& line = lines[li];
    last_line = line;
    const std::string& head = line.tokens[0];

    if (head == "component:") {
      if (line.tokens.size() != 1) fail(line, "component: takes no tokens");
      if (!top.empty()) fail(line, "component blocks cannot mix with a top-level presentation");
      in_components = true;
      component_blocks.emplace_back();
      cur = &component_blocks.back();
      ++li;
    } else if (head == "gens:") {
      if (cur->gens) fail(line, "duplicate gens: section");
      cur->gens = std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end());
      ++li;
    } else if (head == "duals:") {
      if (in_components) fail(line, "duals: not allowed inside a component");
      if (cur->duals) fail(line, "duplicate duals: section");
      cur->duals = std::vector<std::string>(line.tokens.begin() + 1, line.tokens.end());
      ++li;
    } else if (head == "bnd:") {
      if (in_components) fail(line, "bnd: not allowed inside a component");
      if (!cur->bnd.empty()) fail(line, "duplicate bnd: section");
      if (line.tokens.size() == 1) fail(line, "bnd: needs at least one name");
      cur->bnd.assign(line.tokens.begin() + 1, line.tokens.end());
      if (cur->dual_cache) cur->dual_cache.reset();
      ++li;
    } else if (head == "rel:") {
      auto bar = std::find(line.tokens.begin() + 1, line.tokens.end(), "|");
      if (bar != line.tokens.end()) {
        if (in_components) fail(line, "dual relators not allowed inside a component");
        cur->has_dual_rel = true;
        std::span<const std::string> left(line.tokens.data() + 1, static_cast<std::size_t>(bar - line.tokens.begin() - 1));
        std::span<const std::string> right(&*bar + 1, static_cast<std::size_t>(line.tokens.end() - bar - 1));
        if (left.empty() || right.empty()) fail(line, "empty side in rel: (write the empty word as 1)");
        cur->relators.push_back(word_from_tokens(line, left, cur->primary(line)));
        cur->dual_relators.push_back(word_from_tokens(line, right, cur->dual_alphabet(line)));
      } else {
        if (line.tokens.size() == 1) fail(line, "empty rel: (write the empty word as 1)");
        cur->has_plain_rel = true;
        cur->relators.push_back(word_from_tokens(
            line, std::span(line.tokens).subspan(1), cur->primary(line)));
        cur->dual_relators.emplace_back();
      }
      ++li;
    } else if (head == "move:") {
      const Alphabet* primary = top.gens ? &top.primary(line) : nullptr;
      const Alphabet* dual = top.duals ? &top.dual_alphabet(line) : nullptr;
      doc.script.push_back(parse_move(line, primary, dual));
      ++li;
    } else if (head == "group:") {
      if (line.tokens.size() != 3) fail(line, "group: needs a name and an order");
      std::string name = line.tokens[1];
      long long order = require_int(line, 2, "group order");
      if (order < 1 || order > 4096) fail(line, "group order out of range");
      std::vector<int> table;
      table.reserve(static_cast<std::size_t>(order * order));
      ++li;
      while (static_cast<long long>(table.size()) < order * order) {
        if (li >= lines.size()) fail(line, "group table is truncated");
        const Line& row = lines[li];
        for (const auto& tok : row.tokens) {
          long long v = 0;
          if (!parse_int(tok, v)) fail(row, "malformed table entry '" + tok + "'");
          table.push_back(static_cast<int>(v));
        }
        ++li;
      }
      if (static_cast<long long>(table.size()) != order * order) fail(line, "group table has too many entries");
      try {
        doc.groups.push_back(FiniteGroup::from_table(std::move(name), std::move(table)));
      } catch (const error& e) {
        fail(line, e.what());
      }
    } else if (head == "decomp:") {
      KeywordArgs kw = split_keywords(line, 1);
      if (kw.positional_end != 2) fail(line, "decomp: needs a target index");
      int index = require_index(line, 1, "decomposition index");
      auto arange = kw.find("a");
      auto brange = kw.find("b");
      if (!arange || !brange) fail(line, "decomp: needs a= and b= words");
      const Alphabet& alpha = top.primary(line);
      Word a = word_from_tokens(line, std::span(line.tokens).subspan(arange->first, arange->second - arange->first), alpha);
      Word b = word_from_tokens(line, std::span(line.tokens).subspan(brange->first, brange->second - brange->first), alpha);
      auto it = std::find_if(doc.decomposition.entries.begin(), doc.decomposition.entries.end(),
                             [&](const auto& e) { return e.index == index; });
      if (it == doc.decomposition.entries.end()) {
        doc.decomposition.entries.push_back({index, {}});
        it = doc.decomposition.entries.end() - 1;
      }
      it->pairs.emplace_back(std::move(a), std::move(b));
      ++li;
    } else if (head == "cert:") {
      KeywordArgs kw = split_keywords(line, 1);
      std::size_t positional = kw.positional_end - 1;
      CertLine cl;
      std::size_t base = 1;
      if (positional == 4) {
        int i = require_index(line, 1, "decomposition entry index");
        int j = require_index(line, 2, "decomposition pair index");
        cl.address = std::make_pair(i, j);
        base = 3;
      } else if (positional != 2) {
        fail(line, "cert: needs (sign, relator) or (entry, pair, sign, relator)");
      }
      long long sign = require_int(line, base, "sign");
      if (sign != 1 && sign != -1) fail(line, "sign must be 1 or -1");
      cl.factor.sign = static_cast<int>(sign);
      cl.factor.relator = require_index(line, base + 1, "relator index");
      if (auto crange = kw.find("c")) {
        cl.factor.conjugator = word_from_tokens(
            line, std::span(line.tokens).subspan(crange->first, crange->second - crange->first),
            top.primary(line));
      } else {
        fail(line, "cert: needs a c= conjugator (possibly empty)");
      }
      doc.cert_lines.push_back(std::move(cl));
      ++li;
    } else {
      fail(line, "unknown section '" + head + "'");
    }
  }

  if (in_components) {
    for (auto& block : component_blocks) {
      Line anchor = last_line;
      if (!block.gens) throw parse_error("component is missing its gens: line");
      doc.components.push_back(block_to_presentation(anchor, block));
    }
  } else if (top.duals || top.has_dual_rel) {
    if (top.has_plain_rel)
      throw parse_error("bi-presentation rel: lines need a | separator");
    BiPresentation bp;
    Line anchor = last_line;
    bp.primary = top.primary(anchor);
    bp.dual = top.dual_alphabet(anchor);
    for (std::size_t i = 0; i < top.relators.size(); ++i) {
      bp.pairs.push_back({top.relators[i], top.dual_relators[i]});
    }
    doc.bipresentation = std::move(bp);
  } else if (top.gens) {
    Line anchor = last_line;
    doc.presentation = block_to_presentation(anchor, top);
  } else if (!top.relators.empty()) {
    throw parse_error("relators without a gens: line");
  }

  return doc;
}

std::string word_to_text(const Word& w, const Alphabet& a) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    Letter l = w.letters()[i];
    std::size_t run = 1;
    while (i + run < w.size() && w.letters()[i + run] == l) ++run;
    if (!out.empty()) out += ' ';
    out += a.name(l.index());
    long long exponent = static_cast<long long>(run) * l.sign();
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i += run;
  }
  return out;
}

Word word_from_text(std::string_view text, const Alphabet& a) {
  Line line;
  line.number = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) line.tokens.emplace_back(text.substr(start, i - start));
  }
  return word_from_tokens(line, line.tokens, a);
}

namespace {

std::string join_names(const char* head, std::span<const std::string> names) {
  std::string out = head;
  for (const auto& n : names) {
    out += ' ';
    out += n;
  }
  return out;
}

void print_presentation_lines(const Presentation& p, std::string& out) {
  out += join_names("gens:", p.alphabet.generator_names());
  out += '\n';
  for (const auto& r : p.relators) {
    out += "rel: " + word_to_text(r, p.alphabet) + '\n';
  }
}

}  // namespace

std::string move_to_text(const MoveToken& t, const Alphabet& primary, const Alphabet& dual) {
  std::string out;
  switch (t.kind) {
    case MoveKind::AddCancellingPairPrimary:
      return "addpair primary";
    case MoveKind::AddCancellingPairDual:
      return "addpair dual";
    default:
      break;
  }
  for (const auto& [kind, name] : kMoveKindNames) {
    if (kind == t.kind) {
      out = name;
      break;
    }
  }
  if (kind_has_two_indices(t.kind)) {
    out += ' ' + std::to_string(t.i + 1) + ' ' + std::to_string(t.j + 1);
  } else if (kind_has_one_index(t.kind)) {
    out += ' ' + std::to_string(t.i + 1);
  }
  if (kind_has_sign(t.kind) && t.sign < 0) out += " s= -1";
  if (kind_has_c(t.kind)) {
    out += " c=";
    if (!t.c.empty()) out += ' ' + word_to_text(t.c, primary);
  }
  if (t.kind == MoveKind::GeneralSlide || t.kind == MoveKind::SingleSlide) {
    out += " cstar=";
    if (!t.c_star.empty()) out += ' ' + word_to_text(t.c_star, dual);
  }
  return out;
}

std::string print_document(const Document& d) {
  std::string out;
  const Alphabet* primary = nullptr;
  const Alphabet* dual = nullptr;
  static const Alphabet kEmpty;

  if (!d.components.empty()) {
    for (const auto& comp : d.components) {
      out += "component:\n";
      print_presentation_lines(comp, out);
    }
  } else if (d.bipresentation) {
    const BiPresentation& bp = *d.bipresentation;
    primary = &bp.primary;
    dual = &bp.dual;
    out += join_names("gens:", bp.primary.generator_names());
    out += '\n';
    out += join_names("duals:", bp.dual.generator_names());
    out += '\n';
    if (bp.dual.boundary_count() > 0) {
      out += join_names("bnd:", bp.dual.boundary_names());
      out += '\n';
    }
    for (const auto& hp : bp.pairs) {
      out += "rel: " + word_to_text(hp.relator, bp.primary) + " | " +
             word_to_text(hp.dual_relator, bp.dual) + '\n';
    }
  } else if (d.presentation) {
    primary = &d.presentation->alphabet;
    print_presentation_lines(*d.presentation, out);
  }

  for (const auto& g : d.groups) {
    out += "group: " + g.name() + ' ' + std::to_string(g.order()) + '\n';
    for (int a = 0; a < g.order(); ++a) {
      for (int b = 0; b < g.order(); ++b) {
        out += (b == 0 ? "" : " ") + std::to_string(g.mul(a, b));
      }
      out += '\n';
    }
  }

  if (primary == nullptr) primary = &kEmpty;
  if (dual == nullptr) dual = &kEmpty;

  for (const auto& entry : d.decomposition.entries) {
    for (const auto& [a, b] : entry.pairs) {
      out += "decomp: " + std::to_string(entry.index + 1) + " a= " + word_to_text(a, *primary) +
             " b= " + word_to_text(b, *primary) + '\n';
    }
  }

  for (const auto& cl : d.cert_lines) {
    out += "cert:";
    if (cl.address) {
      out += ' ' + std::to_string(cl.address->first + 1) + ' ' + std::to_string(cl.address->second + 1);
    }
    out += ' ' + std::to_string(cl.factor.sign) + ' ' + std::to_string(cl.factor.relator + 1);
    out += " c=";
    if (!cl.factor.conjugator.empty()) out += ' ' + word_to_text(cl.factor.conjugator, *primary);
    out += '\n';
  }

  for (const auto& t : d.script) {
    out += "move: " + move_to_text(t, *primary, *dual) + '\n';
  }

  return out;
}

std::vector<std::vector<NormalClosureCertificate>> collect_certificates(
    const CommutatorDecomposition& d, const std::vector<CertLine>& lines) {
  std::vector<std::vector<NormalClosureCertificate>> out(d.entries.size());
  for (std::size_t e = 0; e < d.entries.size(); ++e) {
    out[e].resize(d.entries[e].pairs.size());
  }
  for (const auto& cl : lines) {
    if (!cl.address) throw error("certificate line is missing its (i, j) address");
    auto [target, j] = *cl.address;  // target relator index, pair ordinal
    std::size_t e = 0;
    while (e < d.entries.size() && d.entries[e].index != target) ++e;
    if (e == d.entries.size() || j < 0 || static_cast<std::size_t>(j) >= out[e].size())
      throw error("certificate address does not match the decomposition");
    out[e][static_cast<std::size_t>(j)].factors.push_back(cl.factor);
  }
  return out;
}

NormalClosureCertificate collect_plain_certificate(const std::vector<CertLine>& lines) {
  NormalClosureCertificate cert;
  for (const auto& cl : lines) {
    if (!cl.address) cert.factors.push_back(cl.factor);
  }
  return cert;
}

}  // namespace hcalc
