#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hcalc/corkcalc.hpp"
#include "hcalc/invariants.hpp"
#include "hcalc/presentation.hpp"

namespace hcalc {

// One `cert:` line: a factor of a normal closure certificate, optionally
// addressed to decomposition pair (i, j) for encasement inputs.
struct CertLine {
  std::optional<std::pair<int, int>> address;  // 0-based (entry, pair)
  NormalClosureCertificate::Factor factor;

  friend bool operator==(const CertLine&, const CertLine&) = default;
};

// A parsed document: at most one of presentation / bipresentation /
// multicork components, plus any groups, move script, decomposition and
// certificate lines.
struct Document {
  std::optional<Presentation> presentation;
  std::optional<BiPresentation> bipresentation;
  std::vector<Presentation> components;
  std::vector<FiniteGroup> groups;
  MoveScript script;
  CommutatorDecomposition decomposition;
  std::vector<CertLine> cert_lines;

  bool has_topology() const {
    return presentation || bipresentation || !components.empty();
  }

  friend bool operator==(const Document&, const Document&) = default;
};

// Grammar: whitespace-separated tokens; `#` comments to end of line.
// Section headers: gens: duals: bnd: rel: component: move: group: decomp:
// cert:. Words are sequences of `name`, `name^-1` or `name^k` (k nonzero,
// expanded to |k| letters); the empty word is written `1`. Bi-presentation
// relator lines read `rel: <word> | <dual word>`. Indices in move:,
// decomp: and cert: lines are 1-based.
Document parse_document(std::string_view text);

std::string print_document(const Document& d);

// Word over an alphabet <-> its token text.
std::string word_to_text(const Word& w, const Alphabet& a);
Word word_from_text(std::string_view text, const Alphabet& a);

std::string move_to_text(const MoveToken& t, const Alphabet& primary, const Alphabet& dual);

// Assembles certificate lists per decomposition entry/pair from addressed
// cert lines; throws if any pair is missing an address.
std::vector<std::vector<NormalClosureCertificate>> collect_certificates(
    const CommutatorDecomposition& d, const std::vector<CertLine>& lines);

// The factors of unaddressed cert lines, in order.
NormalClosureCertificate collect_plain_certificate(const std::vector<CertLine>& lines);

}  // namespace hcalc
