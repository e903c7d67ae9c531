#pragma once

#include <utility>
#include <vector>

#include "hcalc/invariants.hpp"
#include "hcalc/presentation.hpp"

namespace hcalc {

// An ordered list of balanced AC presentations, the presentation-level
// shadow of a list of compact contractible pieces with identified
// boundaries. Boundary identifications carry no data here.
struct MulticorkModel {
  std::vector<Presentation> components;

  int order() const { return static_cast<int>(components.size()); }

  // Validates: order >= 1, every component balanced and AC of both types.
  static MulticorkModel make(std::vector<Presentation> components);

  friend bool operator==(const MulticorkModel&, const MulticorkModel&) = default;
};

struct ComponentSpan {
  int gen_offset = 0;
  int gen_count = 0;
  int rel_offset = 0;
  int rel_count = 0;

  friend bool operator==(const ComponentSpan&, const ComponentSpan&) = default;
};

// The boundary connected sum of a multicork's components: a free product
// presentation whose generator/relator lists are partitioned into
// per-component spans, plus the cyclic rotation descriptor (the order).
struct PinwheelModel {
  Presentation total;
  int order = 0;
  std::vector<ComponentSpan> spans;

  friend bool operator==(const PinwheelModel&, const PinwheelModel&) = default;
};

// Free product with deterministic renaming: generator `name` of component
// i becomes `name@i`. Relator lists are concatenated in component order.
Presentation boundary_sum(std::span<const Presentation> components);
Presentation boundary_sum(const Presentation& a, const Presentation& b);

// The constant multicork (cork, cork, ..., cork) of the given order.
// Throws if the cork is not balanced or not an AC structure.
MulticorkModel mu(const Presentation& cork, int order);

PinwheelModel pinwheel(const MulticorkModel& mc);

// Component i of a pinwheel, recovered from its span with the `@i` tags
// stripped.
Presentation pinwheel_component(const PinwheelModel& pw, int i);

// The presentation obtained by replacing the component in span i with
// component (i + j) mod n, renamed into span i. Twist by 0 is the
// identity on the data.
Presentation pinwheel_twist(const PinwheelModel& pw, int j);

// For each decomposed relator index i (0-based), the commutator pairs
// (a_ij, b_ij) with reduce(x_i * prod_j [a_ij, b_ij]) == r_i.
struct CommutatorDecomposition {
  struct Entry {
    int index = 0;
    std::vector<std::pair<Word, Word>> pairs;

    friend bool operator==(const Entry&, const Entry&) = default;
  };
  std::vector<Entry> entries;

  friend bool operator==(const CommutatorDecomposition&, const CommutatorDecomposition&) = default;
};

// A word written as a product of conjugates of relators: the factors
// (sign, relator index, conjugator) multiply out to the target.
struct NormalClosureCertificate {
  struct Factor {
    int sign = 1;
    int relator = 0;  // 0-based
    Word conjugator;

    friend bool operator==(const Factor&, const Factor&) = default;
  };
  std::vector<Factor> factors;

  friend bool operator==(const NormalClosureCertificate&, const NormalClosureCertificate&) = default;
};

// Evaluates prod_f (c_f r_{t_f}^{s_f} c_f^-1) over p's relators.
Word certificate_product(const Presentation& p, const NormalClosureCertificate& cert);

bool verify_certificate(const Presentation& p, const Word& target,
                        const NormalClosureCertificate& cert);

bool verify_decomposition(const Presentation& p, const CommutatorDecomposition& d);

struct EncaseResult {
  BiPresentation result;
  MoveScript script;
};

// The encasement rewriting: for every decomposed index i, relator i of the
// result is literally the one-letter word x_i. Per decomposition pair a
// cancelling dual 2/3-pair is appended; its relator is slid (per the
// certificate) until it equals b_ij; then inverse double slides along
// (a_ij, 1) peel the commutators off relator i. The returned script folds
// over `bp` to `result`.
EncaseResult encase(const BiPresentation& bp, const CommutatorDecomposition& d,
                    const std::vector<std::vector<NormalClosureCertificate>>& certs);

struct PairingResult {
  Presentation result;
  MoveScript script;
};

// Row-reduces the abelianization matrix to [I_k; 0] using relator
// multiplications with trivial conjugators, relator inversions, and
// relator swaps. Throws verify_error when the first homology is nonzero.
PairingResult homological_pairing(const Presentation& p);

}  // namespace hcalc
