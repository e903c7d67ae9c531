#include "hcalc/word.hpp"

#include <doctest.h>

#include "generators.hpp"
#include "hcalc/errors.hpp"
#include "oracles.hpp"

using namespace hcalc;

namespace {

Word W(std::initializer_list<std::pair<int, int>> letters) {
  std::vector<Letter> raw;
  for (auto [g, s] : letters) raw.emplace_back(g, s);
  return Word(std::move(raw));
}

constexpr int x = 0, y = 1, z = 2;

}  // namespace

TEST_CASE("alphabet validation") {
  CHECK_NOTHROW(Alphabet::make({"x", "y", "Z_9"}));
  CHECK_NOTHROW(Alphabet::make({"x@0", "x@1"}));
  CHECK_THROWS_AS(Alphabet::make({"x", "x"}), error);
  CHECK_THROWS_AS(Alphabet::make({"1x"}), error);
  CHECK_THROWS_AS(Alphabet::make({""}), error);
  CHECK_THROWS_AS(Alphabet::make({"x"}, {"x"}), error);
  CHECK_THROWS_AS(Alphabet::make({"x@"}), error);

  Alphabet a = Alphabet::make({"x", "y"}, {"b"});
  CHECK(a.generator_count() == 2);
  CHECK(a.size() == 3);
  CHECK(a.is_boundary(2));
  CHECK(!a.is_boundary(1));
  CHECK(a.find("b") == 2);
  CHECK(!a.find("w"));
  CHECK(fresh_name(a, "s") == "s1");
}

TEST_CASE("reduce") {
  // x x^-1 y -> y
  CHECK(W({{x, 1}, {x, -1}, {y, 1}}) == W({{y, 1}}));
  // empty -> empty
  CHECK(Word().empty());
  CHECK(Word(std::vector<Letter>{}) == Word());
  // x y y^-1 x -> x x (oracle-checked)
  std::vector<Letter> raw{{Letter(x, 1), Letter(y, 1), Letter(y, -1), Letter(x, 1)}};
  CHECK(Word(raw).letters() == oracle::brute_reduce(raw));
  CHECK(Word(raw) == W({{x, 1}, {x, 1}}));
}

TEST_CASE("reduce is idempotent and matches the rescan oracle") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto raw = gen::raw_letters(rng, 3, 24);
    Word reduced(raw);
    CHECK(reduced.letters() == oracle::brute_reduce(raw));
    CHECK(Word(reduced.letters()) == reduced);
  }
}

TEST_CASE("invert") {
  CHECK(invert(W({{x, 1}, {y, 1}})) == W({{y, -1}, {x, -1}}));
  CHECK(invert(Word()) == Word());
  CHECK(invert(W({{x, 1}, {y, 1}, {x, -1}})) == W({{x, 1}, {y, -1}, {x, -1}}));
}

TEST_CASE("invert properties") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = gen::word(rng, 3, 16);
    CHECK(invert(invert(w)) == w);
    CHECK((w * invert(w)).empty());
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(W({{y, 1}}), W({{x, 1}})) == W({{x, 1}, {y, 1}, {x, -1}}));
  CHECK(conjugate(W({{y, 1}}), Word()) == W({{y, 1}}));
  CHECK(conjugate(W({{x, 1}}), W({{x, 1}})) == W({{x, 1}}));
}

TEST_CASE("conjugation round trip") {
  gen::Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = gen::word(rng, 3, 12);
    Word c = gen::word(rng, 3, 6);
    CHECK(conjugate(conjugate(w, c), invert(c)) == w);
  }
}

TEST_CASE("commutator") {
  CHECK(commutator(W({{x, 1}}), W({{y, 1}})) == W({{x, 1}, {y, 1}, {x, -1}, {y, -1}}));
  CHECK(commutator(W({{x, 1}}), W({{x, 1}})).empty());
  // (x y, y) expands and reduces via the oracle
  Word a = W({{x, 1}, {y, 1}});
  Word b = W({{y, 1}});
  CHECK(commutator(a, b) == oracle::brute_concat({a, b, oracle::brute_invert(a), oracle::brute_invert(b)}));
  CHECK(commutator(a, b) == W({{x, 1}, {y, 1}, {x, -1}, {y, -1}}));
}

TEST_CASE("cyclic_reduce") {
  auto [core1, conj1] = cyclic_reduce(W({{x, 1}, {y, 1}, {x, -1}}));
  CHECK(core1 == W({{y, 1}}));
  CHECK(conj1 == W({{x, 1}}));

  auto [core2, conj2] = cyclic_reduce(W({{y, 1}}));
  CHECK(core2 == W({{y, 1}}));
  CHECK(conj2.empty());

  // x y z y^-1 x^-1 -> core z, conjugator x y
  auto [core3, conj3] = cyclic_reduce(W({{x, 1}, {y, 1}, {z, 1}, {y, -1}, {x, -1}}));
  CHECK(core3 == W({{z, 1}}));
  CHECK(conj3 == W({{x, 1}, {y, 1}}));
}

TEST_CASE("cyclic_reduce reassembly") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    Word w = gen::word(rng, 3, 16);
    auto [core, conj] = cyclic_reduce(w);
    CHECK(is_cyclically_reduced(core));
    CHECK(conj * core * invert(conj) == w);
  }
}

TEST_CASE("substitute") {
  // (x y, x -> x y, y -> y) -> x y y
  std::vector<Word> images{W({{x, 1}, {y, 1}}), W({{y, 1}})};
  CHECK(substitute(W({{x, 1}, {y, 1}}), images, 2) == W({{x, 1}, {y, 1}, {y, 1}}));

  // identity map
  std::vector<Word> id{W({{x, 1}}), W({{y, 1}})};
  Word w = W({{x, 1}, {y, -1}, {x, 1}});
  CHECK(substitute(w, id, 2) == w);

  // (x^-1, x -> x y) -> y^-1 x^-1
  CHECK(substitute(W({{x, -1}}), images, 2) == W({{y, -1}, {x, -1}}));
}

TEST_CASE("substitute by an automorphism and its inverse is the identity") {
  // x -> x y and x -> x y^-1 are mutually inverse basis changes
  std::vector<Word> fwd{W({{x, 1}, {y, 1}}), W({{y, 1}})};
  std::vector<Word> bwd{W({{x, 1}, {y, -1}}), W({{y, 1}})};
  gen::Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = gen::word(rng, 2, 14);
    CHECK(substitute(substitute(w, fwd, 2), bwd, 2) == w);
    CHECK(substitute(substitute(w, bwd, 2), fwd, 2) == w);
  }
}

TEST_CASE("boundary letters pass through substitution") {
  std::vector<Word> images{W({{x, 1}, {y, 1}}), W({{y, 1}})};
  Word w = W({{2, 1}, {x, 1}, {2, -1}});  // letter 2 is past the generator count
  CHECK(substitute(w, images, 2) == W({{2, 1}, {x, 1}, {y, 1}, {2, -1}}));
}

TEST_CASE("shortlex ordering") {
  CHECK(Word() < W({{x, 1}}));
  CHECK(W({{x, 1}}) < W({{x, -1}}));        // positive before negative
  CHECK(W({{x, -1}}) < W({{y, 1}}));        // then by index
  CHECK(W({{y, 1}}) < W({{x, 1}, {x, 1}}));  // shorter first
}

TEST_CASE("exponent sums") {
  Word w = W({{x, 1}, {y, 1}, {x, 1}, {y, -1}, {x, -1}, {y, -1}});
  CHECK(exponent_sum(w, x) == 1);
  CHECK(exponent_sum(w, y) == -1);
  CHECK(exponent_sum(w, z) == 0);
}
