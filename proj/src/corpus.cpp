#include "qlogic/corpus.hpp"

namespace qlogic {

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"firefly", Kind::greechie, "firefly box: chambers l r n seen from two windows",
       "atoms: l r n f b\n"
       "block: l r n\n"
       "block: f b n\n"},
      {"wright", Kind::greechie, "Wright triangle, an orthoalgebra that is not an OMP",
       "atoms: a b c d e f\n"
       "block: a b c\n"
       "block: c d e\n"
       "block: e f a\n"},
      {"fano", Kind::greechie,
       "Fano plane: three sides, three medians and the inscribed circle",
       "atoms: a b c d e f g\n"
       "block: a b c\n"
       "block: c d e\n"
       "block: e f a\n"
       "block: a g d\n"
       "block: c g f\n"
       "block: e g b\n"
       "block: b d f\n"},
      {"fig12", Kind::greechie, "five 3-atom blocks; a prime logic with six states",
       "atoms: a b c d e f g h i\n"
       "block: a b c\n"
       "block: c d e\n"
       "block: a e f\n"
       "block: e g h\n"
       "block: h i c\n"},
      {"fig15", Kind::greechie,
       "two Wright triangles sharing the corner atom e (geometric reading; atom letters "
       "may differ from other readings)",
       "atoms: a b c d e f g h i j k\n"
       "block: a b c\n"
       "block: c d e\n"
       "block: a f e\n"
       "block: e g h\n"
       "block: h i j\n"
       "block: e k j\n"},
      {"fig16", Kind::greechie,
       "two triangles sharing the atom d (geometric reading; atom letters may differ "
       "from other readings)",
       "atoms: a b c d e f g h i j k\n"
       "block: a b c\n"
       "block: c d e\n"
       "block: a f e\n"
       "block: d g h\n"
       "block: h i j\n"
       "block: j k d\n"},
      {"firefly-urn", Kind::urn, "urn whose two filters give the firefly logic",
       "colors: Red Green\n"
       "ball: 1 l b\n"
       "ball: 2 l f\n"
       "ball: 3 r b\n"
       "ball: 4 r f\n"
       "ball: 5 n n\n"},
      {"wright-urn", Kind::urn, "urn whose three filters give the Wright triangle",
       "colors: Red Green Blue\n"
       "ball: 1 a a d\n"
       "ball: 2 c f c\n"
       "ball: 3 b e e\n"
       "ball: 4 b f d\n"},
      {"wright-mealy", Kind::automaton, "Mealy automaton realizing the Wright triangle",
       "states: 1 2 3 4\n"
       "inputs: P1 P2 P3\n"
       "outputs: 1 2 3\n"
       "delta: 1 P1 -> 1\ndelta: 1 P2 -> 1\ndelta: 1 P3 -> 1\n"
       "delta: 2 P1 -> 1\ndelta: 2 P2 -> 1\ndelta: 2 P3 -> 1\n"
       "delta: 3 P1 -> 1\ndelta: 3 P2 -> 1\ndelta: 3 P3 -> 1\n"
       "delta: 4 P1 -> 1\ndelta: 4 P2 -> 1\ndelta: 4 P3 -> 1\n"
       "lambda: 1 P1 -> 1\nlambda: 1 P2 -> 3\nlambda: 1 P3 -> 1\n"
       "lambda: 2 P1 -> 2\nlambda: 2 P2 -> 1\nlambda: 2 P3 -> 3\n"
       "lambda: 3 P1 -> 3\nlambda: 3 P2 -> 2\nlambda: 3 P3 -> 2\n"
       "lambda: 4 P1 -> 3\nlambda: 4 P2 -> 3\nlambda: 4 P3 -> 3\n"},
      {"fig12-mealy", Kind::automaton, "Mealy automaton realizing the fig12 logic",
       "states: 1 2 3 4 5 6\n"
       "inputs: P1 P2 P3 P4 P5\n"
       "outputs: 1 2 3\n"
       "delta: 1 P1 -> 1\ndelta: 1 P2 -> 1\ndelta: 1 P3 -> 1\ndelta: 1 P4 -> 1\ndelta: 1 P5 -> 1\n"
       "delta: 2 P1 -> 1\ndelta: 2 P2 -> 1\ndelta: 2 P3 -> 1\ndelta: 2 P4 -> 1\ndelta: 2 P5 -> 1\n"
       "delta: 3 P1 -> 1\ndelta: 3 P2 -> 1\ndelta: 3 P3 -> 1\ndelta: 3 P4 -> 1\ndelta: 3 P5 -> 1\n"
       "delta: 4 P1 -> 1\ndelta: 4 P2 -> 1\ndelta: 4 P3 -> 1\ndelta: 4 P4 -> 1\ndelta: 4 P5 -> 1\n"
       "delta: 5 P1 -> 1\ndelta: 5 P2 -> 1\ndelta: 5 P3 -> 1\ndelta: 5 P4 -> 1\ndelta: 5 P5 -> 1\n"
       "delta: 6 P1 -> 1\ndelta: 6 P2 -> 1\ndelta: 6 P3 -> 1\ndelta: 6 P4 -> 1\ndelta: 6 P5 -> 1\n"
       "lambda: 1 P1 -> 1\nlambda: 1 P2 -> 2\nlambda: 1 P3 -> 1\nlambda: 1 P4 -> 2\nlambda: 1 P5 -> 2\n"
       "lambda: 2 P1 -> 1\nlambda: 2 P2 -> 2\nlambda: 2 P3 -> 1\nlambda: 2 P4 -> 3\nlambda: 2 P5 -> 1\n"
       "lambda: 3 P1 -> 2\nlambda: 3 P2 -> 2\nlambda: 3 P3 -> 2\nlambda: 3 P4 -> 2\nlambda: 3 P5 -> 2\n"
       "lambda: 4 P1 -> 2\nlambda: 4 P2 -> 2\nlambda: 4 P3 -> 2\nlambda: 4 P4 -> 3\nlambda: 4 P5 -> 1\n"
       "lambda: 5 P1 -> 3\nlambda: 5 P2 -> 1\nlambda: 5 P3 -> 2\nlambda: 5 P4 -> 2\nlambda: 5 P5 -> 3\n"
       "lambda: 6 P1 -> 2\nlambda: 6 P2 -> 3\nlambda: 6 P3 -> 3\nlambda: 6 P4 -> 1\nlambda: 6 P5 -> 2\n"},
      {"six-point-atlas", Kind::atlas, "two charts over 1..6 whose union has a non-transitive order",
       "omega: 1 2 3 4 5 6\n"
       "chart: 1 | 2 | 3 | 4 | 5 6\n"
       "chart: 1 | 2 | 3 4 | 5 | 6\n"},
      {"four-point-pts", Kind::pts, "partition test space with a firefly logic that is not concrete",
       "base: 1 2 3 4\n"
       "test: 1 | 3 4 | 2\n"
       "test: 1 | 2 4 | 3\n"},
      {"wright-pl", Kind::partition_logic, "partition logic of the Wright triangle",
       "points: 1 2 3 4\n"
       "partition: 1 | 2 | 3 4\n"
       "partition: 2 | 3 | 1 4\n"
       "partition: 1 | 3 | 2 4\n"},
      {"fig12-pl", Kind::partition_logic, "partition logic of fig12",
       "points: 1 2 3 4 5 6\n"
       "partition: 1 2 | 3 4 6 | 5\n"
       "partition: 5 | 1 2 3 4 | 6\n"
       "partition: 1 2 | 3 4 5 | 6\n"
       "partition: 6 | 1 3 5 | 2 4\n"
       "partition: 2 4 | 1 3 6 | 5\n"},
  };
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view id) {
  for (const auto& e : corpus())
    if (e.id == id) return e;
  throw InputError("unknown corpus entry '" + std::string(id) + "'");
}

}  // namespace qlogic
