#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torelli/trivalent_graph.hpp"

namespace torelli {

// Linear chord diagram of degree m: fixed-point-free involution on the
// points 1..2m. Stored as the list of chords (a,b), a < b, sorted by a.
struct ChordDiagram {
  std::vector<std::pair<int, int>> chords;

  int degree() const { return static_cast<int>(chords.size()); }
  int points() const { return 2 * degree(); }

  static ChordDiagram from_pairs(std::vector<std::pair<int, int>> pairs);
};

// Chord diagram with a direction (tail, head) on every chord. The underlying
// diagram is base; direction[i] is the (tail, head) pair of base.chords[i].
struct ColoredChordDiagram {
  ChordDiagram base;
  std::vector<std::pair<int, int>> direction;

  static ColoredChordDiagram from_directed(
      std::vector<std::pair<int, int>> tail_head);
  ColoredChordDiagram reversed() const;
};

// All (2m-1)!! diagrams of degree m, in a fixed recursive order.
std::vector<ChordDiagram> enumerate_diagrams(int m, int cap = 8);

// All (2m-1)!! * 2^m colored diagrams of degree m.
std::vector<ColoredChordDiagram> enumerate_colored_diagrams(int m,
                                                            int cap = 6);

// Quotient of a degree-3m diagram to its labeled trivalent graph: points
// 3j-2, 3j-1, 3j collapse to vertex j, chords become edges, the point order
// inside each triple gives the vertex orientation. Throws unless the number
// of points is divisible by 6.
DecoratedGraph diagram_to_graph(const ChordDiagram& d);

// Same quotient with each edge directed as its chord.
DecoratedGraph diagram_to_decorated(const ColoredChordDiagram& d);

// Text format: "2m: (a b)(c d)..." with ">" in place of the blank for a
// directed chord, e.g. "6: (1>4)(2 5)(6>3)".
std::string print_diagram(const ChordDiagram& d);
std::string print_diagram(const ColoredChordDiagram& d);
ChordDiagram parse_diagram(const std::string& text);
ColoredChordDiagram parse_colored_diagram(const std::string& text);

}  // namespace torelli
