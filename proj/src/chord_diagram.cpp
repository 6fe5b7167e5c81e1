#include "torelli/chord_diagram.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace torelli {

ChordDiagram ChordDiagram::from_pairs(std::vector<std::pair<int, int>> pairs) {
  for (auto& [a, b] : pairs) {
    if (a == b) throw std::invalid_argument("chord with equal endpoints");
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  int p = 2 * static_cast<int>(pairs.size());
  std::vector<char> seen(p + 1, 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || b > p || seen[a] || seen[b])
      throw std::invalid_argument("chords must tile 1..2m");
    seen[a] = seen[b] = 1;
  }
  ChordDiagram d;
  d.chords = std::move(pairs);
  return d;
}

ColoredChordDiagram ColoredChordDiagram::from_directed(
    std::vector<std::pair<int, int>> tail_head) {
  std::vector<std::pair<int, int>> undirected;
  undirected.reserve(tail_head.size());
  for (auto [t, h] : tail_head) undirected.emplace_back(t, h);
  ColoredChordDiagram c;
  c.base = ChordDiagram::from_pairs(undirected);
  c.direction.resize(c.base.chords.size());
  for (auto [t, h] : tail_head) {
    auto key = std::minmax(t, h);
    auto it = std::lower_bound(c.base.chords.begin(), c.base.chords.end(),
                               std::make_pair(key.first, key.second));
    c.direction[it - c.base.chords.begin()] = {t, h};
  }
  return c;
}

ColoredChordDiagram ColoredChordDiagram::reversed() const {
  ColoredChordDiagram c = *this;
  for (auto& [t, h] : c.direction) std::swap(t, h);
  return c;
}

std::vector<ChordDiagram> enumerate_diagrams(int m, int cap) {
  if (m < 0) throw std::invalid_argument("negative degree");
  if (m > cap)
    throw ResourceCapError("chord degree " + std::to_string(m) +
                           " exceeds cap " + std::to_string(cap));
  std::vector<ChordDiagram> out;
  std::vector<std::pair<int, int>> chords;
  std::vector<char> used(2 * m + 1, 0);
  std::function<void()> rec = [&]() {
    int a = 0;
    for (int i = 1; i <= 2 * m; ++i)
      if (!used[i]) {
        a = i;
        break;
      }
    if (a == 0) {
      ChordDiagram d;
      d.chords = chords;
      out.push_back(std::move(d));
      return;
    }
    used[a] = 1;
    for (int b = a + 1; b <= 2 * m; ++b) {
      if (used[b]) continue;
      used[b] = 1;
      chords.emplace_back(a, b);
      rec();
      chords.pop_back();
      used[b] = 0;
    }
    used[a] = 0;
  };
  rec();
  return out;
}

std::vector<ColoredChordDiagram> enumerate_colored_diagrams(int m, int cap) {
  auto plain = enumerate_diagrams(m, cap);
  std::vector<ColoredChordDiagram> out;
  out.reserve(plain.size() << m);
  for (const auto& d : plain) {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      ColoredChordDiagram c;
      c.base = d;
      c.direction.resize(m);
      for (int i = 0; i < m; ++i) {
        auto [a, b] = d.chords[i];
        c.direction[i] = (mask & (1u << i)) ? std::make_pair(b, a)
                                            : std::make_pair(a, b);
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

DecoratedGraph diagram_to_graph(const ChordDiagram& d) {
  int p = d.points();
  if (p % 6 != 0)
    throw std::invalid_argument("graph quotient needs 6m points");
  int n = p / 3;  // vertices
  DecoratedGraph g;
  g.triples.resize(n);
  for (int v = 0; v < n; ++v)
    g.triples[v] = {3 * v, 3 * v + 1, 3 * v + 2};  // points 3v+1..3v+3
  g.pairing.assign(p, -1);
  for (auto [a, b] : d.chords) {
    g.pairing[a - 1] = b - 1;
    g.pairing[b - 1] = a - 1;
  }
  g.validate();
  return g;
}

DecoratedGraph diagram_to_decorated(const ColoredChordDiagram& c) {
  DecoratedGraph g = diagram_to_graph(c.base);
  g.is_tail.assign(g.pairing.size(), 0);
  for (auto [t, h] : c.direction) g.is_tail[t - 1] = 1;
  g.validate();
  return g;
}

std::string print_diagram(const ChordDiagram& d) {
  std::ostringstream os;
  os << d.points() << ": ";
  for (auto [a, b] : d.chords) os << '(' << a << ' ' << b << ')';
  return os.str();
}

std::string print_diagram(const ColoredChordDiagram& d) {
  std::ostringstream os;
  os << d.base.points() << ": ";
  for (auto [t, h] : d.direction) os << '(' << t << '>' << h << ')';
  return os.str();
}

namespace {

std::vector<std::pair<int, int>> scan_pairs(const std::string& text,
                                            int& points, bool& directed) {
  std::istringstream is(text);
  std::string head;
  is >> head;
  if (head.empty() || head.back() != ':')
    throw std::invalid_argument("diagram text: expected '2m:'");
  points = std::stoi(head.substr(0, head.size() - 1));
  std::vector<std::pair<int, int>> pairs;
  directed = false;
  std::string tok;
  std::string rest;
  std::getline(is, rest);
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < rest.size() && rest[i] == ' ') ++i;
  };
  while (true) {
    skip();
    if (i >= rest.size()) break;
    if (rest[i] != '(') throw std::invalid_argument("diagram text: '(' expected");
    ++i;
    std::size_t j = rest.find_first_of(" >", i);
    if (j == std::string::npos)
      throw std::invalid_argument("diagram text: separator expected");
    int a = std::stoi(rest.substr(i, j - i));
    if (rest[j] == '>') directed = true;
    i = j + 1;
    std::size_t k = rest.find(')', i);
    if (k == std::string::npos)
      throw std::invalid_argument("diagram text: ')' expected");
    int b = std::stoi(rest.substr(i, k - i));
    i = k + 1;
    pairs.emplace_back(a, b);
  }
  if (2 * static_cast<int>(pairs.size()) != points)
    throw std::invalid_argument("diagram text: chord count mismatch");
  return pairs;
}

}  // namespace

ChordDiagram parse_diagram(const std::string& text) {
  int points = 0;
  bool directed = false;
  auto pairs = scan_pairs(text, points, directed);
  return ChordDiagram::from_pairs(std::move(pairs));
}

ColoredChordDiagram parse_colored_diagram(const std::string& text) {
  int points = 0;
  bool directed = false;
  auto pairs = scan_pairs(text, points, directed);
  if (!directed)
    throw std::invalid_argument("diagram text: directions required");
  return ColoredChordDiagram::from_directed(std::move(pairs));
}

}  // namespace torelli
