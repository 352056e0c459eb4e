#include "colorlink/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>

namespace colorlink {

namespace {

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '[' || c == ']' || c == '(' || c == ')') ? ' ' : c;

  std::vector<int> values;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < cleaned.size() && std::isspace(static_cast<unsigned char>(cleaned[pos]))) ++pos;
  };
  skip_space();
  if (pos == cleaned.size()) return values;
  while (true) {
    skip_space();
    std::size_t end = pos;
    if (end < cleaned.size() && (cleaned[end] == '-' || cleaned[end] == '+')) ++end;
    while (end < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[end]))) ++end;
    const char* first = cleaned.data() + pos + (cleaned[pos] == '+' ? 1 : 0);
    int value = 0;
    auto [ptr, ec] = std::from_chars(first, cleaned.data() + end, value);
    if (ec != std::errc() || ptr != cleaned.data() + end || end == pos)
      throw MalformedInput(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
    values.push_back(value);
    pos = end;
    skip_space();
    if (pos == cleaned.size()) break;
    if (cleaned[pos] != ',')
      throw MalformedInput(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
    ++pos;
  }
  return values;
}

}  // namespace

ColoredBraid make_braid(int strands, std::vector<int> word, std::vector<int> colors) {
  if (strands < 1) throw MalformedInput("number of strands must be positive");
  if (static_cast<int>(colors.size()) != strands)
    throw MalformedInput("expected " + std::to_string(strands) + " colors, got " +
                         std::to_string(colors.size()));
  for (int s : word) {
    if (s == 0 || std::abs(s) >= strands)
      throw CrossingOutOfRange("crossing " + std::to_string(s) + " is out of range for " +
                               std::to_string(strands) + " strands");
  }

  std::map<int, int> renumber;
  for (int& c : colors) {
    auto [it, inserted] = renumber.try_emplace(c, static_cast<int>(renumber.size()));
    c = it->second;
  }

  ColoredBraid braid{strands, std::move(word), std::move(colors), static_cast<int>(renumber.size())};
  validate_coloring(braid);
  return braid;
}

ColoredBraid parse_braid(std::string_view word_text, int strands, std::string_view colors_text) {
  return make_braid(strands, parse_int_list(word_text, "braid word"),
                    parse_int_list(colors_text, "color list"));
}

BraidPermutation braid_permutation(const ColoredBraid& braid) {
  const int n = braid.strands;
  // occupant[p] = starting position (0-based) of the strand now at position p
  std::vector<int> occupant(static_cast<std::size_t>(n));
  std::iota(occupant.begin(), occupant.end(), 0);
  for (int s : braid.word) {
    const int p = std::abs(s) - 1;
    std::swap(occupant[static_cast<std::size_t>(p)], occupant[static_cast<std::size_t>(p + 1)]);
  }

  BraidPermutation perm;
  perm.mapping.assign(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < n; ++p) perm.mapping[static_cast<std::size_t>(occupant[static_cast<std::size_t>(p)])] = p + 1;

  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> orbit;
    for (int k = start; !seen[static_cast<std::size_t>(k)]; k = perm.mapping[static_cast<std::size_t>(k)] - 1) {
      seen[static_cast<std::size_t>(k)] = true;
      orbit.push_back(k + 1);
    }
    std::sort(orbit.begin(), orbit.end());
    perm.orbits.push_back(std::move(orbit));
  }
  return perm;
}

void validate_coloring(const ColoredBraid& braid) {
  const BraidPermutation perm = braid_permutation(braid);
  for (const auto& orbit : perm.orbits) {
    const int c = braid.colors[static_cast<std::size_t>(orbit.front() - 1)];
    for (int k : orbit) {
      if (braid.colors[static_cast<std::size_t>(k - 1)] != c) {
        std::string positions;
        for (int q : orbit) positions += (positions.empty() ? "" : ",") + std::to_string(q);
        throw ColoringMismatch("strands at positions {" + positions +
                                   "} close up into one component but have different colors",
                               orbit);
      }
    }
  }
  std::vector<bool> used(static_cast<std::size_t>(braid.mu), false);
  for (int c : braid.colors) {
    if (c < 0 || c >= braid.mu) throw UnusedColor("color " + std::to_string(c) + " outside 0.." + std::to_string(braid.mu - 1));
    used[static_cast<std::size_t>(c)] = true;
  }
  for (int c = 0; c < braid.mu; ++c)
    if (!used[static_cast<std::size_t>(c)]) throw UnusedColor("color " + std::to_string(c) + " is not used");
}

std::vector<int> component_colors(const ColoredBraid& braid) {
  std::vector<int> out;
  for (const auto& orbit : braid_permutation(braid).orbits)
    out.push_back(braid.colors[static_cast<std::size_t>(orbit.front() - 1)]);
  return out;
}

std::string word_to_string(const std::vector<int>& word) {
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) out += (i ? ", " : "") + std::to_string(word[i]);
  return out + "]";
}

}  // namespace colorlink
