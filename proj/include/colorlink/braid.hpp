#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace colorlink {

class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CrossingOutOfRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ColoringMismatch : public std::invalid_argument {
 public:
  ColoringMismatch(const std::string& what, std::vector<int> orbit)
      : std::invalid_argument(what), orbit_(std::move(orbit)) {}
  /// 1-based positions of the orbit whose colors disagree.
  const std::vector<int>& orbit() const { return orbit_; }

 private:
  std::vector<int> orbit_;
};

class UnusedColor : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A braid on `strands` strands with crossing word s_1..s_m and one color per
/// starting position. Positions are numbered 1..n from the bottom; s_i = +k
/// crosses positions k and k+1 with the over-strand moving down, s_i = -k
/// with the over-strand moving up.
///
/// colors[k] is the color of the strand that starts at position k+1.
struct ColoredBraid {
  int strands = 1;
  std::vector<int> word;
  std::vector<int> colors;
  int mu = 1;

  bool operator==(const ColoredBraid&) const = default;
};

/// mapping[k] is the end position (1-based) of the strand starting at
/// position k+1; orbits are 1-based cycles sorted by their smallest element.
struct BraidPermutation {
  std::vector<int> mapping;
  std::vector<std::vector<int>> orbits;

  bool operator==(const BraidPermutation&) const = default;
};

/// Parse "[-2,-3,2]" (brackets optional) and "0,1,2,0", renumber colors by
/// first appearance, and validate.
ColoredBraid parse_braid(std::string_view word_text, int strands, std::string_view colors_text);

/// Build from already-split values; same validation and renumbering as parse_braid.
ColoredBraid make_braid(int strands, std::vector<int> word, std::vector<int> colors);

BraidPermutation braid_permutation(const ColoredBraid& braid);

/// Throws ColoringMismatch / UnusedColor.
void validate_coloring(const ColoredBraid& braid);

/// Color of every closure component, in orbit order.
std::vector<int> component_colors(const ColoredBraid& braid);

std::string word_to_string(const std::vector<int>& word);

}  // namespace colorlink
