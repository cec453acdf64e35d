#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcgh/homology_class.hpp"

namespace mcgh::braid {

// sigma_index^sign, index in [1, strands - 1], sign = +1 or -1.
struct ArtinLetter {
  int index = 1;
  int sign = 1;
  bool operator==(const ArtinLetter&) const = default;
};

struct ArtinWord {
  int strands = 1;
  std::vector<ArtinLetter> letters;

  ArtinWord inverse() const;
  ArtinWord& operator*=(const ArtinWord& rhs);
  friend ArtinWord operator*(ArtinWord a, const ArtinWord& b) { return a *= b; }
  bool operator==(const ArtinWord&) const = default;
};

// A_{ij}^exponent with 1 <= i < j <= strands.
struct PairLetter {
  int i = 1;
  int j = 2;
  int exponent = 1;
  bool operator==(const PairLetter&) const = default;
};

struct PairWord {
  int strands = 2;
  std::vector<PairLetter> letters;
};

// Sparse integer vector indexed by strand pairs (i, j), i < j.
using PairVector = std::map<std::pair<int, int>, Int>;

// perm[p - 1] is the final position of the strand starting at position p.
std::vector<int> permutation_of(const ArtinWord& w);
bool is_pure(const ArtinWord& w);

PairVector exponent_sums(const PairWord& w);

// Half the signed crossing count between each pair of strands, strands
// identified by their starting positions. sigma_i is a positive crossing.
// Throws NotPure.
PairVector linking_numbers(const ArtinWord& w);

// (s_{j-1} ... s_{i+1}) s_i^2 (s_{i+1} ... s_{j-1})^{-1}
ArtinWord embed_pair_generator(int i, int j, int strands);
ArtinWord embed(const PairWord& w);

// (s_1 s_2 ... s_{n-1})^n
ArtinWord full_twist(int strands);

// Flute labelling: strand 1 = a, strand 2 = b, strand k + 2 = k.
std::string flute_strand_label(int strand);
HomologyClass to_flute_class(const PairVector& v);

// Text format: header token "n=<k>" followed by "s<i>" / "S<i>" (sigma_i^{+-1})
// and "A<i>.<j>" / "a<i>.<j>" (A_ij^{+-1}). Pair tokens in an Artin word are
// expanded through embed_pair_generator.
ArtinWord parse_artin_word(std::string_view text);
PairWord parse_pair_word(std::string_view text);
std::string format(const ArtinWord& w);
std::string format(const PairWord& w);

}  // namespace mcgh::braid
