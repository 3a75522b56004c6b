// Braid words: parsing, writhe, underlying permutation, free reduction.

#pragma once

#include <string>
#include <vector>

namespace knotint {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // nonzero, |letter| in 1..strands-1

  bool operator==(const BraidWord&) const = default;
};

// Parses whitespace-separated signed generator indices; an optional leading
// 's' per token is tolerated ("s1 -s2" == "1 -2").  Throws
// std::invalid_argument naming the offending token.
BraidWord parse_braid(const std::string& text, int strands);

int writhe(const BraidWord& b);

// Permutation of {0..n-1} induced by the braid, as image vector: strand
// starting at position i ends at perm[i].
std::vector<int> underlying_permutation(const BraidWord& b);

// Number of components of the closure = cycles of the permutation.
int closure_components(const BraidWord& b);

// Cancels adjacent inverse letters until stable.  Used for cache keys and the
// free-reduction property tests, never as a preprocessing step.
BraidWord free_reduce(const BraidWord& b);

std::string braid_to_string(const BraidWord& b);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);

}  // namespace knotint
