#include "knotint/braid.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace knotint {

BraidWord parse_braid(const std::string& text, int strands) {
  if (strands < 1) throw std::invalid_argument("strand count must be >= 1");
  BraidWord b;
  b.strands = strands;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    std::string t = tok;
    bool neg = false;
    size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) {
      neg = (t[i] == '-');
      ++i;
    }
    if (i < t.size() && (t[i] == 's' || t[i] == 'S')) ++i;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) {  // "s-2" form
      if (t[i] == '-') neg = !neg;
      ++i;
    }
    if (i >= t.size()) throw std::invalid_argument("bad braid token '" + tok + "'");
    int v = 0;
    for (; i < t.size(); ++i) {
      if (!isdigit((unsigned char)t[i]))
        throw std::invalid_argument("bad braid token '" + tok + "'");
      v = v * 10 + (t[i] - '0');
    }
    if (v == 0) throw std::invalid_argument("braid generator 0 in token '" + tok + "'");
    if (v >= strands)
      throw std::invalid_argument("generator index " + std::to_string(v) +
                                  " out of range for " + std::to_string(strands) +
                                  " strands (token '" + tok + "')");
    b.letters.push_back(neg ? -v : v);
  }
  return b;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (int l : b.letters) w += (l > 0) ? 1 : -1;
  return w;
}

std::vector<int> underlying_permutation(const BraidWord& b) {
  std::vector<int> perm(b.strands);
  std::iota(perm.begin(), perm.end(), 0);
  // perm[i] = current end position of the strand that started at i
  for (int l : b.letters) {
    int i = std::abs(l) - 1;
    for (auto& p : perm) {
      if (p == i) p = i + 1;
      else if (p == i + 1) p = i;
    }
  }
  return perm;
}

int closure_components(const BraidWord& b) {
  auto perm = underlying_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = size_t(perm[j]);
    }
  }
  return cycles;
}

BraidWord free_reduce(const BraidWord& b) {
  BraidWord r;
  r.strands = b.strands;
  for (int l : b.letters) {
    if (!r.letters.empty() && r.letters.back() == -l) r.letters.pop_back();
    else r.letters.push_back(l);
  }
  return r;
}

std::string braid_to_string(const BraidWord& b) {
  std::ostringstream os;
  for (size_t i = 0; i < b.letters.size(); ++i) {
    if (i) os << " ";
    os << b.letters[i];
  }
  return os.str();
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord inverse(const BraidWord& b) {
  BraidWord r;
  r.strands = b.strands;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    r.letters.push_back(-*it);
  return r;
}

}  // namespace knotint
