#include "mcgh/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "mcgh/error.hpp"

namespace mcgh::braid {

namespace {

void check_letter(const ArtinLetter& l, int strands) {
  if (l.index < 1 || l.index >= strands || (l.sign != 1 && l.sign != -1))
    throw Error(ErrorCode::InvalidWord,
                "generator s" + std::to_string(l.index) + " out of range for " +
                    std::to_string(strands) + " strands");
}

void check_pair(int i, int j, int strands) {
  if (i < 1 || j <= i || j > strands)
    throw Error(ErrorCode::InvalidWord,
                "pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") out of range for " + std::to_string(strands) + " strands");
}

int parse_int(std::string_view s, std::string_view token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "bad braid token '" + std::string(token) + "'");
  return v;
}

std::vector<std::string_view> tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.push_back(text.substr(start, i - start));
  }
  return out;
}

int parse_header(const std::vector<std::string_view>& toks) {
  if (toks.empty() || !toks[0].starts_with("n="))
    throw Error(ErrorCode::ParseError, "braid word must start with n=<strands>");
  int n = parse_int(toks[0].substr(2), toks[0]);
  if (n < 1) throw Error(ErrorCode::ParseError, "strand count must be positive");
  return n;
}

PairLetter parse_pair_token(std::string_view tok, int strands) {
  auto body = tok.substr(1);
  auto dot = body.find('.');
  if (dot == std::string_view::npos)
    throw Error(ErrorCode::ParseError, "bad braid token '" + std::string(tok) + "'");
  PairLetter l{parse_int(body.substr(0, dot), tok), parse_int(body.substr(dot + 1), tok),
               tok[0] == 'A' ? 1 : -1};
  check_pair(l.i, l.j, strands);
  return l;
}

}  // namespace

ArtinWord ArtinWord::inverse() const {
  ArtinWord out{strands, {}};
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back({it->index, -it->sign});
  return out;
}

ArtinWord& ArtinWord::operator*=(const ArtinWord& rhs) {
  if (rhs.strands != strands)
    throw Error(ErrorCode::InvalidWord, "strand counts differ");
  letters.insert(letters.end(), rhs.letters.begin(), rhs.letters.end());
  return *this;
}

std::vector<int> permutation_of(const ArtinWord& w) {
  // occupant[pos] = starting position of the strand now at pos
  std::vector<int> occupant(w.strands);
  std::iota(occupant.begin(), occupant.end(), 1);
  for (const auto& l : w.letters) {
    check_letter(l, w.strands);
    std::swap(occupant[l.index - 1], occupant[l.index]);
  }
  std::vector<int> perm(w.strands);
  for (int pos = 0; pos < w.strands; ++pos) perm[occupant[pos] - 1] = pos + 1;
  return perm;
}

bool is_pure(const ArtinWord& w) {
  auto perm = permutation_of(w);
  for (int p = 0; p < w.strands; ++p)
    if (perm[p] != p + 1) return false;
  return true;
}

PairVector exponent_sums(const PairWord& w) {
  PairVector out;
  for (const auto& l : w.letters) {
    check_pair(l.i, l.j, w.strands);
    auto& slot = out[{l.i, l.j}];
    slot = checked_add(slot, l.exponent);
    if (slot == 0) out.erase({l.i, l.j});
  }
  return out;
}

PairVector linking_numbers(const ArtinWord& w) {
  if (!is_pure(w)) throw Error(ErrorCode::NotPure, "linking numbers need a pure braid");
  std::vector<int> occupant(w.strands);
  std::iota(occupant.begin(), occupant.end(), 1);
  PairVector crossings;
  for (const auto& l : w.letters) {
    int p = occupant[l.index - 1];
    int q = occupant[l.index];
    auto key = std::minmax(p, q);
    auto& slot = crossings[key];
    slot = checked_add(slot, l.sign);
    std::swap(occupant[l.index - 1], occupant[l.index]);
  }
  PairVector out;
  for (const auto& [key, count] : crossings) {
    // Two strands that end where they started cross an even number of times.
    if (count % 2 != 0)
      throw Error(ErrorCode::NotPure, "odd crossing count between strands");
    if (count != 0) out.emplace(key, count / 2);
  }
  return out;
}

ArtinWord embed_pair_generator(int i, int j, int strands) {
  check_pair(i, j, strands);
  ArtinWord conj{strands, {}};
  for (int k = j - 1; k > i; --k) conj.letters.push_back({k, 1});
  ArtinWord core{strands, {{i, 1}, {i, 1}}};
  return conj * core * conj.inverse();
}

ArtinWord embed(const PairWord& w) {
  ArtinWord out{w.strands, {}};
  for (const auto& l : w.letters) {
    ArtinWord g = embed_pair_generator(l.i, l.j, w.strands);
    if (l.exponent < 0) g = g.inverse();
    for (int r = 0; r < std::abs(l.exponent); ++r) out *= g;
  }
  return out;
}

ArtinWord full_twist(int strands) {
  if (strands < 2) throw Error(ErrorCode::InvalidWord, "full twist needs at least two strands");
  ArtinWord out{strands, {}};
  for (int rep = 0; rep < strands; ++rep)
    for (int k = 1; k < strands; ++k) out.letters.push_back({k, 1});
  return out;
}

std::string flute_strand_label(int strand) {
  if (strand == 1) return "a";
  if (strand == 2) return "b";
  return std::to_string(strand - 2);
}

HomologyClass to_flute_class(const PairVector& v) {
  HomologyClass out;
  for (const auto& [key, c] : v)
    out.add(Symbol::pair(flute_strand_label(key.first), flute_strand_label(key.second)), c);
  return out;
}

ArtinWord parse_artin_word(std::string_view text) {
  auto toks = tokens(text);
  ArtinWord w{parse_header(toks), {}};
  for (std::size_t t = 1; t < toks.size(); ++t) {
    auto tok = toks[t];
    if (tok[0] == 's' || tok[0] == 'S') {
      ArtinLetter l{parse_int(tok.substr(1), tok), tok[0] == 's' ? 1 : -1};
      check_letter(l, w.strands);
      w.letters.push_back(l);
    } else if (tok[0] == 'A' || tok[0] == 'a') {
      auto p = parse_pair_token(tok, w.strands);
      w *= embed(PairWord{w.strands, {p}});
    } else {
      throw Error(ErrorCode::ParseError, "bad braid token '" + std::string(tok) + "'");
    }
  }
  return w;
}

PairWord parse_pair_word(std::string_view text) {
  auto toks = tokens(text);
  PairWord w{parse_header(toks), {}};
  for (std::size_t t = 1; t < toks.size(); ++t) {
    auto tok = toks[t];
    if (tok[0] != 'A' && tok[0] != 'a')
      throw Error(ErrorCode::ParseError,
                  "pair words take only A<i>.<j> / a<i>.<j> tokens, got '" + std::string(tok) + "'");
    w.letters.push_back(parse_pair_token(tok, w.strands));
  }
  return w;
}

std::string format(const ArtinWord& w) {
  std::ostringstream out;
  out << "n=" << w.strands;
  for (const auto& l : w.letters) out << ' ' << (l.sign > 0 ? 's' : 'S') << l.index;
  return out.str();
}

std::string format(const PairWord& w) {
  std::ostringstream out;
  out << "n=" << w.strands;
  for (const auto& l : w.letters) {
    for (int r = 0; r < std::abs(l.exponent); ++r)
      out << ' ' << (l.exponent > 0 ? 'A' : 'a') << l.i << '.' << l.j;
  }
  return out.str();
}

}  // namespace mcgh::braid
