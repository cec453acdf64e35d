#include "mcgh/symbol.hpp"

#include <algorithm>

#include "mcgh/error.hpp"

namespace mcgh {

bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ':' || c == ',' || c == ' ' || c == '\t' || c == '\n' ||
           c == '\r';
  });
}

namespace {

void require_label(std::string_view label) {
  if (!is_valid_label(label))
    throw Error(ErrorCode::InvalidLabel, "bad label '" + std::string(label) + "'");
}

}  // namespace

Symbol Symbol::tau() { return Symbol(Kind::Tau, {}); }

Symbol Symbol::boundary(std::string label) {
  require_label(label);
  return Symbol(Kind::Boundary, {std::move(label)});
}

Symbol Symbol::pair(std::string first, std::string second) {
  require_label(first);
  require_label(second);
  if (first == second)
    throw Error(ErrorCode::InvalidLabel, "pair twist needs two distinct punctures, got '" + first + "' twice");
  if (second < first) std::swap(first, second);
  return Symbol(Kind::Pair, {std::move(first), std::move(second)});
}

Symbol Symbol::separating(std::vector<std::string> labels) {
  for (const auto& l : labels) require_label(l);
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw Error(ErrorCode::InvalidLabel, "repeated label in separating curve");
  if (labels.size() < 2)
    throw Error(ErrorCode::InvalidLabel,
                "separating curve must cut off at least two boundaries");
  return Symbol(Kind::Separating, std::move(labels));
}

Symbol Symbol::parse(std::string_view text) {
  if (text == "tau") return tau();
  if (text.starts_with("bd:")) return boundary(std::string(text.substr(3)));
  if (text.starts_with("pair:")) {
    auto rest = text.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::ParseError, "malformed pair symbol '" + std::string(text) + "'");
    return pair(std::string(rest.substr(0, colon)),
                std::string(rest.substr(colon + 1)));
  }
  if (text.starts_with("sep:")) {
    std::vector<std::string> labels;
    auto rest = text.substr(4);
    std::size_t start = 0;
    while (true) {
      auto comma = rest.find(',', start);
      labels.emplace_back(rest.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return separating(std::move(labels));
  }
  throw Error(ErrorCode::ParseError, "unknown symbol '" + std::string(text) + "'");
}

bool Symbol::involves(std::string_view label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::string Symbol::str() const {
  switch (kind_) {
    case Kind::Tau: return "tau";
    case Kind::Boundary: return "bd:" + labels_[0];
    case Kind::Pair: return "pair:" + labels_[0] + ":" + labels_[1];
    case Kind::Separating: {
      std::string out = "sep:";
      for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) out += ',';
        out += labels_[i];
      }
      return out;
    }
  }
  return {};
}

}  // namespace mcgh
