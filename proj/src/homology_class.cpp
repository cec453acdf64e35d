#include "mcgh/homology_class.hpp"

namespace mcgh {

HomologyClass HomologyClass::of(const Symbol& s, Int coefficient) {
  HomologyClass c;
  c.add(s, coefficient);
  return c;
}

Int HomologyClass::coefficient(const Symbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

void HomologyClass::add(const Symbol& s, Int coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (inserted) return;
  it->second = checked_add(it->second, coefficient);
  if (it->second == 0) terms_.erase(it);
}

HomologyClass& HomologyClass::operator+=(const HomologyClass& other) {
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

HomologyClass& HomologyClass::operator-=(const HomologyClass& other) {
  for (const auto& [s, c] : other.terms_) add(s, checked_neg(c));
  return *this;
}

HomologyClass& HomologyClass::operator*=(Int scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c = checked_mul(c, scalar);
  return *this;
}

std::string HomologyClass::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    std::string mag = std::to_string(c);
    if (c < 0) mag.erase(0, 1);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != "1") out += mag + "*";
    out += s.str();
    first = false;
  }
  return out;
}

}  // namespace mcgh
