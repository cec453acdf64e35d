#pragma once

#include <map>
#include <string>

#include "mcgh/checked.hpp"
#include "mcgh/symbol.hpp"

namespace mcgh {

// Sparse integer combination of twist symbols. Zero coefficients are never
// stored, so structural equality is equality of classes over the free
// module on the symbols.
class HomologyClass {
 public:
  using Terms = std::map<Symbol, Int>;

  HomologyClass() = default;
  static HomologyClass of(const Symbol& s, Int coefficient = 1);

  Int coefficient(const Symbol& s) const;
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Symbol& s, Int coefficient);
  void erase(const Symbol& s) { terms_.erase(s); }

  HomologyClass& operator+=(const HomologyClass& other);
  HomologyClass& operator-=(const HomologyClass& other);
  HomologyClass& operator*=(Int scalar);

  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
  friend HomologyClass operator*(Int k, HomologyClass a) { return a *= k; }
  HomologyClass operator-() const { return Int{-1} * *this; }

  bool operator==(const HomologyClass&) const = default;

  // Human-readable form, e.g. "12*tau - bd:x".
  std::string str() const;

 private:
  Terms terms_;
};

}  // namespace mcgh
