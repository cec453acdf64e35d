#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mcgh {

// A twist generator appearing in the first homology of a stage.
//
//   Tau                the twist about a nonseparating curve (genus one)
//   Boundary(l)        the twist about boundary curve l
//   Pair(l1, l2)       the twist about a curve enclosing punctures l1, l2
//   Separating(ls)     the twist about a separating curve cutting off the
//                      boundary components ls; only used while deriving
//                      relations, never a basis element
//
// Serialized as "tau", "bd:<l>", "pair:<l1>:<l2>" (l1 < l2) and
// "sep:<l1>,<l2>,...". Label sets are stored sorted, so equal symbols
// compare equal.
class Symbol {
 public:
  enum class Kind { Tau, Boundary, Pair, Separating };

  static Symbol tau();
  static Symbol boundary(std::string label);
  static Symbol pair(std::string first, std::string second);
  static Symbol separating(std::vector<std::string> labels);

  static Symbol parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool involves(std::string_view label) const;

  std::string str() const;

  auto operator<=>(const Symbol&) const = default;

 private:
  Symbol(Kind kind, std::vector<std::string> labels)
      : kind_(kind), labels_(std::move(labels)) {}

  Kind kind_;
  std::vector<std::string> labels_;
};

// Labels may not contain the characters used by the symbol encoding.
bool is_valid_label(std::string_view label);

}  // namespace mcgh
