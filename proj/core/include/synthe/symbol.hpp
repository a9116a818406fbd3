#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace synthe {

/// Interned identifier. Equality and hashing are pointer-based; ordering is
/// lexicographic so that anything sorted by name is stable across runs.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view text);

  const std::string& str() const;
  bool empty() const { return rep_ == nullptr; }

  friend bool operator==(Symbol a, Symbol b) { return a.rep_ == b.rep_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.rep_ == b.rep_) return std::strong_ordering::equal;
    return a.str() <=> b.str();
  }

  std::size_t hash() const { return std::hash<const void*>{}(rep_); }

 private:
  const std::string* rep_ = nullptr;
};

inline std::ostream& operator<<(std::ostream& os, Symbol s) { return os << s.str(); }

}  // namespace synthe

template <>
struct std::hash<synthe::Symbol> {
  std::size_t operator()(synthe::Symbol s) const noexcept { return s.hash(); }
};
