#include "synthe/symbol.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace synthe {

namespace {

struct SymbolTable {
  std::mutex mutex;
  std::unordered_map<std::string_view, std::unique_ptr<std::string>> entries;
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

const std::string& empty_string() {
  static const std::string s;
  return s;
}

}  // namespace

Symbol::Symbol(std::string_view text) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  auto it = t.entries.find(text);
  if (it == t.entries.end()) {
    auto owned = std::make_unique<std::string>(text);
    std::string_view key = *owned;
    it = t.entries.emplace(key, std::move(owned)).first;
  }
  rep_ = it->second.get();
}

const std::string& Symbol::str() const { return rep_ ? *rep_ : empty_string(); }

}  // namespace synthe
