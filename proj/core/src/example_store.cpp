#include "boks/example_store.hpp"

#include <string>

#include "boks/error.hpp"

namespace boks {

void check_label(Label y) {
  if (y != 1 && y != -1) {
    throw ConfigError("label must be -1 or +1, got " + std::to_string(y));
  }
}

ExampleId ExampleStore::add(Example ex) {
  check_label(ex.y);
  const ExampleId id = next_id_++;
  entries_.emplace(id, Entry{std::move(ex), 1});
  return id;
}

void ExampleStore::retain(ExampleId id) {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw Error("retain of unknown example id " + std::to_string(id));
  ++it->second.refcount;
}

void ExampleStore::release(ExampleId id) {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw Error("release of unknown example id " + std::to_string(id));
  if (--it->second.refcount == 0) entries_.erase(it);
}

const Example& ExampleStore::get(ExampleId id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw Error("unknown example id " + std::to_string(id));
  return it->second.example;
}

std::size_t ExampleStore::refcount(ExampleId id) const noexcept {
  auto it = entries_.find(id);
  return it == entries_.end() ? 0 : it->second.refcount;
}

std::size_t ExampleStore::total_refcount() const noexcept {
  std::size_t total = 0;
  for (const auto& [id, entry] : entries_) total += entry.refcount;
  return total;
}

}  // namespace boks
