#pragma once

#include <cstdint>
#include <unordered_map>

#include "boks/example.hpp"

namespace boks {

using ExampleId = std::uint64_t;

// Reference-counted storage for every example a learner keeps. Ids are
// handed out in increasing order and never reused. Each buffer membership
// and each coefficient entry holds one reference; an entry is dropped as
// soon as its count reaches zero, so size() is the number of examples
// actually held in memory.
class ExampleStore {
 public:
  // Stores the example with refcount 1, owned by the caller.
  ExampleId add(Example ex);

  void retain(ExampleId id);
  // Drops the entry once its refcount reaches zero.
  void release(ExampleId id);

  const Example& get(ExampleId id) const;
  bool contains(ExampleId id) const noexcept { return entries_.count(id) != 0; }
  std::size_t refcount(ExampleId id) const noexcept;

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t total_refcount() const noexcept;
  ExampleId next_id() const noexcept { return next_id_; }

 private:
  struct Entry {
    Example example;
    std::size_t refcount = 0;
  };
  std::unordered_map<ExampleId, Entry> entries_;
  ExampleId next_id_ = 0;
};

}  // namespace boks
