#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "boks/example.hpp"

namespace boks {

struct Dataset {
  std::vector<Example> examples;
  std::size_t dimension = 0;  // largest feature index
  std::string name;
  std::string provenance;     // file path or generator parameters

  std::size_t size() const noexcept { return examples.size(); }
};

// LIBSVM text: "label idx:val idx:val ...", 1-based strictly ascending
// indices, '#' starts a comment. Exactly two distinct raw labels are
// required; the numerically larger one maps to +1.
Dataset parse_libsvm(const std::filesystem::path& path);
Dataset parse_libsvm(std::istream& in, std::string name = "stream");

// Writes labels as +1/-1 and values with 17 significant digits, so
// parse_libsvm(write_libsvm(ds)) reproduces every value bit for bit.
void write_libsvm(const Dataset& ds, std::ostream& out);
void write_libsvm(const Dataset& ds, const std::filesystem::path& path);

// Per-feature affine map onto [0, 1] from full-dataset min/max (implicit
// zeros included); constant features map to 0.
Dataset normalize_minmax(const Dataset& ds);

// Seeded uniform shuffle.
Dataset permute(const Dataset& ds, std::uint64_t seed);

// Adversarial stream for the memory lower bound: rounds 1..3B are the
// standard basis vectors e_1..e_{3B} in R^{3B} labelled +1, -1, +1, ...;
// rounds 3B+1..T repeat those pairs uniformly at random.
Dataset gen_lowerbound(std::size_t budget, std::size_t rounds, std::uint64_t seed);

}  // namespace boks
