#include "boks/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string_view>

#include "boks/error.hpp"
#include "boks/rng.hpp"

namespace boks {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double parse_double(std::string_view tok, std::size_t line_no, const char* what) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(tok) + "'", line_no);
  }
  return v;
}

struct RawExample {
  double label;
  SparseVector x;
};

}  // namespace

Dataset parse_libsvm(std::istream& in, std::string name) {
  std::vector<RawExample> raw;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    const auto tokens = split_tokens(view);
    if (tokens.empty()) continue;

    const double label = parse_double(tokens[0], line_no, "label");
    std::vector<FeatureIndex> idx;
    std::vector<double> val;
    idx.reserve(tokens.size() - 1);
    val.reserve(tokens.size() - 1);
    for (std::size_t k = 1; k < tokens.size(); ++k) {
      const auto tok = tokens[k];
      const auto colon = tok.find(':');
      if (colon == std::string_view::npos) throw ParseError("expected index:value, got '" + std::string(tok) + "'", line_no);
      const auto key = tok.substr(0, colon);
      if (key == "qid") continue;
      unsigned long long index = 0;
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
      if (ec != std::errc() || ptr != key.data() + key.size() || index == 0 || index > 0xffffffffull) {
        throw ParseError("bad feature index '" + std::string(key) + "'", line_no);
      }
      if (!idx.empty() && index <= idx.back()) throw ParseError("feature indices must be strictly ascending", line_no);
      const double v = parse_double(tok.substr(colon + 1), line_no, "feature value");
      idx.push_back(static_cast<FeatureIndex>(index));
      val.push_back(v);
    }
    if (!idx.empty()) dim = std::max<std::size_t>(dim, idx.back());
    raw.push_back(RawExample{label, SparseVector(std::move(idx), std::move(val))});
  }

  std::vector<double> labels;
  for (const auto& r : raw) {
    if (std::find(labels.begin(), labels.end(), r.label) == labels.end()) {
      labels.push_back(r.label);
      if (labels.size() > 2) break;
    }
  }
  if (labels.size() != 2) {
    throw ParseError("expected exactly two distinct labels in " + name + ", found " +
                     (labels.size() > 2 ? std::string("more than two") : std::to_string(labels.size())));
  }
  const double positive = std::max(labels[0], labels[1]);

  Dataset ds;
  ds.name = std::move(name);
  ds.dimension = dim;
  ds.examples.reserve(raw.size());
  for (auto& r : raw) ds.examples.push_back(Example{std::move(r.x), r.label == positive ? 1 : -1});
  return ds;
}

Dataset parse_libsvm(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset '" + path.string() + "'");
  Dataset ds = parse_libsvm(in, path.filename().string());
  ds.provenance = "file:" + path.string();
  return ds;
}

void write_libsvm(const Dataset& ds, std::ostream& out) {
  char buf[64];
  for (const auto& ex : ds.examples) {
    out << (ex.y > 0 ? "+1" : "-1");
    const auto& idx = ex.x.indices();
    const auto& val = ex.x.values();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", val[k]);
      out << ' ' << idx[k] << ':' << buf;
    }
    out << '\n';
  }
}

void write_libsvm(const Dataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  write_libsvm(ds, out);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

Dataset normalize_minmax(const Dataset& ds) {
  const std::size_t d = ds.dimension;
  std::vector<double> lo(d + 1, 0.0), hi(d + 1, 0.0);
  std::vector<std::size_t> count(d + 1, 0);
  for (const auto& ex : ds.examples) {
    const auto& idx = ex.x.indices();
    const auto& val = ex.x.values();
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const std::size_t j = idx[k];
      if (count[j] == 0) {
        lo[j] = hi[j] = val[k];
      } else {
        lo[j] = std::min(lo[j], val[k]);
        hi[j] = std::max(hi[j], val[k]);
      }
      ++count[j];
    }
  }
  for (std::size_t j = 1; j <= d; ++j) {
    if (count[j] < ds.size()) {  // some example has an implicit zero
      lo[j] = std::min(lo[j], 0.0);
      hi[j] = std::max(hi[j], 0.0);
    }
  }
  auto scaled = [&](std::size_t j, double v) { return hi[j] > lo[j] ? (v - lo[j]) / (hi[j] - lo[j]) : 0.0; };

  // Features whose implicit zero maps to a non-zero value become dense.
  std::vector<FeatureIndex> shifted;
  for (std::size_t j = 1; j <= d; ++j) {
    if (scaled(j, 0.0) != 0.0) shifted.push_back(static_cast<FeatureIndex>(j));
  }

  Dataset out;
  out.name = ds.name;
  out.dimension = ds.dimension;
  out.provenance = ds.provenance + (ds.provenance.empty() ? "" : " ") + "minmax";
  out.examples.reserve(ds.size());
  for (const auto& ex : ds.examples) {
    std::vector<FeatureIndex> idx;
    std::vector<double> val;
    const auto& in_idx = ex.x.indices();
    const auto& in_val = ex.x.values();
    std::size_t p = 0, q = 0;
    while (p < in_idx.size() || q < shifted.size()) {
      FeatureIndex j;
      double v;
      if (q >= shifted.size() || (p < in_idx.size() && in_idx[p] <= shifted[q])) {
        j = in_idx[p];
        v = scaled(j, in_val[p]);
        if (q < shifted.size() && shifted[q] == j) ++q;
        ++p;
      } else {
        j = shifted[q++];
        v = scaled(j, 0.0);
      }
      if (v != 0.0) {
        idx.push_back(j);
        val.push_back(v);
      }
    }
    out.examples.push_back(Example{SparseVector(std::move(idx), std::move(val)), ex.y});
  }
  return out;
}

Dataset permute(const Dataset& ds, std::uint64_t seed) {
  std::vector<std::size_t> order(ds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto rng = make_stream(seed, 0x7065726dull);
  std::shuffle(order.begin(), order.end(), rng);
  Dataset out;
  out.name = ds.name;
  out.dimension = ds.dimension;
  out.provenance = ds.provenance;
  out.examples.reserve(ds.size());
  for (std::size_t k : order) out.examples.push_back(ds.examples[k]);
  return out;
}

Dataset gen_lowerbound(std::size_t budget, std::size_t rounds, std::uint64_t seed) {
  if (budget == 0) throw ConfigError("lower-bound generator needs a positive budget");
  const std::size_t prefix = 3 * budget;
  if (rounds < prefix) {
    throw ConfigError("lower-bound generator needs T >= 3B (T=" + std::to_string(rounds) +
                      ", 3B=" + std::to_string(prefix) + ")");
  }
  Dataset ds;
  ds.dimension = prefix;
  ds.name = "lowerbound";
  std::ostringstream prov;
  prov << "generator:lowerbound budget=" << budget << " rounds=" << rounds << " seed=" << seed;
  ds.provenance = prov.str();
  ds.examples.reserve(rounds);
  for (std::size_t t = 1; t <= prefix; ++t) {
    ds.examples.push_back(Example{SparseVector({{static_cast<FeatureIndex>(t), 1.0}}), t % 2 == 1 ? 1 : -1});
  }
  auto rng = make_stream(seed, 0x6c62ull);
  std::uniform_int_distribution<std::size_t> pick(0, prefix - 1);
  for (std::size_t t = prefix; t < rounds; ++t) ds.examples.push_back(ds.examples[pick(rng)]);
  return ds;
}

}  // namespace boks
