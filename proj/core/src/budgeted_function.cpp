#include "boks/budgeted_function.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "boks/error.hpp"

namespace boks {

BudgetedFunction::BudgetedFunction(KernelSpec kernel, std::shared_ptr<ExampleStore> store)
    : kernel_(kernel), store_(std::move(store)) {
  if (!store_) throw Error("BudgetedFunction needs an example store");
}

BudgetedFunction::BudgetedFunction(const BudgetedFunction& other)
    : kernel_(other.kernel_),
      store_(other.store_),
      atoms_(other.atoms_),
      buffer_(other.buffer_),
      sq_norm_(other.sq_norm_) {
  retain_all();
}

BudgetedFunction& BudgetedFunction::operator=(const BudgetedFunction& other) {
  if (this == &other) return *this;
  BudgetedFunction copy(other);
  *this = std::move(copy);
  return *this;
}

BudgetedFunction::BudgetedFunction(BudgetedFunction&& other) noexcept
    : kernel_(other.kernel_),
      store_(std::move(other.store_)),
      atoms_(std::move(other.atoms_)),
      buffer_(std::move(other.buffer_)),
      sq_norm_(other.sq_norm_) {
  other.atoms_.clear();
  other.buffer_.clear();
  other.sq_norm_ = 0.0;
}

BudgetedFunction& BudgetedFunction::operator=(BudgetedFunction&& other) noexcept {
  if (this == &other) return *this;
  release_all();
  kernel_ = other.kernel_;
  store_ = std::move(other.store_);
  atoms_ = std::move(other.atoms_);
  buffer_ = std::move(other.buffer_);
  sq_norm_ = other.sq_norm_;
  other.atoms_.clear();
  other.buffer_.clear();
  other.sq_norm_ = 0.0;
  return *this;
}

BudgetedFunction::~BudgetedFunction() { release_all(); }

void BudgetedFunction::retain_all() {
  for (const auto& a : atoms_) store_->retain(a.id);
  for (ExampleId id : buffer_) store_->retain(id);
}

void BudgetedFunction::release_all() noexcept {
  if (!store_) return;
  for (const auto& a : atoms_) store_->release(a.id);
  for (ExampleId id : buffer_) store_->release(id);
  atoms_.clear();
  buffer_.clear();
}

double BudgetedFunction::evaluate(const SparseVector& x) const {
  double sum = 0.0;
  for (const auto& a : atoms_) sum += a.coeff * eval(kernel_, a.example->x, x);
  return sum;
}

BudgetedFunction::Atom* BudgetedFunction::find_atom(ExampleId id) noexcept {
  auto it = std::find_if(atoms_.begin(), atoms_.end(), [id](const Atom& a) { return a.id == id; });
  return it == atoms_.end() ? nullptr : &*it;
}

double BudgetedFunction::coefficient(ExampleId id) const noexcept {
  for (const auto& a : atoms_) {
    if (a.id == id) return a.coeff;
  }
  return 0.0;
}

void BudgetedFunction::erase_atom(ExampleId id) {
  auto it = std::find_if(atoms_.begin(), atoms_.end(), [id](const Atom& a) { return a.id == id; });
  if (it == atoms_.end()) return;
  atoms_.erase(it);
  store_->release(id);
}

void BudgetedFunction::add_scaled(double c, ExampleId anchor) {
  const std::pair<ExampleId, double> term{anchor, c};
  add_combination(std::span(&term, 1));
}

void BudgetedFunction::add_combination(std::span<const std::pair<ExampleId, double>> terms) {
  if (terms.empty()) return;
  std::vector<const Example*> ex(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k) ex[k] = &store_->get(terms[k].first);

  // ||f + g||^2 = ||f||^2 + 2 <f, g> + ||g||^2 with <f, g> = sum_k c_k f(x_k).
  double cross = 0.0;
  double g_sq = 0.0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const double ck = terms[k].second;
    if (ck == 0.0) continue;
    cross += ck * evaluate(ex[k]->x);
    g_sq += ck * ck * eval(kernel_, ex[k]->x, ex[k]->x);
    for (std::size_t l = k + 1; l < terms.size(); ++l) {
      g_sq += 2.0 * ck * terms[l].second * eval(kernel_, ex[k]->x, ex[l]->x);
    }
  }
  sq_norm_ = std::max(0.0, sq_norm_ + 2.0 * cross + g_sq);

  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto [id, c] = terms[k];
    if (c == 0.0) continue;
    if (Atom* a = find_atom(id)) {
      a->coeff += c;
      if (a->coeff == 0.0) erase_atom(id);
    } else {
      store_->retain(id);
      atoms_.push_back(Atom{id, c, ex[k]});
    }
  }
  if (atoms_.empty()) sq_norm_ = 0.0;
}

bool BudgetedFunction::project_ball(double radius) {
  if (!(radius > 0.0)) throw ConfigError("projection radius must be positive");
  if (sq_norm_ <= radius * radius) return false;
  const double scale = radius / std::sqrt(sq_norm_);
  for (auto& a : atoms_) a.coeff *= scale;
  sq_norm_ = radius * radius;
  return true;
}

void BudgetedFunction::push_buffer(ExampleId id) {
  store_->retain(id);
  buffer_.push_back(id);
}

std::vector<ExampleId> BudgetedFunction::split_half(HalfToKeep keep) {
  if (buffer_.empty() || buffer_.size() % 2 != 0) {
    throw BudgetError("split_half needs an even, non-empty buffer; size is " +
                      std::to_string(buffer_.size()));
  }
  const std::size_t half = buffer_.size() / 2;
  std::vector<ExampleId> kept, removed;
  if (keep == HalfToKeep::oldest) {
    kept.assign(buffer_.begin(), buffer_.begin() + half);
    removed.assign(buffer_.begin() + half, buffer_.end());
  } else {
    removed.assign(buffer_.begin(), buffer_.begin() + half);
    kept.assign(buffer_.begin() + half, buffer_.end());
  }
  for (ExampleId id : removed) erase_atom(id);
  for (ExampleId id : removed) store_->release(id);
  buffer_ = std::move(kept);
  sq_norm_ = recompute_squared_norm();
  return removed;
}

void BudgetedFunction::clear() {
  release_all();
  sq_norm_ = 0.0;
}

double BudgetedFunction::norm() const noexcept { return std::sqrt(sq_norm_); }

double BudgetedFunction::recompute_squared_norm() const {
  double sum = 0.0;
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    const auto& a = atoms_[j];
    sum += a.coeff * a.coeff * eval(kernel_, a.example->x, a.example->x);
    for (std::size_t k = j + 1; k < atoms_.size(); ++k) {
      sum += 2.0 * a.coeff * atoms_[k].coeff * eval(kernel_, a.example->x, atoms_[k].example->x);
    }
  }
  return std::max(0.0, sum);
}

}  // namespace boks
