#include "haken/simplex.hpp"

#include <algorithm>
#include <iterator>

#include <boost/container_hash/hash.hpp>

#include "haken/error.hpp"

namespace haken {
namespace {

void sort_and_check(Simplex::Storage& v) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw InvalidArgument("simplex has a repeated vertex label");
  }
}

}  // namespace

Simplex::Simplex(std::initializer_list<Vertex> labels) : v_(labels.begin(), labels.end()) {
  sort_and_check(v_);
}

Simplex::Simplex(std::span<const Vertex> labels) : v_(labels.begin(), labels.end()) {
  sort_and_check(v_);
}

Simplex::Simplex(Storage labels) : v_(std::move(labels)) { sort_and_check(v_); }

Simplex Simplex::from_sorted(Storage labels) noexcept {
  Simplex s;
  s.v_ = std::move(labels);
  return s;
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(v_.begin(), v_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const noexcept {
  return v_.size() <= other.v_.size() &&
         std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool Simplex::is_disjoint_from(const Simplex& other) const noexcept {
  auto a = v_.begin();
  auto b = other.v_.begin();
  while (a != v_.end() && b != other.v_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Simplex Simplex::without_index(std::size_t i) const {
  Storage out;
  out.reserve(v_.size() - 1);
  for (std::size_t j = 0; j < v_.size(); ++j) {
    if (j != i) out.push_back(v_[j]);
  }
  return from_sorted(std::move(out));
}

Simplex Simplex::with(Vertex v) const {
  Storage out(v_);
  auto pos = std::lower_bound(out.begin(), out.end(), v);
  if (pos != out.end() && *pos == v) return *this;
  out.insert(pos, v);
  return from_sorted(std::move(out));
}

Simplex Simplex::unite(const Simplex& other) const {
  Storage out;
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::intersect(const Simplex& other) const {
  Storage out;
  std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                        std::back_inserter(out));
  return from_sorted(std::move(out));
}

Simplex Simplex::minus(const Simplex& other) const {
  Storage out;
  std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(),
                      std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v_[i]);
  }
  s += '}';
  return s;
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept {
  return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.end(), b.v_.begin(),
                                                b.v_.end());
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  return boost::hash_range(s.begin(), s.end());
}

}  // namespace haken
