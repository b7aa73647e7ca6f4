#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include <boost/container/small_vector.hpp>

namespace haken {

using Vertex = std::int32_t;

/// A finite set of vertex labels stored as a strictly increasing sequence.
/// The empty simplex (dimension -1) is a valid value.
class Simplex {
 public:
  using Storage = boost::container::small_vector<Vertex, 8>;
  using const_iterator = Storage::const_iterator;

  Simplex() = default;
  /// Sorts the labels; throws InvalidArgument on repeated labels.
  Simplex(std::initializer_list<Vertex> labels);
  explicit Simplex(std::span<const Vertex> labels);
  explicit Simplex(Storage labels);

  /// Wraps labels that are already strictly increasing. Not checked.
  static Simplex from_sorted(Storage labels) noexcept;

  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  int dimension() const noexcept { return static_cast<int>(v_.size()) - 1; }
  Vertex operator[](std::size_t i) const noexcept { return v_[i]; }
  Vertex front() const noexcept { return v_.front(); }
  Vertex back() const noexcept { return v_.back(); }
  const_iterator begin() const noexcept { return v_.begin(); }
  const_iterator end() const noexcept { return v_.end(); }
  const Storage& labels() const noexcept { return v_; }

  bool contains(Vertex v) const noexcept;
  bool is_subset_of(const Simplex& other) const noexcept;
  bool is_disjoint_from(const Simplex& other) const noexcept;

  /// The face obtained by dropping the i-th vertex.
  Simplex without_index(std::size_t i) const;
  Simplex with(Vertex v) const;
  Simplex unite(const Simplex& other) const;
  Simplex intersect(const Simplex& other) const;
  Simplex minus(const Simplex& other) const;

  std::string to_string() const;

  friend bool operator==(const Simplex& a, const Simplex& b) noexcept { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept;

 private:
  Storage v_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace haken
