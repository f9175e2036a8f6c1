// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KAHN_ELEMENT_SET_HPP_
#define KAHN_ELEMENT_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace kahn {

// Index into the ground set. Identity is positional: two ids may carry the
// same vector and are still distinct elements.
using ElementId = std::uint32_t;

// Sorted, duplicate-free sequence of element ids.
class ElementSet {
 public:
  using const_iterator = std::vector<ElementId>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<ElementId> ids) : ids_(ids) { normalize(); }
  explicit ElementSet(std::vector<ElementId> ids) : ids_(std::move(ids)) {
    normalize();
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  ElementId operator[](std::size_t k) const { return ids_[k]; }
  std::span<const ElementId> ids() const { return ids_; }
  operator std::span<const ElementId>() const { return ids_; }

  bool contains(ElementId e) const {
    return std::binary_search(ids_.begin(), ids_.end(), e);
  }

  void insert(ElementId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it == ids_.end() || *it != e) ids_.insert(it, e);
  }

  void erase(ElementId e) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
    if (it != ids_.end() && *it == e) ids_.erase(it);
  }

  ElementSet with(ElementId e) const {
    ElementSet out = *this;
    out.insert(e);
    return out;
  }

  ElementSet without(ElementId e) const {
    ElementSet out = *this;
    out.erase(e);
    return out;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<ElementId> ids_;
};

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return ElementSet(std::move(out));
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return ElementSet(std::move(out));
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  std::vector<ElementId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return ElementSet(std::move(out));
}

}  // namespace kahn

#endif  // KAHN_ELEMENT_SET_HPP_
