#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "matroid/bitset.hpp"
#include "matroid/errors.hpp"

namespace matroid {

inline constexpr int kMaxGroundSize = 16;

// An ordered list of distinct element labels. The position of a label is its
// element index throughout the library; subsets are bitmasks over indices.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) > kMaxGroundSize) {
      fail(Errc::cap_exceeded,
           "ground set exceeds " + std::to_string(kMaxGroundSize) +
               " elements");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      for (std::size_t j = i + 1; j < labels_.size(); ++j) {
        if (labels_[i] == labels_[j]) {
          fail(Errc::label_collision, "duplicate element label '" +
                                          labels_[i] + "' in ground set");
        }
      }
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }

  const std::string& label(int element) const { return labels_[element]; }

  // Index of `label`, or -1 when absent.
  int index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i] == label) return static_cast<int>(i);
    }
    return -1;
  }

  int require(const std::string& label) const {
    int i = index_of(label);
    if (i < 0) fail(Errc::unknown_element, "unknown element '" + label + "'");
    return i;
  }

  Subset full() const {
    return size() == 0 ? 0 : (Subset{1} << size()) - 1;
  }

  Subset subset_of(const std::vector<std::string>& labels) const {
    Subset s = 0;
    for (const auto& l : labels) s = with(s, require(l));
    return s;
  }

  std::vector<std::string> labels_of(Subset s) const {
    std::vector<std::string> out;
    for (int e : elements_of(s)) out.push_back(labels_[e]);
    return out;
  }

  // "{a,c,d}" with labels in index order.
  std::string render(Subset s) const {
    std::string out = "{";
    bool first = true;
    for (int e : elements_of(s)) {
      if (!first) out += ",";
      out += labels_[e];
      first = false;
    }
    out += "}";
    return out;
  }

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

}  // namespace matroid
