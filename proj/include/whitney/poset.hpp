#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace whitney {

class PosetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Finite poset stored as an element list plus an irredundant cover list.
/// Construction validates acyclicity (a witness cycle is reported) and
/// silently removes transitively implied covers; internal indices follow
/// the element list order.
class Poset {
  public:
    using Cover = std::pair<int, int>;  // (lower, upper) element indices

    Poset() = default;

    static Poset from_covers(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& covers);

    std::size_t size() const { return elements_.size(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<Cover>& covers() const { return covers_; }
    const std::string& element_name(int i) const { return elements_.at(static_cast<std::size_t>(i)); }

    /// Index of a named element, -1 when absent.
    int index_of(const std::string& name) const;
    bool contains(const std::string& name) const { return index_of(name) >= 0; }

    /// Strict order comparison from the transitive closure of the covers.
    bool less(int lower, int upper) const;

    bool is_minimal(int i) const;
    std::vector<int> minimal_element_indices() const;
    std::vector<std::string> minimal_elements() const;

    /// Induced subposet on the kept indices: the order relation is
    /// restricted and covers are recomputed as its transitive reduction.
    Poset induced(const std::vector<int>& keep) const;

    /// Induced subposet on everything except the named element.
    Poset delete_element(const std::string& name) const;

    /// Length of the longest chain strictly below each element; 0 for
    /// minimal elements. Used for diagram layout.
    std::vector<int> heights() const;

  private:
    std::vector<std::vector<bool>> closure() const;

    std::vector<std::string> elements_;
    std::vector<Cover> covers_;
    std::vector<std::vector<int>> lower_covers_;  // lower_covers_[i]: all j with j covered-by i
    std::vector<std::vector<int>> upper_covers_;  // upper_covers_[i]: all j covering i
};

}  // namespace whitney
