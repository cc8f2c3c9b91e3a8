#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace switchcert {

/// Ordered list of labeled, dimensioned subsystems. Composite indices are
/// row-major over the layout order: the first system varies slowest.
class SpaceLayout {
 public:
  struct System {
    std::string label;
    int dim = 1;
  };

  SpaceLayout() = default;
  explicit SpaceLayout(std::vector<System> systems);

  static SpaceLayout single(const std::string& label, int dim) {
    return SpaceLayout({{label, dim}});
  }

  const std::vector<System>& systems() const { return systems_; }
  std::size_t size() const { return systems_.size(); }
  const System& at(std::size_t pos) const { return systems_.at(pos); }

  long total_dim() const { return total_dim_; }

  bool has(const std::string& label) const;
  /// Position of `label` in the layout; throws if absent.
  std::size_t position(const std::string& label) const;
  int dim_of(const std::string& label) const;

  std::vector<std::string> labels() const;

  /// Positions of the given labels, in layout order. Throws on unknown labels.
  std::vector<std::size_t> positions_of(const std::vector<std::string>& labels) const;

  /// Concatenation; label sets must be disjoint.
  static SpaceLayout concat(const SpaceLayout& a, const SpaceLayout& b);

  /// Layout with the given labels removed.
  SpaceLayout dropped(const std::vector<std::string>& labels) const;

  /// Layout reordered to `new_order`, which must be a permutation of labels().
  SpaceLayout permuted(const std::vector<std::string>& new_order) const;

  /// Row-major strides, one per system.
  std::vector<long> strides() const;

  bool same_systems(const SpaceLayout& other) const;

 private:
  std::vector<System> systems_;
  long total_dim_ = 1;
};

/// Precomputed index bookkeeping for a subset of systems: every composite
/// index splits as sub_offset[s] + rest_offset[r].
struct IndexSplit {
  long sub_total = 1;
  long rest_total = 1;
  std::vector<long> sub_offset;   // size sub_total
  std::vector<long> rest_offset;  // size rest_total
  std::vector<int> sub_dims;
  std::vector<int> rest_dims;

  IndexSplit(const SpaceLayout& layout, const std::vector<std::size_t>& sub_positions);
};

/// Lookup table mapping composite indices of `from` to composite indices of
/// the permuted layout `to` (same systems, new order): to_index[i_from].
std::vector<long> permutation_index_map(const SpaceLayout& from, const SpaceLayout& to);

}  // namespace switchcert
