#include "switchcert/layout.hpp"

#include <algorithm>
#include <set>

namespace switchcert {

SpaceLayout::SpaceLayout(std::vector<System> systems) : systems_(std::move(systems)) {
  std::set<std::string> seen;
  total_dim_ = 1;
  for (const auto& s : systems_) {
    if (s.dim <= 0) throw std::invalid_argument("SpaceLayout: nonpositive dimension for '" + s.label + "'");
    if (!seen.insert(s.label).second)
      throw std::invalid_argument("SpaceLayout: duplicate label '" + s.label + "'");
    total_dim_ *= s.dim;
  }
}

bool SpaceLayout::has(const std::string& label) const {
  return std::any_of(systems_.begin(), systems_.end(),
                     [&](const System& s) { return s.label == label; });
}

std::size_t SpaceLayout::position(const std::string& label) const {
  for (std::size_t i = 0; i < systems_.size(); ++i)
    if (systems_[i].label == label) return i;
  throw std::invalid_argument("SpaceLayout: unknown label '" + label + "'");
}

int SpaceLayout::dim_of(const std::string& label) const { return systems_[position(label)].dim; }

std::vector<std::string> SpaceLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(systems_.size());
  for (const auto& s : systems_) out.push_back(s.label);
  return out;
}

std::vector<std::size_t> SpaceLayout::positions_of(const std::vector<std::string>& labels) const {
  std::vector<std::size_t> pos;
  pos.reserve(labels.size());
  for (const auto& l : labels) pos.push_back(position(l));
  std::sort(pos.begin(), pos.end());
  pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
  return pos;
}

SpaceLayout SpaceLayout::concat(const SpaceLayout& a, const SpaceLayout& b) {
  std::vector<System> sys = a.systems_;
  for (const auto& s : b.systems_) {
    if (a.has(s.label))
      throw std::invalid_argument("SpaceLayout::concat: duplicate label '" + s.label + "'");
    sys.push_back(s);
  }
  return SpaceLayout(std::move(sys));
}

SpaceLayout SpaceLayout::dropped(const std::vector<std::string>& labels) const {
  auto pos = positions_of(labels);
  std::vector<System> sys;
  std::size_t k = 0;
  for (std::size_t i = 0; i < systems_.size(); ++i) {
    if (k < pos.size() && pos[k] == i) {
      ++k;
      continue;
    }
    sys.push_back(systems_[i]);
  }
  return SpaceLayout(std::move(sys));
}

SpaceLayout SpaceLayout::permuted(const std::vector<std::string>& new_order) const {
  if (new_order.size() != systems_.size())
    throw std::invalid_argument("SpaceLayout::permuted: not a permutation (size mismatch)");
  std::vector<System> sys;
  std::set<std::string> seen;
  for (const auto& l : new_order) {
    if (!seen.insert(l).second)
      throw std::invalid_argument("SpaceLayout::permuted: repeated label '" + l + "'");
    sys.push_back(systems_[position(l)]);
  }
  return SpaceLayout(std::move(sys));
}

std::vector<long> SpaceLayout::strides() const {
  std::vector<long> st(systems_.size(), 1);
  for (int i = static_cast<int>(systems_.size()) - 2; i >= 0; --i)
    st[i] = st[i + 1] * systems_[i + 1].dim;
  return st;
}

bool SpaceLayout::same_systems(const SpaceLayout& other) const {
  if (systems_.size() != other.systems_.size()) return false;
  for (std::size_t i = 0; i < systems_.size(); ++i)
    if (systems_[i].label != other.systems_[i].label || systems_[i].dim != other.systems_[i].dim)
      return false;
  return true;
}

IndexSplit::IndexSplit(const SpaceLayout& layout, const std::vector<std::size_t>& sub_positions) {
  auto strides = layout.strides();
  std::vector<bool> in_sub(layout.size(), false);
  for (auto p : sub_positions) {
    if (p >= layout.size()) throw std::out_of_range("IndexSplit: bad position");
    in_sub[p] = true;
  }
  std::vector<long> sub_strides, rest_strides;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (in_sub[i]) {
      sub_dims.push_back(layout.at(i).dim);
      sub_strides.push_back(strides[i]);
      sub_total *= layout.at(i).dim;
    } else {
      rest_dims.push_back(layout.at(i).dim);
      rest_strides.push_back(strides[i]);
      rest_total *= layout.at(i).dim;
    }
  }
  auto build = [](const std::vector<int>& dims, const std::vector<long>& strides, long total) {
    std::vector<long> off(total, 0);
    for (long idx = 0; idx < total; ++idx) {
      long rem = idx, o = 0;
      for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
        o += (rem % dims[i]) * strides[i];
        rem /= dims[i];
      }
      off[idx] = o;
    }
    return off;
  };
  sub_offset = build(sub_dims, sub_strides, sub_total);
  rest_offset = build(rest_dims, rest_strides, rest_total);
}

std::vector<long> permutation_index_map(const SpaceLayout& from, const SpaceLayout& to) {
  if (from.size() != to.size() || from.total_dim() != to.total_dim())
    throw std::invalid_argument("permutation_index_map: layouts are not permutations of each other");
  auto from_strides = from.strides();
  // stride in `to` of each `from` system
  std::vector<long> to_stride_of_from(from.size());
  auto to_strides = to.strides();
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto p = to.position(from.at(i).label);
    if (to.at(p).dim != from.at(i).dim)
      throw std::invalid_argument("permutation_index_map: dimension mismatch on '" + from.at(i).label + "'");
    to_stride_of_from[i] = to_strides[p];
  }
  std::vector<long> map(from.total_dim());
  for (long idx = 0; idx < from.total_dim(); ++idx) {
    long rem = idx, out = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
      long digit = rem / from_strides[i];
      rem %= from_strides[i];
      out += digit * to_stride_of_from[i];
    }
    map[idx] = out;
  }
  return map;
}

}  // namespace switchcert
