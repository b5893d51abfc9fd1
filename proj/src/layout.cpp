#include "wfsim/layout.hpp"

#include <algorithm>
#include <set>

namespace wfsim {

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> subsystems)
    : subs_(std::move(subsystems)) {
  if (subs_.empty()) throw input_error("layout: no subsystems");
  std::set<std::string> seen;
  for (const auto& s : subs_) {
    if (s.label.empty()) throw input_error("layout: empty label");
    if (s.dim < 2)
      throw input_error("layout: subsystem '" + s.label +
                        "' has dimension < 2");
    if (!seen.insert(s.label).second)
      throw input_error("layout: duplicate label '" + s.label + "'");
  }
}

std::size_t SubsystemLayout::total_dim() const {
  std::size_t d = 1;
  for (const auto& s : subs_) d *= s.dim;
  return d;
}

bool SubsystemLayout::has(const std::string& label) const {
  return std::any_of(subs_.begin(), subs_.end(),
                     [&](const Subsystem& s) { return s.label == label; });
}

std::size_t SubsystemLayout::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i].label == label) return i;
  throw input_error("layout: unknown label '" + label + "'");
}

std::size_t SubsystemLayout::stride(std::size_t i) const {
  std::size_t s = 1;
  for (std::size_t j = i + 1; j < subs_.size(); ++j) s *= subs_[j].dim;
  return s;
}

std::vector<std::size_t> SubsystemLayout::digits(std::size_t flat) const {
  std::vector<std::size_t> d(subs_.size());
  for (std::size_t i = subs_.size(); i-- > 0;) {
    d[i] = flat % subs_[i].dim;
    flat /= subs_[i].dim;
  }
  return d;
}

std::size_t SubsystemLayout::flat(const std::vector<std::size_t>& digits) const {
  std::size_t f = 0;
  for (std::size_t i = 0; i < subs_.size(); ++i)
    f = f * subs_[i].dim + digits[i];
  return f;
}

bool SubsystemLayout::operator==(const SubsystemLayout& o) const {
  if (subs_.size() != o.subs_.size()) return false;
  for (std::size_t i = 0; i < subs_.size(); ++i)
    if (subs_[i].label != o.subs_[i].label || subs_[i].dim != o.subs_[i].dim)
      return false;
  return true;
}

namespace {

// Greedy longest-label matching of one side of "aA|t".
std::vector<std::string> parse_side(const std::string& side,
                                    const SubsystemLayout& layout,
                                    const std::string& whole) {
  std::vector<std::string> labels;
  std::size_t pos = 0;
  while (pos < side.size()) {
    std::string best;
    for (const auto& s : layout.subsystems()) {
      if (side.compare(pos, s.label.size(), s.label) == 0 &&
          s.label.size() > best.size())
        best = s.label;
    }
    if (best.empty())
      throw input_error("bipartition '" + whole + "': unknown label at '" +
                        side.substr(pos) + "'");
    if (std::find(labels.begin(), labels.end(), best) != labels.end())
      throw input_error("bipartition '" + whole + "': label '" + best +
                        "' repeats");
    labels.push_back(best);
    pos += best.size();
  }
  if (labels.empty())
    throw input_error("bipartition '" + whole + "': empty side");
  return labels;
}

}  // namespace

Bipartition parse_bipartition(const std::string& text,
                              const SubsystemLayout& layout) {
  const auto bar = text.find('|');
  if (bar == std::string::npos || text.find('|', bar + 1) != std::string::npos)
    throw input_error("bipartition '" + text + "': expected exactly one '|'");
  Bipartition bip;
  bip.left = parse_side(text.substr(0, bar), layout, text);
  bip.right = parse_side(text.substr(bar + 1), layout, text);
  for (const auto& l : bip.left)
    if (std::find(bip.right.begin(), bip.right.end(), l) != bip.right.end())
      throw input_error("bipartition '" + text + "': label '" + l +
                        "' on both sides");
  return bip;
}

std::string format_bipartition(const Bipartition& bip) {
  std::string out;
  for (const auto& l : bip.left) out += l;
  out += '|';
  for (const auto& l : bip.right) out += l;
  return out;
}

}  // namespace wfsim
