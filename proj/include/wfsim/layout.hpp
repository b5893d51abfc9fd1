#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wfsim/errors.hpp"

namespace wfsim {

struct Subsystem {
  std::string label;
  std::size_t dim;
};

// Ordered, labeled subsystems. The canonical protocol labels are "a", "t",
// "m", "e" (qubits) and "A" (the observer's memory, dim >= 2). Flat indices
// are row-major in layout order.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Subsystem> subsystems);

  std::size_t count() const { return subs_.size(); }
  const Subsystem& at(std::size_t i) const { return subs_[i]; }
  const std::vector<Subsystem>& subsystems() const { return subs_; }

  std::size_t total_dim() const;
  bool has(const std::string& label) const;
  std::size_t index_of(const std::string& label) const;  // throws input_error

  // stride of subsystem i in the flat index (product of later dims)
  std::size_t stride(std::size_t i) const;

  // Decompose a flat index into per-subsystem digits and back.
  std::vector<std::size_t> digits(std::size_t flat) const;
  std::size_t flat(const std::vector<std::size_t>& digits) const;

  bool operator==(const SubsystemLayout& o) const;

 private:
  std::vector<Subsystem> subs_;
};

// Two-block partition of (a subset of) a layout's labels.
struct Bipartition {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

// Parses "aA|t"-style strings: one '|', each side a concatenation of layout
// labels matched greedily (longest label first). Throws input_error naming
// the offending fragment when a side contains an unknown label, a label
// repeats, or a side is empty.
Bipartition parse_bipartition(const std::string& text,
                              const SubsystemLayout& layout);

std::string format_bipartition(const Bipartition& bip);

}  // namespace wfsim
