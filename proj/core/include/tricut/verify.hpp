#pragma once

#include <string_view>

#include "tricut/hypertree.hpp"

namespace tricut {

// Result of one structural check: how many instances of its hypothesis were
// found in the graph and how many violated the claimed conclusion. The
// lemma field names the check; witnesses hold a few violating instances.
struct LemmaCheck {
  std::string lemma;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;

  friend bool operator==(const LemmaCheck&, const LemmaCheck&) = default;
};

struct VerificationReport {
  std::vector<LemmaCheck> checks;  // sorted by lemma id

  std::size_t violation_count() const;
  std::size_t instance_count() const;
  bool ok() const { return violation_count() == 0; }
  const LemmaCheck* find(std::string_view lemma) const;
};

// Runs every structural invariant over all applicable instances in g.
// PreconditionError unless g is triconnected with more than 6 vertices.
VerificationReport verify_graph(const Graph& g);

}  // namespace tricut
