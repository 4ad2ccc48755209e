#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mzva {

enum class Status { Proved, Refuted, Inconclusive };

std::string_view to_string(Status s);

// Ordered key/value list; order is preserved in machine-readable output.
using Fields = std::vector<std::pair<std::string, std::string>>;

// Three-valued answer to a radical or membership query.  A refutation always
// carries a witness; a proof names the argument it rests on ("structural" or
// "exhaustive") and may carry a certificate.
struct Verdict {
  Status status = Status::Inconclusive;
  std::string reason;
  Fields witness;
  Fields bounds;

  static Verdict proved(std::string reason, Fields certificate = {}, Fields bounds = {});
  static Verdict refuted(std::string reason, Fields witness, Fields bounds = {});
  static Verdict inconclusive(std::string reason, Fields bounds = {});

  std::optional<std::string> field(std::string_view key) const;
};

}  // namespace mzva
