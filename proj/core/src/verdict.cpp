#include "mzva/verdict.hpp"

#include <stdexcept>

namespace mzva {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Proved: return "Proved";
    case Status::Refuted: return "Refuted";
    case Status::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Verdict Verdict::proved(std::string reason, Fields certificate, Fields bounds) {
  return Verdict{Status::Proved, std::move(reason), std::move(certificate), std::move(bounds)};
}

Verdict Verdict::refuted(std::string reason, Fields witness, Fields bounds) {
  if (witness.empty()) throw std::logic_error("a refutation needs a witness");
  return Verdict{Status::Refuted, std::move(reason), std::move(witness), std::move(bounds)};
}

Verdict Verdict::inconclusive(std::string reason, Fields bounds) {
  return Verdict{Status::Inconclusive, std::move(reason), {}, std::move(bounds)};
}

std::optional<std::string> Verdict::field(std::string_view key) const {
  for (const auto& [k, v] : witness)
    if (k == key) return v;
  for (const auto& [k, v] : bounds)
    if (k == key) return v;
  return std::nullopt;
}

}  // namespace mzva
