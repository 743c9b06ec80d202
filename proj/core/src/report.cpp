#include "commalg/report.hpp"

#include <algorithm>
#include <sstream>

namespace commalg {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass:
      return "pass";
    case ClaimStatus::Fail:
      return "FAIL";
    case ClaimStatus::Implied:
      return "implied";
    case ClaimStatus::NotImplied:
      return "not-implied";
    case ClaimStatus::VerifiedToBound:
      return "verified-to-bound";
    case ClaimStatus::Info:
      return "info";
  }
  return "?";
}

void Claim::evaluate() {
  const bool has_expected = !expected.is_null();
  const bool agrees = !has_expected || expected == computed;
  switch (kind) {
    case ClaimKind::Check:
      status = has_expected && agrees ? ClaimStatus::Pass : ClaimStatus::Fail;
      break;
    case ClaimKind::Bounded:
      status = !has_expected ? ClaimStatus::Info : agrees ? ClaimStatus::VerifiedToBound : ClaimStatus::Fail;
      break;
    case ClaimKind::Implication:
      if (!agrees) {
        status = ClaimStatus::Fail;
      } else {
        status = computed.get<bool>() ? ClaimStatus::Implied : ClaimStatus::NotImplied;
      }
      break;
    case ClaimKind::Info:
      status = agrees ? (has_expected ? ClaimStatus::Pass : ClaimStatus::Info) : ClaimStatus::Fail;
      break;
  }
}

Claim& VerificationReport::add(Claim c) {
  c.evaluate();
  claims_.push_back(std::move(c));
  return claims_.back();
}

const Claim* VerificationReport::find(const std::string& id) const {
  auto it = std::find_if(claims_.begin(), claims_.end(), [&](const Claim& c) { return c.id == id; });
  return it == claims_.end() ? nullptr : &*it;
}

Claim& VerificationReport::check(std::string id, std::string anchor, nlohmann::json expected,
                                 nlohmann::json computed) {
  return add({std::move(id), std::move(anchor), ClaimKind::Check, std::move(expected), std::move(computed),
              std::nullopt, {}, ClaimStatus::Info});
}

Claim& VerificationReport::bounded(std::string id, std::string anchor, nlohmann::json expected,
                                   nlohmann::json computed, std::uint32_t bound) {
  return add({std::move(id), std::move(anchor), ClaimKind::Bounded, std::move(expected), std::move(computed), bound,
              {}, ClaimStatus::Info});
}

Claim& VerificationReport::verdict(std::string id, std::string anchor, Verdict v, std::optional<std::uint32_t> bound) {
  const bool value = v != Verdict::Fail;
  Claim c{std::move(id), std::move(anchor), ClaimKind::Check, nullptr, value, bound, {}, ClaimStatus::Info};
  if (v == Verdict::VerifiedToBound) c.kind = ClaimKind::Bounded;
  c.note = to_string(v);
  // A verdict is its own expectation until a registry says otherwise.
  c.expected = value;
  Claim& out = add(std::move(c));
  if (v == Verdict::Fail) out.status = ClaimStatus::Fail;
  return out;
}

Claim& VerificationReport::implication(std::string id, std::string anchor, bool hypotheses_hold, std::string note) {
  return add({std::move(id), std::move(anchor), ClaimKind::Implication, nullptr, hypotheses_hold, std::nullopt,
              std::move(note), ClaimStatus::Info});
}

Claim& VerificationReport::info(std::string id, std::string anchor, nlohmann::json computed) {
  return add({std::move(id), std::move(anchor), ClaimKind::Info, nullptr, std::move(computed), std::nullopt, {},
              ClaimStatus::Info});
}

std::vector<std::string> VerificationReport::apply_expected(const std::map<std::string, ExpectedEntry>& entries) {
  std::vector<std::string> unmatched;
  for (const auto& [id, entry] : entries) {
    auto it = std::find_if(claims_.begin(), claims_.end(), [&](const Claim& c) { return c.id == id; });
    if (it == claims_.end()) {
      unmatched.push_back(id);
      continue;
    }
    if (entry.anchor) it->anchor = *entry.anchor;
    if (!entry.value.is_null()) {
      it->expected = entry.value;
      it->evaluate();
    }
  }
  return unmatched;
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (Claim c : other.claims_) {
    c.id = prefix + c.id;
    claims_.push_back(std::move(c));
  }
}

bool VerificationReport::ok() const {
  return std::none_of(claims_.begin(), claims_.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; });
}

std::size_t VerificationReport::count(ClaimStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(claims_.begin(), claims_.end(), [&](const Claim& c) { return c.status == s; }));
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : claims_) {
    nlohmann::json j = {{"id", c.id},
                        {"anchor", c.anchor},
                        {"expected", c.expected},
                        {"computed", c.computed},
                        {"status", to_string(c.status)}};
    if (c.bound) j["bound"] = *c.bound;
    if (!c.note.empty()) j["note"] = c.note;
    claims.push_back(std::move(j));
  }
  nlohmann::json out = {{"schema_version", kReportSchemaVersion},
                        {"subject", subject_},
                        {"ok", ok()},
                        {"claims", std::move(claims)}};
  if (!meta_.empty()) out["meta"] = meta_;
  return out;
}

std::string VerificationReport::to_table() const {
  std::size_t wid = 5, wstat = 6;
  for (const auto& c : claims_) {
    wid = std::max(wid, c.id.size());
    wstat = std::max(wstat, to_string(c.status).size());
  }
  std::ostringstream os;
  os << "# " << subject_ << '\n';
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
  os << pad("claim", wid) << "  " << pad("status", wstat) << "  computed / expected  [anchor]\n";
  for (const auto& c : claims_) {
    os << pad(c.id, wid) << "  " << pad(to_string(c.status), wstat) << "  " << c.computed.dump();
    if (!c.expected.is_null() && c.expected != c.computed) os << " / " << c.expected.dump();
    if (c.bound) os << " (to degree " << *c.bound << ")";
    if (!c.anchor.empty()) os << "  [" << c.anchor << "]";
    os << '\n';
  }
  os << (ok() ? "OK" : "FAILED") << '\n';
  return os.str();
}

}  // namespace commalg
