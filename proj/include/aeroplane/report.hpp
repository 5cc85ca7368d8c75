#pragma once

#include <json.hpp>

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aeroplane {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Flagged };

constexpr std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Flagged: return "flagged";
  }
  return "?";
}

struct Claim {
  std::string id;
  std::string locus;
  Status status = Status::Pass;
  Json witness = Json::object();
};

class Report {
 public:
  Claim& add(std::string id, std::string locus, Status status, Json witness = Json::object()) {
    claims_.push_back(Claim{std::move(id), std::move(locus), status, std::move(witness)});
    return claims_.back();
  }
  Claim& check(std::string id, std::string locus, bool ok, Json witness = Json::object()) {
    return add(std::move(id), std::move(locus), ok ? Status::Pass : Status::Fail, std::move(witness));
  }

  void append(const Report& other) {
    claims_.insert(claims_.end(), other.claims_.begin(), other.claims_.end());
  }
  void append(const Report& other, std::string_view prefix) {
    for (const auto& c : other.claims_) {
      claims_.push_back(c);
      claims_.back().id = std::string(prefix) + c.id;
    }
  }

  const std::vector<Claim>& claims() const noexcept { return claims_; }
  bool empty() const noexcept { return claims_.empty(); }

  std::size_t count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(claims_.begin(), claims_.end(), [s](const Claim& c) { return c.status == s; }));
  }

  /// Flagged claims count as failures only in strict mode.
  bool passed(bool strict = false) const {
    return count(Status::Fail) == 0 && (!strict || count(Status::Flagged) == 0);
  }

  const Claim* find(std::string_view id) const {
    for (const auto& c : claims_) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }

  Json claims_json() const {
    Json out = Json::array();
    for (const auto& c : claims_) {
      out.push_back(Json{{"id", c.id}, {"locus", c.locus}, {"status", to_string(c.status)}, {"witness", c.witness}});
    }
    return out;
  }

  std::string to_text() const {
    std::string out;
    for (const auto& c : claims_) {
      out += std::string(to_string(c.status)) + "  " + c.id;
      if (!c.locus.empty()) out += "  [" + c.locus + "]";
      out += '\n';
    }
    out += std::to_string(count(Status::Pass)) + " pass, " + std::to_string(count(Status::Fail)) + " fail, " +
           std::to_string(count(Status::Flagged)) + " flagged\n";
    return out;
  }

 private:
  std::vector<Claim> claims_;
};

}  // namespace aeroplane
