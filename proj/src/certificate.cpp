#include "liecert/certificate.hpp"

#include <algorithm>

namespace liecert {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "?";
}

void Certificate::add_claim(std::string name, bool holds, std::string detail) {
  claims.push_back({std::move(name), holds, std::move(detail)});
}

bool Certificate::all_claims_hold() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.holds; });
}

Verdict Certificate::verdict() const {
  if (!applicable) return Verdict::not_applicable;
  return all_claims_hold() ? Verdict::pass : Verdict::fail;
}

const Claim* Certificate::find_claim(const std::string& name) const {
  auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.name == name; });
  return it == claims.end() ? nullptr : &*it;
}

const Witness* Certificate::find_witness(const std::string& name) const {
  auto it = std::find_if(witnesses.begin(), witnesses.end(),
                         [&](const Witness& w) { return w.name == name; });
  return it == witnesses.end() ? nullptr : &*it;
}

}  // namespace liecert
