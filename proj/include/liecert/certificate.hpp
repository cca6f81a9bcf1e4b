#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "liecert/linalg.hpp"

namespace liecert {

enum class Verdict { pass, fail, not_applicable };

const char* to_string(Verdict v);

/// A named statement that was checked, with its outcome.
struct Claim {
  std::string name;
  bool holds = false;
  std::string detail;
};

/// A vector (one row) or matrix (several rows) offered as evidence.
struct Witness {
  std::string name;
  std::vector<Vec> rows;
};

/// Structured verdict of a verification operation.
///
/// The verdict is the conjunction of the claims, unless the operation's
/// hypotheses failed, in which case it is not_applicable and the claims are
/// informational.
struct Certificate {
  std::string subject;
  bool applicable = true;
  std::vector<Claim> claims;
  std::map<std::string, std::size_t> dims;
  std::map<std::string, bool> facts;
  std::vector<Witness> witnesses;

  void add_claim(std::string name, bool holds, std::string detail = {});
  bool all_claims_hold() const;
  Verdict verdict() const;
  const Claim* find_claim(const std::string& name) const;
  const Witness* find_witness(const std::string& name) const;
};

}  // namespace liecert
