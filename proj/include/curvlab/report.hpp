#pragma once

// Structured result of a claim check, with JSON and markdown renderings.

#include <nlohmann/json.hpp>

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "curvlab/model_space.hpp"

namespace curvlab {

struct SpaceDescriptor {
  std::size_t n = 0;
  std::string kind = "none";
  std::size_t p = 0, q = 0;
  std::vector<int> eps;

  std::string label() const {
    std::ostringstream os;
    os << "n=" << n << ", " << kind << ", sig " << p << "," << q;
    return os.str();
  }
};

template <class F>
SpaceDescriptor describe(const ModelSpace<F>& s) {
  const auto sig = s.signature();
  return {s.n, to_string(s.kind), sig.p, sig.q, s.eps};
}

struct VerificationReport {
  std::string claim;
  SpaceDescriptor space;
  std::string mode = "exact";
  nlohmann::ordered_json quantities = nlohmann::ordered_json::object();
  bool pass = false;
  // the claim is a documented counterexample and passing means it was exhibited
  bool expected_failure = false;
  std::vector<nlohmann::ordered_json> witnesses;  // {"name", "shape", "data"}
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["claim"] = claim;
    j["space"] = {{"n", space.n}, {"kind", space.kind}, {"sig", {space.p, space.q}}, {"eps", space.eps}};
    j["mode"] = mode;
    j["index_base"] = 0;
    j["quantities"] = quantities;
    j["verdict"] = pass ? "pass" : "fail";
    j["expected_failure"] = expected_failure;
    j["witnesses"] = witnesses;
    j["notes"] = notes;
    return j;
  }

  std::string to_markdown() const {
    std::ostringstream os;
    os << "### " << claim << " (" << space.label() << ", " << mode << ")\n\n";
    os << "| quantity | value |\n|---|---|\n";
    std::vector<std::string> tables;
    for (const auto& [k, v] : quantities.items()) {
      if (v.is_array() && !v.empty() && v.front().is_object()) {
        os << "| " << k << " | (table below) |\n";
        tables.push_back(k);
        continue;
      }
      os << "| " << k << " | " << (v.is_string() ? v.get<std::string>() : v.dump()) << " |\n";
    }
    for (const auto& k : tables) {
      const auto& rows = quantities.at(k);
      os << "\n" << k << ":\n\n|";
      for (const auto& [col, _] : rows.front().items()) os << " " << col << " |";
      os << "\n|";
      for (std::size_t i = 0; i < rows.front().size(); ++i) os << "---|";
      os << "\n";
      for (const auto& row : rows) {
        os << "|";
        for (const auto& [col, cell] : row.items()) os << " " << (cell.is_string() ? cell.get<std::string>() : cell.dump()) << " |";
        os << "\n";
      }
    }
    os << "\nverdict: **" << (pass ? "pass" : "fail") << "**";
    if (expected_failure) os << " (counterexample exhibited as expected)";
    os << "\n";
    for (const auto& w : witnesses) os << "\nwitness `" << w.value("name", std::string("tensor")) << "` (" << w.at("data").size() << " components, 0-based, see JSON output)\n";
    for (const auto& n : notes) os << "\n- " << n;
    if (!notes.empty()) os << "\n";
    return os.str();
  }
};

}  // namespace curvlab
