#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "fxmpc/verify.hpp"

namespace fx {

bool Report::pass() const {
  for (auto& r : rows)
    if (!r.pass) return false;
  return !rows.empty();
}

void Report::append(const Report& other) { rows.insert(rows.end(), other.rows.begin(), other.rows.end()); }

std::string to_json(const Report& r, bool with_timing) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["seed"] = r.seed;
  j["lambda"] = r.lambda;
  j["transport"] = r.transport;
  j["verdict"] = r.pass() ? "PASS" : "FAIL";
  j["rows"] = ordered_json::array();
  for (auto& row : r.rows) {
    ordered_json o;
    o["suite"] = row.suite;
    o["name"] = row.name;
    o["params"] = row.params;
    o["source"] = row.source;
    if (row.measured) o["measured_bits"] = *row.measured;
    if (row.expected) o["expected_bits"] = *row.expected;
    if (row.bound) o["bound"] = *row.bound;
    if (row.ratio) o["ratio"] = *row.ratio;
    if (row.rounds) o["rounds"] = *row.rounds;
    if (row.max_ulp) o["max_ulp"] = *row.max_ulp;
    if (row.cases) o["cases"] = *row.cases;
    if (row.mismatches) o["mismatches"] = *row.mismatches;
    if (with_timing && row.seconds) o["seconds"] = *row.seconds;
    if (!row.note.empty()) o["note"] = row.note;
    o["pass"] = row.pass;
    j["rows"].push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

namespace {

template <class T>
std::string opt(const std::optional<T>& v, int prec = 0) {
  if (!v) return "-";
  std::ostringstream os;
  if constexpr (std::is_floating_point_v<T>)
    os << std::fixed << std::setprecision(prec) << *v;
  else
    os << *v;
  return os.str();
}

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream os;
  int pw = 26, nw = 22;
  for (auto& row : r.rows) {
    pw = std::max(pw, static_cast<int>(row.params.size()) + 2);
    nw = std::max(nw, static_cast<int>(row.name.size()) + 2);
  }
  os << "seed " << r.seed << "  lambda " << r.lambda << "  transport " << r.transport << "\n";
  os << std::left << std::setw(8) << "suite" << std::setw(nw) << "name" << std::setw(pw) << "params"
     << std::right << std::setw(11) << "measured" << std::setw(11) << "expected" << std::setw(11) << "bound"
     << std::setw(7) << "ratio" << std::setw(7) << "rounds" << std::setw(5) << "ulp" << std::setw(10) << "cases"
     << "  result\n";
  for (auto& row : r.rows) {
    os << std::left << std::setw(8) << row.suite << std::setw(nw) << row.name << std::setw(pw) << row.params
       << std::right << std::setw(11) << opt(row.measured) << std::setw(11) << opt(row.expected) << std::setw(11)
       << opt(row.bound, 0) << std::setw(7) << opt(row.ratio, 3) << std::setw(7) << opt(row.rounds) << std::setw(5)
       << opt(row.max_ulp) << std::setw(10) << opt(row.cases) << "  " << (row.pass ? "PASS" : "FAIL");
    if (row.mismatches && *row.mismatches) os << " (" << *row.mismatches << " mismatches)";
    if (!row.note.empty()) os << "  " << row.note;
    os << "\n";
  }
  os << "verdict: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace fx
