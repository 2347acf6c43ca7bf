#include "hpineq/harness/report.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>

namespace hpineq::harness {

void TrialReport::record_margin(double margin, double scale) {
  const double scaled = margin / std::max(1.0, scale);
  min_margin = min_margin ? std::min(*min_margin, margin) : margin;
  min_scaled_margin = min_scaled_margin ? std::min(*min_scaled_margin, scaled) : scaled;
  ++evaluations;
}

nlohmann::ordered_json to_json(const TrialReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = r.command;
  j["family"] = r.family;
  j["params"] = r.params;
  j["trials"] = r.trials;
  j["evaluations"] = r.evaluations;
  j["seed"] = r.seed;
  j["toleranceUsed"] = r.tolerance;
  j["minMargin"] = r.min_margin ? ordered_json(*r.min_margin) : ordered_json(nullptr);
  j["minScaledMargin"] =
      r.min_scaled_margin ? ordered_json(*r.min_scaled_margin) : ordered_json(nullptr);
  j["equalityCases"] = r.equality_cases;
  ordered_json vs = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json e;
    e["trial"] = v.trial;
    e["seed"] = v.seed;
    e["inputsDigest"] = v.inputs_digest;
    e[v.metric] = v.value;
    e["scale"] = v.scale;
    if (!v.detail.empty()) e["detail"] = v.detail;
    if (v.inputs) e["inputs"] = *v.inputs;
    vs.push_back(std::move(e));
  }
  j["violations"] = std::move(vs);
  j["interpretationFlags"] = r.interpretation_flags;
  j["runtimeMs"] = r.runtime_ms;
  return j;
}

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Leaves are written with the JSON serializer's number formatting, so the
// two report forms carry the same numeric text.
void flatten_into(const nlohmann::ordered_json& j, const std::string& path, std::string& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) flatten_into(value, path + "/" + key, out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten_into(j[i], path + "/" + std::to_string(i), out);
  } else {
    out += csv_field(path) + "," + csv_field(j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::string to_csv(const TrialReport& r) {
  std::string out = "key,value\n";
  flatten_into(to_json(r), "", out);
  return out;
}

std::string render(const TrialReport& r, ReportFormat format) {
  return format == ReportFormat::kJson ? to_json(r).dump(2) + "\n" : to_csv(r);
}

std::string digest(const std::vector<double>& values) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double v : values) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof v);
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace hpineq::harness
