#include "jjalg/report.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace jjalg {

Report &Report::add(std::string name, std::string verdict, std::string witness,
                    std::optional<bool> ok) {
  findings.push_back({std::move(name), std::move(verdict), std::move(witness), ok});
  return *this;
}

std::string Report::to_text() const {
  std::size_t wname = 0, wverdict = 0;
  for (const auto &f : findings) {
    wname = std::max(wname, f.name.size());
    wverdict = std::max(wverdict, f.verdict.size());
  }
  std::string out;
  for (const auto &f : findings) {
    std::string line;
    if (f.ok)
      line += *f.ok ? "[ok]   " : "[FAIL] ";
    line += f.name + std::string(wname - f.name.size(), ' ') + "  " + f.verdict;
    if (!f.witness.empty())
      line += std::string(wverdict - f.verdict.size(), ' ') + "  " + f.witness;
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    out += line + "\n";
  }
  for (const auto &n : notes)
    out += "note: " + n + "\n";
  if (!payload.empty()) {
    if (!out.empty())
      out += "\n";
    out += payload;
    if (payload.back() != '\n')
      out += "\n";
  }
  return out;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["status"] = static_cast<int>(status);
  auto arr = nlohmann::ordered_json::array();
  for (const auto &f : findings) {
    nlohmann::ordered_json o;
    o["name"] = f.name;
    o["verdict"] = f.verdict;
    if (!f.witness.empty())
      o["witness"] = f.witness;
    if (f.ok)
      o["ok"] = *f.ok;
    arr.push_back(std::move(o));
  }
  j["findings"] = std::move(arr);
  j["notes"] = notes;
  if (!payload.empty())
    j["payload"] = payload;
  return j.dump(2) + "\n";
}

Report Report::from_json(const std::string &text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw std::invalid_argument("unsupported report schema_version");
    Report r;
    r.command = j.at("command").get<std::string>();
    const int status = j.at("status").get<int>();
    if (status < 0 || status > 2)
      throw std::invalid_argument("report status out of range");
    r.status = static_cast<ExitStatus>(status);
    for (const auto &o : j.at("findings")) {
      Finding f{o.at("name").get<std::string>(), o.at("verdict").get<std::string>(),
                o.value("witness", std::string()), std::nullopt};
      if (o.contains("ok"))
        f.ok = o.at("ok").get<bool>();
      r.findings.push_back(std::move(f));
    }
    r.notes = j.value("notes", std::vector<std::string>{});
    r.payload = j.value("payload", std::string());
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

} // namespace jjalg
