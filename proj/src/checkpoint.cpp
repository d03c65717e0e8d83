#include <filesystem>
#include <fstream>
#include <sstream>

#include "expdio/report_json.hpp"
#include "expdio/search.hpp"

namespace expdio {

void save_checkpoint(const std::string& path, const Checkpoint& checkpoint) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp);
    for (const auto& rec : checkpoint.records) {
      Json line;
      line["hash"] = checkpoint.hash;
      line["a"] = rec.a;
      line["b"] = rec.b;
      Json triples = Json::array();
      for (const auto& t : rec.triples) triples.push_back(to_json(t));
      line["triples"] = std::move(triples);
      line["failure"] = rec.failure ? Json(*rec.failure) : Json(nullptr);
      out << line.dump() << '\n';
    }
    Json summary;
    summary["hash"] = checkpoint.hash;
    summary["summary"] = true;
    summary["pairs"] = checkpoint.records.size();
    summary["complete"] = checkpoint.complete;
    out << summary.dump() << '\n';
    out.flush();
    if (!out) throw CheckpointError("failed writing checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

Checkpoint load_checkpoint(const std::string& path, const std::string& expected_hash) {
  std::ifstream in(path);
  if (!in) throw CheckpointCorrupt("cannot open checkpoint " + path);

  std::vector<Json> lines;
  std::string text;
  while (std::getline(in, text)) {
    if (text.empty()) continue;
    try {
      lines.push_back(Json::parse(text));
    } catch (const Json::exception& e) {
      throw CheckpointCorrupt("checkpoint " + path + ": unparsable line");
    }
  }
  if (lines.empty()) throw CheckpointCorrupt("checkpoint " + path + " is empty");

  Checkpoint cp;
  try {
    const Json& summary = lines.back();
    if (!summary.value("summary", false)) {
      throw CheckpointCorrupt("checkpoint " + path + " has no summary record");
    }
    cp.hash = summary.at("hash").get<std::string>();
    if (cp.hash != expected_hash) {
      throw CheckpointMismatch("checkpoint " + path +
                               " was written for a different search configuration");
    }
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
      const Json& line = lines[i];
      if (line.at("hash").get<std::string>() != cp.hash) {
        throw CheckpointMismatch("checkpoint " + path + " mixes configurations");
      }
      PairRecord rec;
      rec.a = line.at("a").get<unsigned long>();
      rec.b = line.at("b").get<unsigned long>();
      for (const auto& t : line.at("triples")) rec.triples.push_back(found_triple_from_json(t));
      if (!line.at("failure").is_null()) rec.failure = line.at("failure").get<std::string>();
      cp.records.push_back(std::move(rec));
    }
    if (summary.at("pairs").get<std::size_t>() != cp.records.size()) {
      throw CheckpointCorrupt("checkpoint " + path + ": record count mismatch");
    }
    cp.complete = summary.at("complete").get<bool>();
  } catch (const Json::exception& e) {
    throw CheckpointCorrupt("checkpoint " + path + ": " + e.what());
  } catch (const DomainError& e) {
    if (dynamic_cast<const CheckpointError*>(&e)) throw;
    throw CheckpointCorrupt("checkpoint " + path + ": " + e.what());
  }
  return cp;
}

}  // namespace expdio
