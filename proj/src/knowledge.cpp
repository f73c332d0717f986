#include "gridmind/knowledge.hpp"

#include <fstream>
#include <map>

#include "json.hpp"

namespace gridmind {

using nlohmann::json;

const char* const kPlaybookBootstrap =
    "You have no strategy notes yet. Play carefully: prefer actions whose outcomes "
    "you can predict, avoid repeating actions that previously led to failure, and "
    "use every new observation to narrow down how the environment works. Balance "
    "trying informative actions against protecting your progress toward the objective.";

KnowledgeSnapshot init_tabula_rasa(GameId game, std::string run_id) {
  KnowledgeSnapshot snapshot;
  snapshot.game = game;
  snapshot.run_id = std::move(run_id);
  snapshot.rulebook.version = 0;
  snapshot.rulebook.text = "";
  snapshot.playbook.version = 0;
  snapshot.playbook.text = kPlaybookBootstrap;
  return snapshot;
}

bool should_reflect(int episode_index, int frequency) {
  if (episode_index < 1 || frequency < 1) {
    throw Error(ErrorCode::invalid_argument,
                "should_reflect: episode_index and frequency must be >= 1");
  }
  return episode_index % frequency == 0;
}

namespace {

json entry_to_json(const char* kind, int version, const std::string& text,
                   EpisodeRange range, const std::string& trace, bool carried) {
  return json{{"kind", kind},
              {"version", version},
              {"text", text},
              {"derived_from", {range.first, range.last}},
              {"trace", trace},
              {"carried_forward", carried}};
}

void append_line(const std::filesystem::path& file, const json& line) {
  std::ofstream out(file, std::ios::app);
  if (!out) {
    throw Error(ErrorCode::storage_failure, "knowledge store: cannot append to " + file.string());
  }
  out << line.dump() << "\n";
}

}  // namespace

KnowledgeStore KnowledgeStore::create(const std::filesystem::path& dir, GameId game,
                                      const std::string& run_id) {
  std::filesystem::create_directories(dir);
  KnowledgeStore store;
  store.file_ = dir / "knowledge.jsonl";
  store.game_ = game;
  store.run_id_ = run_id;
  if (std::filesystem::exists(store.file_)) {
    throw Error(ErrorCode::storage_failure,
                "knowledge store: refusing to overwrite " + store.file_.string());
  }
  append_line(store.file_, json{{"kind", "meta"}, {"game", to_string(game)}, {"run_id", run_id}});
  KnowledgeSnapshot v0 = init_tabula_rasa(game, run_id);
  store.append_pair(v0.rulebook, v0.playbook);
  return store;
}

KnowledgeStore KnowledgeStore::create_with_import(const std::filesystem::path& dir, GameId game,
                                                  const std::string& run_id,
                                                  const KnowledgeSnapshot& imported) {
  KnowledgeStore store = create(dir, game, run_id);
  Rulebook rulebook;
  rulebook.version = 1;
  rulebook.text = imported.rulebook.text;
  rulebook.derived_from = imported.rulebook.derived_from;
  rulebook.reasoning_trace = "imported from run " + imported.run_id;
  Playbook playbook;
  playbook.version = 1;
  playbook.text = imported.playbook.text;
  playbook.derived_from = imported.playbook.derived_from;
  playbook.reasoning_trace = "imported from run " + imported.run_id;
  store.append_pair(rulebook, playbook);
  return store;
}

KnowledgeStore KnowledgeStore::open(const std::filesystem::path& dir) {
  KnowledgeStore store;
  store.file_ = dir / "knowledge.jsonl";
  std::ifstream in(store.file_);
  if (!in) {
    throw Error(ErrorCode::not_found, "knowledge store: no store at " + store.file_.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::corrupt_store, "knowledge store: empty file " + store.file_.string());
  }
  json meta;
  try {
    meta = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::corrupt_store, std::string("knowledge store: bad meta line: ") + e.what());
  }
  if (meta.value("kind", "") != "meta") {
    throw Error(ErrorCode::corrupt_store, "knowledge store: first line is not a meta line");
  }
  auto game = game_from_string(meta.value("game", ""));
  if (!game) throw Error(ErrorCode::corrupt_store, "knowledge store: unknown game in meta");
  store.game_ = *game;
  store.run_id_ = meta.value("run_id", "");
  return store;
}

void KnowledgeStore::append_pair(const Rulebook& rulebook, const Playbook& playbook) {
  append_line(file_, entry_to_json("rulebook", rulebook.version, rulebook.text,
                                   rulebook.derived_from, rulebook.reasoning_trace,
                                   rulebook.carried_forward));
  append_line(file_, entry_to_json("playbook", playbook.version, playbook.text,
                                   playbook.derived_from, playbook.reasoning_trace,
                                   playbook.carried_forward));
}

namespace {

struct StoreScan {
  std::map<int, Rulebook> rulebooks;
  std::map<int, Playbook> playbooks;
};

StoreScan scan_store(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::not_found, "knowledge store: no store at " + file.string());
  StoreScan scan;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json entry;
    try {
      entry = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::corrupt_store, "knowledge store: line " + std::to_string(line_no) +
                                                ": " + e.what());
    }
    const std::string kind = entry.value("kind", "");
    if (kind == "meta") continue;
    if (kind != "rulebook" && kind != "playbook") {
      throw Error(ErrorCode::corrupt_store,
                  "knowledge store: line " + std::to_string(line_no) + ": unknown kind " + kind);
    }
    int version = entry.at("version").get<int>();
    EpisodeRange range;
    if (entry.contains("derived_from") && entry["derived_from"].is_array() &&
        entry["derived_from"].size() == 2) {
      range.first = entry["derived_from"][0].get<int>();
      range.last = entry["derived_from"][1].get<int>();
    }
    if (kind == "rulebook") {
      if (scan.rulebooks.count(version)) {
        throw Error(ErrorCode::corrupt_store,
                    "knowledge store: duplicate rulebook version " + std::to_string(version));
      }
      Rulebook r;
      r.version = version;
      r.text = entry.at("text").get<std::string>();
      r.derived_from = range;
      r.reasoning_trace = entry.value("trace", "");
      r.carried_forward = entry.value("carried_forward", false);
      scan.rulebooks[version] = std::move(r);
    } else {
      if (scan.playbooks.count(version)) {
        throw Error(ErrorCode::corrupt_store,
                    "knowledge store: duplicate playbook version " + std::to_string(version));
      }
      Playbook p;
      p.version = version;
      p.text = entry.at("text").get<std::string>();
      p.derived_from = range;
      p.reasoning_trace = entry.value("trace", "");
      p.carried_forward = entry.value("carried_forward", false);
      scan.playbooks[version] = std::move(p);
    }
  }
  if (scan.rulebooks.empty() || scan.playbooks.empty()) {
    throw Error(ErrorCode::corrupt_store, "knowledge store: missing version-0 entries");
  }
  return scan;
}

}  // namespace

KnowledgeSnapshot KnowledgeStore::latest() const {
  StoreScan scan = scan_store(file_);
  KnowledgeSnapshot snapshot;
  snapshot.game = game_;
  snapshot.run_id = run_id_;
  snapshot.rulebook = scan.rulebooks.rbegin()->second;
  snapshot.playbook = scan.playbooks.rbegin()->second;
  return snapshot;
}

KnowledgeSnapshot KnowledgeStore::at_version(int version) const {
  StoreScan scan = scan_store(file_);
  auto rb = scan.rulebooks.find(version);
  auto pb = scan.playbooks.find(version);
  if (rb == scan.rulebooks.end() || pb == scan.playbooks.end()) {
    throw Error(ErrorCode::not_found,
                "knowledge store: no version " + std::to_string(version));
  }
  KnowledgeSnapshot snapshot;
  snapshot.game = game_;
  snapshot.run_id = run_id_;
  snapshot.rulebook = rb->second;
  snapshot.playbook = pb->second;
  return snapshot;
}

int KnowledgeStore::latest_version() const {
  StoreScan scan = scan_store(file_);
  return scan.rulebooks.rbegin()->first;
}

KnowledgeSnapshot KnowledgeStore::commit(const KnowledgeSnapshot& prior,
                                         const std::string& rules_text,
                                         const std::string& playbook_text,
                                         const std::string& rules_trace,
                                         const std::string& playbook_trace,
                                         EpisodeRange derived_from, bool rules_carried_forward,
                                         bool playbook_carried_forward) {
  KnowledgeSnapshot next = prior;
  next.rulebook.version = prior.rulebook.version + 1;
  next.rulebook.text = rules_text;
  next.rulebook.derived_from = derived_from;
  next.rulebook.reasoning_trace = rules_trace;
  next.rulebook.carried_forward = rules_carried_forward;
  next.playbook.version = prior.playbook.version + 1;
  next.playbook.text = playbook_text;
  next.playbook.derived_from = derived_from;
  next.playbook.reasoning_trace = playbook_trace;
  next.playbook.carried_forward = playbook_carried_forward;
  append_pair(next.rulebook, next.playbook);
  return next;
}

void export_snapshot(const KnowledgeSnapshot& snapshot, const std::filesystem::path& path) {
  json out{{"game", to_string(snapshot.game)},
           {"run_id", snapshot.run_id},
           {"rulebook",
            {{"version", snapshot.rulebook.version},
             {"text", snapshot.rulebook.text},
             {"derived_from", {snapshot.rulebook.derived_from.first,
                               snapshot.rulebook.derived_from.last}}}},
           {"playbook",
            {{"version", snapshot.playbook.version},
             {"text", snapshot.playbook.text},
             {"derived_from", {snapshot.playbook.derived_from.first,
                               snapshot.playbook.derived_from.last}}}}};
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::io, "export_snapshot: cannot write " + path.string());
  file << out.dump(2) << "\n";
}

KnowledgeSnapshot import_snapshot(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw Error(ErrorCode::not_found, "import_snapshot: no file " + path.string());
  json in;
  try {
    file >> in;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::corrupt_store, std::string("import_snapshot: bad JSON: ") + e.what());
  }
  KnowledgeSnapshot snapshot;
  auto game = game_from_string(in.value("game", ""));
  if (!game) throw Error(ErrorCode::corrupt_store, "import_snapshot: unknown game");
  snapshot.game = *game;
  snapshot.run_id = in.value("run_id", "");
  snapshot.rulebook.version = in.at("rulebook").at("version").get<int>();
  snapshot.rulebook.text = in.at("rulebook").at("text").get<std::string>();
  snapshot.playbook.version = in.at("playbook").at("version").get<int>();
  snapshot.playbook.text = in.at("playbook").at("text").get<std::string>();
  return snapshot;
}

}  // namespace gridmind
