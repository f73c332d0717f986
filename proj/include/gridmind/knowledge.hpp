#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "gridmind/types.hpp"

namespace gridmind {

struct EpisodeRange {
  int first = 0;
  int last = 0;
  bool operator==(const EpisodeRange&) const = default;
};

// Versioned natural-language rule text. Version 0 is the empty tabula-rasa
// rulebook; later versions come from reflection commits and are immutable
// once written.
struct Rulebook {
  int version = 0;
  std::string text;
  EpisodeRange derived_from;
  std::string reasoning_trace;
  bool carried_forward = false;
};

// Versioned strategy text. Version 0 is the fixed general-purpose bootstrap.
struct Playbook {
  int version = 0;
  std::string text;
  EpisodeRange derived_from;
  std::string reasoning_trace;
  bool carried_forward = false;
};

struct KnowledgeSnapshot {
  Rulebook rulebook;
  Playbook playbook;
  std::string run_id;
  GameId game = GameId::minesweeper;
};

// Shipped verbatim; the playbook an agent starts with before any reflection.
extern const char* const kPlaybookBootstrap;

KnowledgeSnapshot init_tabula_rasa(GameId game, std::string run_id = "");

// True exactly when a reflection is due after episode_index (1-based).
bool should_reflect(int episode_index, int frequency);

// Append-only versioned store, one JSONL file per run. Human-auditable and
// diffable; no commit ever rewrites a prior version.
class KnowledgeStore {
 public:
  // Creates <dir>/knowledge.jsonl with the version-0 pair.
  static KnowledgeStore create(const std::filesystem::path& dir, GameId game,
                               const std::string& run_id);
  // Creates a store whose first committed version is an imported snapshot
  // (version 0 stays tabula rasa, version 1 carries the imported texts).
  static KnowledgeStore create_with_import(const std::filesystem::path& dir, GameId game,
                                           const std::string& run_id,
                                           const KnowledgeSnapshot& imported);
  static KnowledgeStore open(const std::filesystem::path& dir);

  KnowledgeSnapshot latest() const;
  KnowledgeSnapshot at_version(int version) const;  // throws not_found
  int latest_version() const;

  KnowledgeSnapshot commit(const KnowledgeSnapshot& prior, const std::string& rules_text,
                           const std::string& playbook_text, const std::string& rules_trace,
                           const std::string& playbook_trace, EpisodeRange derived_from,
                           bool rules_carried_forward = false,
                           bool playbook_carried_forward = false);

  GameId game() const { return game_; }
  const std::string& run_id() const { return run_id_; }
  const std::filesystem::path& file() const { return file_; }

 private:
  KnowledgeStore() = default;
  void append_pair(const Rulebook& rulebook, const Playbook& playbook);

  std::filesystem::path file_;
  GameId game_ = GameId::minesweeper;
  std::string run_id_;
};

// Portable single-snapshot files for kb export / kb import and cross-game
// transfer runs.
void export_snapshot(const KnowledgeSnapshot& snapshot, const std::filesystem::path& path);
KnowledgeSnapshot import_snapshot(const std::filesystem::path& path);

}  // namespace gridmind
