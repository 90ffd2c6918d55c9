#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "fedu/federation.hpp"

namespace fedu {

// Retained rounds 1, 1+dt, 1+2dt, ...; exactly floor(rounds / dt) entries.
std::vector<int> retention_schedule(int rounds, int interval);

// Identifies the training run a store belongs to.
struct StoreFingerprint {
  std::uint64_t arch_hash = 0;
  int clients = 0;
  int rounds = 0;
  int interval = 0;
  std::uint64_t seed = 0;

  static StoreFingerprint of(const FedConfig& config, const ArchSpec& arch);
  friend bool operator==(const StoreFingerprint&, const StoreFingerprint&) = default;
};

// On-disk store of client updates at retained rounds:
//   <root>/manifest.json
//   <root>/round_<t>/client_<k>.fesp   (ParamSet blob + CRC32)
// The manifest is replaced atomically after each committed round.
class RetentionStore {
 public:
  struct BlobEntry {
    int client = 0;
    std::size_t samples = 0;
    std::string file;  // relative to root
    std::uint32_t crc32 = 0;
    std::size_t bytes = 0;
  };

  // Starts an empty store at `root`, discarding any previous manifest.
  static RetentionStore create(const std::filesystem::path& root, const StoreFingerprint& fp);
  // Opens an existing store. Throws IntegrityError if the manifest is missing
  // or malformed.
  static RetentionStore open(const std::filesystem::path& root);

  RetentionStore(RetentionStore&& other) noexcept;
  RetentionStore& operator=(RetentionStore&& other) noexcept;

  const std::filesystem::path& root() const noexcept { return root_; }
  const StoreFingerprint& fingerprint() const noexcept { return fingerprint_; }
  // Throws IntegrityError unless the store was produced by this run.
  void require_fingerprint(const StoreFingerprint& expected) const;

  const std::vector<int>& schedule() const noexcept { return schedule_; }
  std::vector<int> committed_rounds() const;
  // Every scheduled round present with one entry per client.
  bool complete() const;
  void require_complete() const;

  // Requires `round` in the schedule and one update per client 1..K.
  // Rewrites the round if it was stored before.
  void store_round(int round, std::span<const ClientUpdate> updates);

  // All K updates sorted by client id.
  std::vector<ClientUpdate> load_round(int round) const;
  // Every client except `excluded`; the excluded client's blob is never read.
  std::vector<ClientUpdate> load_round_except(int round, int excluded) const;
  ClientUpdate load_client(int round, int client) const;

  std::size_t total_blob_bytes() const;

  // Called with (round, client) before each blob read. Readers may run
  // concurrently, so the observer must be thread-safe.
  void set_read_observer(std::function<void(int round, int client)> observer);

 private:
  RetentionStore() = default;
  void write_manifest() const;
  const BlobEntry& entry(int round, int client) const;

  std::filesystem::path root_;
  StoreFingerprint fingerprint_;
  std::vector<int> schedule_;
  std::map<int, std::vector<BlobEntry>> rounds_;
  std::function<void(int, int)> observer_;
};

}  // namespace fedu
