#ifndef GAMECOL_CACHE_HPP
#define GAMECOL_CACHE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace gamecol {

/// Append-only table (graph key, invariant name, parameter string) -> value,
/// persisted as one tab-separated line per entry. Entries are immutable once
/// written: re-putting an equal value is a no-op, a conflicting re-put throws
/// (it signals a nondeterminism bug). Files merge by concatenation; loading
/// runs the same conflict audit.
///
/// Keying convention: isomorphism-invariant values (chi, chi_g, chi_gb, m)
/// are stored under the canonical graph6 key; parameterized values (marked
/// classes, prefixes) are stored under the labelled graph6 of the instance,
/// since their parameters name vertices of that labelling.
class InvariantCache {
  public:
    std::optional<std::string> get(const std::string& graph6, const std::string& invariant,
                                   const std::string& params) const;

    void put(const std::string& graph6, const std::string& invariant,
             const std::string& params, const std::string& value);

    /// Parses `text` as cache lines and inserts them. Throws on malformed
    /// lines or value conflicts.
    void load(const std::string& text);

    /// Loads from a file if it exists; returns false when absent.
    bool load_file(const std::string& path);

    /// All entries, one line each, sorted by key (deterministic).
    std::string dump() const;

    void save_file(const std::string& path) const;

    /// Inserts every entry of `other`, auditing conflicts.
    void merge_from(const InvariantCache& other);

    std::size_t size() const { return entries_.size(); }

  private:
    // key = graph6 \t invariant \t params
    std::map<std::string, std::string> entries_;
};

/// Read-through view used by parallel workers: reads consult the private
/// shard first and then the shared base (never written during a run); writes
/// go to the shard only. Shards are merged into the base afterwards.
class CacheShard {
  public:
    explicit CacheShard(const InvariantCache* base) : base_(base) {}

    std::optional<std::string> get(const std::string& graph6, const std::string& invariant,
                                   const std::string& params) const;
    void put(const std::string& graph6, const std::string& invariant,
             const std::string& params, const std::string& value);

    const InvariantCache& local() const { return local_; }

  private:
    InvariantCache local_;
    const InvariantCache* base_;
};

/// Fetch-or-compute an integer invariant through a shard (which may be null,
/// meaning always compute).
long long cached_int(CacheShard* shard, const std::string& graph6,
                     const std::string& invariant, const std::string& params,
                     const std::function<long long()>& compute);

}  // namespace gamecol

#endif
