#include "gamecol/cache.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gamecol {
namespace {

std::string make_key(const std::string& graph6, const std::string& invariant,
                     const std::string& params) {
    if (graph6.find('\t') != std::string::npos || invariant.find('\t') != std::string::npos ||
        params.find('\t') != std::string::npos)
        throw std::invalid_argument("cache fields must not contain tabs");
    return graph6 + '\t' + invariant + '\t' + params;
}

}  // namespace

std::optional<std::string> InvariantCache::get(const std::string& graph6,
                                               const std::string& invariant,
                                               const std::string& params) const {
    const auto it = entries_.find(make_key(graph6, invariant, params));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void InvariantCache::put(const std::string& graph6, const std::string& invariant,
                         const std::string& params, const std::string& value) {
    if (value.find('\t') != std::string::npos || value.find('\n') != std::string::npos)
        throw std::invalid_argument("cache value must not contain tabs or newlines");
    const auto [it, inserted] = entries_.emplace(make_key(graph6, invariant, params), value);
    if (!inserted && it->second != value)
        throw std::runtime_error("cache conflict for " + it->first + ": had " + it->second +
                                 ", got " + value);
}

void InvariantCache::load(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::size_t tabs[3];
        std::size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            tabs[i] = line.find('\t', pos);
            if (tabs[i] == std::string::npos)
                throw std::invalid_argument("cache: malformed line " + std::to_string(line_no));
            pos = tabs[i] + 1;
        }
        put(line.substr(0, tabs[0]), line.substr(tabs[0] + 1, tabs[1] - tabs[0] - 1),
            line.substr(tabs[1] + 1, tabs[2] - tabs[1] - 1), line.substr(tabs[2] + 1));
    }
}

bool InvariantCache::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    load(buffer.str());
    return true;
}

std::string InvariantCache::dump() const {
    std::string out;
    for (const auto& [key, value] : entries_) {
        out += key;
        out.push_back('\t');
        out += value;
        out.push_back('\n');
    }
    return out;
}

void InvariantCache::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + path);
    out << dump();
    if (!out) throw std::runtime_error("cache: write failed for " + path);
}

void InvariantCache::merge_from(const InvariantCache& other) {
    for (const auto& [key, value] : other.entries_) {
        const auto [it, inserted] = entries_.emplace(key, value);
        if (!inserted && it->second != value)
            throw std::runtime_error("cache merge conflict for " + key);
    }
}

std::optional<std::string> CacheShard::get(const std::string& graph6,
                                           const std::string& invariant,
                                           const std::string& params) const {
    if (auto hit = local_.get(graph6, invariant, params)) return hit;
    if (base_) return base_->get(graph6, invariant, params);
    return std::nullopt;
}

void CacheShard::put(const std::string& graph6, const std::string& invariant,
                     const std::string& params, const std::string& value) {
    local_.put(graph6, invariant, params, value);
}

long long cached_int(CacheShard* shard, const std::string& graph6,
                     const std::string& invariant, const std::string& params,
                     const std::function<long long()>& compute) {
    if (shard) {
        if (auto hit = shard->get(graph6, invariant, params)) return std::stoll(*hit);
    }
    const long long value = compute();
    if (shard) shard->put(graph6, invariant, params, std::to_string(value));
    return value;
}

}  // namespace gamecol
