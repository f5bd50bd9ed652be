#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace dora {

using json = nlohmann::json;

/// Error with a machine-readable kind ("config", "io", "parse", "provider",
/// "validation", ...) carried alongside the human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

namespace log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3 };

void set_level(Level level);
void write(Level level, const std::string& msg);

inline void debug(const std::string& msg) { write(Level::debug, msg); }
inline void info(const std::string& msg) { write(Level::info, msg); }
inline void warn(const std::string& msg) { write(Level::warn, msg); }
inline void error(const std::string& msg) { write(Level::error, msg); }

} // namespace log

namespace util {

std::string sha256_hex(const std::string& data);

/// Short stable identifier: first 16 hex chars of sha256.
std::string short_hash(const std::string& data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
bool file_exists(const std::string& path);
void ensure_dir(const std::string& path);

std::vector<json> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<json>& records);

std::string lowercase(std::string s);
std::string trim(const std::string& s);
bool starts_with(const std::string& s, const std::string& prefix);
std::vector<std::string> split_lines(const std::string& s);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

/// Deterministic seeded RNG (splitmix64). Identical sequences on every
/// platform, unlike the distributions in <random>.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ull) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t bounded(uint64_t n) { return n ? next() % n : 0; }

    double uniform01() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[bounded(i)]);
        }
    }

    /// k distinct indices from [0, n), order of draw preserved.
    std::vector<size_t> sample_without_replacement(size_t n, size_t k);

private:
    uint64_t state_;
};

/// Order-preserving parallel map; worker exceptions propagate to the caller.
template <class In, class F>
auto parallel_map(const std::vector<In>& items, F fn, unsigned workers)
    -> std::vector<decltype(fn(items[0]))>;

/// Runs fn(i) for i in [0, n) on a bounded pool; used by parallel_map.
void parallel_for(size_t n, const std::function<void(size_t)>& fn, unsigned workers);

} // namespace util

template <class In, class F>
auto util::parallel_map(const std::vector<In>& items, F fn, unsigned workers)
    -> std::vector<decltype(fn(items[0]))> {
    using Out = decltype(fn(items[0]));
    std::vector<Out> out(items.size());
    parallel_for(items.size(), [&](size_t i) { out[i] = fn(items[i]); }, workers);
    return out;
}

} // namespace dora
