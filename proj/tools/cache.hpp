#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

namespace tautilt::cli {

/// Content-addressed store of JSON payloads, one file per key.
class Cache {
public:
    Cache(std::filesystem::path dir, bool enabled, std::ostream& warnings);

    /// Serves the stored payload for key, or computes, stores and returns it.
    /// A corrupt entry is recomputed and overwritten with a warning.
    std::string get_or_compute(const std::string& key, const std::function<std::string()>& compute,
                               const std::function<bool(const std::string&)>& valid);

    [[nodiscard]] bool last_was_hit() const { return hit_; }
    [[nodiscard]] std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
    bool enabled_;
    std::ostream& warnings_;
    bool hit_ = false;
};

/// Writes via a temporary file in the same directory, then renames.
void write_atomically(const std::filesystem::path& target, const std::string& content);

}  // namespace tautilt::cli
